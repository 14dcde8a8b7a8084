// Copyright 2026 The szxc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"
#include "szxc/diagram.hpp"

namespace szxc {

/// Diagram serialization. Node ids follow the order in which nodes were
/// added; boundary ports use id -1 (diagram inputs) and -2 (diagram outputs).
/// Keys are sorted, so equal diagrams serialize to equal bytes.
///
///   {"params":[..], "nodes":[{"id","kind","args","phases"}],
///    "edges":[{"src":[id,port],"dst":[id,port],"mult"}],
///    "inputs":[edge..], "outputs":[edge..]}
///
/// Family multiplicities and phases are strings; concrete ones are numbers
/// and "num/den" turn fractions. Boxes carry their body under args.body.
nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const ConcreteDiagram& d);

/// Graphviz rendering: Z spiders green, X spiders red, Hadamards yellow,
/// edges labelled with multiplicities. Boxes become clusters.
std::string to_dot(const Diagram& d);
std::string to_dot(const ConcreteDiagram& d);

}  // namespace szxc
