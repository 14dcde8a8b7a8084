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

#include "szxc/diagram.hpp"

namespace szxc {

/// Evaluates every multiplicity and phase of a family under `env` and
/// expands list-instantiation boxes.
///
/// A box over [n₁, …, n_k] instantiates its body once per element and fuses
/// the instances node by node: wires carry the summed multiplicity, spiders
/// concatenate their phase vectors, arrows become direct sums, and each
/// gather (split) gets a permutation after (before) it that restores the
/// element-major order of its register. An empty list yields the body's shape
/// with every register empty, so the structure of the result never depends
/// on the parameters.
///
/// Throws EnvironmentError for unbound parameters and DiagramError when a
/// box's declared boundary disagrees with its instances.
ConcreteDiagram instantiate(const Diagram& d, const NatEnv& env);

}  // namespace szxc
