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

/// Rewrites a concrete diagram to a fixed point with, in order of priority:
/// removal of empty registers, plain-wire and identity-arrow elimination,
/// gather/split fusion, and the (sg)/(gs) cancellations. Each rule removes at
/// least one node, so the pass terminates. The result has the same boundary
/// and the same interpretation.
struct SimplifyStats {
  /// Productive rounds until the fixed point.
  std::size_t rounds = 0;
};

ConcreteDiagram simplify(const ConcreteDiagram& d, SimplifyStats* stats = nullptr);

}  // namespace szxc
