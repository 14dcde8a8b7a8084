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

#include <cstddef>
#include <functional>
#include <vector>

#include "szxc/nat_expr.hpp"

namespace szxc {

/// A permutation of [0, k): input wire i is routed to output wire p[i].
using Permutation = std::vector<std::size_t>;

bool is_permutation(const Permutation& p);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(std::size_t k);
bool is_identity(const Permutation& p);
/// Applies p first, then q.
Permutation then(const Permutation& p, const Permutation& q);
/// p ⊕ q: q acts on the wires after p's.
Permutation direct_sum(const Permutation& p, const Permutation& q);

/// Reorders the interleaved register v(n₁) w(n₁) v(n₂) w(n₂) … into the
/// grouped register v(n₁) v(n₂) … w(n₁) w(n₂) ….
Permutation build_sigma(const NatList& ns, const std::function<Nat(Nat)>& v, const std::function<Nat(Nat)>& w);

/// Generalization of build_sigma to any number of parts: sizes[e][i] is the
/// size of part i in element e. Maps the element-major order to the
/// part-major order.
Permutation build_interleave(const std::vector<std::vector<Nat>>& sizes);

/// Reorders n registers shaped (a, c, b, c) into the grouped sequence
/// (a…a)(c…c)(b…b)(c…c). n = 0 yields the empty permutation.
Permutation build_tau(Nat n, Nat a, Nat b, Nat c);

}  // namespace szxc
