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

#include <vector>

#include "szxc/nat_expr.hpp"

namespace szxc {

/// Canonical form: a sum of monomials over atoms, where atoms are variables
/// or opaque heads (truncated subtraction, division, symbolic powers, ite0)
/// whose arguments are normalized recursively. Sound: equal canonical forms
/// denote equal functions of the environment.
NatExpr nat_normalize(const NatExpr& e);

/// A guard fact collected from an enclosing `ifz`: `expr = 0` or `expr >= 1`.
struct NatFact {
  NatExpr expr;
  bool positive = false;
};

using NatFacts = std::vector<NatFact>;

/// True when the facts cannot hold simultaneously (e.g. `2 = 0`).
bool facts_inconsistent(const NatFacts& facts);

/// Sound equality: true only if `a` and `b` agree on every environment
/// satisfying `facts`. Inconsistent facts make every equation hold.
bool nat_equal(const NatExpr& a, const NatExpr& b, const NatFacts& facts = {});

/// Same as nat_equal(a, 0): used to decide that a size is provably empty.
bool nat_is_zero(const NatExpr& a, const NatFacts& facts = {});

}  // namespace szxc
