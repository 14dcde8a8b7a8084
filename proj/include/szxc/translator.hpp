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

#include "szxc/diagram.hpp"
#include "szxc/phase.hpp"
#include "szxc/term.hpp"
#include "szxc/types.hpp"

namespace szxc {

struct TranslateOptions {
  RotationConvention rotation = RotationConvention::TwoPiOverM;
};

/// Diagram of a gate applied to its arguments: one input per state argument
/// and one output. `param` is the rotation parameter (ignored for H, CNOT,
/// meas and new).
Diagram gate_diagram(Prim p, const NatExpr& param = NatExpr(Nat{1}), const TranslateOptions& opts = {});

/// Diagram family of split, append, drop or accuMap applied to all its state
/// arguments, with parameters named n (and m).
Diagram translate_primitive(Prim p, const std::vector<Type>& annots, const TranslateOptions& opts = {});

/// Translates Φ; Γ ⊢ M : A. Inputs are the Γ registers in context order and
/// the single output is the register of A. Throws TranslationError.
Diagram translate(const Context& ctx, const Term& m, const TranslateOptions& opts = {});

/// Translates a closed entry term. Leading parameter abstractions become the
/// family parameters and leading state abstractions become inputs, so a
/// function Vec Q n ⊸ Vec Q n compiles to a map from n wires to n wires.
Diagram compile(const Term& entry, const TranslateOptions& opts = {});

/// The list denoted by an evaluable Vec Nat term (ranges, reverse, literal
/// lists, for over Nat bodies, variables).
NatListExpr term_to_nat_list(const Term& m);

}  // namespace szxc
