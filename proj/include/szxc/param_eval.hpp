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
#include <variant>
#include <vector>

#include "szxc/nat_expr.hpp"
#include "szxc/term.hpp"
#include "szxc/types.hpp"

namespace szxc {

struct ParamValue;

/// λ'x.M together with the environment it was evaluated in.
struct Closure {
  std::string param;
  Term body;
  NatEnv env;
};

/// `range` or `reverse` awaiting further parameter arguments.
struct PartialPrim {
  Prim prim;
  std::vector<Nat> args;
};

struct ParamValue {
  std::variant<Nat, NatList, Closure, PartialPrim> value;

  bool is_nat() const { return std::holds_alternative<Nat>(value); }
  bool is_list() const { return std::holds_alternative<NatList>(value); }
  Nat nat() const;
  const NatList& list() const;
  std::string to_json() const;
};

/// Evaluates a term of evaluable type under `env`. Throws EvalError on terms
/// outside the evaluable fragment or on destructuring an empty list, and
/// EnvironmentError on unbound parameters.
ParamValue eval(const Term& m, const NatEnv& env);

/// Applies a function value to one natural argument.
ParamValue apply_value(const ParamValue& f, const ParamValue& arg);

/// Equality; functions are compared extensionally on arguments 0..probe.
bool values_equal(const ParamValue& a, const ParamValue& b, Nat probe = 6);

/// Shape check: naturals for Nat, lists of the evaluated length for Vec Nat n,
/// and functions whose results (probed on 0..probe) match the codomain.
bool value_has_type(const ParamValue& v, const Type& t, const NatEnv& env, Nat probe = 4);

/// True when M and N evaluate to equal values under env.
bool eval_preserved_by_step(const Term& m, const Term& n, const NatEnv& env);

}  // namespace szxc
