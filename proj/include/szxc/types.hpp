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

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "szxc/nat_expr.hpp"
#include "szxc/nat_normalize.hpp"

namespace szxc {

/// λD types: state types (B, Q, Unit, ⊗, ⊸, Vec S n), parameter types
/// (Nat, Vec Nat n) and the dependent arrow (n:Nat) -> A.
class Type {
 public:
  struct Bit {};
  struct Qubit {};
  struct Unit {};
  struct NatT {};
  struct Tensor;
  struct Lolli;
  struct Vec;
  struct Pi;
  using Node = std::variant<Bit, Qubit, Unit, NatT, Tensor, Lolli, Vec, Pi>;

  Type();
  Type(Node node);  // NOLINT(google-explicit-constructor)

  static Type bit();
  static Type qubit();
  static Type unit();
  static Type nat();
  static Type tensor(Type a, Type b);
  static Type lolli(Type a, Type b);
  static Type vec(Type elem, NatExpr n);
  static Type pi(std::string param, Type body);

  const Node& node() const;
  template <typename T>
  const T* as() const {
    return std::get_if<T>(node_.get());
  }

  bool is_state() const;
  /// Nat or Vec Nat n.
  bool is_param() const;

  std::string to_string() const;

 private:
  std::shared_ptr<const Node> node_;
};

struct Type::Tensor {
  Type lhs;
  Type rhs;
};
struct Type::Lolli {
  Type arg;
  Type result;
};
struct Type::Vec {
  Type elem;
  NatExpr size;
};
struct Type::Pi {
  std::string param;
  Type body;
};

inline const Type::Node& Type::node() const { return *node_; }

/// Structural equality with sizes compared by nat_equal under `facts`.
bool type_equal(const Type& a, const Type& b, const NatFacts& facts = {});

/// Capture-avoiding substitution of a size parameter.
Type substitute(const Type& t, const std::string& name, const NatExpr& value);
/// Simultaneous substitution.
Type substitute(const Type& t, const std::map<std::string, NatExpr>& values);

std::set<std::string> free_vars(const Type& t);

enum class TypeClass { Evaluable, Translatable };

/// (n1:Nat) -> ... -> P is evaluable; (n1:Nat) -> ... -> S is translatable.
TypeClass classify(const Type& t);

/// Strips leading dependent arrows and returns the final codomain.
const Type& codomain(const Type& t);

/// Register width of a state type: B, Q ↦ 1; Unit ↦ 0; Vec A n ↦ n·⟨A⟩;
/// A⊗B and A⊸B ↦ ⟨A⟩+⟨B⟩. Result is normalized. Throws TranslationError
/// for parameter types and dependent arrows.
NatExpr type_width(const Type& t);

struct ContextEntry {
  std::string name;
  Type type;
};

/// Φ (parameters, non-linear) and Γ (state, linear).
struct Context {
  std::vector<ContextEntry> params;
  std::vector<ContextEntry> state;

  /// Names pairwise distinct; Φ holds only parameter types, Γ only state types.
  bool well_formed() const;
};

}  // namespace szxc
