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

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace szxc {

using Nat = std::uint64_t;
using NatList = std::vector<Nat>;

/// A parameter value bound in an environment: a natural or a list of naturals.
using ParamBinding = std::variant<Nat, NatList>;
using NatEnv = std::map<std::string, ParamBinding>;

enum class NatOp { Add, Sub, Mul, Div, Pow };

char nat_op_symbol(NatOp op);

/// Symbolic natural-number expression. Subtraction is truncated at zero.
class NatExpr {
 public:
  struct Const {
    Nat value;
  };
  struct Var {
    std::string name;
  };
  struct Bin;
  struct Ite0;
  using Node = std::variant<Const, Var, Bin, Ite0>;

  NatExpr() : NatExpr(Nat{0}) {}
  NatExpr(Nat value);  // NOLINT(google-explicit-constructor)
  static NatExpr var(std::string name);
  static NatExpr bin(NatOp op, NatExpr lhs, NatExpr rhs);
  static NatExpr ite0(NatExpr guard, NatExpr then_branch, NatExpr else_branch);

  const Node& node() const;
  template <typename T>
  const T* as() const {
    return std::get_if<T>(node_.get());
  }
  bool is_const() const;
  bool is_const(Nat v) const;

  std::string to_string() const;
  friend bool operator==(const NatExpr& a, const NatExpr& b);
  friend bool operator!=(const NatExpr& a, const NatExpr& b) { return !(a == b); }

 private:
  explicit NatExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct NatExpr::Bin {
  NatOp op;
  NatExpr lhs;
  NatExpr rhs;
};

/// ite0(g, t, e) is t when g evaluates to 0 and e otherwise.
struct NatExpr::Ite0 {
  NatExpr guard;
  NatExpr then_branch;
  NatExpr else_branch;
};

inline const NatExpr::Node& NatExpr::node() const { return *node_; }
inline bool NatExpr::is_const() const { return as<Const>() != nullptr; }
inline bool NatExpr::is_const(Nat v) const {
  auto c = as<Const>();
  return c && c->value == v;
}

NatExpr operator+(const NatExpr& a, const NatExpr& b);
NatExpr operator-(const NatExpr& a, const NatExpr& b);
NatExpr operator*(const NatExpr& a, const NatExpr& b);

/// Symbolic list of naturals, evaluated at instantiation time.
class NatListExpr {
 public:
  struct Nil {};
  struct Cons;
  /// [lo, lo+1, ..., hi-1]; empty when hi <= lo.
  struct Range {
    NatExpr lo;
    NatExpr hi;
  };
  struct For;
  struct Reverse;
  struct Var {
    std::string name;
  };
  using Node = std::variant<Nil, Cons, Range, For, Reverse, Var>;

  NatListExpr();
  NatListExpr(Node node);  // NOLINT(google-explicit-constructor)

  static NatListExpr nil();
  static NatListExpr cons(NatExpr head, NatListExpr tail);
  static NatListExpr range(NatExpr lo, NatExpr hi);
  static NatListExpr for_each(std::string index, NatListExpr over, NatExpr body);
  static NatListExpr reverse(NatListExpr inner);
  static NatListExpr var(std::string name);

  const Node& node() const;
  template <typename T>
  const T* as() const {
    return std::get_if<T>(node_.get());
  }

  std::string to_string() const;
  friend bool operator==(const NatListExpr& a, const NatListExpr& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct NatListExpr::Cons {
  NatExpr head;
  NatListExpr tail;
};

struct NatListExpr::For {
  std::string index;
  NatListExpr over;
  NatExpr body;
};

struct NatListExpr::Reverse {
  NatListExpr inner;
};

inline const NatListExpr::Node& NatListExpr::node() const { return *node_; }
inline NatListExpr::NatListExpr() : NatListExpr(Nil{}) {}
inline NatListExpr NatListExpr::nil() { return NatListExpr(Nil{}); }
inline NatListExpr NatListExpr::cons(NatExpr head, NatListExpr tail) {
  return NatListExpr(Cons{std::move(head), std::move(tail)});
}
inline NatListExpr NatListExpr::range(NatExpr lo, NatExpr hi) { return NatListExpr(Range{std::move(lo), std::move(hi)}); }
inline NatListExpr NatListExpr::for_each(std::string index, NatListExpr over, NatExpr body) {
  return NatListExpr(For{std::move(index), std::move(over), std::move(body)});
}
inline NatListExpr NatListExpr::reverse(NatListExpr inner) { return NatListExpr(Reverse{std::move(inner)}); }
inline NatListExpr NatListExpr::var(std::string name) { return NatListExpr(Var{std::move(name)}); }

/// Evaluates under `env`. Throws EnvironmentError on unbound variables and
/// ArithmeticError on division by zero or overflow.
Nat nat_eval(const NatExpr& e, const NatEnv& env);
NatList nat_list_eval(const NatListExpr& e, const NatEnv& env);

/// Truncated arithmetic on concrete naturals, shared by every evaluator.
Nat nat_apply(NatOp op, Nat a, Nat b);

std::set<std::string> free_vars(const NatExpr& e);
std::set<std::string> free_vars(const NatListExpr& e);

NatExpr substitute(const NatExpr& e, const std::string& name, const NatExpr& value);
NatExpr substitute(const NatExpr& e, const std::map<std::string, NatExpr>& values);
NatListExpr substitute(const NatListExpr& e, const std::string& name, const NatExpr& value);

}  // namespace szxc
