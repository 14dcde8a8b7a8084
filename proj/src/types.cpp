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

#include "szxc/types.hpp"

#include "szxc/detail/overloaded.hpp"
#include "szxc/error.hpp"

namespace szxc {

using detail::overloaded;

namespace {

int fresh_type_counter = 0;

std::string size_text(const NatExpr& n) {
  if (n.is_const() || n.as<NatExpr::Var>()) return n.to_string();
  return "(" + n.to_string() + ")";
}

// 0: arrows, 1: tensor, 2: application (Vec), 3: atoms
std::string render(const Type& t, int prec) {
  auto wrap = [&](int p, std::string s) { return p < prec ? "(" + s + ")" : s; };
  return std::visit(overloaded{
                        [](const Type::Bit&) -> std::string { return "B"; },
                        [](const Type::Qubit&) -> std::string { return "Q"; },
                        [](const Type::Unit&) -> std::string { return "Unit"; },
                        [](const Type::NatT&) -> std::string { return "Nat"; },
                        [&](const Type::Tensor& x) { return wrap(1, render(x.lhs, 2) + " * " + render(x.rhs, 1)); },
                        [&](const Type::Lolli& x) { return wrap(0, render(x.arg, 1) + " -o " + render(x.result, 0)); },
                        [&](const Type::Vec& x) { return wrap(2, "Vec " + render(x.elem, 3) + " " + size_text(x.size)); },
                        [&](const Type::Pi& x) { return wrap(0, "(" + x.param + ":Nat) -> " + render(x.body, 0)); },
                    },
                    t.node());
}

}  // namespace

Type::Type() : Type(Unit{}) {}
Type::Type(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

Type Type::bit() { return Type(Node(Bit{})); }
Type Type::qubit() { return Type(Node(Qubit{})); }
Type Type::unit() { return Type(Node(Unit{})); }
Type Type::nat() { return Type(Node(NatT{})); }
Type Type::tensor(Type a, Type b) { return Type(Node(Tensor{std::move(a), std::move(b)})); }
Type Type::lolli(Type a, Type b) { return Type(Node(Lolli{std::move(a), std::move(b)})); }
Type Type::vec(Type elem, NatExpr n) { return Type(Node(Vec{std::move(elem), std::move(n)})); }
Type Type::pi(std::string param, Type body) { return Type(Node(Pi{std::move(param), std::move(body)})); }

bool Type::is_state() const {
  return std::visit(overloaded{
                        [](const Bit&) { return true; },
                        [](const Qubit&) { return true; },
                        [](const Unit&) { return true; },
                        [](const NatT&) { return false; },
                        [](const Tensor& t) { return t.lhs.is_state() && t.rhs.is_state(); },
                        [](const Lolli& l) { return l.arg.is_state() && l.result.is_state(); },
                        [](const Vec& v) { return v.elem.is_state(); },
                        [](const Pi&) { return false; },
                    },
                    node());
}

bool Type::is_param() const {
  if (as<NatT>()) return true;
  if (auto v = as<Vec>()) return v->elem.as<NatT>() != nullptr;
  return false;
}

std::string Type::to_string() const { return render(*this, 0); }

bool type_equal(const Type& a, const Type& b, const NatFacts& facts) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(overloaded{
                        [](const Type::Bit&) { return true; },
                        [](const Type::Qubit&) { return true; },
                        [](const Type::Unit&) { return true; },
                        [](const Type::NatT&) { return true; },
                        [&](const Type::Tensor& x) {
                          auto y = b.as<Type::Tensor>();
                          return type_equal(x.lhs, y->lhs, facts) && type_equal(x.rhs, y->rhs, facts);
                        },
                        [&](const Type::Lolli& x) {
                          auto y = b.as<Type::Lolli>();
                          return type_equal(x.arg, y->arg, facts) && type_equal(x.result, y->result, facts);
                        },
                        [&](const Type::Vec& x) {
                          auto y = b.as<Type::Vec>();
                          return type_equal(x.elem, y->elem, facts) && nat_equal(x.size, y->size, facts);
                        },
                        [&](const Type::Pi& x) {
                          auto y = b.as<Type::Pi>();
                          std::string fresh = "%p" + std::to_string(++fresh_type_counter);
                          return type_equal(substitute(x.body, x.param, NatExpr::var(fresh)),
                                            substitute(y->body, y->param, NatExpr::var(fresh)), facts);
                        },
                    },
                    a.node());
}

Type substitute(const Type& t, const std::string& name, const NatExpr& value) {
  return std::visit(overloaded{
                        [&](const Type::Tensor& x) -> Type {
                          return Type::tensor(substitute(x.lhs, name, value), substitute(x.rhs, name, value));
                        },
                        [&](const Type::Lolli& x) -> Type {
                          return Type::lolli(substitute(x.arg, name, value), substitute(x.result, name, value));
                        },
                        [&](const Type::Vec& x) -> Type {
                          return Type::vec(substitute(x.elem, name, value), substitute(x.size, name, value));
                        },
                        [&](const Type::Pi& x) -> Type {
                          if (x.param == name) return t;
                          if (free_vars(value).count(x.param)) {
                            std::string fresh = x.param + "%" + std::to_string(++fresh_type_counter);
                            Type body = substitute(x.body, x.param, NatExpr::var(fresh));
                            return Type::pi(fresh, substitute(body, name, value));
                          }
                          return Type::pi(x.param, substitute(x.body, name, value));
                        },
                        [&](const auto&) { return t; },
                    },
                    t.node());
}

Type substitute(const Type& t, const std::map<std::string, NatExpr>& values) {
  if (values.empty()) return t;
  return std::visit(overloaded{
                        [&](const Type::Tensor& x) -> Type {
                          return Type::tensor(substitute(x.lhs, values), substitute(x.rhs, values));
                        },
                        [&](const Type::Lolli& x) -> Type {
                          return Type::lolli(substitute(x.arg, values), substitute(x.result, values));
                        },
                        [&](const Type::Vec& x) -> Type {
                          return Type::vec(substitute(x.elem, values), substitute(x.size, values));
                        },
                        [&](const Type::Pi& x) -> Type {
                          auto inner = values;
                          inner.erase(x.param);
                          std::string param = x.param;
                          Type body = x.body;
                          for (const auto& [name, v] : inner) {
                            if (free_vars(v).count(x.param)) {
                              param = x.param + "%" + std::to_string(++fresh_type_counter);
                              body = substitute(body, x.param, NatExpr::var(param));
                              break;
                            }
                          }
                          return Type::pi(param, substitute(body, inner));
                        },
                        [&](const auto&) { return t; },
                    },
                    t.node());
}

std::set<std::string> free_vars(const Type& t) {
  std::set<std::string> out;
  std::visit(overloaded{
                 [&](const Type::Tensor& x) {
                   out.merge(free_vars(x.lhs));
                   out.merge(free_vars(x.rhs));
                 },
                 [&](const Type::Lolli& x) {
                   out.merge(free_vars(x.arg));
                   out.merge(free_vars(x.result));
                 },
                 [&](const Type::Vec& x) {
                   out.merge(free_vars(x.elem));
                   out.merge(free_vars(x.size));
                 },
                 [&](const Type::Pi& x) {
                   auto body = free_vars(x.body);
                   body.erase(x.param);
                   out.merge(body);
                 },
                 [](const auto&) {},
             },
             t.node());
  return out;
}

const Type& codomain(const Type& t) {
  if (auto p = t.as<Type::Pi>()) return codomain(p->body);
  return t;
}

TypeClass classify(const Type& t) {
  return codomain(t).is_param() ? TypeClass::Evaluable : TypeClass::Translatable;
}

NatExpr type_width(const Type& t) {
  NatExpr w = std::visit(overloaded{
                             [](const Type::Bit&) { return NatExpr(1); },
                             [](const Type::Qubit&) { return NatExpr(1); },
                             [](const Type::Unit&) { return NatExpr(0); },
                             [&](const Type::NatT&) -> NatExpr {
                               throw TranslationError("type " + t.to_string() + " has no register width");
                             },
                             [](const Type::Tensor& x) { return type_width(x.lhs) + type_width(x.rhs); },
                             [](const Type::Lolli& x) { return type_width(x.arg) + type_width(x.result); },
                             [&](const Type::Vec& x) -> NatExpr {
                               if (x.elem.as<Type::NatT>())
                                 throw TranslationError("type " + t.to_string() + " has no register width");
                               return x.size * type_width(x.elem);
                             },
                             [&](const Type::Pi&) -> NatExpr {
                               throw TranslationError("type " + t.to_string() + " has no register width");
                             },
                         },
                         t.node());
  return nat_normalize(w);
}

bool Context::well_formed() const {
  std::set<std::string> names;
  for (const auto& e : params) {
    if (!names.insert(e.name).second || !e.type.is_param()) return false;
  }
  for (const auto& e : state) {
    if (!names.insert(e.name).second || !e.type.is_state()) return false;
  }
  return true;
}

}  // namespace szxc
