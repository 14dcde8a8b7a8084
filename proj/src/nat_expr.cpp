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

#include "szxc/nat_expr.hpp"

#include <algorithm>
#include <limits>

#include "szxc/detail/overloaded.hpp"
#include "szxc/error.hpp"

namespace szxc {

namespace {

using detail::overloaded;

int precedence(NatOp op) {
  switch (op) {
    case NatOp::Add:
    case NatOp::Sub:
      return 1;
    case NatOp::Mul:
    case NatOp::Div:
      return 2;
    case NatOp::Pow:
      return 3;
  }
  return 0;
}

std::string render(const NatExpr& e, int parent_prec, bool right_operand) {
  return std::visit(
      overloaded{
          [](const NatExpr::Const& c) { return std::to_string(c.value); },
          [](const NatExpr::Var& v) { return v.name; },
          [&](const NatExpr::Bin& b) {
            int p = precedence(b.op);
            bool right_assoc = b.op == NatOp::Pow;
            std::string s = render(b.lhs, p, right_assoc) + " " + nat_op_symbol(b.op) + " " +
                            render(b.rhs, p, !right_assoc);
            bool paren = p < parent_prec || (p == parent_prec && right_operand);
            return paren ? "(" + s + ")" : s;
          },
          [](const NatExpr::Ite0& i) {
            return "ite0(" + i.guard.to_string() + ", " + i.then_branch.to_string() + ", " +
                   i.else_branch.to_string() + ")";
          },
      },
      e.node());
}

Nat checked_add(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b) throw ArithmeticError("natural-number overflow in addition");
  return a + b;
}

Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > std::numeric_limits<Nat>::max() / a)
    throw ArithmeticError("natural-number overflow in multiplication");
  return a * b;
}

int fresh_counter = 0;

}  // namespace

char nat_op_symbol(NatOp op) {
  switch (op) {
    case NatOp::Add:
      return '+';
    case NatOp::Sub:
      return '-';
    case NatOp::Mul:
      return '*';
    case NatOp::Div:
      return '/';
    case NatOp::Pow:
      return '^';
  }
  return '?';
}

NatExpr::NatExpr(Nat value) : node_(std::make_shared<const Node>(Const{value})) {}

NatExpr NatExpr::var(std::string name) { return NatExpr(std::make_shared<const Node>(Var{std::move(name)})); }

NatExpr NatExpr::bin(NatOp op, NatExpr lhs, NatExpr rhs) {
  return NatExpr(std::make_shared<const Node>(Bin{op, std::move(lhs), std::move(rhs)}));
}

NatExpr NatExpr::ite0(NatExpr guard, NatExpr then_branch, NatExpr else_branch) {
  return NatExpr(std::make_shared<const Node>(Ite0{std::move(guard), std::move(then_branch), std::move(else_branch)}));
}

std::string NatExpr::to_string() const { return render(*this, 0, false); }

bool operator==(const NatExpr& a, const NatExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&](const NatExpr::Const& c) { return c.value == b.as<NatExpr::Const>()->value; },
          [&](const NatExpr::Var& v) { return v.name == b.as<NatExpr::Var>()->name; },
          [&](const NatExpr::Bin& x) {
            auto y = b.as<NatExpr::Bin>();
            return x.op == y->op && x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const NatExpr::Ite0& x) {
            auto y = b.as<NatExpr::Ite0>();
            return x.guard == y->guard && x.then_branch == y->then_branch && x.else_branch == y->else_branch;
          },
      },
      a.node());
}

NatExpr operator+(const NatExpr& a, const NatExpr& b) { return NatExpr::bin(NatOp::Add, a, b); }
NatExpr operator-(const NatExpr& a, const NatExpr& b) { return NatExpr::bin(NatOp::Sub, a, b); }
NatExpr operator*(const NatExpr& a, const NatExpr& b) { return NatExpr::bin(NatOp::Mul, a, b); }

NatListExpr::NatListExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

std::string NatListExpr::to_string() const {
  return std::visit(overloaded{
                        [](const Nil&) -> std::string { return "[]"; },
                        [](const Cons& c) { return c.head.to_string() + " :: " + c.tail.to_string(); },
                        [](const Range& r) { return "range(" + r.lo.to_string() + ", " + r.hi.to_string() + ")"; },
                        [](const For& f) {
                          return "[" + f.body.to_string() + " for " + f.index + " in " + f.over.to_string() + "]";
                        },
                        [](const Reverse& r) { return "reverse(" + r.inner.to_string() + ")"; },
                        [](const Var& v) { return v.name; },
                    },
                    node());
}

bool operator==(const NatListExpr& a, const NatListExpr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(overloaded{
                        [](const NatListExpr::Nil&) { return true; },
                        [&](const NatListExpr::Cons& c) {
                          auto d = b.as<NatListExpr::Cons>();
                          return c.head == d->head && c.tail == d->tail;
                        },
                        [&](const NatListExpr::Range& r) {
                          auto s = b.as<NatListExpr::Range>();
                          return r.lo == s->lo && r.hi == s->hi;
                        },
                        [&](const NatListExpr::For& f) {
                          auto g = b.as<NatListExpr::For>();
                          return f.index == g->index && f.over == g->over && f.body == g->body;
                        },
                        [&](const NatListExpr::Reverse& r) { return r.inner == b.as<NatListExpr::Reverse>()->inner; },
                        [&](const NatListExpr::Var& v) { return v.name == b.as<NatListExpr::Var>()->name; },
                    },
                    a.node());
}

Nat nat_apply(NatOp op, Nat a, Nat b) {
  switch (op) {
    case NatOp::Add:
      return checked_add(a, b);
    case NatOp::Sub:
      return a > b ? a - b : 0;
    case NatOp::Mul:
      return checked_mul(a, b);
    case NatOp::Div:
      if (b == 0) throw ArithmeticError("division by zero");
      return a / b;
    case NatOp::Pow: {
      Nat r = 1;
      for (Nat i = 0; i < b; ++i) {
        r = checked_mul(r, a);
        if (r == 0) break;
      }
      return r;
    }
  }
  return 0;
}

Nat nat_eval(const NatExpr& e, const NatEnv& env) {
  return std::visit(overloaded{
                        [](const NatExpr::Const& c) { return c.value; },
                        [&](const NatExpr::Var& v) -> Nat {
                          auto it = env.find(v.name);
                          if (it == env.end()) throw EnvironmentError("unbound parameter '" + v.name + "'");
                          if (auto n = std::get_if<Nat>(&it->second)) return *n;
                          throw EnvironmentError("parameter '" + v.name + "' is a list, expected a natural");
                        },
                        [&](const NatExpr::Bin& b) {
                          return nat_apply(b.op, nat_eval(b.lhs, env), nat_eval(b.rhs, env));
                        },
                        [&](const NatExpr::Ite0& i) {
                          return nat_eval(i.guard, env) == 0 ? nat_eval(i.then_branch, env)
                                                             : nat_eval(i.else_branch, env);
                        },
                    },
                    e.node());
}

NatList nat_list_eval(const NatListExpr& e, const NatEnv& env) {
  return std::visit(overloaded{
                        [](const NatListExpr::Nil&) { return NatList{}; },
                        [&](const NatListExpr::Cons& c) {
                          NatList out{nat_eval(c.head, env)};
                          NatList rest = nat_list_eval(c.tail, env);
                          out.insert(out.end(), rest.begin(), rest.end());
                          return out;
                        },
                        [&](const NatListExpr::Range& r) {
                          Nat lo = nat_eval(r.lo, env), hi = nat_eval(r.hi, env);
                          NatList out;
                          for (Nat i = lo; i < hi; ++i) out.push_back(i);
                          return out;
                        },
                        [&](const NatListExpr::For& f) {
                          NatList over = nat_list_eval(f.over, env);
                          NatList out;
                          NatEnv inner = env;
                          for (Nat k : over) {
                            inner[f.index] = k;
                            out.push_back(nat_eval(f.body, inner));
                          }
                          return out;
                        },
                        [&](const NatListExpr::Reverse& r) {
                          NatList out = nat_list_eval(r.inner, env);
                          std::reverse(out.begin(), out.end());
                          return out;
                        },
                        [&](const NatListExpr::Var& v) -> NatList {
                          auto it = env.find(v.name);
                          if (it == env.end()) throw EnvironmentError("unbound parameter '" + v.name + "'");
                          if (auto l = std::get_if<NatList>(&it->second)) return *l;
                          throw EnvironmentError("parameter '" + v.name + "' is a natural, expected a list");
                        },
                    },
                    e.node());
}

std::set<std::string> free_vars(const NatExpr& e) {
  std::set<std::string> out;
  std::visit(overloaded{
                 [](const NatExpr::Const&) {},
                 [&](const NatExpr::Var& v) { out.insert(v.name); },
                 [&](const NatExpr::Bin& b) {
                   out.merge(free_vars(b.lhs));
                   out.merge(free_vars(b.rhs));
                 },
                 [&](const NatExpr::Ite0& i) {
                   out.merge(free_vars(i.guard));
                   out.merge(free_vars(i.then_branch));
                   out.merge(free_vars(i.else_branch));
                 },
             },
             e.node());
  return out;
}

std::set<std::string> free_vars(const NatListExpr& e) {
  std::set<std::string> out;
  std::visit(overloaded{
                 [](const NatListExpr::Nil&) {},
                 [&](const NatListExpr::Cons& c) {
                   out.merge(free_vars(c.head));
                   out.merge(free_vars(c.tail));
                 },
                 [&](const NatListExpr::Range& r) {
                   out.merge(free_vars(r.lo));
                   out.merge(free_vars(r.hi));
                 },
                 [&](const NatListExpr::For& f) {
                   out.merge(free_vars(f.over));
                   auto body = free_vars(f.body);
                   body.erase(f.index);
                   out.merge(body);
                 },
                 [&](const NatListExpr::Reverse& r) { out.merge(free_vars(r.inner)); },
                 [&](const NatListExpr::Var& v) { out.insert(v.name); },
             },
             e.node());
  return out;
}

NatExpr substitute(const NatExpr& e, const std::map<std::string, NatExpr>& values) {
  return std::visit(overloaded{
                        [&](const NatExpr::Const&) { return e; },
                        [&](const NatExpr::Var& v) {
                          auto it = values.find(v.name);
                          return it == values.end() ? e : it->second;
                        },
                        [&](const NatExpr::Bin& b) {
                          return NatExpr::bin(b.op, substitute(b.lhs, values), substitute(b.rhs, values));
                        },
                        [&](const NatExpr::Ite0& i) {
                          return NatExpr::ite0(substitute(i.guard, values), substitute(i.then_branch, values),
                                               substitute(i.else_branch, values));
                        },
                    },
                    e.node());
}

NatExpr substitute(const NatExpr& e, const std::string& name, const NatExpr& value) {
  return substitute(e, std::map<std::string, NatExpr>{{name, value}});
}

NatListExpr substitute(const NatListExpr& e, const std::string& name, const NatExpr& value) {
  return std::visit(
      overloaded{
          [&](const NatListExpr::Nil&) { return e; },
          [&](const NatListExpr::Cons& c) {
            return NatListExpr::cons(substitute(c.head, name, value), substitute(c.tail, name, value));
          },
          [&](const NatListExpr::Range& r) {
            return NatListExpr::range(substitute(r.lo, name, value), substitute(r.hi, name, value));
          },
          [&](const NatListExpr::For& f) {
            NatListExpr over = substitute(f.over, name, value);
            if (f.index == name) return NatListExpr::for_each(f.index, over, f.body);
            if (free_vars(value).count(f.index)) {
              std::string fresh = f.index + "%" + std::to_string(++fresh_counter);
              NatExpr body = substitute(f.body, f.index, NatExpr::var(fresh));
              return NatListExpr::for_each(fresh, over, substitute(body, name, value));
            }
            return NatListExpr::for_each(f.index, over, substitute(f.body, name, value));
          },
          [&](const NatListExpr::Reverse& r) { return NatListExpr::reverse(substitute(r.inner, name, value)); },
          [&](const NatListExpr::Var&) { return e; },
      },
      e.node());
}

}  // namespace szxc
