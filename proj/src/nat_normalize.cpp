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

#include "szxc/nat_normalize.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "szxc/detail/overloaded.hpp"
#include "szxc/error.hpp"

namespace szxc {

namespace {

using detail::overloaded;

// A monomial is a sorted multiset of atom keys; the empty monomial is 1.
using Monomial = std::vector<std::string>;
using Poly = std::map<Monomial, Nat>;

struct Canon {
  std::map<std::string, NatExpr> atoms;

  static bool is_zero(const Poly& p) { return p.empty(); }

  static std::optional<Nat> constant(const Poly& p) {
    if (p.empty()) return Nat{0};
    if (p.size() == 1 && p.begin()->first.empty()) return p.begin()->second;
    return std::nullopt;
  }

  static Nat const_term(const Poly& p) {
    auto it = p.find(Monomial{});
    return it == p.end() ? 0 : it->second;
  }

  static void add_into(Poly& acc, const Monomial& m, Nat c) {
    if (c == 0) return;
    acc[m] += c;
  }

  static Poly add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b) add_into(r, m, c);
    return r;
  }

  static Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Monomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        std::sort(m.begin(), m.end());
        add_into(r, m, ca * cb);
      }
    return r;
  }

  Poly atom(const NatExpr& e) {
    std::string key = e.to_string();
    atoms.emplace(key, e);
    return Poly{{Monomial{key}, 1}};
  }

  static Poly lit(Nat c) {
    Poly p;
    add_into(p, Monomial{}, c);
    return p;
  }

  NatExpr rebuild(const Poly& p) const {
    if (p.empty()) return NatExpr(Nat{0});
    // Higher-degree monomials first, constant last.
    std::vector<std::pair<Monomial, Nat>> terms(p.begin(), p.end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    std::optional<NatExpr> sum;
    for (const auto& [m, c] : terms) {
      std::optional<NatExpr> prod;
      for (const auto& key : m) {
        NatExpr a = atoms.at(key);
        prod = prod ? *prod * a : a;
      }
      NatExpr term = prod ? (c == 1 ? *prod : NatExpr(c) * *prod) : NatExpr(c);
      sum = sum ? *sum + term : term;
    }
    return *sum;
  }

  Poly monus(const Poly& p, const Poly& q) {
    if (q.empty()) return p;
    Poly pp, qq;
    for (const auto& [m, c] : p) {
      auto it = q.find(m);
      Nat common = it == q.end() ? 0 : std::min(c, it->second);
      add_into(pp, m, c - common);
    }
    for (const auto& [m, c] : q) {
      auto it = p.find(m);
      Nat common = it == p.end() ? 0 : std::min(c, it->second);
      add_into(qq, m, c - common);
    }
    if (qq.empty()) return pp;
    if (pp.empty()) return Poly{};
    // (x - y) - z == x - (y + z)
    if (pp.size() == 1 && pp.begin()->second == 1 && pp.begin()->first.size() == 1) {
      const NatExpr& a = atoms.at(pp.begin()->first.front());
      if (auto b = a.as<NatExpr::Bin>(); b && b->op == NatOp::Sub) {
        return monus(norm(b->lhs), add(norm(b->rhs), qq));
      }
    }
    return atom(NatExpr::bin(NatOp::Sub, rebuild(pp), rebuild(qq)));
  }

  Poly norm(const NatExpr& e) {
    return std::visit(
        overloaded{
            [&](const NatExpr::Const& c) { return lit(c.value); },
            [&](const NatExpr::Var&) { return atom(e); },
            [&](const NatExpr::Bin& b) -> Poly {
              Poly l = norm(b.lhs);
              Poly r = norm(b.rhs);
              switch (b.op) {
                case NatOp::Add:
                  return add(l, r);
                case NatOp::Mul:
                  return mul(l, r);
                case NatOp::Sub:
                  return monus(l, r);
                case NatOp::Div: {
                  auto cl = constant(l), cr = constant(r);
                  if (cr && *cr == 1) return l;
                  if (cl && cr && *cr != 0) return lit(*cl / *cr);
                  if (cl && *cl == 0 && cr && *cr != 0) return Poly{};
                  return atom(NatExpr::bin(NatOp::Div, rebuild(l), rebuild(r)));
                }
                case NatOp::Pow: {
                  auto cl = constant(l), cr = constant(r);
                  if (cr) {
                    if (*cr == 0) return lit(1);
                    if (cl) {
                      try {
                        return lit(nat_apply(NatOp::Pow, *cl, *cr));
                      } catch (const ArithmeticError&) {
                      }
                    } else if (*cr <= 4) {
                      Poly acc = lit(1);
                      for (Nat i = 0; i < *cr; ++i) acc = mul(acc, l);
                      return acc;
                    }
                  }
                  return atom(NatExpr::bin(NatOp::Pow, rebuild(l), rebuild(r)));
                }
              }
              return Poly{};
            },
            [&](const NatExpr::Ite0& i) -> Poly {
              Poly g = norm(i.guard);
              if (g.empty()) return norm(i.then_branch);
              if (const_term(g) > 0) return norm(i.else_branch);
              Poly t = norm(i.then_branch);
              Poly f = norm(i.else_branch);
              if (t == f) return t;
              return atom(NatExpr::ite0(rebuild(g), rebuild(t), rebuild(f)));
            },
        },
        e.node());
  }

  static std::optional<std::string> single_var(const Poly& p, const std::map<std::string, NatExpr>& atoms) {
    if (p.size() != 1) return std::nullopt;
    const auto& [m, c] = *p.begin();
    if (c != 1 || m.size() != 1) return std::nullopt;
    if (auto v = atoms.at(m.front()).as<NatExpr::Var>()) return v->name;
    return std::nullopt;
  }
};

struct FactSolution {
  bool inconsistent = false;
  std::vector<std::pair<std::string, NatExpr>> steps;
  /// Variables known to lie in [0, bound], decided by case split.
  std::vector<std::pair<std::string, Nat>> bounded;

  NatExpr apply(NatExpr e) const {
    for (const auto& [name, value] : steps) e = substitute(e, name, value);
    return e;
  }
};

FactSolution solve(const NatFacts& facts) {
  FactSolution sol;
  int fresh = 0;
  auto fresh_var = [&] { return NatExpr::var("%f" + std::to_string(++fresh)); };
  for (const auto& fact : facts) {
    Canon c;
    Poly p = c.norm(sol.apply(fact.expr));
    if (fact.positive) {
      if (p.empty()) {
        sol.inconsistent = true;
        return sol;
      }
      if (Canon::const_term(p) > 0) continue;
      if (auto v = Canon::single_var(p, c.atoms)) {
        sol.steps.emplace_back(*v, fresh_var() + NatExpr(1));
        continue;
      }
      if (p.size() == 1 && p.begin()->second == 1 && p.begin()->first.size() == 1) {
        const NatExpr& a = c.atoms.at(p.begin()->first.front());
        if (auto b = a.as<NatExpr::Bin>(); b && b->op == NatOp::Sub) {
          Canon c2;
          if (auto v = Canon::single_var(c2.norm(b->lhs), c2.atoms)) {
            if (!free_vars(b->rhs).count(*v)) sol.steps.emplace_back(*v, b->rhs + NatExpr(1) + fresh_var());
          } else if (Canon::const_term(c2.norm(b->lhs)) > 0 && c2.norm(b->lhs).size() == 1) {
            // c - v >= 1 bounds v by c - 1.
            Canon c3;
            auto v2 = Canon::single_var(c3.norm(b->rhs), c3.atoms);
            Nat bound = Canon::const_term(c2.norm(b->lhs));
            if (v2 && bound <= 16) sol.bounded.emplace_back(*v2, bound - 1);
          }
        }
      }
    } else {
      if (Canon::const_term(p) > 0) {
        sol.inconsistent = true;
        return sol;
      }
      if (p.empty()) continue;
      // A sum of nonnegative monomials is zero iff every monomial is zero.
      bool all_vars = true;
      for (const auto& [m, coeff] : p)
        if (m.size() != 1 || !c.atoms.at(m.front()).as<NatExpr::Var>()) all_vars = false;
      if (all_vars) {
        for (const auto& [m, coeff] : p) sol.steps.emplace_back(m.front(), NatExpr(0));
        continue;
      }
      if (p.size() == 1 && p.begin()->second == 1 && p.begin()->first.size() == 1) {
        const NatExpr& a = c.atoms.at(p.begin()->first.front());
        if (auto b = a.as<NatExpr::Bin>(); b && b->op == NatOp::Sub) {
          Canon c2;
          if (auto v = Canon::single_var(c2.norm(b->rhs), c2.atoms)) {
            if (!free_vars(b->lhs).count(*v)) sol.steps.emplace_back(*v, b->lhs + fresh_var());
          }
        }
      }
    }
  }
  return sol;
}

}  // namespace

NatExpr nat_normalize(const NatExpr& e) {
  Canon c;
  return c.rebuild(c.norm(e));
}

bool facts_inconsistent(const NatFacts& facts) { return solve(facts).inconsistent; }

bool nat_equal(const NatExpr& a, const NatExpr& b, const NatFacts& facts) {
  if (a == b) return true;
  FactSolution sol = solve(facts);
  if (sol.inconsistent) return true;
  NatExpr x = sol.apply(a), y = sol.apply(b);
  if (nat_normalize(x).to_string() == nat_normalize(y).to_string()) return true;
  // Case split over bounded variables, if the product stays small.
  Nat cases = 1;
  for (const auto& [v, bound] : sol.bounded) cases *= bound + 1;
  if (sol.bounded.empty() || cases > 256) return false;
  for (Nat i = 0; i < cases; ++i) {
    NatExpr xi = x, yi = y;
    Nat rest = i;
    for (std::size_t j = 0; j < sol.bounded.size(); ++j) {
      Nat v = rest % (sol.bounded[j].second + 1);
      rest /= sol.bounded[j].second + 1;
      xi = substitute(xi, sol.bounded[j].first, NatExpr(v));
      yi = substitute(yi, sol.bounded[j].first, NatExpr(v));
    }
    if (nat_normalize(xi).to_string() != nat_normalize(yi).to_string()) return false;
  }
  return true;
}

bool nat_is_zero(const NatExpr& a, const NatFacts& facts) { return nat_equal(a, NatExpr(0), facts); }

}  // namespace szxc
