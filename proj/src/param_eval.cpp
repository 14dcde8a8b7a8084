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

#include "szxc/param_eval.hpp"

#include <algorithm>

#include "szxc/detail/overloaded.hpp"
#include "szxc/error.hpp"

namespace szxc {

using detail::overloaded;

Nat ParamValue::nat() const {
  if (auto n = std::get_if<Nat>(&value)) return *n;
  throw EvalError("expected a natural-number value");
}

const NatList& ParamValue::list() const {
  if (auto l = std::get_if<NatList>(&value)) return *l;
  throw EvalError("expected a list value");
}

std::string ParamValue::to_json() const {
  return std::visit(overloaded{
                        [](Nat n) { return std::to_string(n); },
                        [](const NatList& l) {
                          std::string s = "[";
                          for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
                          return s + "]";
                        },
                        [](const Closure& c) { return "\"<function of " + c.param + ">\""; },
                        [](const PartialPrim& p) { return "\"<" + prim_name(p.prim) + " partial>\""; },
                    },
                    value);
}

namespace {

NatList range_list(Nat lo, Nat hi) {
  NatList out;
  for (Nat i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

}  // namespace

ParamValue apply_value(const ParamValue& f, const ParamValue& arg) {
  if (auto c = std::get_if<Closure>(&f.value)) {
    NatEnv env = c->env;
    if (arg.is_nat()) {
      env[c->param] = arg.nat();
    } else if (arg.is_list()) {
      env[c->param] = arg.list();
    } else {
      throw EvalError("parameter argument must be a natural or a list");
    }
    return eval(c->body, env);
  }
  if (auto p = std::get_if<PartialPrim>(&f.value)) {
    if (p->prim == Prim::Reverse) {
      NatList l = arg.list();
      std::reverse(l.begin(), l.end());
      return {l};
    }
    if (p->prim == Prim::Range) {
      PartialPrim next = *p;
      next.args.push_back(arg.nat());
      if (next.args.size() == 2) return {range_list(next.args[0], next.args[1])};
      return {next};
    }
  }
  throw EvalError("parameter application of a non-function value");
}

ParamValue eval(const Term& m, const NatEnv& env) {
  return std::visit(
      overloaded{
          [&](const Term::Var& x) -> ParamValue {
            auto it = env.find(x.name);
            if (it == env.end()) throw EnvironmentError("unbound parameter '" + x.name + "'");
            return std::visit([](const auto& v) { return ParamValue{v}; }, it->second);
          },
          [&](const Term::NatLit& n) -> ParamValue { return {n.value}; },
          [&](const Term::VNil&) -> ParamValue { return {NatList{}}; },
          [&](const Term::BinOp& b) -> ParamValue {
            return {nat_apply(b.op, eval(b.lhs, env).nat(), eval(b.rhs, env).nat())};
          },
          [&](const Term::Cons& c) -> ParamValue {
            NatList l{eval(c.head, env).nat()};
            ParamValue tail = eval(c.tail, env);
            l.insert(l.end(), tail.list().begin(), tail.list().end());
            return {l};
          },
          [&](const Term::PLam& l) -> ParamValue { return {Closure{l.name, l.body, env}}; },
          [&](const Term::PApp& p) -> ParamValue { return apply_value(eval(p.fn, env), eval(p.arg, env)); },
          [&](const Term::Const& c) -> ParamValue {
            if (c.prim == Prim::Range || c.prim == Prim::Reverse) return {PartialPrim{c.prim, {}}};
            throw EvalError(prim_name(c.prim) + " is not evaluable");
          },
          [&](const Term::Ifz& i) -> ParamValue {
            return eval(i.guard, env).nat() == 0 ? eval(i.then_branch, env) : eval(i.else_branch, env);
          },
          [&](const Term::For& f) -> ParamValue {
            NatList out;
            NatEnv inner = env;
            ParamValue over = eval(f.over, env);
            for (Nat k : over.list()) {
              inner[f.index] = k;
              out.push_back(eval(f.body, inner).nat());
            }
            return {out};
          },
          [&](const Term::LetCons& l) -> ParamValue {
            NatList xs = eval(l.bound, env).list();
            if (xs.empty()) throw EvalError("destructuring an empty list");
            NatEnv inner = env;
            inner[l.x] = xs.front();
            inner[l.y] = NatList(xs.begin() + 1, xs.end());
            return eval(l.body, inner);
          },
          [&](const auto&) -> ParamValue { throw EvalError("term is not in the evaluable fragment"); },
      },
      m.node());
}

bool values_equal(const ParamValue& a, const ParamValue& b, Nat probe) {
  bool fa = !a.is_nat() && !a.is_list(), fb = !b.is_nat() && !b.is_list();
  if (fa != fb) return false;
  if (!fa) return a.value.index() == b.value.index() && (a.is_nat() ? a.nat() == b.nat() : a.list() == b.list());
  for (Nat k = 0; k <= probe; ++k) {
    ParamValue ra, rb;
    bool ea = false, eb = false;
    try {
      ra = apply_value(a, {k});
    } catch (const Error&) {
      ea = true;
    }
    try {
      rb = apply_value(b, {k});
    } catch (const Error&) {
      eb = true;
    }
    if (ea != eb) return false;
    if (!ea && !values_equal(ra, rb, probe)) return false;
  }
  return true;
}

bool value_has_type(const ParamValue& v, const Type& t, const NatEnv& env, Nat probe) {
  if (t.as<Type::NatT>()) return v.is_nat();
  if (auto vec = t.as<Type::Vec>()) {
    if (!vec->elem.as<Type::NatT>() || !v.is_list()) return false;
    return v.list().size() == nat_eval(vec->size, env);
  }
  if (auto pi = t.as<Type::Pi>()) {
    if (v.is_nat() || v.is_list()) return false;
    for (Nat k = 0; k <= probe; ++k) {
      NatEnv inner = env;
      inner[pi->param] = k;
      if (!value_has_type(apply_value(v, {k}), pi->body, inner, probe)) return false;
    }
    return true;
  }
  return false;
}

bool eval_preserved_by_step(const Term& m, const Term& n, const NatEnv& env) {
  return values_equal(eval(m, env), eval(n, env));
}

}  // namespace szxc
