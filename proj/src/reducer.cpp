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

#include "szxc/reducer.hpp"

#include <vector>

#include "szxc/error.hpp"
#include "szxc/typechecker.hpp"

namespace szxc {

namespace {

using Opt = std::optional<StepResult>;

Term nat_minus_one(const Term& n) { return Term::binop(NatOp::Sub, n, Term::nat(1)); }

Term papp_all(Term f, std::initializer_list<Term> params) {
  for (const auto& p : params) f = Term::papp(f, p);
  return f;
}

Term app_all(Term f, std::initializer_list<Term> args) {
  for (const auto& a : args) f = Term::app(f, a);
  return f;
}

// Collects the elements of a fully built vector value, or nullopt if the
// spine still has an unevaluated tail.
std::optional<std::vector<Term>> spine(const Term& v) {
  std::vector<Term> out;
  const Term* cur = &v;
  while (const auto* c = cur->as<Term::Cons>()) {
    out.push_back(c->head);
    cur = &c->tail;
  }
  if (!cur->as<Term::VNil>()) return std::nullopt;
  return out;
}

// Steps the first tail in a cons spine that is not a value.
Opt step_spine(const Term& v, EffectHandler* effects) {
  if (const auto* c = v.as<Term::Cons>()) {
    if (is_value(c->tail)) {
      auto r = step_spine(c->tail, effects);
      if (r) r->term = Term::cons(c->head, r->term, v.span());
      return r;
    }
    auto r = step(c->tail, effects);
    if (r) r->term = Term::cons(c->head, r->term, v.span());
    return r;
  }
  return std::nullopt;
}

Opt unfold(const PrimApp& pa, EffectHandler* effects) {
  auto arg = [&](std::size_t i) -> const Term& { return pa.args.at(i).second; };
  auto prim = [&]() { return Term::prim(pa.prim, pa.annots); };
  auto v = [](const std::string& s) { return Term::var(s); };
  switch (pa.prim) {
    case Prim::AccuMap: {
      const Term& n = arg(0);
      std::string x = fresh_name("x"), xs = fresh_name("xs"), f = fresh_name("f"), fs = fresh_name("fs"),
                  y = fresh_name("y"), ys = fresh_name("ys"), z1 = fresh_name("z"), z2 = fresh_name("z");
      Term base = Term::seqv(arg(1), Term::seqv(arg(2), Term::tensor(Term::vnil(pa.annots.at(1)), arg(3))));
      Term rec = app_all(papp_all(prim(), {nat_minus_one(n)}), {v(xs), v(fs), v(z1)});
      Term body = Term::let_cons(
          x, xs, arg(1),
          Term::let_cons(f, fs, arg(2),
                         Term::let_tensor(y, z1, app_all(v(f), {v(x), arg(3)}),
                                          Term::let_tensor(ys, z2, rec, Term::tensor(Term::cons(v(y), v(ys)), v(z2))))));
      return StepResult{Term::ifz(n, base, body), "accuMap"};
    }
    case Prim::Split: {
      const Term& n = arg(0);
      const Term& m = arg(1);
      std::string y = fresh_name("y"), xs = fresh_name("xs"), a = fresh_name("ys"), b = fresh_name("ys");
      Term rec = Term::app(papp_all(prim(), {nat_minus_one(n), m}), v(xs));
      Term body = Term::let_cons(y, xs, arg(2), Term::let_tensor(a, b, rec, Term::tensor(Term::cons(v(y), v(a)), v(b))));
      return StepResult{Term::ifz(n, Term::tensor(Term::vnil(pa.annots.at(0)), arg(2)), body), "split"};
    }
    case Prim::Append: {
      const Term& n = arg(0);
      const Term& m = arg(1);
      std::string x = fresh_name("x"), xs = fresh_name("xs");
      Term rec = app_all(papp_all(prim(), {nat_minus_one(n), m}), {v(xs), arg(3)});
      Term body = Term::let_cons(x, xs, arg(2), Term::cons(v(x), rec));
      return StepResult{Term::ifz(n, Term::seqv(arg(2), arg(3)), body), "append"};
    }
    case Prim::Drop: {
      const Term& n = arg(0);
      std::string x = fresh_name("x"), xs = fresh_name("xs");
      Term rec = Term::app(papp_all(prim(), {nat_minus_one(n)}), v(xs));
      Term body = Term::let_cons(x, xs, arg(1), Term::seq(v(x), rec));
      return StepResult{Term::ifz(n, Term::seqv(arg(1), Term::star()), body), "drop"};
    }
    case Prim::Range: {
      const Term& n = arg(0);
      const Term& m = arg(1);
      Term rec = papp_all(prim(), {Term::binop(NatOp::Add, n, Term::nat(1)), m});
      return StepResult{
          Term::ifz(Term::binop(NatOp::Sub, m, n), Term::vnil(Type::nat()), Term::cons(n, rec)), "range"};
    }
    case Prim::Reverse: {
      const Term& xs = arg(0);
      if (auto elems = spine(xs)) {
        Term out = Term::vnil(Type::nat());
        for (const auto& e : *elems) out = Term::cons(e, out);
        return StepResult{out, "reverse"};
      }
      // Force the spine before reversing.
      auto r = step_spine(xs, effects);
      if (r) r->term = Term::papp(prim(), r->term);
      return r;
    }
    default:
      return std::nullopt;
  }
}

bool args_are_values(const PrimApp& pa) {
  for (const auto& [is_param, a] : pa.args)
    if (!is_value(a)) return false;
  return true;
}

// Fires a saturated primitive whose arguments are all values.
Opt fire_prim(const Term& m, EffectHandler* effects) {
  auto pa = as_prim_app(m);
  if (!pa || !pa->well_ordered() || !pa->saturated() || !args_are_values(*pa)) return std::nullopt;
  if (prim_is_gate(pa->prim) || prim_is_rotation(pa->prim) || pa->prim == Prim::Meas || pa->prim == Prim::New) {
    if (!effects) return std::nullopt;
    auto t = effects->apply(*pa);
    if (!t) return std::nullopt;
    return StepResult{*t, prim_name(pa->prim)};
  }
  return unfold(*pa, effects);
}

// Element type for the empty result of a for. The body may not capture
// state, so in a closed program it mentions only parameters by the time the
// loop runs; when it cannot be typed the annotation falls back to Nat.
Type for_elem_type(const Term::For& f) {
  try {
    Checker c(false);
    for (const auto& x : free_vars(f.body)) c.bind_param(x);
    return c.synth(f.body);
  } catch (const Error&) {
    return Type::nat();
  }
}

template <typename F>
Opt wrap(Opt r, F&& rebuild) {
  if (r) r->term = rebuild(r->term);
  return r;
}

Opt step_impl(const Term& m, EffectHandler* effects) {
  const Span sp = m.span();
  if (const auto* a = m.as<Term::App>()) {
    if (is_value(a->arg)) {
      if (auto r = fire_prim(m, effects)) return r;
      if (const auto* l = a->fn.as<Term::Lam>()) return StepResult{subst(l->body, l->name, a->arg), "beta"};
      return wrap(step_impl(a->fn, effects), [&](const Term& t) { return Term::app(t, a->arg, sp); });
    }
    return wrap(step_impl(a->arg, effects), [&](const Term& t) { return Term::app(a->fn, t, sp); });
  }
  if (const auto* a = m.as<Term::PApp>()) {
    if (is_value(a->arg)) {
      if (auto r = fire_prim(m, effects)) return r;
      if (const auto* l = a->fn.as<Term::PLam>()) return StepResult{subst(l->body, l->name, a->arg), "beta-param"};
      return wrap(step_impl(a->fn, effects), [&](const Term& t) { return Term::papp(t, a->arg, sp); });
    }
    return wrap(step_impl(a->arg, effects), [&](const Term& t) { return Term::papp(a->fn, t, sp); });
  }
  if (const auto* l = m.as<Term::LetTensor>()) {
    if (const auto* t = l->bound.as<Term::Tensor>())
      return StepResult{subst(l->body, {{l->x, t->lhs}, {l->y, t->rhs}}), "let-tensor"};
    return wrap(step_impl(l->bound, effects),
                [&](const Term& t) { return Term::let_tensor(l->x, l->y, t, l->body, l->tx, l->ty, sp); });
  }
  if (const auto* l = m.as<Term::LetCons>()) {
    if (const auto* c = l->bound.as<Term::Cons>())
      return StepResult{subst(l->body, {{l->x, c->head}, {l->y, c->tail}}), "let-cons"};
    return wrap(step_impl(l->bound, effects),
                [&](const Term& t) { return Term::let_cons(l->x, l->y, t, l->body, l->tx, l->ty, sp); });
  }
  if (const auto* i = m.as<Term::Ifz>()) {
    if (const auto* n = i->guard.as<Term::NatLit>())
      return StepResult{n->value == 0 ? i->then_branch : i->else_branch, n->value == 0 ? "ifz-zero" : "ifz-succ"};
    return wrap(step_impl(i->guard, effects),
                [&](const Term& t) { return Term::ifz(t, i->then_branch, i->else_branch, sp); });
  }
  if (const auto* s = m.as<Term::Seq>()) {
    if (s->lhs.as<Term::Star>()) return StepResult{s->rhs, "seq"};
    return wrap(step_impl(s->lhs, effects), [&](const Term& t) { return Term::seq(t, s->rhs, sp); });
  }
  if (const auto* s = m.as<Term::SeqV>()) {
    if (s->lhs.as<Term::VNil>()) return StepResult{s->rhs, "seqv"};
    return wrap(step_impl(s->lhs, effects), [&](const Term& t) { return Term::seqv(t, s->rhs, sp); });
  }
  if (const auto* b = m.as<Term::BinOp>()) {
    const auto* x = b->lhs.as<Term::NatLit>();
    const auto* y = b->rhs.as<Term::NatLit>();
    if (x && y) return StepResult{Term::nat(nat_apply(b->op, x->value, y->value), sp), "arith"};
    if (!is_value(b->rhs))
      return wrap(step_impl(b->rhs, effects), [&](const Term& t) { return Term::binop(b->op, b->lhs, t, sp); });
    return wrap(step_impl(b->lhs, effects), [&](const Term& t) { return Term::binop(b->op, t, b->rhs, sp); });
  }
  if (const auto* f = m.as<Term::For>()) {
    if (const auto* c = f->over.as<Term::Cons>()) {
      Term rest = Term::for_each(f->index, c->tail, f->body, sp);
      return StepResult{Term::cons(subst(f->body, f->index, c->head), rest, sp), "for-cons"};
    }
    if (f->over.as<Term::VNil>()) {
      return StepResult{Term::vnil(for_elem_type(*f), sp), "for-nil"};
    }
    return wrap(step_impl(f->over, effects), [&](const Term& t) { return Term::for_each(f->index, t, f->body, sp); });
  }
  return std::nullopt;
}

Opt step_deep(const Term& m, EffectHandler* effects) {
  if (auto r = step_impl(m, effects)) return r;
  if (const auto* t = m.as<Term::Tensor>()) {
    if (auto r = step_deep(t->lhs, effects)) return wrap(r, [&](const Term& x) { return Term::tensor(x, t->rhs, m.span()); });
    return wrap(step_deep(t->rhs, effects), [&](const Term& x) { return Term::tensor(t->lhs, x, m.span()); });
  }
  if (const auto* c = m.as<Term::Cons>()) {
    if (auto r = step_deep(c->head, effects)) return wrap(r, [&](const Term& x) { return Term::cons(x, c->tail, m.span()); });
    return wrap(step_deep(c->tail, effects), [&](const Term& x) { return Term::cons(c->head, x, m.span()); });
  }
  return std::nullopt;
}

NormalizeResult run(const Term& m, std::size_t fuel, const TraceFn& trace, EffectHandler* effects, bool deep) {
  NormalizeResult out{m, 0, false};
  while (true) {
    Opt r = deep ? step_deep(out.term, effects) : step_impl(out.term, effects);
    if (!r) break;
    if (out.steps == fuel) throw EvalError("reduction did not terminate within " + std::to_string(fuel) + " steps");
    ++out.steps;
    if (trace) trace(out.steps, *r);
    out.term = std::move(r->term);
  }
  out.value = is_value(out.term);
  return out;
}

}  // namespace

std::optional<StepResult> step(const Term& m, EffectHandler* effects) { return step_impl(m, effects); }

std::optional<StepResult> step_primitive(const Term& m) {
  auto pa = as_prim_app(m);
  if (!pa || !pa->well_ordered() || !pa->saturated() || !args_are_values(*pa)) return std::nullopt;
  return unfold(*pa, nullptr);
}

NormalizeResult normalize(const Term& m, std::size_t fuel, const TraceFn& trace, EffectHandler* effects) {
  return run(m, fuel, trace, effects, false);
}

NormalizeResult normalize_deep(const Term& m, std::size_t fuel, EffectHandler* effects) {
  return run(m, fuel, {}, effects, true);
}

}  // namespace szxc
