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

#include "szxc/translator.hpp"

#include <map>

#include "szxc/error.hpp"
#include "szxc/param_eval.hpp"
#include "szxc/parser.hpp"
#include "szxc/typechecker.hpp"

namespace szxc {

namespace {

NatExpr nat_of(const Term& m) {
  auto e = term_to_nat(m);
  if (!e) throw TranslationError("expected a natural-number expression, found " + pretty_print(m));
  return *e;
}

NatExpr ite0(const NatExpr& g, Nat a, Nat b) { return NatExpr::ite0(g, NatExpr(a), NatExpr(b)); }

// State argument types of a primitive once its parameters are supplied.
std::vector<Type> state_args(Prim p, const std::vector<Type>& annots, const std::vector<NatExpr>& params,
                             Type* result) {
  Type t = prim_type(p, annots);
  for (const auto& e : params) {
    const auto* pi = std::get_if<Type::Pi>(&t.node());
    if (!pi) throw TranslationError(prim_name(p) + " applied to too many parameters");
    t = substitute(pi->body, pi->param, e);
  }
  if (std::holds_alternative<Type::Pi>(t.node()))
    throw TranslationError(prim_name(p) + " is missing parameters and has no register representation");
  std::vector<Type> args;
  while (const auto* l = std::get_if<Type::Lolli>(&t.node())) {
    args.push_back(l->arg);
    t = l->result;
  }
  if (result) *result = t;
  return args;
}

class Translator {
 public:
  explicit Translator(const TranslateOptions& opts) : opts_(opts) {}

  Diagram run(const Context& ctx, const Term& m) {
    Diagram d;
    d_ = &d;
    for (const auto& p : ctx.params) {
      d.params.push_back(p.name);
      checker_.bind_param(p.name, p.type);
    }
    for (const auto& s : ctx.state) {
      WireId w = d.add_wire(type_width(s.type));
      d.inputs.push_back(w);
      env_[s.name] = w;
      checker_.bind_state(s.name, s.type);
    }
    d.outputs.push_back(tr(m));
    return d;
  }

  // Saturated primitive applied to registers.
  WireId prim_apply(Prim p, const std::vector<Type>& annots, const std::vector<NatExpr>& params,
                    const std::vector<WireId>& args) {
    Diagram& d = *d_;
    const NatExpr one(Nat{1});
    switch (p) {
      case Prim::Meas:
      case Prim::New: {
        auto outs = d.add(NodeKind::Z, {args[0]}, {one, one}, uniform(Phase::zero(), one));
        d.add(NodeKind::Ground, {outs[1]}, {});
        return outs[0];
      }
      case Prim::H:
        return d.add(NodeKind::Hadamard, {args[0]}, {one}).front();
      case Prim::CNOT: {
        auto c = d.add(NodeKind::Z, {args[0]}, {one, one}, uniform(Phase::zero(), one));
        auto t = d.add(NodeKind::X, {c[1], args[1]}, {one}, uniform(Phase::zero(), one));
        return d.gather({c[0], t[0]});
      }
      case Prim::Rz:
      case Prim::RzInv:
      case Prim::Rx:
      case Prim::RxInv: {
        int sign = p == Prim::Rz || p == Prim::Rx ? 1 : -1;
        NodeKind kind = p == Prim::Rz || p == Prim::RzInv ? NodeKind::Z : NodeKind::X;
        return d.add(kind, {args[0]}, {one}, uniform(rotation_phase(sign, params[0], opts_.rotation), one)).front();
      }
      case Prim::Split: {
        NatExpr a = type_width(annots[0]);
        auto parts = d.split(args[0], {params[0] * a, params[1] * a});
        return d.gather(parts);
      }
      case Prim::Append:
        return d.gather({args[0], args[1]});
      case Prim::Drop:
        d.terminate(args[0]);
        return d.empty_source();
      case Prim::AccuMap: {
        const NatExpr& n = params[0];
        NatExpr a = type_width(annots[0]), b = type_width(annots[1]), c = type_width(annots[2]);
        // Regroup the function register (A C B C)ⁿ into AⁿCⁿBⁿCⁿ.
        Node tau;
        tau.kind = NodeKind::Perm;
        tau.ins = {args[1]};
        tau.outs = {d.add_wire(d.wires[args[1]])};
        tau.perm = PermSpec{PermSpec::Tau{n, a, b, c}};
        WireId grouped = tau.outs[0];
        d.add_node(std::move(tau));
        auto parts = d.split(grouped, {n * a, n * c, n * b, n * c});
        // Arguments.
        d.add(NodeKind::Cap, {parts[0], args[0]}, {});
        // Accumulator chain z, c₁, …, cₙ: the first n registers feed the
        // functions, the last is the result.
        WireId chain = d.gather({args[2], parts[3]});
        auto fed = d.split(chain, {n * c, c});
        d.add(NodeKind::Cap, {parts[1], fed[0]}, {});
        return d.gather({parts[2], fed[1]});
      }
      case Prim::Range:
      case Prim::Reverse:
        break;
    }
    throw TranslationError(prim_name(p) + " has no register representation");
  }

  // A primitive applied to some of its state arguments, as a function value.
  WireId prim_value(Prim p, const std::vector<Type>& annots, const std::vector<NatExpr>& params,
                    std::vector<WireId> given) {
    std::vector<Type> args = state_args(p, annots, params, nullptr);
    std::vector<WireId> duals;
    for (std::size_t i = given.size(); i < args.size(); ++i) {
      auto legs = d_->add(NodeKind::Cup, {}, {type_width(args[i]), type_width(args[i])});
      duals.push_back(legs[0]);
      given.push_back(legs[1]);
    }
    WireId r = prim_apply(p, annots, params, given);
    if (duals.empty()) return r;
    duals.push_back(r);
    return d_->gather(duals);
  }

  // Parameter-level head reduction: pushes parameter applications into
  // abstractions, conditionals and let bodies.
  Term head(const Term& m) {
    const auto* pa = m.as<Term::PApp>();
    if (!pa) return m;
    Term f = head(pa->fn);
    if (const auto* l = f.as<Term::PLam>()) return head(subst(l->body, l->name, pa->arg));
    if (const auto* i = f.as<Term::Ifz>())
      return Term::ifz(i->guard, Term::papp(i->then_branch, pa->arg), Term::papp(i->else_branch, pa->arg), m.span());
    if (const auto* l = f.as<Term::LetTensor>())
      return Term::let_tensor(l->x, l->y, l->bound, Term::papp(l->body, pa->arg), l->tx, l->ty, m.span());
    if (const auto* l = f.as<Term::LetCons>())
      return Term::let_cons(l->x, l->y, l->bound, Term::papp(l->body, pa->arg), l->tx, l->ty, m.span());
    if (const auto* a = f.as<Term::App>())
      if (const auto* l = a->fn.as<Term::Lam>())
        return Term::app(Term::lam(l->name, l->type, Term::papp(l->body, pa->arg)), a->arg, m.span());
    return Term::papp(f, pa->arg, m.span());
  }

  WireId with_state(const std::string& x, const Type& t, WireId w, const Term& body) {
    auto saved = env_.find(x) != env_.end() ? std::optional<WireId>(env_[x]) : std::nullopt;
    env_[x] = w;
    checker_.bind_state(x, t);
    WireId r = tr(body);
    checker_.unbind();
    if (saved)
      env_[x] = *saved;
    else
      env_.erase(x);
    return r;
  }

  WireId tr(const Term& m0) {
    Term m = head(m0);
    Diagram& d = *d_;
    if (auto pa = as_prim_app(m); pa && !m.as<Term::Const>()) {
      if (!pa->well_ordered()) throw TranslationError("parameters must precede state arguments in " + pretty_print(m));
      std::vector<NatExpr> params;
      std::vector<WireId> args;
      for (const auto& [is_param, a] : pa->args) {
        if (is_param)
          params.push_back(nat_of(a));
        else
          args.push_back(tr(a));
      }
      Type result = Type::unit();
      if (args.size() == state_args(pa->prim, pa->annots, params, &result).size())
        return prim_apply(pa->prim, pa->annots, params, args);
      return prim_value(pa->prim, pa->annots, params, args);
    }
    if (const auto* c = m.as<Term::Const>()) return prim_value(c->prim, c->annots, {}, {});
    if (const auto* v = m.as<Term::Var>()) {
      auto it = env_.find(v->name);
      if (it == env_.end()) throw TranslationError("'" + v->name + "' is not a register in scope");
      return it->second;
    }
    if (const auto* b = m.as<Term::BitLit>()) {
      const NatExpr one(Nat{1});
      return d.add(NodeKind::X, {}, {one}, uniform(b->value ? Phase::half() : Phase::zero(), one)).front();
    }
    if (m.as<Term::Star>() || m.as<Term::VNil>()) return d.empty_source();
    if (const auto* l = m.as<Term::Lam>()) {
      NatExpr w = type_width(l->type);
      auto legs = d.add(NodeKind::Cup, {}, {w, w});
      WireId r = with_state(l->name, l->type, legs[1], l->body);
      return d_->gather({legs[0], r});
    }
    if (const auto* a = m.as<Term::App>()) {
      Term f = head(a->fn);
      if (const auto* l = f.as<Term::Lam>()) {
        WireId arg = tr(a->arg);
        return with_state(l->name, l->type, arg, l->body);
      }
      Type ft = checker_.synth(f);
      const auto* lolli = std::get_if<Type::Lolli>(&ft.node());
      if (!lolli) throw TranslationError("applying a term of type " + ft.to_string());
      WireId fw = tr(f);
      WireId arg = tr(a->arg);
      auto parts = d_->split(fw, {type_width(lolli->arg), type_width(lolli->result)});
      d_->add(NodeKind::Cap, {parts[0], arg}, {});
      return parts[1];
    }
    if (const auto* t = m.as<Term::Tensor>()) {
      WireId a = tr(t->lhs);
      WireId b = tr(t->rhs);
      return d_->gather({a, b});
    }
    if (const auto* c = m.as<Term::Cons>()) {
      WireId a = tr(c->head);
      WireId b = tr(c->tail);
      return d_->gather({a, b});
    }
    if (const auto* l = m.as<Term::LetTensor>()) {
      Type bt = checker_.synth(l->bound);
      const auto* pair = std::get_if<Type::Tensor>(&bt.node());
      if (!pair) throw TranslationError("let-tensor over a term of type " + bt.to_string());
      WireId w = tr(l->bound);
      auto parts = d_->split(w, {type_width(pair->lhs), type_width(pair->rhs)});
      checker_.bind_state(l->x, pair->lhs);
      auto saved = env_;
      env_[l->x] = parts[0];
      WireId r = with_state(l->y, pair->rhs, parts[1], l->body);
      env_ = saved;
      checker_.unbind();
      return r;
    }
    if (const auto* l = m.as<Term::LetCons>()) {
      Type bt = checker_.synth(l->bound);
      const auto* vec = std::get_if<Type::Vec>(&bt.node());
      if (!vec) throw TranslationError("let-cons over a term of type " + bt.to_string());
      Type tail = Type::vec(vec->elem, vec->size - NatExpr(Nat{1}));
      WireId w = tr(l->bound);
      auto parts = d_->split(w, {type_width(vec->elem), type_width(tail)});
      checker_.bind_state(l->x, vec->elem);
      auto saved = env_;
      env_[l->x] = parts[0];
      WireId r = with_state(l->y, tail, parts[1], l->body);
      env_ = saved;
      checker_.unbind();
      return r;
    }
    if (const auto* s = m.as<Term::Seq>()) {
      d_->terminate(tr(s->lhs));
      return tr(s->rhs);
    }
    if (const auto* s = m.as<Term::SeqV>()) {
      d_->terminate(tr(s->lhs));
      return tr(s->rhs);
    }
    if (const auto* i = m.as<Term::Ifz>()) return tr_ifz(*i, m);
    if (const auto* f = m.as<Term::For>()) return tr_for(*f, m);
    throw TranslationError("no register representation for " + pretty_print(m));
  }

  // Both branches become boxes over a list of length one or zero, so that
  // exactly one of them is instantiated for any environment.
  WireId tr_ifz(const Term::Ifz& i, const Term& m) {
    NatExpr l = nat_of(i.guard);
    Type result = checker_.synth(m);
    NatExpr width = type_width(result);
    std::vector<std::string> free;
    for (const auto& x : free_vars_classified(m).state)
      if (env_.count(x)) free.push_back(x);
    std::vector<WireId> then_in, else_in;
    for (const auto& x : free) {
      WireId w = env_[x];
      const NatExpr& mult = d_->wires[w];
      auto parts = d_->split(w, {mult * ite0(l, 1, 0), mult * ite0(l, 0, 1)});
      then_in.push_back(parts[0]);
      else_in.push_back(parts[1]);
    }
    WireId t = branch(i.then_branch, {l, false}, ite0(l, 1, 0), free, then_in, width);
    WireId e = branch(i.else_branch, {l, true}, ite0(l, 0, 1), free, else_in, width);
    return d_->gather({t, e}, width);
  }

  WireId branch(const Term& body, NatFact fact, const NatExpr& live, const std::vector<std::string>& free,
                const std::vector<WireId>& outer_in, const NatExpr& width) {
    auto box = std::make_shared<Box>();
    box->index = fresh_name("live");
    box->list = NatListExpr::range(NatExpr(Nat{0}), live);
    Diagram& inner = box->body;
    auto saved_env = env_;
    Diagram* saved_d = d_;
    d_ = &inner;
    for (const auto& x : free) {
      WireId w = inner.add_wire(saved_d->wires[saved_env[x]]);
      inner.inputs.push_back(w);
      env_[x] = w;
    }
    checker_.push_fact(fact);
    inner.outputs.push_back(tr(body));
    checker_.pop_fact();
    d_ = saved_d;
    env_ = saved_env;
    Node n;
    n.kind = NodeKind::Box;
    n.ins = outer_in;
    n.outs = {d_->add_wire(width * live)};
    n.box = box;
    WireId out = n.outs[0];
    d_->add_node(std::move(n));
    return out;
  }

  WireId tr_for(const Term::For& f, const Term& m) {
    Type t = checker_.synth(m);
    auto box = std::make_shared<Box>();
    box->index = f.index;
    box->list = term_to_nat_list(f.over);
    auto saved_env = env_;
    Diagram* saved_d = d_;
    d_ = &box->body;
    env_.clear();
    checker_.bind_param(f.index);
    box->body.outputs.push_back(tr(f.body));
    checker_.unbind();
    d_ = saved_d;
    env_ = saved_env;
    Node n;
    n.kind = NodeKind::Box;
    n.outs = {d_->add_wire(type_width(t))};
    n.box = box;
    WireId out = n.outs[0];
    d_->add_node(std::move(n));
    return out;
  }

 private:
  TranslateOptions opts_;
  Checker checker_{false};
  Diagram* d_ = nullptr;
  std::map<std::string, WireId> env_;
};

}  // namespace

NatListExpr term_to_nat_list(const Term& m) {
  if (auto pa = as_prim_app(m)) {
    if (pa->prim == Prim::Range && pa->args.size() == 2)
      return NatListExpr::range(nat_of(pa->args[0].second), nat_of(pa->args[1].second));
    if (pa->prim == Prim::Reverse && pa->args.size() == 1) return NatListExpr::reverse(term_to_nat_list(pa->args[0].second));
  }
  if (m.as<Term::VNil>()) return NatListExpr::nil();
  if (const auto* c = m.as<Term::Cons>()) return NatListExpr::cons(nat_of(c->head), term_to_nat_list(c->tail));
  if (const auto* f = m.as<Term::For>())
    return NatListExpr::for_each(f->index, term_to_nat_list(f->over), nat_of(f->body));
  if (const auto* v = m.as<Term::Var>()) return NatListExpr::var(v->name);
  // Other closed shapes, such as a primitive's unfolding, are evaluated.
  if (free_vars(m).empty()) {
    ParamValue v;
    try {
      v = eval(m, {});
    } catch (const EvalError&) {
      throw TranslationError("cannot read a list of naturals from " + pretty_print(m));
    }
    if (v.is_list()) {
      NatListExpr out = NatListExpr::nil();
      for (auto it = v.list().rbegin(); it != v.list().rend(); ++it) out = NatListExpr::cons(NatExpr(*it), out);
      return out;
    }
  }
  throw TranslationError("cannot read a list of naturals from " + pretty_print(m));
}

Diagram gate_diagram(Prim p, const NatExpr& param, const TranslateOptions& opts) {
  if (!prim_is_gate(p) && !prim_is_rotation(p) && p != Prim::Meas && p != Prim::New)
    throw TranslationError(prim_name(p) + " is not a gate");
  std::vector<NatExpr> params;
  if (prim_is_rotation(p)) params.push_back(param);
  std::vector<Type> args = state_args(p, {}, params, nullptr);
  Context ctx;
  for (std::size_t i = 0; i < args.size(); ++i) ctx.state.push_back({"%a" + std::to_string(i), args[i]});
  Term body = Term::prim(p);
  if (prim_is_rotation(p)) body = Term::papp(body, nat_to_term(param));
  for (std::size_t i = 0; i < args.size(); ++i) body = Term::app(body, Term::var("%a" + std::to_string(i)));
  for (const auto& v : free_vars(param)) ctx.params.push_back({v, Type::nat()});
  return Translator(opts).run(ctx, body);
}

Diagram translate_primitive(Prim p, const std::vector<Type>& annots, const TranslateOptions& opts) {
  if (p != Prim::Split && p != Prim::Append && p != Prim::Drop && p != Prim::AccuMap)
    throw TranslationError(prim_name(p) + " is not a list primitive");
  Context ctx;
  Term body = Term::prim(p, annots);
  std::vector<NatExpr> params;
  for (const char* name : {"n", "m"}) {
    if (static_cast<int>(params.size()) == prim_arity(p).params) break;
    ctx.params.push_back({name, Type::nat()});
    params.push_back(NatExpr::var(name));
    body = Term::papp(body, Term::var(name));
  }
  std::vector<Type> args = state_args(p, annots, params, nullptr);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string x = "%a" + std::to_string(i);
    ctx.state.push_back({x, args[i]});
    body = Term::app(body, Term::var(x));
  }
  return Translator(opts).run(ctx, body);
}

Diagram translate(const Context& ctx, const Term& m, const TranslateOptions& opts) {
  return Translator(opts).run(ctx, m);
}

Diagram compile(const Term& entry, const TranslateOptions& opts) {
  Context ctx;
  Term m = entry;
  while (const auto* l = m.as<Term::PLam>()) {
    ctx.params.push_back({l->name, Type::nat()});
    m = l->body;
  }
  while (const auto* l = m.as<Term::Lam>()) {
    ctx.state.push_back({l->name, l->type});
    m = l->body;
  }
  return translate(ctx, m, opts);
}

}  // namespace szxc
