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

#include "szxc/typechecker.hpp"

#include <algorithm>

#include "szxc/detail/overloaded.hpp"

namespace szxc {

using detail::overloaded;

std::string type_error_kind_name(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::Linearity: return "linearity violation";
    case TypeErrorKind::Mismatch: return "type mismatch";
    case TypeErrorKind::Size: return "size mismatch";
    case TypeErrorKind::Unbound: return "unbound variable";
    case TypeErrorKind::NonNatParam: return "non-Nat parameter";
  }
  return "type error";
}

TypeError::TypeError(TypeErrorKind kind, Span span, const std::string& message)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.col) + ": " + type_error_kind_name(kind) + ": " +
            message),
      kind_(kind),
      span_(span),
      message_(message) {}

std::string TypeError::render(const std::string& file) const {
  return file + ":" + std::to_string(span_.line) + ":" + std::to_string(span_.col) + ": " +
         type_error_kind_name(kind_) + ": " + message_;
}

namespace {

// Structural equality ignoring vector sizes; distinguishes size errors from
// shape errors.
bool shape_equal(const Type& a, const Type& b) {
  if (a.node().index() != b.node().index()) return false;
  if (auto x = a.as<Type::Tensor>()) {
    auto y = b.as<Type::Tensor>();
    return shape_equal(x->lhs, y->lhs) && shape_equal(x->rhs, y->rhs);
  }
  if (auto x = a.as<Type::Lolli>()) {
    auto y = b.as<Type::Lolli>();
    return shape_equal(x->arg, y->arg) && shape_equal(x->result, y->result);
  }
  if (auto x = a.as<Type::Vec>()) return shape_equal(x->elem, b.as<Type::Vec>()->elem);
  if (auto x = a.as<Type::Pi>()) return shape_equal(x->body, b.as<Type::Pi>()->body);
  return true;
}

}  // namespace

Type prim_type(Prim p, const std::vector<Type>& annots) {
  const Type Q = Type::qubit(), B = Type::bit();
  // Internal binder names cannot clash with names inside the annotations.
  const std::string n = "%n", m = "%m";
  const NatExpr N = NatExpr::var(n), M = NatExpr::var(m);
  auto annot = [&](std::size_t i) { return annots.at(i); };
  switch (p) {
    case Prim::Meas: return Type::lolli(Q, B);
    case Prim::New: return Type::lolli(B, Q);
    case Prim::H: return Type::lolli(Q, Q);
    case Prim::CNOT: return Type::lolli(Q, Type::lolli(Q, Type::tensor(Q, Q)));
    case Prim::Rz:
    case Prim::RzInv:
    case Prim::Rx:
    case Prim::RxInv: return Type::pi(n, Type::lolli(Q, Q));
    case Prim::Split: {
      Type a = annot(0);
      return Type::pi(n, Type::pi(m, Type::lolli(Type::vec(a, N + M),
                                                 Type::tensor(Type::vec(a, N), Type::vec(a, M)))));
    }
    case Prim::Append: {
      Type a = annot(0);
      return Type::pi(n, Type::pi(m, Type::lolli(Type::vec(a, N), Type::lolli(Type::vec(a, M), Type::vec(a, N + M)))));
    }
    case Prim::Drop: return Type::pi(n, Type::lolli(Type::vec(Type::unit(), N), Type::unit()));
    case Prim::AccuMap: {
      Type a = annot(0), b = annot(1), c = annot(2);
      Type f = Type::lolli(a, Type::lolli(c, Type::tensor(b, c)));
      return Type::pi(
          n, Type::lolli(Type::vec(a, N),
                         Type::lolli(Type::vec(f, N), Type::lolli(c, Type::tensor(Type::vec(b, N), c)))));
    }
    case Prim::Range: return Type::pi(n, Type::pi(m, Type::vec(Type::nat(), M - N)));
    case Prim::Reverse: break;
  }
  throw TypeError(TypeErrorKind::Mismatch, {}, "reverse has no standalone type; apply it with @");
}

void Checker::bind_param(const std::string& name, const Type& type) { entries_.push_back({name, type, true, false}); }

void Checker::bind_state(const std::string& name, const Type& type) { entries_.push_back({name, type, false, false}); }

void Checker::unbind(Span span) {
  Entry e = entries_.back();
  entries_.pop_back();
  if (linear_ && !e.param && !e.used)
    throw TypeError(TypeErrorKind::Linearity, span, "state variable '" + e.name + "' is never used");
}

std::vector<std::string> Checker::unused_state() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (!e.param && !e.used) out.push_back(e.name);
  return out;
}

Checker::Entry* Checker::lookup(const std::string& name) {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->name == name) return &*it;
  return nullptr;
}

std::string Checker::binder_name(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name || free_vars(e.type).count(name)) return fresh_name(name);
  }
  for (const auto& f : facts_)
    if (free_vars(f.expr).count(name)) return fresh_name(name);
  return name;
}

void Checker::require_equal(const Type& expected, const Type& found, Span span, const std::string& what) {
  if (type_equal(expected, found, facts_)) return;
  TypeErrorKind kind = shape_equal(expected, found) ? TypeErrorKind::Size : TypeErrorKind::Mismatch;
  throw TypeError(kind, span, what + ": expected " + expected.to_string() + ", found " + found.to_string());
}

Type Checker::synth_param(const Term& m, const std::string& what) {
  barriers_.push_back({entries_.size(), TypeErrorKind::NonNatParam, what});
  Type t;
  try {
    t = synth(m);
  } catch (...) {
    barriers_.pop_back();
    throw;
  }
  barriers_.pop_back();
  if (!t.is_param())
    throw TypeError(TypeErrorKind::NonNatParam, m.span(), what + " must have a parameter type, found " + t.to_string());
  return t;
}

Type Checker::synth_papp(const Term::PApp& p, const Term& m) {
  if (auto c = p.fn.as<Term::Const>(); c && c->prim == Prim::Reverse) {
    Type t = synth_param(p.arg, "argument of reverse");
    if (!t.as<Type::Vec>())
      throw TypeError(TypeErrorKind::NonNatParam, p.arg.span(), "reverse expects Vec Nat, found " + t.to_string());
    return t;
  }
  Type ft = synth(p.fn);
  auto pi = ft.as<Type::Pi>();
  if (!pi) throw TypeError(TypeErrorKind::Mismatch, m.span(), "parameter application of non-dependent " + ft.to_string());
  Type at = synth_param(p.arg, "parameter argument");
  if (!at.as<Type::NatT>())
    throw TypeError(TypeErrorKind::NonNatParam, p.arg.span(), "parameter argument must be Nat, found " + at.to_string());
  auto n = term_to_nat(p.arg);
  if (!n) throw TypeError(TypeErrorKind::NonNatParam, p.arg.span(), "parameter argument is not an arithmetic expression");
  return substitute(pi->body, pi->param, *n);
}

Type Checker::synth_ifz(const Term::Ifz& i, const Term& m) {
  Type gt = synth_param(i.guard, "ifz guard");
  if (!gt.as<Type::NatT>())
    throw TypeError(TypeErrorKind::NonNatParam, i.guard.span(), "ifz guard must be Nat, found " + gt.to_string());
  auto g = term_to_nat(i.guard);
  if (!g) throw TypeError(TypeErrorKind::NonNatParam, i.guard.span(), "ifz guard is not an arithmetic expression");

  std::vector<bool> before;
  for (const auto& e : entries_) before.push_back(e.used);
  auto restore = [&](const std::vector<bool>& flags) {
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k].used = flags[k];
  };

  facts_.push_back({*g, false});
  Type t1 = synth(i.then_branch);
  facts_.pop_back();
  std::vector<bool> after_then;
  for (const auto& e : entries_) after_then.push_back(e.used);

  restore(before);
  facts_.push_back({*g, true});
  Type t2 = synth(i.else_branch);
  facts_.pop_back();
  if (linear_) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k].used != after_then[k])
        throw TypeError(TypeErrorKind::Linearity, m.span(),
                        "branches of ifz consume '" + entries_[k].name + "' differently");
    }
  }

  // Prefer the then-type; each branch only has to agree under its own guard.
  facts_.push_back({*g, true});
  bool else_agrees = type_equal(t1, t2, facts_);
  facts_.pop_back();
  if (else_agrees) return t1;
  facts_.push_back({*g, false});
  bool then_agrees = type_equal(t2, t1, facts_);
  facts_.pop_back();
  if (then_agrees) return t2;
  require_equal(t1, t2, i.else_branch.span(), "ifz branches disagree");
  return t1;
}

Type Checker::synth_for(const Term::For& f, const Term& m) {
  Type vt = synth_param(f.over, "for range");
  auto v = vt.as<Type::Vec>();
  if (!v || !v->elem.as<Type::NatT>())
    throw TypeError(TypeErrorKind::NonNatParam, f.over.span(), "for ranges over Vec Nat, found " + vt.to_string());
  std::string k = binder_name(f.index);
  Term body = k == f.index ? f.body : subst(f.body, f.index, Term::var(k));
  barriers_.push_back({entries_.size(), TypeErrorKind::Linearity, "for body"});
  bind_param(k);
  Type bt;
  try {
    bt = synth(body);
  } catch (...) {
    barriers_.pop_back();
    throw;
  }
  unbind();
  barriers_.pop_back();
  if (free_vars(bt).count(k))
    throw TypeError(TypeErrorKind::Size, m.span(), "element type of for depends on the index: " + bt.to_string());
  return Type::vec(bt, v->size);
}

Type Checker::synth(const Term& m) {
  const Span sp = m.span();
  return std::visit(
      overloaded{
          [&](const Term::Var& x) -> Type {
            Entry* e = lookup(x.name);
            if (!e) throw TypeError(TypeErrorKind::Unbound, sp, "'" + x.name + "' is not bound");
            if (e->param) return e->type;
            auto idx = static_cast<std::size_t>(e - entries_.data());
            for (const auto& b : barriers_) {
              if (idx < b.depth)
                throw TypeError(b.kind, sp, "state variable '" + x.name + "' used in " + b.reason);
            }
            if (linear_ && e->used)
              throw TypeError(TypeErrorKind::Linearity, sp, "state variable '" + x.name + "' used more than once");
            e->used = true;
            return e->type;
          },
          [&](const Term::BitLit&) { return Type::bit(); },
          [&](const Term::NatLit&) { return Type::nat(); },
          [&](const Term::Star&) { return Type::unit(); },
          [&](const Term::VNil& v) { return Type::vec(v.elem, NatExpr(0)); },
          [&](const Term::Const& c) -> Type {
            if (static_cast<int>(c.annots.size()) != prim_annotation_count(c.prim))
              throw TypeError(TypeErrorKind::Mismatch, sp, prim_name(c.prim) + " has the wrong number of annotations");
            try {
              return prim_type(c.prim, c.annots);
            } catch (const TypeError& e) {
              throw TypeError(e.kind(), sp, e.message());
            }
          },
          [&](const Term::Lam& l) -> Type {
            if (!l.type.is_state())
              throw TypeError(TypeErrorKind::NonNatParam, sp,
                              "state abstraction binds '" + l.name + "' at non-state type " + l.type.to_string());
            bind_state(l.name, l.type);
            Type bt = synth(l.body);
            unbind(sp);
            return Type::lolli(l.type, bt);
          },
          [&](const Term::App& a) -> Type {
            Type ft = synth(a.fn);
            auto lo = ft.as<Type::Lolli>();
            if (!lo) throw TypeError(TypeErrorKind::Mismatch, sp, "application of non-function " + ft.to_string());
            Type at = synth(a.arg);
            require_equal(lo->arg, at, a.arg.span(), "function argument");
            return lo->result;
          },
          [&](const Term::PLam& l) -> Type {
            std::string n = binder_name(l.name);
            Term body = n == l.name ? l.body : subst(l.body, l.name, Term::var(n));
            bind_param(n);
            Type bt = synth(body);
            unbind(sp);
            return Type::pi(n, bt);
          },
          [&](const Term::PApp& p) { return synth_papp(p, m); },
          [&](const Term::Tensor& t) -> Type {
            Type l = synth(t.lhs);
            Type r = synth(t.rhs);
            if (!l.is_state() || !r.is_state())
              throw TypeError(TypeErrorKind::NonNatParam, sp, "tensor of parameter values");
            return Type::tensor(l, r);
          },
          [&](const Term::LetTensor& l) -> Type {
            Type bt = synth(l.bound);
            auto t = bt.as<Type::Tensor>();
            if (!t) throw TypeError(TypeErrorKind::Mismatch, l.bound.span(), "let-tensor of " + bt.to_string());
            if (l.tx) require_equal(*l.tx, t->lhs, sp, "annotation of '" + l.x + "'");
            if (l.ty) require_equal(*l.ty, t->rhs, sp, "annotation of '" + l.y + "'");
            bind_state(l.x, t->lhs);
            bind_state(l.y, t->rhs);
            Type res = synth(l.body);
            unbind(sp);
            unbind(sp);
            return res;
          },
          [&](const Term::Seq& s) -> Type {
            Type lt = synth(s.lhs);
            require_equal(Type::unit(), lt, s.lhs.span(), "left of ';'");
            return synth(s.rhs);
          },
          [&](const Term::SeqV& s) -> Type {
            Type lt = synth(s.lhs);
            auto v = lt.as<Type::Vec>();
            if (!v) throw TypeError(TypeErrorKind::Mismatch, s.lhs.span(), "left of ';v' has type " + lt.to_string());
            if (!nat_is_zero(v->size, facts_))
              throw TypeError(TypeErrorKind::Size, s.lhs.span(), "left of ';v' must be empty, found " + lt.to_string());
            return synth(s.rhs);
          },
          [&](const Term::Cons& c) -> Type {
            Type ht = synth(c.head);
            Type tt = synth(c.tail);
            auto v = tt.as<Type::Vec>();
            if (!v) throw TypeError(TypeErrorKind::Mismatch, c.tail.span(), "tail of '::' has type " + tt.to_string());
            require_equal(v->elem, ht, c.head.span(), "head of '::'");
            return Type::vec(v->elem, nat_normalize(v->size + NatExpr(1)));
          },
          [&](const Term::LetCons& l) -> Type {
            Type bt = synth(l.bound);
            auto v = bt.as<Type::Vec>();
            if (!v) throw TypeError(TypeErrorKind::Mismatch, l.bound.span(), "let-cons of " + bt.to_string());
            NatExpr pred = nat_normalize(v->size - NatExpr(1));
            if (!nat_equal(pred + NatExpr(1), v->size, facts_))
              throw TypeError(TypeErrorKind::Size, l.bound.span(), "cannot show " + bt.to_string() + " is non-empty");
            Type tail = Type::vec(v->elem, pred);
            if (l.tx) require_equal(*l.tx, v->elem, sp, "annotation of '" + l.x + "'");
            if (l.ty) require_equal(*l.ty, tail, sp, "annotation of '" + l.y + "'");
            bool param = v->elem.is_param();
            if (param) {
              bind_param(l.x, v->elem);
              bind_param(l.y, tail);
            } else {
              bind_state(l.x, v->elem);
              bind_state(l.y, tail);
            }
            Type res = synth(l.body);
            unbind(sp);
            unbind(sp);
            return res;
          },
          [&](const Term::BinOp& b) -> Type {
            for (const Term* side : {&b.lhs, &b.rhs}) {
              Type t = synth_param(*side, "arithmetic operand");
              if (!t.as<Type::NatT>())
                throw TypeError(TypeErrorKind::NonNatParam, side->span(), "arithmetic on " + t.to_string());
            }
            return Type::nat();
          },
          [&](const Term::Ifz& i) { return synth_ifz(i, m); },
          [&](const Term::For& f) { return synth_for(f, m); },
      },
      m.node());
}

Type typecheck(const Context& ctx, const Term& m) {
  if (!ctx.well_formed()) throw TypeError(TypeErrorKind::Mismatch, m.span(), "ill-formed context");
  Checker c(true);
  for (const auto& e : ctx.params) c.bind_param(e.name, e.type);
  for (const auto& e : ctx.state) c.bind_state(e.name, e.type);
  Type t = c.synth(m);
  auto unused = c.unused_state();
  if (!unused.empty())
    throw TypeError(TypeErrorKind::Linearity, m.span(), "state variable '" + unused.front() + "' is never used");
  return t;
}

std::map<std::string, Type> typecheck_program(const Program& prog) {
  std::map<std::string, Type> out;
  for (const auto& d : prog.defs) {
    Type t = typecheck({}, prog.inlined(d.name));
    if (d.declared && !type_equal(*d.declared, t)) {
      TypeErrorKind kind = shape_equal(*d.declared, t) ? TypeErrorKind::Size : TypeErrorKind::Mismatch;
      throw TypeError(kind, d.span,
                      "'" + d.name + "' declared " + d.declared->to_string() + " but has type " + t.to_string());
    }
    out.emplace(d.name, d.declared ? *d.declared : t);
  }
  return out;
}

}  // namespace szxc
