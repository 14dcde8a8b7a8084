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

#include "szxc/term.hpp"

#include <algorithm>
#include <atomic>

#include "szxc/detail/overloaded.hpp"
#include "szxc/error.hpp"

namespace szxc {

using detail::overloaded;

std::string prim_name(Prim p) {
  switch (p) {
    case Prim::Meas: return "meas";
    case Prim::New: return "new";
    case Prim::H: return "H";
    case Prim::CNOT: return "CNOT";
    case Prim::Rz: return "Rz";
    case Prim::RzInv: return "RzInv";
    case Prim::Rx: return "Rx";
    case Prim::RxInv: return "RxInv";
    case Prim::Split: return "split";
    case Prim::Append: return "append";
    case Prim::Drop: return "drop";
    case Prim::AccuMap: return "accuMap";
    case Prim::Range: return "range";
    case Prim::Reverse: return "reverse";
  }
  return "?";
}

int prim_annotation_count(Prim p) {
  switch (p) {
    case Prim::Split:
    case Prim::Append: return 1;
    case Prim::AccuMap: return 3;
    default: return 0;
  }
}

bool prim_is_rotation(Prim p) {
  return p == Prim::Rz || p == Prim::RzInv || p == Prim::Rx || p == Prim::RxInv;
}

bool prim_is_gate(Prim p) { return p == Prim::H || p == Prim::CNOT || prim_is_rotation(p); }

PrimArity prim_arity(Prim p) {
  switch (p) {
    case Prim::Meas:
    case Prim::New:
    case Prim::H: return {0, 1};
    case Prim::CNOT: return {0, 2};
    case Prim::Rz:
    case Prim::RzInv:
    case Prim::Rx:
    case Prim::RxInv: return {1, 1};
    case Prim::Split: return {2, 1};
    case Prim::Append: return {2, 2};
    case Prim::Drop: return {1, 1};
    case Prim::AccuMap: return {1, 3};
    case Prim::Range: return {2, 0};
    case Prim::Reverse: return {1, 0};
  }
  return {0, 0};
}

bool PrimApp::well_ordered() const {
  PrimArity a = prim_arity(prim);
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool want_param = static_cast<int>(i) < a.params;
    if (args[i].first != want_param) return false;
  }
  return static_cast<int>(args.size()) <= a.params + a.states;
}

bool PrimApp::saturated() const {
  PrimArity a = prim_arity(prim);
  return static_cast<int>(args.size()) == a.params + a.states;
}

std::optional<PrimApp> as_prim_app(const Term& m) {
  std::vector<std::pair<bool, Term>> rev;
  const Term* cur = &m;
  while (true) {
    if (auto a = cur->as<Term::App>()) {
      rev.emplace_back(false, a->arg);
      cur = &a->fn;
    } else if (auto p = cur->as<Term::PApp>()) {
      rev.emplace_back(true, p->arg);
      cur = &p->fn;
    } else {
      break;
    }
  }
  auto c = cur->as<Term::Const>();
  if (!c) return std::nullopt;
  PrimApp out{c->prim, c->annots, {rev.rbegin(), rev.rend()}};
  return out;
}

Term::Term() : Term(Star{}) {}
Term::Term(Node node, Span span) : node_(std::make_shared<const Node>(std::move(node))), span_(span) {}

Term Term::var(std::string name, Span span) { return Term(Node(Var{std::move(name)}), span); }
Term Term::bit(bool value, Span span) { return Term(Node(BitLit{value}), span); }
Term Term::nat(Nat value, Span span) { return Term(Node(NatLit{value}), span); }
Term Term::star(Span span) { return Term(Node(Star{}), span); }
Term Term::vnil(Type elem, Span span) { return Term(Node(VNil{std::move(elem)}), span); }
Term Term::prim(Prim p, std::vector<Type> annots, Span span) { return Term(Node(Const{p, std::move(annots)}), span); }
Term Term::lam(std::string name, Type type, Term body, Span span) {
  return Term(Node(Lam{std::move(name), std::move(type), std::move(body)}), span);
}
Term Term::app(Term fn, Term arg, Span span) { return Term(Node(App{std::move(fn), std::move(arg)}), span); }
Term Term::plam(std::string name, Term body, Span span) {
  return Term(Node(PLam{std::move(name), std::move(body)}), span);
}
Term Term::papp(Term fn, Term arg, Span span) { return Term(Node(PApp{std::move(fn), std::move(arg)}), span); }
Term Term::tensor(Term lhs, Term rhs, Span span) { return Term(Node(Tensor{std::move(lhs), std::move(rhs)}), span); }
Term Term::let_tensor(std::string x, std::string y, Term bound, Term body, std::optional<Type> tx,
                      std::optional<Type> ty, Span span) {
  return Term(Node(LetTensor{std::move(x), std::move(y), std::move(tx), std::move(ty), std::move(bound), std::move(body)}),
              span);
}
Term Term::seq(Term lhs, Term rhs, Span span) { return Term(Node(Seq{std::move(lhs), std::move(rhs)}), span); }
Term Term::seqv(Term lhs, Term rhs, Span span) { return Term(Node(SeqV{std::move(lhs), std::move(rhs)}), span); }
Term Term::cons(Term head, Term tail, Span span) { return Term(Node(Cons{std::move(head), std::move(tail)}), span); }
Term Term::let_cons(std::string x, std::string y, Term bound, Term body, std::optional<Type> tx, std::optional<Type> ty,
                    Span span) {
  return Term(Node(LetCons{std::move(x), std::move(y), std::move(tx), std::move(ty), std::move(bound), std::move(body)}),
              span);
}
Term Term::binop(NatOp op, Term lhs, Term rhs, Span span) {
  return Term(Node(BinOp{op, std::move(lhs), std::move(rhs)}), span);
}
Term Term::ifz(Term guard, Term then_branch, Term else_branch, Span span) {
  return Term(Node(Ifz{std::move(guard), std::move(then_branch), std::move(else_branch)}), span);
}
Term Term::for_each(std::string index, Term over, Term body, Span span) {
  return Term(Node(For{std::move(index), std::move(over), std::move(body)}), span);
}

Term Term::with_span(Span span) const {
  Term t = *this;
  t.span_ = span;
  return t;
}

std::string fresh_name(const std::string& base) {
  static std::atomic<unsigned long> counter{0};
  std::size_t start = std::min(base.find_first_not_of('%'), base.size());
  std::string stem = base.substr(start, base.find('%', start) - start);
  if (stem.empty()) stem = "v";
  return stem + "%" + std::to_string(++counter);
}

// ---------------------------------------------------------------------------
// Equality

namespace {

bool opt_type_equal(const std::optional<Type>& a, const std::optional<Type>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || type_equal(*a, *b);
}

}  // namespace

bool operator==(const Term& a, const Term& b) {
  if (a.id() == b.id()) return true;
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&](const Term::Var& x) { return x.name == b.as<Term::Var>()->name; },
          [&](const Term::BitLit& x) { return x.value == b.as<Term::BitLit>()->value; },
          [&](const Term::NatLit& x) { return x.value == b.as<Term::NatLit>()->value; },
          [&](const Term::Star&) { return true; },
          [&](const Term::VNil& x) { return type_equal(x.elem, b.as<Term::VNil>()->elem); },
          [&](const Term::Const& x) {
            auto y = b.as<Term::Const>();
            if (x.prim != y->prim || x.annots.size() != y->annots.size()) return false;
            for (std::size_t i = 0; i < x.annots.size(); ++i)
              if (!type_equal(x.annots[i], y->annots[i])) return false;
            return true;
          },
          [&](const Term::Lam& x) {
            auto y = b.as<Term::Lam>();
            return x.name == y->name && type_equal(x.type, y->type) && x.body == y->body;
          },
          [&](const Term::App& x) {
            auto y = b.as<Term::App>();
            return x.fn == y->fn && x.arg == y->arg;
          },
          [&](const Term::PLam& x) {
            auto y = b.as<Term::PLam>();
            return x.name == y->name && x.body == y->body;
          },
          [&](const Term::PApp& x) {
            auto y = b.as<Term::PApp>();
            return x.fn == y->fn && x.arg == y->arg;
          },
          [&](const Term::Tensor& x) {
            auto y = b.as<Term::Tensor>();
            return x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const Term::LetTensor& x) {
            auto y = b.as<Term::LetTensor>();
            return x.x == y->x && x.y == y->y && opt_type_equal(x.tx, y->tx) && opt_type_equal(x.ty, y->ty) &&
                   x.bound == y->bound && x.body == y->body;
          },
          [&](const Term::Seq& x) {
            auto y = b.as<Term::Seq>();
            return x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const Term::SeqV& x) {
            auto y = b.as<Term::SeqV>();
            return x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const Term::Cons& x) {
            auto y = b.as<Term::Cons>();
            return x.head == y->head && x.tail == y->tail;
          },
          [&](const Term::LetCons& x) {
            auto y = b.as<Term::LetCons>();
            return x.x == y->x && x.y == y->y && opt_type_equal(x.tx, y->tx) && opt_type_equal(x.ty, y->ty) &&
                   x.bound == y->bound && x.body == y->body;
          },
          [&](const Term::BinOp& x) {
            auto y = b.as<Term::BinOp>();
            return x.op == y->op && x.lhs == y->lhs && x.rhs == y->rhs;
          },
          [&](const Term::Ifz& x) {
            auto y = b.as<Term::Ifz>();
            return x.guard == y->guard && x.then_branch == y->then_branch && x.else_branch == y->else_branch;
          },
          [&](const Term::For& x) {
            auto y = b.as<Term::For>();
            return x.index == y->index && x.over == y->over && x.body == y->body;
          },
      },
      a.node());
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void collect_type(const Type& t, const std::set<std::string>& bound, FreeVars& out) {
  for (const auto& v : free_vars(t))
    if (!bound.count(v)) out.params.insert(v);
}

void collect(const Term& m, bool param_pos, std::set<std::string>& bound, FreeVars& out) {
  auto with = [&](std::initializer_list<std::string> names, const Term& body, bool pos) {
    std::vector<std::string> added;
    for (const auto& n : names)
      if (bound.insert(n).second) added.push_back(n);
    collect(body, pos, bound, out);
    for (const auto& n : added) bound.erase(n);
  };
  std::visit(overloaded{
                 [&](const Term::Var& x) {
                   if (!bound.count(x.name)) (param_pos ? out.params : out.state).insert(x.name);
                 },
                 [&](const Term::VNil& x) { collect_type(x.elem, bound, out); },
                 [&](const Term::Const& x) {
                   for (const auto& t : x.annots) collect_type(t, bound, out);
                 },
                 [&](const Term::Lam& x) {
                   collect_type(x.type, bound, out);
                   with({x.name}, x.body, param_pos);
                 },
                 [&](const Term::App& x) {
                   collect(x.fn, param_pos, bound, out);
                   collect(x.arg, param_pos, bound, out);
                 },
                 [&](const Term::PLam& x) { with({x.name}, x.body, param_pos); },
                 [&](const Term::PApp& x) {
                   collect(x.fn, param_pos, bound, out);
                   collect(x.arg, true, bound, out);
                 },
                 [&](const Term::Tensor& x) {
                   collect(x.lhs, param_pos, bound, out);
                   collect(x.rhs, param_pos, bound, out);
                 },
                 [&](const Term::LetTensor& x) {
                   if (x.tx) collect_type(*x.tx, bound, out);
                   if (x.ty) collect_type(*x.ty, bound, out);
                   collect(x.bound, param_pos, bound, out);
                   with({x.x, x.y}, x.body, param_pos);
                 },
                 [&](const Term::Seq& x) {
                   collect(x.lhs, param_pos, bound, out);
                   collect(x.rhs, param_pos, bound, out);
                 },
                 [&](const Term::SeqV& x) {
                   collect(x.lhs, param_pos, bound, out);
                   collect(x.rhs, param_pos, bound, out);
                 },
                 [&](const Term::Cons& x) {
                   collect(x.head, param_pos, bound, out);
                   collect(x.tail, param_pos, bound, out);
                 },
                 [&](const Term::LetCons& x) {
                   if (x.tx) collect_type(*x.tx, bound, out);
                   if (x.ty) collect_type(*x.ty, bound, out);
                   collect(x.bound, param_pos, bound, out);
                   with({x.x, x.y}, x.body, param_pos);
                 },
                 [&](const Term::BinOp& x) {
                   collect(x.lhs, true, bound, out);
                   collect(x.rhs, true, bound, out);
                 },
                 [&](const Term::Ifz& x) {
                   collect(x.guard, true, bound, out);
                   collect(x.then_branch, param_pos, bound, out);
                   collect(x.else_branch, param_pos, bound, out);
                 },
                 [&](const Term::For& x) {
                   collect(x.over, true, bound, out);
                   with({x.index}, x.body, param_pos);
                 },
                 [](const auto&) {},
             },
             m.node());
}

}  // namespace

FreeVars free_vars_classified(const Term& m) {
  FreeVars out;
  std::set<std::string> bound;
  collect(m, false, bound, out);
  for (const auto& p : out.params) out.state.erase(p);
  return out;
}

std::set<std::string> free_vars(const Term& m) {
  FreeVars fv = free_vars_classified(m);
  std::set<std::string> all = fv.params;
  all.insert(fv.state.begin(), fv.state.end());
  return all;
}

// ---------------------------------------------------------------------------
// Substitution

std::optional<NatExpr> term_to_nat(const Term& m) {
  if (auto n = m.as<Term::NatLit>()) return NatExpr(n->value);
  if (auto v = m.as<Term::Var>()) return NatExpr::var(v->name);
  if (auto b = m.as<Term::BinOp>()) {
    auto l = term_to_nat(b->lhs), r = term_to_nat(b->rhs);
    if (l && r) return NatExpr::bin(b->op, *l, *r);
    return std::nullopt;
  }
  if (auto i = m.as<Term::Ifz>()) {
    auto g = term_to_nat(i->guard), t = term_to_nat(i->then_branch), e = term_to_nat(i->else_branch);
    if (g && t && e) return NatExpr::ite0(*g, *t, *e);
  }
  return std::nullopt;
}

Term nat_to_term(const NatExpr& e) {
  return std::visit(overloaded{
                        [](const NatExpr::Const& c) { return Term::nat(c.value); },
                        [](const NatExpr::Var& v) { return Term::var(v.name); },
                        [](const NatExpr::Bin& b) { return Term::binop(b.op, nat_to_term(b.lhs), nat_to_term(b.rhs)); },
                        [](const NatExpr::Ite0& i) {
                          return Term::ifz(nat_to_term(i.guard), nat_to_term(i.then_branch),
                                           nat_to_term(i.else_branch));
                        },
                    },
                    e.node());
}

namespace {

struct Substitution {
  std::map<std::string, Term> values;
  std::map<std::string, NatExpr> nats;
  std::set<std::string> fv;

  explicit Substitution(std::map<std::string, Term> v) : values(std::move(v)) {
    for (const auto& [name, t] : values) {
      auto f = free_vars(t);
      fv.insert(f.begin(), f.end());
      if (auto n = term_to_nat(t)) nats.emplace(name, *n);
    }
  }

  Substitution(std::map<std::string, Term> v, std::map<std::string, NatExpr> n, std::set<std::string> f)
      : values(std::move(v)), nats(std::move(n)), fv(std::move(f)) {}

  bool empty() const { return values.empty(); }

  Type type(const Type& t) const { return substitute(t, nats); }
  std::optional<Type> type(const std::optional<Type>& t) const {
    if (!t) return t;
    return type(*t);
  }

  // Enters the scope of `names`: drops shadowed entries and renames binders
  // that would capture free variables of the substituted values.
  Substitution enter(std::vector<std::string>& names) const {
    Substitution inner = *this;
    for (const auto& n : names) {
      inner.values.erase(n);
      inner.nats.erase(n);
    }
    for (auto& n : names) {
      if (inner.fv.count(n) && !inner.values.empty()) {
        std::string fresh = fresh_name(n);
        inner.values[n] = Term::var(fresh);
        inner.nats[n] = NatExpr::var(fresh);
        n = fresh;
      }
    }
    return inner;
  }
};

Term apply(const Term& m, const Substitution& s) {
  if (s.empty()) return m;
  Span sp = m.span();
  return std::visit(
      overloaded{
          [&](const Term::Var& x) -> Term {
            auto it = s.values.find(x.name);
            return it == s.values.end() ? m : it->second.with_span(sp);
          },
          [&](const Term::VNil& x) -> Term { return Term::vnil(s.type(x.elem), sp); },
          [&](const Term::Const& x) -> Term {
            std::vector<Type> annots;
            for (const auto& t : x.annots) annots.push_back(s.type(t));
            return Term::prim(x.prim, annots, sp);
          },
          [&](const Term::Lam& x) -> Term {
            std::vector<std::string> names{x.name};
            Substitution inner = s.enter(names);
            return Term::lam(names[0], s.type(x.type), apply(x.body, inner), sp);
          },
          [&](const Term::App& x) -> Term { return Term::app(apply(x.fn, s), apply(x.arg, s), sp); },
          [&](const Term::PLam& x) -> Term {
            std::vector<std::string> names{x.name};
            Substitution inner = s.enter(names);
            return Term::plam(names[0], apply(x.body, inner), sp);
          },
          [&](const Term::PApp& x) -> Term { return Term::papp(apply(x.fn, s), apply(x.arg, s), sp); },
          [&](const Term::Tensor& x) -> Term { return Term::tensor(apply(x.lhs, s), apply(x.rhs, s), sp); },
          [&](const Term::LetTensor& x) -> Term {
            std::vector<std::string> names{x.x, x.y};
            Substitution inner = s.enter(names);
            return Term::let_tensor(names[0], names[1], apply(x.bound, s), apply(x.body, inner), s.type(x.tx),
                                    s.type(x.ty), sp);
          },
          [&](const Term::Seq& x) -> Term { return Term::seq(apply(x.lhs, s), apply(x.rhs, s), sp); },
          [&](const Term::SeqV& x) -> Term { return Term::seqv(apply(x.lhs, s), apply(x.rhs, s), sp); },
          [&](const Term::Cons& x) -> Term { return Term::cons(apply(x.head, s), apply(x.tail, s), sp); },
          [&](const Term::LetCons& x) -> Term {
            std::vector<std::string> names{x.x, x.y};
            Substitution inner = s.enter(names);
            return Term::let_cons(names[0], names[1], apply(x.bound, s), apply(x.body, inner), s.type(x.tx),
                                  s.type(x.ty), sp);
          },
          [&](const Term::BinOp& x) -> Term { return Term::binop(x.op, apply(x.lhs, s), apply(x.rhs, s), sp); },
          [&](const Term::Ifz& x) -> Term {
            return Term::ifz(apply(x.guard, s), apply(x.then_branch, s), apply(x.else_branch, s), sp);
          },
          [&](const Term::For& x) -> Term {
            std::vector<std::string> names{x.index};
            Substitution inner = s.enter(names);
            return Term::for_each(names[0], apply(x.over, s), apply(x.body, inner), sp);
          },
          [&](const auto&) -> Term { return m; },
      },
      m.node());
}

}  // namespace

Term subst(const Term& m, const std::map<std::string, Term>& values) { return apply(m, Substitution(values)); }

Term subst(const Term& m, const std::string& x, const Term& v) { return subst(m, std::map<std::string, Term>{{x, v}}); }

namespace {

// Renames binders in preorder. With `canonical` set, names are `%a0, %a1, ...`
// so that α-equivalent terms become structurally equal.
Term rename_binders(const Term& m, bool canonical, int& counter) {
  auto next = [&](const std::string& base) {
    return canonical ? "%a" + std::to_string(counter++) : fresh_name(base);
  };
  auto rebind = [&](const std::vector<std::string>& olds, const Term& body, std::vector<std::string>& news) {
    std::map<std::string, Term> ren;
    news.clear();
    for (const auto& o : olds) {
      news.push_back(next(o));
      ren[o] = Term::var(news.back());
    }
    // A pattern binding the same name twice: the right-most occurrence wins.
    return subst(body, ren);
  };
  Span sp = m.span();
  std::vector<std::string> ns;
  return std::visit(
      overloaded{
          [&](const Term::Lam& x) -> Term {
            Term body = rebind({x.name}, x.body, ns);
            return Term::lam(ns[0], x.type, rename_binders(body, canonical, counter), sp);
          },
          [&](const Term::App& x) -> Term {
            Term f = rename_binders(x.fn, canonical, counter);
            return Term::app(f, rename_binders(x.arg, canonical, counter), sp);
          },
          [&](const Term::PLam& x) -> Term {
            Term body = rebind({x.name}, x.body, ns);
            return Term::plam(ns[0], rename_binders(body, canonical, counter), sp);
          },
          [&](const Term::PApp& x) -> Term {
            Term f = rename_binders(x.fn, canonical, counter);
            return Term::papp(f, rename_binders(x.arg, canonical, counter), sp);
          },
          [&](const Term::Tensor& x) -> Term {
            Term l = rename_binders(x.lhs, canonical, counter);
            return Term::tensor(l, rename_binders(x.rhs, canonical, counter), sp);
          },
          [&](const Term::LetTensor& x) -> Term {
            Term bound = rename_binders(x.bound, canonical, counter);
            Term body = rebind({x.x, x.y}, x.body, ns);
            return Term::let_tensor(ns[0], ns[1], bound, rename_binders(body, canonical, counter), x.tx, x.ty, sp);
          },
          [&](const Term::Seq& x) -> Term {
            Term l = rename_binders(x.lhs, canonical, counter);
            return Term::seq(l, rename_binders(x.rhs, canonical, counter), sp);
          },
          [&](const Term::SeqV& x) -> Term {
            Term l = rename_binders(x.lhs, canonical, counter);
            return Term::seqv(l, rename_binders(x.rhs, canonical, counter), sp);
          },
          [&](const Term::Cons& x) -> Term {
            Term h = rename_binders(x.head, canonical, counter);
            return Term::cons(h, rename_binders(x.tail, canonical, counter), sp);
          },
          [&](const Term::LetCons& x) -> Term {
            Term bound = rename_binders(x.bound, canonical, counter);
            Term body = rebind({x.x, x.y}, x.body, ns);
            return Term::let_cons(ns[0], ns[1], bound, rename_binders(body, canonical, counter), x.tx, x.ty, sp);
          },
          [&](const Term::BinOp& x) -> Term {
            Term l = rename_binders(x.lhs, canonical, counter);
            return Term::binop(x.op, l, rename_binders(x.rhs, canonical, counter), sp);
          },
          [&](const Term::Ifz& x) -> Term {
            Term g = rename_binders(x.guard, canonical, counter);
            Term t = rename_binders(x.then_branch, canonical, counter);
            return Term::ifz(g, t, rename_binders(x.else_branch, canonical, counter), sp);
          },
          [&](const Term::For& x) -> Term {
            Term over = rename_binders(x.over, canonical, counter);
            Term body = rebind({x.index}, x.body, ns);
            return Term::for_each(ns[0], over, rename_binders(body, canonical, counter), sp);
          },
          [&](const auto&) -> Term { return m; },
      },
      m.node());
}

}  // namespace

Term freshen(const Term& m) {
  int counter = 0;
  return rename_binders(m, false, counter);
}

bool alpha_equal(const Term& a, const Term& b) {
  int ca = 0, cb = 0;
  return rename_binders(a, true, ca) == rename_binders(b, true, cb);
}

bool is_value(const Term& m) {
  return std::visit(overloaded{
                        [](const Term::Var&) { return true; },
                        [](const Term::BitLit&) { return true; },
                        [](const Term::NatLit&) { return true; },
                        [](const Term::Star&) { return true; },
                        [](const Term::VNil&) { return true; },
                        [](const Term::Const&) { return true; },
                        [](const Term::Lam&) { return true; },
                        [](const Term::PLam&) { return true; },
                        [](const Term::Tensor&) { return true; },
                        [](const Term::Cons&) { return true; },
                        [&](const auto&) {
                          // Partially applied primitives are values.
                          auto pa = as_prim_app(m);
                          if (!pa || pa->saturated() || !pa->well_ordered()) return false;
                          for (const auto& [is_param, arg] : pa->args)
                            if (!is_value(arg)) return false;
                          return true;
                        },
                    },
                    m.node());
}

}  // namespace szxc
