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

#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "szxc/detail/overloaded.hpp"
#include "szxc/error.hpp"
#include "szxc/instantiate.hpp"
#include "szxc/param_eval.hpp"
#include "szxc/reducer.hpp"
#include "szxc/simplify.hpp"

#ifndef SZXC_CORPUS_DIR
#define SZXC_CORPUS_DIR "corpus"
#endif

namespace szxc::testing {

namespace fs = std::filesystem;

std::string corpus_path(const std::string& file) { return (fs::path(SZXC_CORPUS_DIR) / file).string(); }

Program corpus_program(const std::string& file) {
  std::ifstream in(corpus_path(file));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str());
}

namespace {

std::vector<std::string> list_corpus(bool bad) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(SZXC_CORPUS_DIR)) {
    std::string name = e.path().filename().string();
    if (e.path().extension() != ".ld") continue;
    if ((name.rfind("bad_", 0) == 0) == bad) out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Random concrete diagrams.

class DiagramBuilder {
 public:
  DiagramBuilder(Rng& rng, Nat max_qubits) : rng_(rng), cap_(max_qubits) {}

  ConcreteDiagram build() {
    Nat budget = pick(0, std::min<Nat>(cap_, 3));
    while (budget > 0) {
      Nat m = pick(0, std::min<Nat>(budget, 2));
      if (m == 0 && !coin(4)) m = 1;
      WireId w = wire(m);
      d_.inputs.push_back(w);
      frontier_.push_back(w);
      budget -= std::min(budget, std::max<Nat>(m, 1));
    }
    int ops = static_cast<int>(pick(1, 7));
    for (int i = 0; i < ops; ++i) op();
    // Close the frontier, keeping the boundary within the cap.
    while (width() + input_width() > cap_ && !frontier_.empty()) {
      WireId w = take();
      node(NodeKind::Ground, {w}, {});
    }
    std::shuffle(frontier_.begin(), frontier_.end(), rng_);
    d_.outputs = frontier_;
    d_.validate();
    return d_;
  }

 private:
  Nat pick(Nat lo, Nat hi) { return std::uniform_int_distribution<Nat>(lo, hi)(rng_); }
  bool coin(int one_in) { return pick(0, static_cast<Nat>(one_in - 1)) == 0; }

  WireId wire(Nat m) {
    d_.wires.push_back(m);
    return d_.wires.size() - 1;
  }
  Nat width() const {
    Nat s = 0;
    for (WireId w : frontier_) s += d_.wires[w];
    return s;
  }
  Nat input_width() const {
    Nat s = 0;
    for (WireId w : d_.inputs) s += d_.wires[w];
    return s;
  }
  WireId take() {
    std::size_t i = pick(0, frontier_.size() - 1);
    WireId w = frontier_[i];
    frontier_.erase(frontier_.begin() + static_cast<long>(i));
    return w;
  }
  // Removes and returns a frontier wire of multiplicity m other than `not_w`.
  std::optional<WireId> take_mult(Nat m) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < frontier_.size(); ++i)
      if (d_.wires[frontier_[i]] == m) idx.push_back(i);
    if (idx.empty()) return std::nullopt;
    std::size_t i = idx[pick(0, idx.size() - 1)];
    WireId w = frontier_[i];
    frontier_.erase(frontier_.begin() + static_cast<long>(i));
    return w;
  }
  std::vector<WireId> node(NodeKind kind, std::vector<WireId> ins, const std::vector<Nat>& outs,
                           std::vector<Rational> phases = {}, Permutation perm = {}) {
    ConcreteNode n;
    n.kind = kind;
    n.ins = std::move(ins);
    for (Nat m : outs) n.outs.push_back(wire(m));
    n.phases = std::move(phases);
    n.perm = std::move(perm);
    d_.nodes.push_back(n);
    for (WireId w : n.outs) frontier_.push_back(w);
    return n.outs;
  }
  std::vector<Rational> phases(Nat s) {
    static const Rational table[] = {Rational::make(0, 1), Rational::make(1, 4), Rational::make(1, 2),
                                     Rational::make(3, 4), Rational::make(1, 8), Rational::make(5, 6)};
    std::vector<Rational> out;
    for (Nat i = 0; i < s; ++i) out.push_back(table[pick(0, 5)]);
    return out;
  }
  Nat room() const { return cap_ > width() ? cap_ - width() : 0; }

  void op() {
    switch (pick(0, 8)) {
      case 0:
      case 1: {  // spider
        NodeKind kind = coin(2) ? NodeKind::Z : NodeKind::X;
        std::vector<WireId> ins;
        Nat s;
        if (frontier_.empty() || coin(5)) {
          s = pick(0, std::min<Nat>(room(), 2));
        } else {
          ins.push_back(take());
          s = d_.wires[ins[0]];
          if (coin(3))
            if (auto w = take_mult(s)) ins.push_back(*w);
        }
        Nat legs = pick(0, 2);
        while (legs > 0 && s * legs > room()) --legs;
        node(kind, ins, std::vector<Nat>(legs, s), phases(s));
        break;
      }
      case 2:
        if (!frontier_.empty()) {
          WireId w = take();
          node(NodeKind::Hadamard, {w}, {d_.wires[w]});
        }
        break;
      case 3:
        if (frontier_.size() >= 2) {
          WireId a = take(), b = take();
          node(NodeKind::Gather, {a, b}, {d_.wires[a] + d_.wires[b]});
        }
        break;
      case 4:
        if (!frontier_.empty()) {
          WireId w = take();
          Nat m = d_.wires[w], a = pick(0, m);
          node(NodeKind::Split, {w}, {a, m - a});
        }
        break;
      case 5:
        if (!frontier_.empty()) {
          WireId w = take();
          Permutation p = identity_permutation(d_.wires[w]);
          std::shuffle(p.begin(), p.end(), rng_);
          node(NodeKind::Perm, {w}, {d_.wires[w]}, {}, p);
        }
        break;
      case 6:
        if (!frontier_.empty() && coin(2)) node(NodeKind::Ground, {take()}, {});
        break;
      case 7:
        if (room() >= 2) {
          Nat s = pick(0, std::min<Nat>(room() / 2, 2));
          node(NodeKind::Cup, {}, {s, s});
        } else if (frontier_.size() >= 2) {
          WireId a = take();
          if (auto b = take_mult(d_.wires[a]))
            node(NodeKind::Cap, {a, *b}, {});
          else
            frontier_.push_back(a);
        }
        break;
      default:
        if (frontier_.size() >= 2) {
          WireId a = take(), b = take();
          node(NodeKind::Swap, {a, b}, {d_.wires[b], d_.wires[a]});
        }
        break;
    }
  }

  Rng& rng_;
  Nat cap_;
  ConcreteDiagram d_;
  std::vector<WireId> frontier_;
};

// ---------------------------------------------------------------------------
// Random evaluable terms.

class TermGen {
 public:
  explicit TermGen(Rng& rng) : rng_(rng) {}

  Term nat(int depth) {
    if (depth <= 0) return leaf();
    switch (pick(0, 8)) {
      case 0: return leaf();
      case 1: return Term::binop(NatOp::Add, nat(depth - 1), nat(depth - 1));
      case 2: return Term::binop(NatOp::Sub, nat(depth - 1), nat(depth - 1));
      case 3: return Term::binop(NatOp::Mul, nat(depth - 1), leaf());
      case 4: return Term::binop(NatOp::Pow, Term::nat(pick(0, 3)), Term::nat(pick(0, 2)));
      case 5: return Term::ifz(nat(depth - 1), nat(depth - 1), nat(depth - 1));
      case 6: {
        std::string x = bind();
        Term body = nat(depth - 1);
        vars_.pop_back();
        return Term::papp(Term::plam(x, body), nat(depth - 1));
      }
      case 7: {
        Term head = nat(depth - 1);
        Term tail = list(depth - 1);
        std::string h = bind();
        std::string t = fresh_name("t");
        Term body = nat(depth - 1);
        vars_.pop_back();
        return Term::let_cons(h, t, Term::cons(head, tail), body);
      }
      default: return Term::binop(NatOp::Div, nat(depth - 1), Term::binop(NatOp::Add, leaf(), Term::nat(1)));
    }
  }

  Term list(int depth) {
    if (depth <= 0) return coin(2) ? Term::vnil(Type::nat()) : Term::cons(leaf(), Term::vnil(Type::nat()));
    switch (pick(0, 5)) {
      case 0: return Term::vnil(Type::nat());
      case 1: return Term::cons(nat(depth - 1), list(depth - 1));
      case 2: return range(Term::nat(pick(0, 3)), Term::nat(pick(0, 5)));
      case 3: return Term::papp(Term::prim(Prim::Reverse), list(depth - 1));
      case 4: {
        Term over = list(depth - 1);
        std::string k = bind();
        Term body = nat(depth - 1);
        vars_.pop_back();
        return Term::for_each(k, over, body);
      }
      default: return Term::ifz(nat(depth - 1), list(depth - 1), list(depth - 1));
    }
  }

 private:
  static Term range(Term lo, Term hi) { return Term::papp(Term::papp(Term::prim(Prim::Range), lo), hi); }
  Nat pick(Nat lo, Nat hi) { return std::uniform_int_distribution<Nat>(lo, hi)(rng_); }
  bool coin(int one_in) { return pick(0, static_cast<Nat>(one_in - 1)) == 0; }
  Term leaf() {
    if (!vars_.empty() && coin(2)) return Term::var(vars_[pick(0, vars_.size() - 1)]);
    return Term::nat(pick(0, 4));
  }
  std::string bind() {
    vars_.push_back("v" + std::to_string(counter_++));
    return vars_.back();
  }

  Rng& rng_;
  std::vector<std::string> vars_;
  int counter_ = 0;
};

class FamilyBuilder {
 public:
  FamilyBuilder(Rng& rng, std::string index) : rng_(rng), k_(NatExpr::var(std::move(index))) {}

  Diagram build(int max_generators) {
    d_.params.push_back(k_.as<NatExpr::Var>()->name);
    int inputs = static_cast<int>(pick(1, 2));
    for (int i = 0; i < inputs; ++i) {
      WireId w = d_.add_wire(mult());
      d_.inputs.push_back(w);
      frontier_.push_back(w);
    }
    int ops = static_cast<int>(pick(1, static_cast<Nat>(max_generators)));
    for (int i = 0; i < ops; ++i) op();
    d_.outputs = frontier_;
    return d_;
  }

 private:
  Nat pick(Nat lo, Nat hi) { return std::uniform_int_distribution<Nat>(lo, hi)(rng_); }
  NatExpr mult() {
    switch (pick(0, 2)) {
      case 0: return k_;
      case 1: return NatExpr(Nat{1});
      default: return k_ + NatExpr(Nat{1});
    }
  }
  WireId take() {
    std::size_t i = pick(0, frontier_.size() - 1);
    WireId w = frontier_[i];
    frontier_.erase(frontier_.begin() + static_cast<long>(i));
    return w;
  }
  void push(const std::vector<WireId>& ws) { frontier_.insert(frontier_.end(), ws.begin(), ws.end()); }

  void op() {
    if (frontier_.empty()) {
      push(d_.add(NodeKind::Cup, {}, {k_, k_}));
      return;
    }
    switch (pick(0, 6)) {
      case 0:
      case 1: {
        WireId w = take();
        NatExpr m = d_.wires[w];
        NodeKind kind = pick(0, 1) ? NodeKind::Z : NodeKind::X;
        Phase ph{static_cast<std::int64_t>(pick(1, 3)), k_ + NatExpr(Nat{2})};
        std::vector<NatExpr> outs(pick(1, 2), m);
        push(d_.add(kind, {w}, outs, uniform(ph, m)));
        break;
      }
      case 2: {
        WireId w = take();
        push(d_.add(NodeKind::Hadamard, {w}, {d_.wires[w]}));
        break;
      }
      case 3:
        if (frontier_.size() >= 2) {
          WireId a = take(), b = take();
          push({d_.gather({a, b})});
        } else {
          WireId w = take();
          push(d_.add(NodeKind::Hadamard, {w}, {d_.wires[w]}));
        }
        break;
      case 4: {
        WireId w = take();
        NatExpr m = d_.wires[w];
        if (m == k_ + NatExpr(Nat{1}))
          push(d_.split(w, {k_, NatExpr(Nat{1})}));
        else
          push(d_.split(w, {m, NatExpr(Nat{0})}));
        break;
      }
      case 5:
        d_.add(NodeKind::Ground, {take()}, {});
        break;
      default:
        push(d_.add(NodeKind::Cup, {}, {k_, k_}));
        break;
    }
  }

  Rng& rng_;
  NatExpr k_;
  Diagram d_;
  std::vector<WireId> frontier_;
};

std::vector<Term> children(const Term& m) {
  using detail::overloaded;
  return std::visit(overloaded{
                        [](const Term::Lam& l) { return std::vector<Term>{l.body}; },
                        [](const Term::App& a) { return std::vector<Term>{a.fn, a.arg}; },
                        [](const Term::PLam& l) { return std::vector<Term>{l.body}; },
                        [](const Term::PApp& a) { return std::vector<Term>{a.fn, a.arg}; },
                        [](const Term::Tensor& t) { return std::vector<Term>{t.lhs, t.rhs}; },
                        [](const Term::LetTensor& l) { return std::vector<Term>{l.bound, l.body}; },
                        [](const Term::Seq& s) { return std::vector<Term>{s.lhs, s.rhs}; },
                        [](const Term::SeqV& s) { return std::vector<Term>{s.lhs, s.rhs}; },
                        [](const Term::Cons& c) { return std::vector<Term>{c.head, c.tail}; },
                        [](const Term::LetCons& l) { return std::vector<Term>{l.bound, l.body}; },
                        [](const Term::BinOp& b) { return std::vector<Term>{b.lhs, b.rhs}; },
                        [](const Term::Ifz& i) { return std::vector<Term>{i.guard, i.then_branch, i.else_branch}; },
                        [](const Term::For& f) { return std::vector<Term>{f.over, f.body}; },
                        [](const auto&) { return std::vector<Term>{}; },
                    },
                    m.node());
}

void collect(const Term& m, std::vector<Term>& out) {
  out.push_back(m);
  for (const auto& c : children(m)) collect(c, out);
}

}  // namespace

std::vector<std::string> corpus_files() { return list_corpus(false); }
std::vector<std::string> bad_corpus_files() { return list_corpus(true); }

ConcreteDiagram random_diagram(Rng& rng, Nat max_qubits) { return DiagramBuilder(rng, max_qubits).build(); }

Diagram random_family_body(Rng& rng, const std::string& index, int max_generators) {
  return FamilyBuilder(rng, index).build(max_generators);
}

Diagram box_over(const Diagram& body, const std::string& index, const NatList& list, const NatEnv& env) {
  auto box = std::make_shared<Box>();
  box->index = index;
  NatListExpr l = NatListExpr::nil();
  for (auto it = list.rbegin(); it != list.rend(); ++it) l = NatListExpr::cons(NatExpr(*it), l);
  box->list = l;
  box->body = body;
  box->body.params.erase(std::remove(box->body.params.begin(), box->body.params.end(), index), box->body.params.end());
  Diagram d;
  for (const auto& [name, value] : env) d.params.push_back(name);
  auto total = [&](WireId w) {
    Nat sum = 0;
    for (Nat x : list) {
      NatEnv e = env;
      e[index] = x;
      sum += nat_eval(body.wires[w], e);
    }
    return NatExpr(sum);
  };
  Node n;
  n.kind = NodeKind::Box;
  for (WireId w : body.inputs) {
    n.ins.push_back(d.add_wire(total(w)));
    d.inputs.push_back(n.ins.back());
  }
  for (WireId w : body.outputs) {
    n.outs.push_back(d.add_wire(total(w)));
    d.outputs.push_back(n.outs.back());
  }
  n.box = box;
  d.add_node(std::move(n));
  return d;
}

std::size_t count_gathers(const ConcreteDiagram& d) {
  std::size_t c = 0;
  for (const auto& n : d.nodes) c += n.kind == NodeKind::Gather || n.kind == NodeKind::Split;
  return c;
}

Nat boundary_width(const ConcreteDiagram& d) { return d.input_width() + d.output_width(); }

Term random_evaluable_term(Rng& rng, bool list, int depth) {
  TermGen g(rng);
  return list ? g.list(depth) : g.nat(depth);
}

std::vector<Term> evaluable_corpus_subterms() {
  std::vector<Term> out;
  const std::vector<std::map<std::string, Nat>> assignments = {{}, {{"n", 3}, {"k", 1}, {"m", 2}},
                                                               {{"n", 4}, {"k", 0}, {"m", 3}}};
  for (const auto& file : corpus_files()) {
    Program prog = corpus_program(file);
    for (const auto& def : prog.defs) {
      std::vector<Term> subs;
      collect(def.body, subs);
      for (const auto& s : subs) {
        if (s.as<Term::NatLit>() || s.as<Term::Var>() || s.as<Term::VNil>()) continue;
        for (const auto& a : assignments) {
          std::map<std::string, Term> values;
          bool closed = true;
          for (const auto& x : free_vars(s)) {
            auto it = a.find(x);
            if (it == a.end()) closed = false;
            else values[x] = Term::nat(it->second);
          }
          if (!closed) continue;
          Term t = subst(s, values);
          try {
            ParamValue v = eval(t, {});
            if (v.is_nat() || v.is_list()) out.push_back(t);
          } catch (const Error&) {
          }
        }
      }
    }
  }
  return out;
}

CPMap semantics(const Context& ctx, const Term& m, const NatEnv& env) {
  return interpret(simplify(instantiate(translate(ctx, m), env)));
}

std::vector<StepCase> step_cases() {
  auto ctx = [](std::vector<std::pair<std::string, std::string>> state) {
    Context c;
    for (auto& [x, t] : state) c.state.push_back({x, parse_type(t)});
    return c;
  };
  Program qft = corpus_program("qft.ld");
  std::vector<StepCase> cases = {
      {"beta", ctx({{"q", "Q"}}), parse_term(R"(( \x : Q. H x) q)")},
      {"beta-param", ctx({{"q", "Q"}}), parse_term(R"((\'n. Rz @n q) @4)")},
      {"let-tensor", ctx({{"q", "Q"}, {"r", "Q"}}), parse_term("let a (*) b = q (*) r in CNOT a b")},
      {"let-cons", ctx({{"q", "Q"}, {"r", "Q"}}), parse_term("let a :: t = q :: r :: VNil[Q] in H a :: t")},
      {"ifz-zero", ctx({{"q", "Q"}}), parse_term("ifz 0 then H q else Rz @4 q")},
      {"ifz-succ", ctx({{"q", "Q"}}), parse_term("ifz 2 then H q else Rz @4 q")},
      {"seq", ctx({{"q", "Q"}}), parse_term("() ; H q")},
      {"seqv", ctx({{"q", "Q"}}), parse_term("(for k in VNil[Nat] do new #0) ;v H q")},
      {"arith", ctx({{"q", "Q"}}), parse_term("Rz @(2 + 2) q")},
      {"for", ctx({}), parse_term("for k in 2 :: 4 :: VNil[Nat] do Rz @k (new #1)")},
      {"range", ctx({}), parse_term("for k in range @1 @3 do Rz @(2 ^ k) (H (new #0))")},
      {"reverse", ctx({}), parse_term("for k in reverse @(1 :: 3 :: VNil[Nat]) do Rz @(2 ^ k) (H (new #0))")},
      {"split", ctx({{"q", "Q"}, {"r", "Q"}}), parse_term("split[Q] @1 @1 (q :: r :: VNil[Q])")},
      {"append", ctx({{"q", "Q"}, {"r", "Q"}}), parse_term("append[Q] @1 @1 (q :: VNil[Q]) (r :: VNil[Q])")},
      {"drop", ctx({{"q", "Q"}}), parse_term("drop @2 (() :: () :: VNil[Unit]) ; H q")},
      {"accuMap", ctx({{"a", "Q"}, {"b", "Q"}, {"z", "Q"}}),
       parse_term(R"(accuMap[Q, Q, Q] @2 (a :: b :: VNil[Q])
                     ((\x : Q. \c : Q. CNOT x c) :: (\x : Q. \c : Q. CNOT c x) :: VNil[Q -o Q -o Q * Q]) z)")},
      {"crot", ctx({{"a", "Q"}, {"b", "Q"}}), Term::app(Term::papp(qft.inlined("crot"), Term::nat(2)),
                                                        parse_term("a (*) b"))},
      {"qft@1", ctx({{"qs", "Vec Q 1"}}), Term::app(Term::papp(qft.inlined("qft"), Term::nat(1)), Term::var("qs"))},
      {"qft@2", ctx({{"qs", "Vec Q 2"}}), Term::app(Term::papp(qft.inlined("qft"), Term::nat(2)), Term::var("qs"))},
  };
  return cases;
}

StepReport check_translation_steps(const StepCase& c, std::size_t max_steps) {
  StepReport r;
  try {
    Term cur = c.term;
    CPMap before = semantics(c.ctx, cur);
    while (r.steps < max_steps) {
      auto s = step(cur);
      if (!s) break;
      ++r.steps;
      if (std::find(r.rules.begin(), r.rules.end(), s->rule) == r.rules.end()) r.rules.push_back(s->rule);
      CPMap after = semantics(c.ctx, s->term);
      r.worst_residual = std::max(r.worst_residual, cpm_residual(before, after));
      before = after;
      cur = s->term;
    }
  } catch (const std::exception& e) {
    r.failure = e.what();
  }
  return r;
}

ConcreteDiagram sequential_fold(const ConcreteDiagram& g, Nat in, Nat out, Nat s, Nat k) {
  auto id = [](std::vector<Nat> ms) {
    ConcreteDiagram d;
    for (Nat m : ms) {
      d.wires.push_back(m);
      d.inputs.push_back(d.wires.size() - 1);
      d.outputs.push_back(d.wires.size() - 1);
    }
    return d;
  };
  // xs, s  →  x₁ … x_k, s  →  s, x₁ … x_k
  std::vector<Nat> parts(k, in);
  ConcreteDiagram d = tensor(concrete_generator(NodeKind::Split, {k * in}, parts), id({s}));
  std::vector<Nat> xs_s(parts);
  xs_s.push_back(s);
  std::vector<Nat> s_xs{s};
  s_xs.insert(s_xs.end(), parts.begin(), parts.end());
  Nat total = k * in + s;
  Permutation front(total);
  for (Nat i = 0; i < k * in; ++i) front[i] = i + s;
  for (Nat i = 0; i < s; ++i) front[k * in + i] = i;
  d = compose(d, concrete_generator(NodeKind::Gather, xs_s, {total}));
  d = compose(d, concrete_generator(NodeKind::Perm, {total}, {total}, front));
  d = compose(d, concrete_generator(NodeKind::Split, {total}, s_xs));
  // y₁ … y_{i-1}, s, x_i … x_k  →  y₁ … y_i, s, x_{i+1} … x_k
  ConcreteDiagram step = compose(concrete_generator(NodeKind::Swap, {s, in}, {in, s}), g);
  for (Nat i = 0; i < k; ++i) {
    std::vector<Nat> before(i, out), after(k - i - 1, in);
    d = compose(d, tensor(tensor(id(before), step), id(after)));
  }
  std::vector<Nat> ys_s(k, out);
  ys_s.push_back(s);
  return compose(d, concrete_generator(NodeKind::Gather, ys_s, {k * out + s}));
}

double accumap_fold_residual(Nat k) {
  Context ctx;
  ctx.state.push_back({"xs", parse_type("Vec Q " + std::to_string(k))});
  ctx.state.push_back({"z", parse_type("Q")});
  std::string ks = std::to_string(k);
  Term m = parse_term("accuMap[Q, Q, Q] @" + ks + " xs (for i in range @0 @" + ks +
                      " do \\x : Q. \\c : Q. CNOT x c) z");
  ConcreteDiagram cnot = compose(instantiate(gate_diagram(Prim::CNOT), {}), concrete_generator(NodeKind::Split, {2}, {1, 1}));
  return cpm_residual(semantics(ctx, m), interpret(sequential_fold(cnot, 1, 1, 1, k)));
}

ConcreteDiagram unrolled_box(const Diagram& body, const std::string& index, Nat head, const NatList& tail,
                             const NatEnv& env) {
  NatEnv at = env;
  at[index] = head;
  ConcreteDiagram first = instantiate(body, at);
  ConcreteDiagram rest = instantiate(box_over(body, index, tail, env), {});
  ConcreteDiagram t = tensor(first, rest);
  const std::size_t p = first.inputs.size(), q = first.outputs.size();
  ConcreteDiagram out = t;
  out.inputs.clear();
  out.outputs.clear();
  for (std::size_t i = 0; i < p; ++i) {
    WireId a = t.inputs[i], b = t.inputs[p + i];
    out.wires.push_back(t.wires[a] + t.wires[b]);
    out.inputs.push_back(out.wires.size() - 1);
    out.nodes.push_back(ConcreteNode{NodeKind::Split, {out.inputs.back()}, {a, b}, {}, {}});
  }
  for (std::size_t i = 0; i < q; ++i) {
    WireId a = t.outputs[i], b = t.outputs[q + i];
    out.wires.push_back(t.wires[a] + t.wires[b]);
    out.outputs.push_back(out.wires.size() - 1);
    out.nodes.push_back(ConcreteNode{NodeKind::Gather, {a, b}, {out.outputs.back()}, {}, {}});
  }
  return out;
}

BoxSize box_size(const Diagram& family, const std::string& index, const NatList& list, const NatEnv& env) {
  BoxSize r;
  r.box_nodes = node_count(instantiate(box_over(family, index, list, env), env));
  NatEnv at = env;
  at[index] = Nat{1};
  ConcreteDiagram one = instantiate(family, at);
  r.body_nodes = node_count(one);
  r.gathers = count_gathers(one);
  return r;
}

}  // namespace szxc::testing
