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

#include <string>

#include "szxc/detail/overloaded.hpp"
#include "szxc/parser.hpp"

namespace szxc {

namespace {

using detail::overloaded;

// Precedence levels, loosest first. Binder forms (\, let, ifz, for) extend as
// far right as possible and are parenthesized anywhere but level 0.
enum Level { kSeq = 0, kTensor, kCons, kRange, kAdd, kMul, kPow, kApp, kAtom };

int op_level(NatOp op) {
  switch (op) {
    case NatOp::Add:
    case NatOp::Sub: return kAdd;
    case NatOp::Mul:
    case NatOp::Div: return kMul;
    case NatOp::Pow: return kPow;
  }
  return kAdd;
}

std::string type_text(const Type& t) {
  std::string s = t.to_string();
  return s;
}

std::string pat(const std::string& x, const std::optional<Type>& t) {
  return t ? x + " : " + type_text(*t) : x;
}

std::string render(const Term& m, int level) {
  auto wrap = [&](int own, const std::string& s) { return own < level ? "(" + s + ")" : s; };
  return std::visit(
      overloaded{
          [](const Term::Var& x) { return x.name; },
          [](const Term::BitLit& b) { return std::string(b.value ? "#1" : "#0"); },
          [](const Term::NatLit& n) { return std::to_string(n.value); },
          [](const Term::Star&) { return std::string("()"); },
          [](const Term::VNil& v) { return "VNil[" + type_text(v.elem) + "]"; },
          [](const Term::Const& c) {
            std::string s = prim_name(c.prim);
            if (!c.annots.empty()) {
              s += "[";
              for (std::size_t i = 0; i < c.annots.size(); ++i) s += (i ? ", " : "") + type_text(c.annots[i]);
              s += "]";
            }
            return s;
          },
          [&](const Term::Lam& l) {
            return wrap(kSeq, "\\" + l.name + " : " + type_text(l.type) + ". " + render(l.body, kSeq));
          },
          [&](const Term::App& a) { return wrap(kApp, render(a.fn, kApp) + " " + render(a.arg, kAtom)); },
          [&](const Term::PLam& l) { return wrap(kSeq, "\\'" + l.name + ". " + render(l.body, kSeq)); },
          [&](const Term::PApp& a) { return wrap(kApp, render(a.fn, kApp) + " @" + render(a.arg, kAtom)); },
          [&](const Term::Tensor& t) {
            return wrap(kTensor, render(t.lhs, kCons) + " (*) " + render(t.rhs, kTensor));
          },
          [&](const Term::LetTensor& l) {
            return wrap(kSeq, "let " + pat(l.x, l.tx) + " (*) " + pat(l.y, l.ty) + " = " + render(l.bound, kSeq) +
                                  " in " + render(l.body, kSeq));
          },
          [&](const Term::Seq& s) { return wrap(kSeq, render(s.lhs, kTensor) + " ; " + render(s.rhs, kSeq)); },
          [&](const Term::SeqV& s) { return wrap(kSeq, render(s.lhs, kTensor) + " ;v " + render(s.rhs, kSeq)); },
          [&](const Term::Cons& c) { return wrap(kCons, render(c.head, kRange) + " :: " + render(c.tail, kCons)); },
          [&](const Term::LetCons& l) {
            return wrap(kSeq, "let " + pat(l.x, l.tx) + " :: " + pat(l.y, l.ty) + " = " + render(l.bound, kSeq) +
                                  " in " + render(l.body, kSeq));
          },
          [&](const Term::BinOp& b) {
            int own = op_level(b.op);
            bool right = b.op == NatOp::Pow;
            std::string sym(1, nat_op_symbol(b.op));
            return wrap(own, render(b.lhs, right ? own + 1 : own) + " " + sym + " " + render(b.rhs, right ? own : own + 1));
          },
          [&](const Term::Ifz& i) {
            return wrap(kSeq, "ifz " + render(i.guard, kSeq) + " then " + render(i.then_branch, kSeq) + " else " +
                                  render(i.else_branch, kSeq));
          },
          [&](const Term::For& f) {
            return wrap(kSeq, "for " + f.index + " in " + render(f.over, kSeq) + " do " + render(f.body, kSeq));
          },
      },
      m.node());
}

}  // namespace

std::string pretty_print(const Term& m) { return render(m, kSeq); }

}  // namespace szxc
