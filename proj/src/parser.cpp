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

#include "szxc/parser.hpp"

#include <map>
#include <set>

#include "szxc/error.hpp"
#include "szxc/lexer.hpp"

namespace szxc {

namespace {

const std::set<std::string> kKeywords = {"let", "in", "ifz", "then", "else", "for", "do"};

const std::map<std::string, Prim> kPrims = {
    {"meas", Prim::Meas},   {"new", Prim::New},       {"H", Prim::H},         {"CNOT", Prim::CNOT},
    {"Rz", Prim::Rz},       {"RzInv", Prim::RzInv},   {"Rx", Prim::Rx},       {"RxInv", Prim::RxInv},
    {"split", Prim::Split}, {"append", Prim::Append}, {"drop", Prim::Drop},   {"accuMap", Prim::AccuMap},
    {"range", Prim::Range}, {"reverse", Prim::Reverse},
};

const std::map<std::string, int> kMacros = {{"map", 2}, {"fold", 2}, {"compose", 1}};

class Parser {
 public:
  Parser(std::vector<Token> toks, bool internal) : toks_(std::move(toks)), internal_(internal) {
    limit_ = toks_.size() - 1;
  }

  const Token& peek(std::size_t k = 0) const {
    std::size_t i = pos_ + k;
    return i >= limit_ ? toks_[std::min(limit_, toks_.size() - 1)] : toks_[i];
  }
  bool at_end() const { return pos_ >= limit_ || toks_[pos_].kind == TokenKind::End; }
  Span span() const { return {peek().line, peek().col}; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = at_end() ? toks_[std::min(limit_, toks_.size() - 1)] : peek();
    throw SyntaxError(t.line, t.col, msg + (at_end() ? " at end of definition" : " near '" + t.text + "'"));
  }

  bool is_sym(const std::string& s, std::size_t k = 0) const {
    return !end_at(k) && peek(k).kind == TokenKind::Symbol && peek(k).text == s;
  }
  bool is_kw(const std::string& s, std::size_t k = 0) const {
    return !end_at(k) && peek(k).kind == TokenKind::Ident && peek(k).text == s;
  }
  bool end_at(std::size_t k) const { return pos_ + k >= limit_ || toks_[pos_ + k].kind == TokenKind::End; }

  bool accept_sym(const std::string& s) {
    if (!is_sym(s)) return false;
    ++pos_;
    return true;
  }
  void expect_sym(const std::string& s) {
    if (!accept_sym(s)) fail("expected '" + s + "'");
  }
  void expect_kw(const std::string& s) {
    if (!is_kw(s)) fail("expected '" + s + "'");
    ++pos_;
  }
  std::string expect_ident() {
    if (at_end() || peek().kind != TokenKind::Ident || kKeywords.count(peek().text)) fail("expected identifier");
    return toks_[pos_++].text;
  }

  // ---- natural-number expressions (inside types) ----

  NatExpr nat_expr() { return nat_additive(); }

  NatExpr nat_additive() {
    NatExpr e = nat_mult();
    while (is_sym("+") || is_sym("-")) {
      NatOp op = peek().text == "+" ? NatOp::Add : NatOp::Sub;
      ++pos_;
      e = NatExpr::bin(op, e, nat_mult());
    }
    return e;
  }
  NatExpr nat_mult() {
    NatExpr e = nat_power();
    while (is_sym("*") || is_sym("/")) {
      NatOp op = peek().text == "*" ? NatOp::Mul : NatOp::Div;
      ++pos_;
      e = NatExpr::bin(op, e, nat_power());
    }
    return e;
  }
  NatExpr nat_power() {
    NatExpr base = nat_atom();
    if (accept_sym("^")) return NatExpr::bin(NatOp::Pow, base, nat_power());
    return base;
  }
  NatExpr nat_atom() {
    if (at_end()) fail("expected natural-number expression");
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      ++pos_;
      return NatExpr(parse_number(t));
    }
    if (t.kind == TokenKind::Ident && t.text == "ite0") {
      ++pos_;
      expect_sym("(");
      NatExpr g = nat_expr();
      expect_sym(",");
      NatExpr a = nat_expr();
      expect_sym(",");
      NatExpr b = nat_expr();
      expect_sym(")");
      return NatExpr::ite0(g, a, b);
    }
    if (t.kind == TokenKind::Ident) return NatExpr::var(expect_ident());
    if (accept_sym("(")) {
      NatExpr e = nat_expr();
      expect_sym(")");
      return e;
    }
    fail("expected natural-number expression");
  }

  Nat parse_number(const Token& t) const {
    try {
      return std::stoull(t.text);
    } catch (const std::exception&) {
      throw SyntaxError(t.line, t.col, "numeral out of range '" + t.text + "'");
    }
  }

  // ---- types ----

  Type type() {
    if (is_sym("(") && !end_at(2) && peek(1).kind == TokenKind::Ident && is_sym(":", 2)) {
      ++pos_;
      std::string n = expect_ident();
      expect_sym(":");
      if (!is_kw("Nat")) fail("dependent arrows range over Nat only");
      ++pos_;
      expect_sym(")");
      expect_sym("->");
      return Type::pi(n, type());
    }
    Type lhs = type_tensor();
    if (accept_sym("-o")) return Type::lolli(lhs, type());
    return lhs;
  }
  Type type_tensor() {
    Type lhs = type_app();
    if (accept_sym("*")) return Type::tensor(lhs, type_tensor());
    return lhs;
  }
  Type type_app() {
    if (is_kw("Vec")) {
      ++pos_;
      Type elem = type_atom();
      return Type::vec(elem, size());
    }
    return type_atom();
  }
  NatExpr size() {
    if (at_end()) fail("expected vector size");
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      ++pos_;
      return NatExpr(parse_number(t));
    }
    if (t.kind == TokenKind::Ident) return NatExpr::var(expect_ident());
    if (accept_sym("(")) {
      NatExpr e = nat_expr();
      expect_sym(")");
      return e;
    }
    fail("expected vector size");
  }
  Type type_atom() {
    if (at_end()) fail("expected type");
    const Token& t = peek();
    if (t.kind == TokenKind::Ident) {
      static const std::map<std::string, Type> atoms = {
          {"Q", Type::qubit()}, {"B", Type::bit()}, {"Unit", Type::unit()}, {"Nat", Type::nat()}};
      auto it = atoms.find(t.text);
      if (it == atoms.end()) fail("unknown type");
      ++pos_;
      return it->second;
    }
    if (accept_sym("(")) {
      Type inner = type();
      expect_sym(")");
      return inner;
    }
    fail("expected type");
  }

  std::vector<Type> annotations(std::size_t count) {
    expect_sym("[");
    std::vector<Type> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect_sym(",");
      out.push_back(type());
    }
    expect_sym("]");
    return out;
  }

  // ---- terms ----

  Term term() { return term_seq(); }

  Term term_seq() {
    Span sp = span();
    Term lhs = term_tensor();
    if (accept_sym(";")) return Term::seq(lhs, term_seq(), sp);
    if (accept_sym(";v")) return Term::seqv(lhs, term_seq(), sp);
    return lhs;
  }
  Term term_tensor() {
    Span sp = span();
    Term lhs = term_cons();
    if (accept_sym("(*)")) return Term::tensor(lhs, term_tensor(), sp);
    return lhs;
  }
  Term term_cons() {
    Span sp = span();
    Term lhs = term_range();
    if (accept_sym("::")) return Term::cons(lhs, term_cons(), sp);
    return lhs;
  }
  Term term_range() {
    Span sp = span();
    Term lhs = term_additive();
    if (accept_sym("..")) {
      Term rhs = term_additive();
      return Term::papp(Term::papp(Term::prim(Prim::Range, {}, sp), lhs, sp), rhs, sp);
    }
    return lhs;
  }
  Term term_additive() {
    Span sp = span();
    Term e = term_mult();
    while (is_sym("+") || is_sym("-")) {
      NatOp op = peek().text == "+" ? NatOp::Add : NatOp::Sub;
      ++pos_;
      e = Term::binop(op, e, term_mult(), sp);
    }
    return e;
  }
  Term term_mult() {
    Span sp = span();
    Term e = term_power();
    while (is_sym("*") || is_sym("/")) {
      NatOp op = peek().text == "*" ? NatOp::Mul : NatOp::Div;
      ++pos_;
      e = Term::binop(op, e, term_power(), sp);
    }
    return e;
  }
  Term term_power() {
    Span sp = span();
    Term base = term_app();
    if (accept_sym("^")) return Term::binop(NatOp::Pow, base, term_power(), sp);
    return base;
  }

  bool starts_atom() const {
    if (at_end()) return false;
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Ident:
        return !kKeywords.count(t.text) || t.text == "let" || t.text == "ifz" || t.text == "for";
      case TokenKind::Number:
      case TokenKind::Bit:
        return true;
      case TokenKind::Symbol:
        return t.text == "(" || t.text == "\\" || t.text == "\\'";
      case TokenKind::End:
        return false;
    }
    return false;
  }

  Term term_app() {
    Span sp = span();
    Term f = term_atom();
    while (true) {
      if (accept_sym("@")) {
        f = Term::papp(f, term_atom(), sp);
      } else if (starts_atom()) {
        f = Term::app(f, term_atom(), sp);
      } else {
        return f;
      }
    }
  }

  Term term_atom() {
    if (at_end()) fail("expected term");
    Span sp = span();
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      ++pos_;
      return Term::nat(parse_number(t), sp);
    }
    if (t.kind == TokenKind::Bit) {
      ++pos_;
      return Term::bit(t.text == "1", sp);
    }
    if (accept_sym("\\'")) {
      std::string n = expect_ident();
      if (accept_sym(":")) {
        if (!is_kw("Nat")) fail("parameter abstractions bind Nat");
        ++pos_;
      }
      expect_sym(".");
      return Term::plam(n, term(), sp);
    }
    if (accept_sym("\\")) {
      std::string x = expect_ident();
      expect_sym(":");
      Type ty = type();
      expect_sym(".");
      return Term::lam(x, ty, term(), sp);
    }
    if (accept_sym("(")) {
      if (accept_sym(")")) return Term::star(sp);
      Term inner = term();
      expect_sym(")");
      return inner.with_span(sp);
    }
    if (t.kind == TokenKind::Ident) {
      if (t.text == "let") return let_term();
      if (t.text == "ifz") {
        ++pos_;
        Term g = term();
        expect_kw("then");
        Term a = term();
        expect_kw("else");
        Term b = term();
        return Term::ifz(g, a, b, sp);
      }
      if (t.text == "for") {
        ++pos_;
        std::string k = expect_ident();
        expect_kw("in");
        Term over = term();
        expect_kw("do");
        return Term::for_each(k, over, term(), sp);
      }
      if (t.text == "VNil") {
        ++pos_;
        return Term::vnil(annotations(1)[0], sp);
      }
      if (auto it = kPrims.find(t.text); it != kPrims.end()) {
        ++pos_;
        auto count = static_cast<std::size_t>(prim_annotation_count(it->second));
        std::vector<Type> annots = count ? annotations(count) : std::vector<Type>{};
        return Term::prim(it->second, annots, sp);
      }
      if (auto it = kMacros.find(t.text); it != kMacros.end()) {
        ++pos_;
        auto annots = annotations(static_cast<std::size_t>(it->second));
        return expand_macro(t.text, annots).with_span(sp);
      }
      return Term::var(expect_ident(), sp);
    }
    fail("expected term");
  }

  struct PatVar {
    std::string name;
    std::optional<Type> type;
  };
  PatVar pat_var() {
    PatVar v{expect_ident(), std::nullopt};
    if (accept_sym(":")) v.type = type();
    return v;
  }

  Term let_term() {
    Span sp = span();
    expect_kw("let");
    PatVar x = pat_var();
    if (accept_sym("(*)")) {
      PatVar y = pat_var();
      expect_sym("=");
      Term bound = term();
      expect_kw("in");
      return Term::let_tensor(x.name, y.name, bound, term(), x.type, y.type, sp);
    }
    if (accept_sym("::")) {
      PatVar y = pat_var();
      expect_sym("=");
      Term bound = term();
      expect_kw("in");
      return Term::let_cons(x.name, y.name, bound, term(), x.type, y.type, sp);
    }
    if (!x.type) fail("a plain let needs a type annotation");
    expect_sym("=");
    Term bound = term();
    expect_kw("in");
    Term body = term();
    return Term::app(Term::lam(x.name, *x.type, body, sp), bound, sp);
  }

  // ---- programs ----

  Program program() {
    Program prog;
    std::map<std::string, std::pair<Type, Span>> sigs;
    std::set<std::string> defined;
    while (!at_end()) {
      const Token& t = peek();
      if (t.col != 1) fail("definitions start in column 1");
      Span sp{t.line, t.col};
      std::string name = expect_ident();
      // The declaration or body runs until the next token in column 1.
      std::size_t stop = pos_;
      while (toks_[stop].kind != TokenKind::End && toks_[stop].col != 1) ++stop;
      limit_ = stop;
      if (accept_sym(":")) {
        Type ty = type();
        if (!at_end()) fail("unexpected token after type signature");
        if (sigs.count(name)) throw SyntaxError(sp.line, sp.col, "duplicate signature for '" + name + "'");
        sigs.emplace(name, std::make_pair(ty, sp));
      } else if (accept_sym("=")) {
        Term body = term();
        if (!at_end()) fail("unexpected token");
        if (defined.count(name)) throw SyntaxError(sp.line, sp.col, "duplicate definition of '" + name + "'");
        for (const auto& fv : free_vars(body)) {
          if (!defined.count(fv))
            throw SyntaxError(sp.line, sp.col, "reference to undefined name '" + fv + "' in '" + name + "'");
        }
        defined.insert(name);
        Definition d{name, std::nullopt, body, sp};
        if (auto it = sigs.find(name); it != sigs.end()) d.declared = it->second.first;
        prog.defs.push_back(std::move(d));
      } else {
        fail("expected ':' or '='");
      }
      limit_ = toks_.size() - 1;
    }
    for (const auto& [name, sig] : sigs) {
      if (!defined.count(name))
        throw SyntaxError(sig.second.line, sig.second.col, "signature for '" + name + "' lacks a definition");
    }
    if (prog.defs.empty()) throw SyntaxError(1, 1, "program has no definitions");
    prog.entry = prog.defs.size() - 1;
    for (std::size_t i = 0; i < prog.defs.size(); ++i)
      if (prog.defs[i].name == "main") prog.entry = i;
    return prog;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected token");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t limit_;
  bool internal_;
};

const char* const kMapTemplate = R"(
\'%n. \%xs : Vec {A} %n. \%fs : Vec ({A} -o {B}) %n.
  let %fs2 (*) %u1 = accuMap[{A} -o {B}, {A} -o Unit -o {B} * Unit, Unit] @%n %fs
      (for %k in 0 .. %n do \%f : {A} -o {B}. \%u : Unit. (\%x : {A}. \%v : Unit. (%f %x) (*) %v) (*) %u) ()
  in let %xs2 (*) %u2 = accuMap[{A}, {B}, Unit] @%n %xs %fs2 ()
  in %u1 ; %u2 ; %xs2
)";

const char* const kFoldTemplate = R"(
\'%n. \%xs : Vec {A} %n. \%fs : Vec ({A} -o {C} -o {C}) %n. \%z : {C}.
  let %fs2 (*) %u = accuMap[{A} -o {C} -o {C}, {A} -o {C} -o Unit * {C}, Unit] @%n %fs
      (for %k in 0 .. %n do \%f : {A} -o {C} -o {C}. \%w : Unit. (\%x : {A}. \%y : {C}. () (*) (%f %x %y)) (*) %w) ()
  in let %us (*) %r = accuMap[{A}, Unit, {C}] @%n %xs %fs2 %z
  in %u ; drop @%n %us ; %r
)";

const char* const kComposeTemplate = R"(
\'%n. \%xs : Vec ({A} -o {A}) %n.
  fold[{A} -o {A}, {A} -o {A}] @%n %xs
    (for %k in 0 .. %n do \%f : {A} -o {A}. \%g : {A} -o {A}. \%x : {A}. %f (%g %x))
    (\%x : {A}. %x)
)";

std::string fill(std::string text, const std::string& hole, const Type& t) {
  const std::string key = "{" + hole + "}";
  const std::string value = "(" + t.to_string() + ")";
  for (std::size_t at = text.find(key); at != std::string::npos; at = text.find(key, at + value.size()))
    text.replace(at, key.size(), value);
  return text;
}

}  // namespace

Term expand_macro(const std::string& name, const std::vector<Type>& annots) {
  std::string text;
  if (name == "map") {
    text = fill(fill(kMapTemplate, "A", annots.at(0)), "B", annots.at(1));
  } else if (name == "fold") {
    text = fill(fill(kFoldTemplate, "A", annots.at(0)), "C", annots.at(1));
  } else if (name == "compose") {
    text = fill(kComposeTemplate, "A", annots.at(0));
  } else {
    throw SyntaxError(0, 0, "unknown macro '" + name + "'");
  }
  Parser p(tokenize(text, true), true);
  Term t = p.term();
  p.expect_end();
  return t;
}

const Definition* Program::find(const std::string& name) const {
  for (const auto& d : defs)
    if (d.name == name) return &d;
  return nullptr;
}

Term Program::inlined(const std::string& name) const {
  std::map<std::string, Term> done;
  for (const auto& d : defs) {
    std::map<std::string, Term> refs;
    for (const auto& fv : free_vars(d.body))
      if (auto it = done.find(fv); it != done.end()) refs.emplace(fv, it->second);
    Term body = subst(d.body, refs);
    if (d.name == name) return body;
    done[d.name] = body;
  }
  throw SyntaxError(0, 0, "no definition named '" + name + "'");
}

Program parse_program(std::string_view text) {
  Parser p(tokenize(text), false);
  return p.program();
}

Term parse_term(std::string_view text) {
  Parser p(tokenize(text), false);
  Term t = p.term();
  p.expect_end();
  return t;
}

Type parse_type(std::string_view text) {
  Parser p(tokenize(text), false);
  Type t = p.type();
  p.expect_end();
  return t;
}

NatExpr parse_nat_expr(std::string_view text) {
  Parser p(tokenize(text), false);
  NatExpr e = p.nat_expr();
  p.expect_end();
  return e;
}

}  // namespace szxc
