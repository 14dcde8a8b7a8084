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

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "szxc/nat_expr.hpp"
#include "szxc/types.hpp"

namespace szxc {

struct Span {
  int line = 0;
  int col = 0;
};

enum class Prim {
  Meas,
  New,
  H,
  CNOT,
  Rz,
  RzInv,
  Rx,
  RxInv,
  Split,
  Append,
  Drop,
  AccuMap,
  Range,
  Reverse,
};

std::string prim_name(Prim p);
/// Number of type annotations the primitive carries (split[A], accuMap[A,B,C], ...).
int prim_annotation_count(Prim p);
bool prim_is_gate(Prim p);
bool prim_is_rotation(Prim p);

/// λD term. Immutable and cheap to copy; spans are ignored by equality.
class Term {
 public:
  struct Var {
    std::string name;
  };
  struct BitLit {
    bool value;
  };
  struct NatLit {
    Nat value;
  };
  struct Star {};
  struct VNil {
    Type elem;
  };
  struct Const {
    Prim prim;
    std::vector<Type> annots;
  };
  struct Lam;
  struct App;
  struct PLam;
  struct PApp;
  struct Tensor;
  struct LetTensor;
  struct Seq;
  struct SeqV;
  struct Cons;
  struct LetCons;
  struct BinOp;
  struct Ifz;
  struct For;
  using Node = std::variant<Var, BitLit, NatLit, Star, VNil, Const, Lam, App, PLam, PApp, Tensor, LetTensor, Seq, SeqV,
                            Cons, LetCons, BinOp, Ifz, For>;

  Term();
  Term(Node node, Span span = {});  // NOLINT(google-explicit-constructor)

  static Term var(std::string name, Span span = {});
  static Term bit(bool value, Span span = {});
  static Term nat(Nat value, Span span = {});
  static Term star(Span span = {});
  static Term vnil(Type elem, Span span = {});
  static Term prim(Prim p, std::vector<Type> annots = {}, Span span = {});
  static Term lam(std::string name, Type type, Term body, Span span = {});
  static Term app(Term fn, Term arg, Span span = {});
  static Term plam(std::string name, Term body, Span span = {});
  static Term papp(Term fn, Term arg, Span span = {});
  static Term tensor(Term lhs, Term rhs, Span span = {});
  static Term let_tensor(std::string x, std::string y, Term bound, Term body, std::optional<Type> tx = {},
                         std::optional<Type> ty = {}, Span span = {});
  static Term seq(Term lhs, Term rhs, Span span = {});
  static Term seqv(Term lhs, Term rhs, Span span = {});
  static Term cons(Term head, Term tail, Span span = {});
  static Term let_cons(std::string x, std::string y, Term bound, Term body, std::optional<Type> tx = {},
                       std::optional<Type> ty = {}, Span span = {});
  static Term binop(NatOp op, Term lhs, Term rhs, Span span = {});
  static Term ifz(Term guard, Term then_branch, Term else_branch, Span span = {});
  static Term for_each(std::string index, Term over, Term body, Span span = {});

  const Node& node() const;
  template <typename T>
  const T* as() const {
    return std::get_if<T>(node_.get());
  }
  const Span& span() const { return span_; }
  Term with_span(Span span) const;

  /// Identity of the shared node; used for memoization.
  const void* id() const { return node_.get(); }

 private:
  std::shared_ptr<const Node> node_;
  Span span_;
};

struct Term::Lam {
  std::string name;
  Type type;
  Term body;
};
struct Term::App {
  Term fn;
  Term arg;
};
struct Term::PLam {
  std::string name;
  Term body;
};
struct Term::PApp {
  Term fn;
  Term arg;
};
struct Term::Tensor {
  Term lhs;
  Term rhs;
};
struct Term::LetTensor {
  std::string x;
  std::string y;
  std::optional<Type> tx;
  std::optional<Type> ty;
  Term bound;
  Term body;
};
struct Term::Seq {
  Term lhs;
  Term rhs;
};
struct Term::SeqV {
  Term lhs;
  Term rhs;
};
struct Term::Cons {
  Term head;
  Term tail;
};
struct Term::LetCons {
  std::string x;
  std::string y;
  std::optional<Type> tx;
  std::optional<Type> ty;
  Term bound;
  Term body;
};
struct Term::BinOp {
  NatOp op;
  Term lhs;
  Term rhs;
};
struct Term::Ifz {
  Term guard;
  Term then_branch;
  Term else_branch;
};
struct Term::For {
  std::string index;
  Term over;
  Term body;
};

inline const Term::Node& Term::node() const { return *node_; }

/// Structural equality ignoring spans (not up to α).
bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

bool alpha_equal(const Term& a, const Term& b);

struct FreeVars {
  /// Variables occurring in parameter positions (@-arguments, arithmetic, guards, for-lists).
  std::set<std::string> params;
  std::set<std::string> state;
};

FreeVars free_vars_classified(const Term& m);
std::set<std::string> free_vars(const Term& m);

/// Capture-avoiding M[V/x]. When V denotes a natural-number expression, type
/// annotations mentioning x are rewritten as well.
Term subst(const Term& m, const std::string& x, const Term& v);
/// Simultaneous substitution.
Term subst(const Term& m, const std::map<std::string, Term>& values);

/// Renames every binder to a fresh `%`-suffixed name.
Term freshen(const Term& m);

/// Converts a parameter-level term (numerals, variables, arithmetic) to a NatExpr.
std::optional<NatExpr> term_to_nat(const Term& m);
Term nat_to_term(const NatExpr& e);

std::string fresh_name(const std::string& base);

struct PrimArity {
  int params;
  int states;
};
PrimArity prim_arity(Prim p);

/// A primitive constant applied to a spine of arguments, outermost last.
struct PrimApp {
  Prim prim;
  std::vector<Type> annots;
  /// (is parameter application, argument)
  std::vector<std::pair<bool, Term>> args;
  bool well_ordered() const;
  bool saturated() const;
};
std::optional<PrimApp> as_prim_app(const Term& m);

/// Values of the call-by-value reduction.
bool is_value(const Term& m);

}  // namespace szxc
