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
#include <optional>
#include <string>
#include <vector>

#include "szxc/error.hpp"
#include "szxc/nat_normalize.hpp"
#include "szxc/parser.hpp"
#include "szxc/term.hpp"
#include "szxc/types.hpp"

namespace szxc {

enum class TypeErrorKind { Linearity, Mismatch, Size, Unbound, NonNatParam };

std::string type_error_kind_name(TypeErrorKind kind);

class TypeError : public Error {
 public:
  TypeError(TypeErrorKind kind, Span span, const std::string& message);
  TypeErrorKind kind() const { return kind_; }
  const Span& span() const { return span_; }
  const std::string& message() const { return message_; }
  /// `file:line:col: kind: message`
  std::string render(const std::string& file) const;

 private:
  TypeErrorKind kind_;
  Span span_;
  std::string message_;
};

/// Signature of a primitive at the given annotations.
Type prim_type(Prim p, const std::vector<Type>& annots);

/// Leftover-style checker for λD judgements Φ, Γ ⊢ M : A.
///
/// In linear mode every state variable must be used exactly once. The
/// non-linear mode skips usage accounting and is used by the translator to
/// recover the types of subterms under its own scope.
class Checker {
 public:
  explicit Checker(bool linear = true) : linear_(linear) {}

  void bind_param(const std::string& name, const Type& type = Type::nat());
  void bind_state(const std::string& name, const Type& type);
  /// Removes the most recent binding; in linear mode an unused state binding
  /// is a linearity error.
  void unbind(Span span = {});
  void push_fact(NatFact fact) { facts_.push_back(std::move(fact)); }
  void pop_fact() { facts_.pop_back(); }
  const NatFacts& facts() const { return facts_; }

  Type synth(const Term& m);

  /// Names of state bindings not yet consumed.
  std::vector<std::string> unused_state() const;

 private:
  struct Entry {
    std::string name;
    Type type;
    bool param;
    bool used;
  };
  struct Barrier {
    std::size_t depth;
    TypeErrorKind kind;
    std::string reason;
  };

  Entry* lookup(const std::string& name);
  Type synth_param(const Term& m, const std::string& what);
  Type synth_papp(const Term::PApp& p, const Term& m);
  Type synth_ifz(const Term::Ifz& i, const Term& m);
  Type synth_for(const Term::For& f, const Term& m);
  void require_equal(const Type& expected, const Type& found, Span span, const std::string& what);
  std::string binder_name(const std::string& name) const;

  bool linear_;
  std::vector<Entry> entries_;
  std::vector<Barrier> barriers_;
  NatFacts facts_;
};

/// Checks a closed term under the given contexts; every Γ variable must be
/// consumed. Throws TypeError.
Type typecheck(const Context& ctx, const Term& m);

/// Checks every definition (after inlining) against its declared type and
/// returns the synthesized types by name.
std::map<std::string, Type> typecheck_program(const Program& prog);

}  // namespace szxc
