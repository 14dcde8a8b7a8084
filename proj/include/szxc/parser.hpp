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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "szxc/term.hpp"
#include "szxc/types.hpp"

namespace szxc {

struct Definition {
  std::string name;
  std::optional<Type> declared;
  Term body;
  Span span;
};

/// A sequence of non-recursive top-level definitions. The entry is `main`
/// when present and the last definition otherwise.
struct Program {
  std::vector<Definition> defs;
  std::size_t entry = 0;

  const Definition& entry_def() const { return defs.at(entry); }
  const Definition* find(const std::string& name) const;
  /// Body of `name` with every referenced earlier definition substituted in.
  Term inlined(const std::string& name) const;
  Term entry_term() const { return inlined(entry_def().name); }
};

/// Throws SyntaxError on malformed input, undefined references and duplicates.
Program parse_program(std::string_view text);
Term parse_term(std::string_view text);
Type parse_type(std::string_view text);
NatExpr parse_nat_expr(std::string_view text);

/// Expands map[A,B], fold[A,C] and compose[A] into λD terms.
Term expand_macro(const std::string& name, const std::vector<Type>& annots);

/// Surface syntax accepted by parse_term, except that binders introduced by
/// macro expansion print with a '%' the lexer rejects.
std::string pretty_print(const Term& m);

}  // namespace szxc
