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

#include <string>
#include <string_view>
#include <vector>

namespace szxc {

enum class TokenKind { Ident, Number, Bit, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int col;
};

/// Splits `.ld` source into tokens. `--` starts a comment running to the end
/// of the line. Identifiers may contain `%` after the first character; with
/// `internal_names` set they may also start with it, which macro templates
/// use so that expansions cannot capture user names.
std::vector<Token> tokenize(std::string_view source, bool internal_names = false);

}  // namespace szxc
