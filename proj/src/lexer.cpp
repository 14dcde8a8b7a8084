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

#include "szxc/lexer.hpp"

#include <cctype>

#include "szxc/error.hpp"

namespace szxc {

namespace {

bool ident_start(char c, bool internal) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || (internal && c == '%');
}

// `%` may continue an identifier so that freshened names print back parseably.
bool ident_char(char c, bool) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '%';
}

}  // namespace

std::vector<Token> tokenize(std::string_view src, bool internal_names) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto at = [&](std::size_t k) -> char { return i + k < src.size() ? src[i + k] : '\0'; };
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (starts("--")) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (ident_start(c, internal_names)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j], internal_names)) ++j;
      out.push_back({TokenKind::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({TokenKind::Number, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '#' && (at(1) == '0' || at(1) == '1') && !ident_char(at(2), internal_names)) {
      out.push_back({TokenKind::Bit, std::string(1, at(1)), tl, tc});
      advance(2);
      continue;
    }
    // Longest match first.
    static const char* const symbols[] = {"(*)", "\\'", "::", "..", "->", "(", ")", "[", "]", ",", ".", ":",
                                          "@",   "+",   "*",  "/",  "^",  "=", "\\"};
    if (starts("-o") && !ident_char(at(2), internal_names)) {
      out.push_back({TokenKind::Symbol, "-o", tl, tc});
      advance(2);
      continue;
    }
    if (starts(";v") && !ident_char(at(2), internal_names)) {
      out.push_back({TokenKind::Symbol, ";v", tl, tc});
      advance(2);
      continue;
    }
    if (c == ';' || (c == '-' && at(1) != '>')) {
      out.push_back({TokenKind::Symbol, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    bool matched = false;
    for (const char* s : symbols) {
      if (starts(s)) {
        out.push_back({TokenKind::Symbol, s, tl, tc});
        advance(std::string_view(s).size());
        matched = true;
        break;
      }
    }
    if (!matched) throw SyntaxError(tl, tc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({TokenKind::End, "", line, col});
  return out;
}

}  // namespace szxc
