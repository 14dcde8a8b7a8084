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

#include <fstream>
#include <string>

#include "doctest.h"
#include "szxc/error.hpp"
#include "support.hpp"
#include "szxc/typechecker.hpp"

using namespace szxc;

namespace {

Context state(std::vector<std::pair<std::string, std::string>> params,
              std::vector<std::pair<std::string, std::string>> vars) {
  Context c;
  for (auto& [x, t] : params) c.params.push_back({x, parse_type(t)});
  for (auto& [x, t] : vars) c.state.push_back({x, parse_type(t)});
  return c;
}

TypeErrorKind kind_of(const Context& ctx, const std::string& src) {
  try {
    typecheck(ctx, parse_term(src));
  } catch (const TypeError& e) {
    return e.kind();
  }
  FAIL("accepted: " << src);
  return TypeErrorKind::Mismatch;
}

// First line of a negative corpus file: `-- expect: <kind name>`.
std::string expected_kind(const std::string& file) {
  std::ifstream in(testing::corpus_path(file));
  std::string line;
  std::getline(in, line);
  auto colon = line.find(':');
  return colon == std::string::npos ? "" : line.substr(colon + 2);
}

}  // namespace

TEST_SUITE("typechecker") {

TEST_CASE("linear use") {
  CHECK(kind_of(state({}, {{"x", "Q"}}), "x (*) x") == TypeErrorKind::Linearity);
  CHECK(typecheck(state({}, {{"x", "Q"}, {"y", "Q"}}), parse_term("y (*) x")).to_string() == "Q * Q");
  CHECK(kind_of(state({}, {{"x", "Q"}}), "()") == TypeErrorKind::Linearity);
  CHECK(kind_of(state({}, {}), "z") == TypeErrorKind::Unbound);
}

TEST_CASE("parameters are not linear") {
  Context c = state({{"n", "Nat"}}, {{"q", "Q"}});
  CHECK(typecheck(c, parse_term("Rz @n (Rz @(n + n) q)")).to_string() == "Q");
}

TEST_CASE("split sizes need the guard") {
  // The apply_crot shape: k + (n - k) only collapses to n under n - k >= 1.
  Context c = state({{"n", "Nat"}, {"k", "Nat"}}, {{"qs", "Vec Q n"}});
  CHECK(kind_of(c, "split[Q] @k @(n - k) qs") == TypeErrorKind::Size);
  CHECK_NOTHROW(typecheck(c, parse_term("ifz n - k then qs else let a (*) b = split[Q] @k @(n - k) qs in "
                                        "append[Q] @k @(n - k) a b")));
}

TEST_CASE("type classes") {
  CHECK(classify(parse_type("(n:Nat) -> Vec Nat n")) == TypeClass::Evaluable);
  CHECK(classify(parse_type("(n:Nat) -> Vec Q n -o Vec Q n")) == TypeClass::Translatable);
  CHECK(classify(parse_type("Nat")) == TypeClass::Evaluable);
  CHECK(classify(parse_type("Unit")) == TypeClass::Translatable);
}

TEST_CASE("well-typed corpus") {
  for (const auto& file : testing::corpus_files()) {
    CAPTURE(file);
    CHECK_NOTHROW(typecheck_program(testing::corpus_program(file)));
  }
}

TEST_CASE("negative corpus is rejected with the stated kind") {
  auto files = testing::bad_corpus_files();
  CHECK(files.size() >= 10);
  for (const auto& file : files) {
    CAPTURE(file);
    std::string want = expected_kind(file);
    REQUIRE_FALSE(want.empty());
    try {
      typecheck_program(testing::corpus_program(file));
      FAIL("accepted");
    } catch (const TypeError& e) {
      CHECK(type_error_kind_name(e.kind()) == want);
    }
  }
}

TEST_CASE("diagnostics name the file position") {
  try {
    typecheck_program(testing::corpus_program("bad_linear.ld"));
    FAIL("accepted");
  } catch (const TypeError& e) {
    std::string r = e.render("bad_linear.ld");
    CHECK(r.rfind("bad_linear.ld:3:", 0) == 0);
    CHECK(r.find("linearity") != std::string::npos);
  }
}

TEST_CASE("declared types must match") {
  CHECK_THROWS_AS(typecheck_program(parse_program("f : Q -o B\nf = \\q : Q. q")), TypeError);
  CHECK_NOTHROW(typecheck_program(parse_program("f : Q -o Q\nf = \\q : Q. q")));
}

}  // TEST_SUITE
