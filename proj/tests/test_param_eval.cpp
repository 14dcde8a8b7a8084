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

#include "doctest.h"
#include "szxc/error.hpp"
#include "support.hpp"
#include "szxc/param_eval.hpp"
#include "szxc/reducer.hpp"

using namespace szxc;

namespace {

NatList list_of(const std::string& src, const NatEnv& env = {}) { return eval(parse_term(src), env).list(); }

// Every step of the reduction sequence of m keeps its value.
bool preserved_along_reduction(const Term& m, std::size_t max_steps = 400) {
  Term cur = m;
  for (std::size_t i = 0; i < max_steps; ++i) {
    auto s = step(cur);
    if (!s) return true;
    if (!eval_preserved_by_step(cur, s->term, {})) return false;
    cur = s->term;
  }
  return true;
}

}  // namespace

TEST_SUITE("param_eval") {

TEST_CASE("lists") {
  CHECK(list_of("range @2 @5") == NatList{2, 3, 4});
  CHECK(list_of("range @3 @3").empty());
  CHECK(list_of("for k in range @0 @3 do k * k") == NatList{0, 1, 4});
  CHECK(list_of("reverse @(1 :: 2 :: VNil[Nat])") == NatList{2, 1});
  CHECK(list_of("0 .. n", {{"n", Nat{3}}}) == NatList{0, 1, 2});
}

TEST_CASE("naturals") {
  CHECK(eval(parse_term("(\\'x. x + 1) @4"), {}).nat() == 5);
  CHECK(eval(parse_term("ifz 0 then 2 else 3"), {}).nat() == 2);
  CHECK(eval(parse_term("let h :: t = 4 :: 5 :: VNil[Nat] in h"), {}).nat() == 4);
  CHECK_THROWS_AS(eval(parse_term("let h :: t = VNil[Nat] in h"), {}), EvalError);
  CHECK_THROWS_AS(eval(parse_term("H"), {}), EvalError);
}

TEST_CASE("functions compare by probing") {
  ParamValue f = eval(parse_term("\\'x. x + x"), {});
  ParamValue g = eval(parse_term("\\'y. 2 * y"), {});
  ParamValue h = eval(parse_term("\\'y. y * y"), {});
  CHECK(values_equal(f, g));
  CHECK_FALSE(values_equal(f, h));
}

TEST_CASE("single steps preserve the value") {
  CHECK(eval_preserved_by_step(parse_term("(\\'x. x + 1) @4"), parse_term("4 + 1"), {}));
  CHECK(eval_preserved_by_step(parse_term("ifz 0 then 2 else 3"), parse_term("2"), {}));
  CHECK_FALSE(eval_preserved_by_step(parse_term("ifz 0 then 2 else 3"), parse_term("3"), {}));
}

TEST_CASE("random evaluable terms") {
  testing::Rng rng(2026);
  for (int i = 0; i < 200; ++i) {
    Term t = testing::random_evaluable_term(rng, i % 3 == 0);
    CAPTURE(pretty_print(t));
    CHECK(preserved_along_reduction(t));
  }
}

TEST_CASE("evaluable corpus subterms") {
  auto subs = testing::evaluable_corpus_subterms();
  CHECK(subs.size() >= 10);
  for (const auto& t : subs) {
    CAPTURE(pretty_print(t));
    CHECK(preserved_along_reduction(t));
  }
}

}  // TEST_SUITE
