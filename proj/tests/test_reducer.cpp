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

#include <vector>

#include "doctest.h"
#include "szxc/error.hpp"
#include "support.hpp"
#include "szxc/reducer.hpp"

using namespace szxc;

namespace {

std::string reduce(const std::string& src) { return pretty_print(normalize_deep(parse_term(src)).term); }

std::string first_rule(const std::string& src) {
  auto s = step(parse_term(src));
  return s ? s->rule : "";
}

}  // namespace

TEST_SUITE("reducer") {

TEST_CASE("rules") {
  CHECK(reduce("(\\x : B. x) #0") == "#0");
  CHECK(reduce("for k in VNil[Nat] do k + 1") == "VNil[Nat]");
  auto s = step(parse_term("for k in 1 :: VNil[Nat] do k + 1"));
  REQUIRE(s);
  CHECK(s->rule == "for-cons");
  CHECK(pretty_print(s->term) == "1 + 1 :: (for k in VNil[Nat] do k + 1)");
  CHECK(reduce("5 - 2") == "3");
  CHECK(reduce("range @1 @3") == "1 :: 2 :: VNil[Nat]");
  CHECK(reduce("reverse @(0 .. 3)") == "2 :: 1 :: 0 :: VNil[Nat]");
}

TEST_CASE("rule names") {
  CHECK(first_rule("(\\x : B. x) #0") == "beta");
  CHECK(first_rule("(\\'n. n) @2") == "beta-param");
  CHECK(first_rule("let a (*) b = #0 (*) #1 in b (*) a") == "let-tensor");
  CHECK(first_rule("let a :: t = #0 :: VNil[B] in a") == "let-cons");
  CHECK(first_rule("ifz 0 then #0 else #1") == "ifz-zero");
  CHECK(first_rule("ifz 3 then #0 else #1") == "ifz-succ");
  CHECK(first_rule("() ; #0") == "seq");
  CHECK(first_rule("VNil[Unit] ;v #0") == "seqv");
  CHECK(first_rule("split[B] @1 @0 (#0 :: VNil[B])") == "split");
  CHECK(first_rule("append[B] @0 @0 VNil[B] VNil[B]") == "append");
  CHECK(first_rule("drop @0 VNil[Unit]") == "drop");
}

TEST_CASE("primitive unfoldings") {
  CHECK(reduce("drop @0 VNil[Unit]") == "()");
  CHECK(reduce("append[B] @0 @1 VNil[B] (#1 :: VNil[B])") == "#1 :: VNil[B]");
  CHECK(reduce("split[B] @1 @1 (#0 :: #1 :: VNil[B])") == "#0 :: VNil[B] (*) #1 :: VNil[B]");
  CHECK(reduce("append[B] @1 @1 (#0 :: VNil[B]) (#1 :: VNil[B])") == "#0 :: #1 :: VNil[B]");
}

TEST_CASE("call by value with the argument first") {
  // The argument is a redex, so it fires before the outer beta.
  auto s = step(parse_term("(\\x : Nat. x) (1 + 1)"));
  REQUIRE(s);
  CHECK(s->rule == "arith");
}

TEST_CASE("gates are inert without an effect handler") {
  CHECK_FALSE(step(parse_term("H q")));
  CHECK_FALSE(step(parse_term("new #0")));
}

TEST_CASE("map reduces to pointwise applications") {
  Term t = parse_term("map[Q, Q] @2 (x :: y :: VNil[Q]) (f :: g :: VNil[Q -o Q])");
  CHECK(pretty_print(normalize_deep(t).term) == "f x :: g y :: VNil[Q]");
}

TEST_CASE("qft at one qubit stops at the inert Hadamard") {
  // Without an effect handler the gate application is a stuck argument.
  Program p = testing::corpus_program("qft.ld");
  Term t = Term::app(Term::papp(p.inlined("qft"), Term::nat(1)), parse_term("q :: VNil[Q]"));
  auto r = normalize_deep(t);
  CHECK_FALSE(r.value);
  CHECK(pretty_print(r.term).find("H q") != std::string::npos);
}

TEST_CASE("fuel") {
  CHECK_THROWS_AS(normalize_deep(parse_term("range @0 @50"), 10), EvalError);
  CHECK(normalize_deep(parse_term("range @0 @50"), 1000).value);
}

TEST_CASE("trace reports every step") {
  std::vector<std::string> rules;
  auto r = normalize(parse_term("range @0 @1"), kDefaultFuel,
                     [&](std::size_t, const StepResult& s) { rules.push_back(s.rule); });
  CHECK(r.value);
  CHECK(rules.size() == r.steps);
  CHECK(rules.front() == "range");
}

}  // TEST_SUITE
