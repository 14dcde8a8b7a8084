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

#include <random>

#include "doctest.h"
#include "szxc/error.hpp"
#include "szxc/nat_normalize.hpp"
#include "szxc/parser.hpp"
#include "szxc/term.hpp"
#include "szxc/types.hpp"

using namespace szxc;

TEST_SUITE("lambda_core") {

TEST_CASE("monus arithmetic") {
  CHECK(nat_eval(parse_nat_expr("3 + 4"), {}) == 7);
  CHECK(nat_eval(parse_nat_expr("2 - 5"), {}) == 0);
  CHECK(nat_eval(parse_nat_expr("2 ^ n"), {{"n", Nat{3}}}) == 8);
  CHECK(nat_eval(parse_nat_expr("7 / 2"), {}) == 3);
  CHECK_THROWS_AS(nat_eval(parse_nat_expr("1 / 0"), {}), ArithmeticError);
  CHECK_THROWS_AS(nat_eval(parse_nat_expr("n + 1"), {}), EnvironmentError);
}

TEST_CASE("monus agrees with max(0, a - b)") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Nat a = rng() % 50, b = rng() % 50;
    CHECK(nat_apply(NatOp::Sub, a, b) == (a > b ? a - b : 0));
  }
}

TEST_CASE("ite0 picks its branch on zero") {
  NatExpr e = NatExpr::ite0(NatExpr::var("g"), 10, 20);
  CHECK(nat_eval(e, {{"g", Nat{0}}}) == 10);
  CHECK(nat_eval(e, {{"g", Nat{3}}}) == 20);
}

TEST_CASE("normalizer equalities") {
  CHECK(nat_equal(parse_nat_expr("2 * n"), parse_nat_expr("n + n")));
  CHECK(nat_equal(parse_nat_expr("(n + 1) - 1"), parse_nat_expr("n")));
  CHECK_FALSE(nat_equal(parse_nat_expr("k + (n - k)"), parse_nat_expr("n")));
  NatFacts guard{{parse_nat_expr("n - k"), true}};
  CHECK(nat_equal(parse_nat_expr("k + (n - k)"), parse_nat_expr("n"), guard));
  NatFacts small{{parse_nat_expr("2 - k"), true}};
  CHECK(nat_equal(parse_nat_expr("k + (2 - k)"), parse_nat_expr("2"), small));
}

TEST_CASE("guarded equality holds exactly on the guarded environments") {
  // Sweep n, k in [0, 6]: k + (n - k) = n iff n - k >= 1 or k <= n.
  for (Nat n = 0; n <= 6; ++n)
    for (Nat k = 0; k <= 6; ++k) {
      NatEnv env{{"n", n}, {"k", k}};
      bool eq = nat_eval(parse_nat_expr("k + (n - k)"), env) == n;
      if (n >= k + 1) CHECK(eq);
      if (k > n) CHECK_FALSE(eq);
    }
}

TEST_CASE("substitution") {
  Term t = parse_term("x (*) y");
  CHECK(pretty_print(subst(t, "x", Term::nat(0))) == "0 (*) y");
  Term lam = parse_term("\\x : Q. x");
  CHECK(alpha_equal(subst(lam, "x", Term::nat(1)), lam));
  Term i = parse_term("ifz n then a else b");
  CHECK(pretty_print(subst(i, "n", Term::nat(0))) == "ifz 0 then a else b");
}

TEST_CASE("substitution avoids capture") {
  Term t = parse_term("\\'m. n + m");
  Term r = subst(t, "n", Term::var("m"));
  const auto* l = r.as<Term::PLam>();
  REQUIRE(l);
  CHECK(l->name != "m");
  CHECK(free_vars(r) == std::set<std::string>{"m"});
}

TEST_CASE("free variables by kind") {
  auto fv = free_vars_classified(parse_term("x (*) y"));
  CHECK(fv.params.empty());
  CHECK(fv.state == std::set<std::string>{"x", "y"});
  fv = free_vars_classified(parse_term("\\'n. Rz @n"));
  CHECK(fv.params.empty());
  CHECK(fv.state.empty());
  fv = free_vars_classified(parse_term("for k in V do Rz @k x"));
  CHECK(fv.params == std::set<std::string>{"V"});
  CHECK(fv.state == std::set<std::string>{"x"});
}

TEST_CASE("type widths") {
  CHECK(nat_equal(type_width(parse_type("Q * Q")), 2));
  CHECK(nat_equal(type_width(parse_type("Vec Q n -o Vec Q n")), parse_nat_expr("n + n")));
  CHECK(nat_equal(type_width(parse_type("Unit")), 0));
  CHECK(nat_equal(type_width(parse_type("Vec (Q * B) 3")), 6));
}

}  // TEST_SUITE
