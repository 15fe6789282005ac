#include "doctest.h"
#include "oracles.hpp"

#include "subcad/polynomial.hpp"

using namespace subcad;

namespace {
VarOrderPtr xy() { return make_order({"x", "y"}); }
}  // namespace

TEST_CASE("arithmetic canonical forms") {
  auto o = xy();
  auto P = [&](const char* s) { return parse_polynomial(s, o); };
  CHECK(P("x+1") + P("x-1") == P("2x"));
  CHECK(P("x^2+y^2-1") * P("1") == P("x^2+y^2-1"));
  CHECK(P("(x-1)*(x+2)") == P("x^2+x-2"));
  CHECK((P("x") - P("x")).is_zero());
  CHECK(P("3/2 x y").terms().front().coeff == Rational(3, 2));
}

TEST_CASE("variable order mismatch is rejected") {
  auto a = parse_polynomial("x", make_order({"x", "y"}));
  auto b = parse_polynomial("x", make_order({"y", "x"}));
  CHECK_THROWS_AS(a + b, VarOrderMismatch);
}

TEST_CASE("derivatives") {
  auto o = xy();
  auto P = [&](const char* s) { return parse_polynomial(s, o); };
  CHECK(P("x^2+y^2-1").derivative(1) == P("2y"));
  CHECK(P("y^3").derivative(0).is_zero());
  CHECK(P("x^3-x").derivative(0) == P("3x^2-1"));
}

TEST_CASE("main variable and degrees") {
  auto o = make_order({"z", "y", "x"});
  auto p = parse_polynomial("x y^2 + z^5", o);
  CHECK(p.main_var() == 2);
  CHECK(p.degree(1) == 2);
  CHECK(p.degree(0) == 5);
  CHECK(p.total_degree() == 5);
  CHECK(parse_polynomial("7", o).main_var() == -1);
}

TEST_CASE("coefficient extraction and substitution") {
  auto o = xy();
  auto p = parse_polynomial("x^2+y^2-1", o);
  auto c = p.coefficients_in(1);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == parse_polynomial("x^2-1", o));
  CHECK(c[1].is_zero());
  CHECK(c[2] == parse_polynomial("1", o));
  CHECK(p.substitute(0, Rational(1, 2)) == parse_polynomial("y^2-3/4", o));
  std::vector<Rational> pt{Rational(1, 2), Rational(2)};
  CHECK(p.evaluate(pt) == Rational(13, 4));
}

TEST_CASE("canonical form and norm length") {
  auto o = xy();
  auto p = parse_polynomial("-1/2 x + 3/4 y", o);
  CHECK(p.canonical() == parse_polynomial("3y - 2x", o));
  CHECK(p.canonical().norm_length() == 5);
}

TEST_CASE("parser errors carry a column") {
  auto o = xy();
  try {
    parse_polynomial("x^2+=1", o);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_polynomial("x + w", o), ParseError);
}

TEST_CASE("multiplication agrees with dense oracle on random inputs") {
  std::mt19937 rng(7);
  auto o = make_order({"x", "y", "z"});
  for (int trial = 0; trial < 60; ++trial) {
    auto a = oracle::random_poly(rng, o, 4, 5, 9);
    auto b = oracle::random_poly(rng, o, 4, 5, 9);
    auto c = oracle::random_poly(rng, o, 3, 4, 9);
    CHECK(oracle::to_dense(a * b) == oracle::dense_mul(oracle::to_dense(a), oracle::to_dense(b)));
    CHECK(oracle::to_dense(a + b) == oracle::dense_add(oracle::to_dense(a), oracle::to_dense(b), 1));
    CHECK(oracle::to_dense(a - b) == oracle::dense_add(oracle::to_dense(a), oracle::to_dense(b), -1));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}
