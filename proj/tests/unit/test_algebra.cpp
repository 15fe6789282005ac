#include "doctest.h"
#include "oracles.hpp"

#include "subcad/algebra.hpp"

using namespace subcad;

namespace {
VarOrderPtr xy() { return make_order({"x", "y"}); }
}  // namespace

TEST_CASE("resultants of small examples") {
  auto o = xy();
  auto P = [&](const char* s) { return parse_polynomial(s, o); };
  CHECK(resultant(P("x^2+y^2-1"), P("x"), 0) == P("y^2-1"));
  CHECK(resultant(P("x^2+y^2-1"), P("2y"), 1) == P("4x^2-4"));
  auto abx = make_order({"a", "b", "x"});
  auto r = resultant(parse_polynomial("x-a", abx), parse_polynomial("x-b", abx), 2);
  CHECK((r == parse_polynomial("a-b", abx) || r == parse_polynomial("b-a", abx)));
  CHECK_THROWS(resultant(P("x"), P("x+1"), 1));
}

TEST_CASE("discriminants") {
  auto o = xy();
  auto P = [&](const char* s) { return parse_polynomial(s, o); };
  CHECK(discriminant(P("y^2+x^2-1"), 1) == P("-4x^2+4"));
  CHECK(discriminant(P("x^2-2"), 0) == P("8"));
  CHECK(discriminant(P("y^2"), 1).is_zero());
  CHECK_THROWS(discriminant(P("y+x"), 1));
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937 rng(11);
  auto o = make_order({"x", "y", "z"});
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto f = oracle::random_poly(rng, o, 4, 5, 5);
    auto g = oracle::random_poly(rng, o, 4, 4, 5);
    if (trial % 5 == 0) g = g * f + oracle::random_poly(rng, o, 1, 2, 3);
    const int v = trial % 3;
    if (f.degree(v) == 0 && g.degree(v) == 0) continue;
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(resultant(f, g, v) == oracle::sylvester_resultant(f, g, v));
    const unsigned p = f.degree(v), q = g.degree(v);
    const auto swapped = resultant(g, f, v);
    CHECK(((p * q) % 2 ? -swapped : swapped) == resultant(f, g, v));
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("resultant with deliberate common factors vanishes") {
  std::mt19937 rng(3);
  auto o = make_order({"x", "y"});
  for (int trial = 0; trial < 30; ++trial) {
    auto h = oracle::random_poly(rng, o, 2, 3, 4) + parse_polynomial("y", o);
    auto f = h * oracle::random_poly(rng, o, 2, 3, 4);
    auto g = h * oracle::random_poly(rng, o, 2, 3, 4);
    if (f.degree(1) == 0 && g.degree(1) == 0) continue;
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(resultant(f, g, 1).is_zero());
  }
}

TEST_CASE("resultant vanishes at common rational zeros") {
  auto o = xy();
  // f and g share the zero (1/2, 3): check res_y evaluates to 0 at x = 1/2.
  auto f = parse_polynomial("(y-3)*(x+y) + (2x-1)*y^2", o);
  auto g = parse_polynomial("(y-3)*(x^2-y) + (2x-1)", o);
  auto r = resultant(f, g, 1);
  std::vector<Rational> pt{Rational(1, 2), Rational(0)};
  CHECK(r.evaluate(pt) == 0);
}

TEST_CASE("gcd and squarefree basis") {
  auto o = xy();
  auto P = [&](const char* s) { return parse_polynomial(s, o); };
  CHECK(gcd(P("(x-1)^2*(x+2)"), P("(x-1)*(x-3)")) == P("x-1"));
  CHECK(gcd(P("(x+y)*(x-y)*y"), P("(x+y)*(2y+1)*x")) == P("y+x"));
  CHECK(gcd(P("6x"), P("4x^2")) == P("x"));
  CHECK(gcd(P("x"), P("y")) == P("1"));

  auto b1 = squarefree_basis({P("(x-1)^2*(x+2)"), P("x-1")});
  std::vector<Polynomial> e1{P("x-1"), P("x+2")};
  sort_unique(e1);
  CHECK(b1 == e1);
  auto b2 = squarefree_basis({P("x^2+y^2-1"), P("x")});
  std::vector<Polynomial> e2{P("x^2+y^2-1"), P("x")};
  sort_unique(e2);
  CHECK(b2 == e2);
  CHECK(squarefree_basis({P("x^2")}) == std::vector<Polynomial>{P("x")});
  CHECK(squarefree_basis({}).empty());
  // content x splits off into the lower tier
  auto b3 = squarefree_basis({P("x*y^2 - x")});
  std::vector<Polynomial> e3{P("x"), P("y-1"), P("y+1")};
  CHECK(b3.size() == 2);
  CHECK(std::find(b3.begin(), b3.end(), P("x")) != b3.end());
  CHECK(std::find(b3.begin(), b3.end(), P("y^2-1")) != b3.end());
}

TEST_CASE("squarefree basis properties on random products") {
  std::mt19937 rng(5);
  auto o = make_order({"x", "y"});
  for (int trial = 0; trial < 25; ++trial) {
    auto a = oracle::random_poly(rng, o, 2, 3, 3);
    auto b = oracle::random_poly(rng, o, 2, 3, 3);
    auto c = oracle::random_poly(rng, o, 2, 3, 3);
    std::vector<Polynomial> in{a * a * b, b * c, c};
    auto basis = squarefree_basis(in);
    for (size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i] == basis[i].canonical());
      CHECK(!basis[i].is_constant());
      const int v = basis[i].main_var();
      CHECK(gcd(basis[i], basis[i].derivative(v)).is_constant());
      for (size_t j = i + 1; j < basis.size(); ++j) CHECK(gcd(basis[i], basis[j]).is_constant());
    }
    // every input divides out completely by basis elements
    for (auto f : in) {
      if (f.is_zero()) continue;
      for (const auto& e : basis) {
        while (true) {
          auto q = exact_divide(f, e);
          if (!q) break;
          f = *q;
        }
      }
      CHECK(f.is_constant());
    }
  }
}

TEST_CASE("coefficients are listed highest degree first") {
  auto o = xy();
  auto P = [&](const char* s) { return parse_polynomial(s, o); };
  auto c = coefficients(P("x^2+y^2-1"), 1);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == P("1"));
  CHECK(c[1].is_zero());
  CHECK(c[2] == P("x^2-1"));
  CHECK(coefficients(P("x"), 1) == std::vector<Polynomial>{P("x")});
  auto c3 = coefficients(P("2x y + 3"), 0);
  CHECK(c3 == std::vector<Polynomial>{P("2y"), P("3")});
}
