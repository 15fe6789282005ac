#include "doctest.h"
#include "oracles.hpp"

#include "subcad/real_roots.hpp"

using namespace subcad;

namespace {

VarOrderPtr x_only() { return make_order({"x"}); }

std::vector<Rational> ascending(const Polynomial& p) {
  std::vector<Rational> c(p.degree(0) + 1);
  for (const auto& t : p.terms()) c[t.mono.exponent(0)] = t.coeff;
  return c;
}

}  // namespace

TEST_CASE("isolate_roots on small univariate inputs") {
  auto o = x_only();
  auto r = isolate_roots(parse_polynomial("x^3-x", o));
  REQUIRE(r.size() == 3);
  CHECK(r[0].is_rational());
  CHECK(r[0].value() == -1);
  CHECK(r[1].value() == 0);
  CHECK(r[2].value() == 1);

  auto s = isolate_roots(parse_polynomial("x^2-2", o));
  REQUIRE(s.size() == 2);
  CHECK(!s[0].is_rational());
  CHECK(s[0].bounds().first >= -2);
  CHECK(s[0].bounds().second <= -1);
  CHECK(s[1].bounds().first >= 1);
  CHECK(s[1].bounds().second <= 2);

  CHECK(isolate_roots(parse_polynomial("x^2+1", o)).empty());
  CHECK_THROWS(isolate_roots(Polynomial(o)));
}

TEST_CASE("rational roots with nontrivial denominators collapse") {
  auto o = x_only();
  auto r = isolate_roots(parse_polynomial("(3x-1)*(7x+2)*(x^2-3)", o));
  REQUIRE(r.size() == 4);
  CHECK(!r[0].is_rational());
  CHECK(r[1].value() == Rational(-2, 7));
  CHECK(r[2].value() == Rational(1, 3));
  CHECK(!r[3].is_rational());
}

TEST_CASE("refine keeps the root and reaches the width") {
  auto o = x_only();
  auto s = isolate_roots(parse_polynomial("x^2-2", o));
  refine(s[1], Rational(1, 4));
  auto [lo, hi] = s[1].bounds();
  CHECK(hi - lo <= Rational(1, 4));
  CHECK(lo * lo < 2);
  CHECK(hi * hi > 2);
  auto t = isolate_roots(parse_polynomial("4x^2-3", o));
  refine(t[1], Rational(1, 10));
  CHECK(t[1].bounds().first < Rational(866, 1000));
  CHECK(t[1].bounds().second > Rational(866, 1000));
  auto exact = isolate_roots(parse_polynomial("x-5", o));
  refine(exact[0], Rational(1, 100));
  CHECK(exact[0].value() == 5);
}

TEST_CASE("sign_at univariate algebraic points") {
  auto o = x_only();
  auto s = isolate_roots(parse_polynomial("x^2-2", o));
  SamplePoint sqrt2{s[1]};
  CHECK(sign_at(parse_polynomial("x", o), sqrt2) == 1);
  CHECK(sign_at(parse_polynomial("x^2-2", o), sqrt2) == 0);
  CHECK(sign_at(parse_polynomial("x^2-3", o), sqrt2) == -1);
  CHECK(sign_at(parse_polynomial("x^3-2x", o), sqrt2) == 0);
  CHECK(sign_at(parse_polynomial("x^4-4", o), sqrt2) == 0);
}

TEST_CASE("root counts agree with a Sturm sequence oracle") {
  std::mt19937 rng(17);
  auto o = x_only();
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = deg(rng);
    std::vector<Term> ts;
    for (int i = 0; i <= d; ++i) {
      Monomial m;
      m.set_exponent(0, static_cast<unsigned>(i));
      ts.push_back(Term{m, Rational(coeff(rng))});
    }
    auto p = Polynomial::from_terms(o, ts);
    if (trial % 4 == 0) p = p * parse_polynomial("(2x-1)*(x+3)", o);
    if (p.is_constant()) continue;
    auto roots = isolate_roots(p);
    CHECK(static_cast<int>(roots.size()) == oracle::sturm_root_count(ascending(p)));
    for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(compare(roots[i], roots[i + 1]) < 0);
    for (const auto& r : roots) CHECK(sign_at(p, SamplePoint{r}) == 0);
  }
}

TEST_CASE("sign_at is multiplicative") {
  std::mt19937 rng(23);
  auto o = x_only();
  auto pts = isolate_roots(parse_polynomial("x^3-3x+1", o));
  for (int trial = 0; trial < 40; ++trial) {
    auto f = oracle::random_poly(rng, o, 4, 4, 5);
    auto g = oracle::random_poly(rng, o, 4, 4, 5);
    for (const auto& p : pts) {
      SamplePoint pt{p};
      CHECK(sign_at(f * g, pt) == sign_at(f, pt) * sign_at(g, pt));
    }
  }
}

TEST_CASE("merged root sets with tags") {
  auto o = x_only();
  SamplePoint empty;
  auto r = isolate_roots_of_set({parse_polynomial("x^2-1", o), parse_polynomial("x", o)}, empty);
  REQUIRE(r.size() == 3);
  CHECK(r[0].root.value() == -1);
  CHECK(r[1].root.value() == 0);
  CHECK(r[2].root.value() == 1);
  auto m = isolate_roots_of_set({parse_polynomial("x-1", o), parse_polynomial("(x-1)*(x-2)", o)}, empty);
  REQUIRE(m.size() == 2);
  CHECK(m[0].tags == std::vector<int>{0, 1});
  CHECK(m[1].tags == std::vector<int>{1});
  CHECK(isolate_roots_of_set({}, empty).empty());
  auto irr = isolate_roots_of_set({parse_polynomial("x^2-2", o), parse_polynomial("x^4-4", o),
                                   parse_polynomial("x^2-3", o)},
                                  empty);
  REQUIRE(irr.size() == 4);
  CHECK(irr[0].tags == std::vector<int>{2});
  CHECK(irr[1].tags == std::vector<int>{0, 1});
}

TEST_CASE("roots over an algebraic base point") {
  auto o = make_order({"x", "y"});
  auto xr = isolate_roots_of_set({parse_polynomial("x^2-2", o)}, {});
  REQUIRE(xr.size() == 2);
  SamplePoint base{xr[1].root};
  // y^2 - x = 0 at x = sqrt 2: two roots +-2^(1/4); y - x: one root sqrt 2.
  auto r = isolate_roots_of_set({parse_polynomial("y^2-x", o), parse_polynomial("y-x", o),
                                 parse_polynomial("y^2-2", o), parse_polynomial("x y - 2", o)},
                                base);
  REQUIRE(r.size() == 4);
  CHECK(r[0].tags == std::vector<int>{2});
  CHECK(r[1].tags == std::vector<int>{0});
  CHECK(r[2].tags == std::vector<int>{0});
  CHECK(r[3].tags == std::vector<int>{1, 2, 3});
  // tangency: (y - x)^2 has a double root at the base, still one root
  auto t = isolate_roots_of_set({parse_polynomial("y^2-2x y+2", o)}, base);
  REQUIRE(t.size() == 1);
  SamplePoint pt{xr[1].root, t[0].root};
  CHECK(sign_at(parse_polynomial("y-x", o), pt) == 0);
  CHECK(sign_at(parse_polynomial("y^2-3", o), pt) == -1);
  CHECK(nullified_at(parse_polynomial("(x^2-2)*y", o), base));
  CHECK(!nullified_at(parse_polynomial("(x^2-2)*y+1", o), base));
}

TEST_CASE("sector samples") {
  auto o = x_only();
  auto r = isolate_roots(parse_polynomial("x^2-1", o));
  CHECK(sector_sample(nullptr, &r[0]) == -2);
  CHECK(sector_sample(&r[0], &r[1]) == 0);
  CHECK(sector_sample(&r[1], nullptr) == 2);
  CHECK(sector_sample(nullptr, nullptr) == 0);
  auto s = isolate_roots(parse_polynomial("x^2-2", o));
  const Rational mid = sector_sample(&s[0], &s[1]);
  CHECK(mid == 0);
  CHECK(simplest_strictly_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(simplest_strictly_between(Rational(0), Rational(1, 3)) == Rational(1, 4));
  CHECK(simplest_strictly_between(Rational(-3), Rational(-2)) == Rational(-5, 2));
}

TEST_CASE("refined roots over an algebraic base stay on the polynomial") {
  auto o = make_order({"x", "z"});
  auto x = isolate_roots(parse_polynomial("27*x^3-640", o));
  REQUIRE(x.size() == 1);
  const double xv = std::cbrt(640.0 / 27.0);
  for (const char* text : {"-16*z+x^3", "16*z+x^3", "-z+2*x^3", "-z^2*x+x^3+1", "z^2*x-x^3-1"}) {
    INFO(text);
    auto p = parse_polynomial(text, o);
    auto roots = isolate_roots_of_set({p}, {x[0]});
    REQUIRE(!roots.empty());
    for (auto& r : roots) {
      refine(r.root, Rational(1, 1000000));
      const double z = r.root.approx();
      double value = 0;
      for (const auto& t : p.terms()) {
        value += t.coeff.get_d() * std::pow(xv, t.mono.exponent(0)) * std::pow(z, t.mono.exponent(1));
      }
      CHECK(std::abs(value) < 1e-3);
    }
  }
}
