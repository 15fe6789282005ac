#include "doctest.h"
#include "oracles.hpp"

#include "subcad/algebra.hpp"
#include "subcad/driver.hpp"

using namespace subcad;

namespace {

VarOrderPtr xy() { return make_order({"x", "y"}); }

// Real roots of the product of univariate polynomials, as doubles.
std::vector<double> zero_set(const std::vector<Polynomial>& ps) {
  std::vector<double> out;
  for (const auto& r : isolate_roots_of_set(ps, {})) out.push_back(r.root.approx());
  return out;
}

bool shares_factor(const Polynomial& p, const std::vector<Polynomial>& set) {
  for (const auto& q : set) {
    if (!gcd(p, q).is_constant()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("proj_mccallum on small inputs") {
  auto o = xy();
  auto circle = parse_polynomial("x^2+y^2-1", o);
  auto p = proj_mccallum({circle}, 1);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == parse_polynomial("x^2-1", o));
  CHECK(zero_set(p) == std::vector<double>{-1, 1});

  CHECK(proj_mccallum({parse_polynomial("y", o)}, 1).empty());

  auto two = proj_mccallum({parse_polynomial("y^2-x", o), parse_polynomial("y^2-x-1", o)}, 1);
  CHECK(two == std::vector<Polynomial>{parse_polynomial("x", o), parse_polynomial("x+1", o)});
}

TEST_CASE("proj_ec keeps P(E) and the cross resultants") {
  auto o = xy();
  auto f = parse_polynomial("x^2+y^2-1", o);
  auto g = parse_polynomial("x", o);
  auto p = proj_ec({f, g}, {f}, 1);
  CHECK(zero_set(p) == std::vector<double>{-1, 0, 1});

  auto h = parse_polynomial("y-x", o);
  CHECK(proj_ec({f, h}, {f, h}, 1) == proj_mccallum({f, h}, 1));
  // res_y(y - 1, y - 2) is constant and disappears.
  CHECK(proj_ec({parse_polynomial("y-1", o), parse_polynomial("y-2", o)}, {parse_polynomial("y-1", o)}, 1).empty());
  CHECK_THROWS_AS(proj_ec({f}, {}, 1), ProjectionError);
}

TEST_CASE("proj_tticad reduces to proj_ec for one formula") {
  auto o = xy();
  auto f = parse_polynomial("x^2+y^2-1", o);
  auto g = parse_polynomial("y-x", o);
  CHECK(proj_tticad({FormulaBasis{{f, g}, {f}}}, 1) == proj_ec({f, g}, {f}, 1));
  // Identical constraints in two formulas add nothing new.
  CHECK(proj_tticad({FormulaBasis{{f}, {f}}, FormulaBasis{{f}, {f}}}, 1) == proj_mccallum({f}, 1));
}

TEST_CASE("projection_phase tiers") {
  auto o = xy();
  ProjectionInput in;
  in.order = o;
  in.polys = {parse_polynomial("x^2+y^2-1", o), parse_polynomial("x", o)};
  auto run = projection_phase(in, Operator::mccallum);
  REQUIRE(run.dimension() == 2);
  CHECK(run.tiers[1] == std::vector<Polynomial>{parse_polynomial("x^2+y^2-1", o)});
  CHECK(zero_set(run.tiers[0]) == std::vector<double>{-1, 0, 1});

  in.ec = parse_polynomial("x^2+y^2-1", o);
  auto ec = projection_phase(in, Operator::mccallum_ec);
  CHECK(ec.has_ec());
  CHECK(ec.ec_level == 1);
  CHECK(zero_set(ec.tiers[0]) == std::vector<double>{-1, 0, 1});
  CHECK(ec.tiers[0].size() == 2);

  ProjectionInput uni;
  uni.order = make_order({"x"});
  uni.polys = {parse_polynomial("x^3-x", uni.order)};
  auto u = projection_phase(uni, Operator::mccallum);
  CHECK(u.dimension() == 1);
  CHECK(u.tiers[0].size() == 1);

  CHECK_THROWS_AS(projection_phase(in, Operator::collins_hong), ProjectionError);
  in.ec.reset();
  CHECK_THROWS_AS(projection_phase(in, Operator::mccallum_ec), ProjectionError);
}

TEST_CASE("tticad projection of the two spheres is smaller than with the product constraint") {
  const Problem problem = load_problem(std::string(SUBCAD_FIXTURES) + "/two_spheres.txt");
  auto tti = projection_phase(projection_input(problem, Operator::tticad), Operator::tticad);
  ProjectionInput product = projection_input(problem, Operator::mccallum);
  product.ec = *problem.formula_ec(0) * *problem.formula_ec(1);
  auto ec = projection_phase(product, Operator::mccallum_ec);
  CHECK(tti.total_size() < ec.total_size());
  CHECK(tti.tiers[2].size() == 6);
  CHECK(tti.tiers[1].size() == 7);
  CHECK(tti.tiers[0].size() == 31);
}

TEST_CASE("reduced operator properties on random inputs") {
  std::mt19937 rng(20131);
  auto o = make_order({"x", "y", "z"});
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> a;
    for (int i = 0; i < 3; ++i) {
      auto p = oracle::random_poly(rng, o, 3, 4, 5);
      if (p.main_var() == 2) a.push_back(squarefree_part(primitive_part(p, 2)));
    }
    a = squarefree_basis(a);
    std::vector<Polynomial> top;
    for (const auto& p : a) {
      if (p.main_var() == 2) top.push_back(p);
    }
    if (top.size() < 2) continue;
    ++checked;
    const std::vector<Polynomial> e = {top[0]};
    const auto pe = proj_ec(top, e, 2);
    const auto pm = proj_mccallum(top, 2);
    CHECK(pe.size() <= pm.size());
    for (const auto& p : pe) CHECK(shares_factor(p, pm));

    unsigned d_a = 0, d_e = 0;
    for (const auto& p : top) d_a = std::max(d_a, p.total_degree());
    for (const auto& p : e) d_e = std::max(d_e, p.degree(2));
    for (const auto& p : pe) CHECK(p.total_degree() <= d_a * d_a);

    // Itemised count with d_E + 1 coefficients; the closed form is m_E below it.
    const size_t m_e = e.size(), m_a = top.size(), m_rest = m_a - m_e;
    const size_t raw = mccallum_set(e, 2, {}).size() + m_e * m_rest;
    CHECK(raw <= m_e * (d_e + 1) + m_e + m_e * (m_e - 1) / 2 + m_e * m_rest);
    CHECK(2 * (m_e * d_e + m_e + m_e * (m_e - 1) / 2 + m_e * m_rest) == m_e * (2 * d_e + m_rest + m_a - 1) + 2 * m_e);
  }
  CHECK(checked >= 20);
}
