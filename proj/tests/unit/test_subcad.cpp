#include "doctest.h"

#include "subcad/driver.hpp"

#include <map>

using namespace subcad;

namespace {

Problem fixture(const std::string& name) { return load_problem(std::string(SUBCAD_FIXTURES) + "/" + name); }

Outcome run(const Problem& p, Construction what, int layers = 1, std::optional<Operator> op = std::nullopt) {
  Request r;
  r.what = what;
  r.layers = layers;
  r.op = op ? *op : default_operator(what, p);
  return run_request(p, r);
}

std::map<int, size_t> dims(const SubCad& c) {
  std::map<int, size_t> out;
  for (const auto& cell : c.cells) ++out[cell.dim()];
  return out;
}

std::vector<Cell> filter_dim_above(const std::vector<Cell>& cells, int bound) {
  std::vector<Cell> out;
  for (const auto& c : cells) {
    if (c.dim() > bound) out.push_back(c);
  }
  return out;
}

bool same(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].index != b[i].index) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("circle variety sub-CAD") {
  const auto p = fixture("circle_variety.txt");
  auto v = run(p, Construction::variety);
  CHECK(v.cad.cells.size() == 8);
  CHECK(v.true_cells == 3);
  CHECK(v.cad.base_cells == 7);
  for (const auto& c : v.cad.cells) CHECK(c.is_section());
  CHECK(v.cad.invariance() == "truth");

  auto full = run(p, Construction::cad, 1, Operator::mccallum);
  CHECK(full.cad.cells.size() == 23);
  CHECK(full.cad.invariance() == "sign");

  auto lv = run(p, Construction::layered_variety, 1);
  CHECK(lv.cad.cells.size() == 4);
  for (const auto& c : lv.cad.cells) CHECK(c.dim() == 1);

  const auto q = fixture("circle_variety_yx.txt");
  CHECK(run(q, Construction::variety).cad.cells.size() == 4);
  CHECK(run(q, Construction::layered_variety, 1).cad.cells.size() == 2);
  CHECK(run(q, Construction::cad, 1, Operator::mccallum).cad.cells.size() == 19);
}

TEST_CASE("variety sub-CAD for a constraint with a lower main variable") {
  const auto p = fixture("circle_line.txt");
  auto v = run(p, Construction::variety_lower);
  CHECK(v.cad.cells.size() == 11);
  CHECK(v.cad.base_cells == 3);
  CHECK(v.run.tiers[0].size() == 2);
  CHECK(base_phase(v.run.tiers[0]).size() == 7);
  for (const auto& c : v.cad.cells) CHECK(c.index[0] % 2 == 0);
  CHECK(v.true_cells == 1);
}

TEST_CASE("layered sub-CADs of the circle") {
  const auto p = fixture("circle_layered.txt");
  auto full = run(p, Construction::cad);
  auto one = run(p, Construction::layered, 1);
  CHECK(one.cad.cells.size() == 8);
  CHECK(dims(one.cad) == std::map<int, size_t>{{2, 8}});
  CHECK(one.true_cells == 1);
  CHECK(run(p, Construction::layered, 3).cad.cells.size() == 23);
  for (int l = 1; l <= 3; ++l) {
    auto out = run(p, Construction::layered, l);
    CHECK(same(out.cad.cells, filter_dim_above(full.cad.cells, 2 - l)));
  }
  CHECK_THROWS_AS(run(p, Construction::layered, 0), std::invalid_argument);
}

TEST_CASE("recursive layering equals the batch construction") {
  for (const char* name : {"circle_layered.txt", "circle_variety_yx.txt"}) {
    const auto p = fixture(name);
    auto proj = projection_phase(projection_input(p, Operator::mccallum), Operator::mccallum);
    LayeredState state;
    for (int l = 1; l <= 3; ++l) {
      auto rec = layered_recursive(proj, state);
      CHECK(state.layers == l);
      CHECK(same(rec.cells, layered_subcad(proj, l).cells));
    }
  }
}

TEST_CASE("lv(n) equals the variety sub-CAD and lv(l) is a subset") {
  for (const char* name : {"circle_variety.txt", "circle_variety_yx.txt"}) {
    const auto p = fixture(name);
    auto v = run(p, Construction::variety);
    auto lv2 = run(p, Construction::layered_variety, 2);
    CHECK(same(lv2.cad.cells, v.cad.cells));
    auto lv1 = run(p, Construction::layered_variety, 1);
    for (const auto& c : lv1.cad.cells) {
      bool found = false;
      for (const auto& d : v.cad.cells) found = found || d.index == c.index;
      CHECK(found);
    }
  }
}

TEST_CASE("empty variety") {
  const auto p = parse_problem("vars: x, y\nec: x^2+y^2+1\nphi: x^2+y^2+1=0\n");
  auto v = run(p, Construction::variety);
  CHECK(v.cad.cells.empty());
  CHECK(v.true_cells == 0);
  CHECK(run(p, Construction::layered_variety, 1).cad.cells.empty());
}

TEST_CASE("nullified constraint") {
  const auto p = fixture("nullified.txt");
  try {
    run(p, Construction::variety);
    FAIL("expected NotWellOriented");
  } catch (const NotWellOriented& e) {
    CHECK(e.poly().to_string() == "z*w+x");
    CHECK(e.cell().index_string() == "(2,2,1)");
  }

  Request r;
  r.what = Construction::variety;
  r.op = default_operator(r.what, p);
  r.subcad.nullification = NullificationPolicy::include_stack;
  auto out = run_request(p, r);
  CHECK(out.cad.cells.size() == 21);
  REQUIRE(out.cad.nullified_bases.size() == 1);
  CHECK(out.cad.superset());
  const auto& base = out.cad.nullified_bases[0].index;
  size_t in_stack = 0;
  for (const auto& c : out.cad.cells) {
    if (std::vector<int>(c.index.begin(), c.index.end() - 1) == base) ++in_stack;
  }
  CHECK(in_stack > 1);
}

TEST_CASE("construction names and default operators") {
  CHECK(parse_construction("full") == Construction::cad);
  CHECK(parse_construction("lv") == Construction::layered_variety);
  CHECK(to_string(Construction::layered_variety) == "lv");
  CHECK_THROWS_AS(parse_construction("bogus"), std::invalid_argument);
  const auto p = fixture("circle_variety.txt");
  CHECK(default_operator(Construction::variety, p) == Operator::mccallum_ec);
  CHECK(default_operator(Construction::variety_lower, p) == Operator::mccallum);
  CHECK(default_operator(Construction::layered, p) == Operator::mccallum);
  CHECK(default_operator(Construction::variety, fixture("two_spheres.txt")) == Operator::tticad);
}
