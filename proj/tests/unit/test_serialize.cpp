#include "doctest.h"

#include "subcad/serialize.hpp"

using namespace subcad;

namespace {

Problem fixture(const std::string& name) { return load_problem(std::string(SUBCAD_FIXTURES) + "/" + name); }

}  // namespace

TEST_CASE("cell round trip keeps algebraic samples") {
  const auto p = fixture("circle_variety.txt");
  Request r;
  r.what = Construction::cad;
  auto out = run_request(p, r);
  size_t algebraic = 0;
  for (const auto& c : out.cad.cells) {
    auto back = cell_from_json(json::parse(cell_to_json(c).dump()), p.order);
    CHECK(back.index == c.index);
    REQUIRE(back.sample.size() == c.sample.size());
    for (size_t i = 0; i < c.sample.size(); ++i) {
      if (!c.sample[i].is_rational()) ++algebraic;
      CHECK(back.sample[i].approx() == doctest::Approx(c.sample[i].approx()));
      CHECK(back.sample[i].is_rational() == c.sample[i].is_rational());
    }
    CHECK(signs_at(p.polynomials(), back) == signs_at(p.polynomials(), c));
  }
  CHECK(algebraic > 0);
}

TEST_CASE("projection and outcome json") {
  const auto p = fixture("circle_variety.txt");
  Request r;
  r.what = Construction::variety;
  r.op = default_operator(r.what, p);
  auto out = run_request(p, r);
  auto back = projection_from_json(json::parse(projection_to_json(out.run).dump()));
  CHECK(back.tiers == out.run.tiers);
  CHECK(back.ec_level == out.run.ec_level);
  CHECK(back.op == out.run.op);
  CHECK(construct(back, Construction::variety, 1).cells.size() == 8);

  auto j = outcome_to_json(p, out);
  CHECK(j["kind"] == "variety");
  CHECK(j["cell_count"] == 8);
  CHECK(j["true_cells"] == 3);
  CHECK(j["cells"].size() == 8);
  CHECK(j["superset"] == false);
}

TEST_CASE("layered state survives a round trip") {
  const auto p = fixture("circle_layered.txt");
  auto run = projection_phase(projection_input(p, Operator::mccallum), Operator::mccallum);
  LayeredState state;
  layered_recursive(run, state);
  const auto text = layered_state_to_json(run, state).dump();

  ProjectionRun loaded;
  auto restored = layered_state_from_json(json::parse(text), loaded);
  CHECK(restored.layers == 1);
  auto next = layered_recursive(loaded, restored);
  CHECK(next.cells.size() == layered_subcad(run, 2).cells.size());
  auto third = layered_recursive(loaded, restored);
  CHECK(third.cells.size() == 23);
}
