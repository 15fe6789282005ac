#include "subcad/serialize.hpp"

#include <algorithm>

namespace subcad {

json coord_to_json(const Coord& c) {
  if (c.is_rational()) return to_string(c.value());
  const auto [lo, hi] = c.bounds();
  return json{{"defpoly", c.root()->defpoly().to_string()},
              {"lo", to_string(lo)},
              {"hi", to_string(hi)},
              {"approx", c.approx()}};
}

Coord coord_from_json(const json& j, const SamplePoint& base, const VarOrderPtr& order) {
  if (j.is_string()) return Coord(parse_rational(j.get<std::string>()));
  Polynomial defpoly = parse_polynomial(j.at("defpoly").get<std::string>(), order);
  Rational lo = parse_rational(j.at("lo").get<std::string>());
  Rational hi = parse_rational(j.at("hi").get<std::string>());
  SamplePoint at_lo = base;
  at_lo.emplace_back(lo);
  const int s = sign_at(defpoly, at_lo);
  if (s == 0) throw std::invalid_argument("algebraic coordinate: lower bound is a root");
  return Coord(std::make_shared<AlgebraicRoot>(std::move(defpoly), base, std::move(lo), std::move(hi), s));
}

json cell_to_json(const Cell& c) {
  json sample = json::array();
  for (const auto& x : c.sample) sample.push_back(coord_to_json(x));
  return json{{"index", c.index}, {"dim", c.dim()}, {"sample", sample}};
}

Cell cell_from_json(const json& j, const VarOrderPtr& order) {
  Cell c;
  c.index = j.at("index").get<std::vector<int>>();
  for (const auto& x : j.at("sample")) c.sample.push_back(coord_from_json(x, c.sample, order));
  if (c.sample.size() != c.index.size()) throw std::invalid_argument("cell: index and sample lengths differ");
  return c;
}

json annotated_cell_to_json(const Cell& c, const std::vector<Polynomial>& polys,
                            const std::vector<std::pair<std::string, bool>>& truth) {
  json j = cell_to_json(c);
  json signs = json::object();
  for (size_t i = 0; i < polys.size(); ++i) signs["p" + std::to_string(i + 1)] = sign_at(polys[i], c.sample);
  j["signs"] = signs;
  if (!truth.empty()) {
    json t = json::object();
    for (const auto& [k, v] : truth) t[k] = v;
    j["truth"] = t;
  }
  return j;
}

namespace {

json poly_list(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

std::vector<Polynomial> parse_list(const json& a, const VarOrderPtr& order) {
  std::vector<Polynomial> out;
  for (const auto& s : a) out.push_back(parse_polynomial(s.get<std::string>(), order));
  return out;
}

}  // namespace

json projection_to_json(const ProjectionRun& run) {
  json tiers = json::array();
  for (int v = 0; v < run.dimension(); ++v) {
    tiers.push_back(json{{"level", v + 1},
                         {"variable", run.order->name(v)},
                         {"polys", poly_list(run.tiers[static_cast<size_t>(v)])}});
  }
  json j{{"operator", to_string(run.op)},
         {"coefficients", to_string(run.options.coefficients)},
         {"leading_coeff_only", run.options.leading_coeff_only},
         {"vars", run.order->names()},
         {"tiers", tiers},
         {"total", run.total_size()}};
  if (run.has_ec()) {
    j["ec_level"] = run.ec_level + 1;
    j["ec"] = poly_list(run.ec);
  }
  if (!run.ec_groups.empty()) {
    json g = json::array();
    for (const auto& e : run.ec_groups) g.push_back(poly_list(e));
    j["ec_groups"] = g;
  }
  return j;
}

ProjectionRun projection_from_json(const json& j) {
  ProjectionRun run;
  run.order = make_order(j.at("vars").get<std::vector<std::string>>());
  run.op = parse_operator(j.at("operator").get<std::string>());
  run.options.coefficients = parse_coefficient_rule(j.value("coefficients", std::string("finite_zeros")));
  run.options.leading_coeff_only = j.value("leading_coeff_only", false);
  for (const auto& t : j.at("tiers")) run.tiers.push_back(parse_list(t.at("polys"), run.order));
  if (run.tiers.size() != static_cast<size_t>(run.order->size())) {
    throw std::invalid_argument("projection: one tier per variable expected");
  }
  if (j.contains("ec")) {
    run.ec_level = j.at("ec_level").get<int>() - 1;
    run.ec = parse_list(j.at("ec"), run.order);
  }
  if (j.contains("ec_groups")) {
    for (const auto& g : j.at("ec_groups")) run.ec_groups.push_back(parse_list(g, run.order));
  }
  return run;
}

json outcome_to_json(const Problem& problem, const Outcome& out) {
  std::vector<Polynomial> table = problem.polynomials();
  json ec_ids = json::array();
  for (const auto& e : out.run.ec) {
    auto it = std::find(table.begin(), table.end(), e);
    if (it == table.end()) {
      table.push_back(e);
      it = table.end() - 1;
    }
    ec_ids.push_back("p" + std::to_string(it - table.begin() + 1));
  }
  json polys = json::object();
  for (size_t i = 0; i < table.size(); ++i) polys["p" + std::to_string(i + 1)] = table[i].to_string();
  json formulas = json::object();
  for (size_t i = 0; i < problem.formulas.size(); ++i) {
    formulas["phi" + std::to_string(i + 1)] = problem.formulas[i].to_string();
  }

  json cells = json::array();
  for (size_t k = 0; k < out.cad.cells.size(); ++k) {
    std::vector<std::pair<std::string, bool>> truth;
    if (out.formula_truth.empty()) {
      truth.emplace_back("phi", out.truth[k]);
    } else {
      for (size_t i = 0; i < out.formula_truth.size(); ++i) {
        truth.emplace_back("phi" + std::to_string(i + 1), out.formula_truth[i][k]);
      }
    }
    cells.push_back(annotated_cell_to_json(out.cad.cells[k], table, truth));
  }
  json nullified = json::array();
  for (const auto& c : out.cad.nullified_bases) nullified.push_back(cell_to_json(c));

  return json{{"kind", out.cad.kind_name()},
              {"invariance", out.cad.invariance()},
              {"layers", out.cad.layers},
              {"operator", to_string(out.run.op)},
              {"vars", problem.order->names()},
              {"polynomials", polys},
              {"formulas", formulas},
              {"ec", ec_ids},
              {"superset", out.cad.superset()},
              {"nullified_bases", nullified},
              {"base_cells", out.cad.base_cells},
              {"true_cells", out.true_cells},
              {"cell_count", out.cad.cells.size()},
              {"cells", cells}};
}

json layered_state_to_json(const ProjectionRun& run, const LayeredState& state) {
  json term = json::array();
  for (const auto& level : state.terminating) {
    json a = json::array();
    for (const auto& c : level) a.push_back(cell_to_json(c));
    term.push_back(a);
  }
  json cells = json::array();
  for (const auto& c : state.cells) cells.push_back(cell_to_json(c));
  return json{{"projection", projection_to_json(run)}, {"layers", state.layers}, {"terminating", term},
              {"cells", cells}};
}

LayeredState layered_state_from_json(const json& j, ProjectionRun& run) {
  run = projection_from_json(j.at("projection"));
  LayeredState state;
  state.layers = j.at("layers").get<int>();
  for (const auto& level : j.at("terminating")) {
    std::vector<Cell> cs;
    for (const auto& c : level) cs.push_back(cell_from_json(c, run.order));
    state.terminating.push_back(std::move(cs));
  }
  for (const auto& c : j.at("cells")) state.cells.push_back(cell_from_json(c, run.order));
  return state;
}

}  // namespace subcad
