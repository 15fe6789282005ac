#include "subcad/driver.hpp"

#include <chrono>

namespace subcad {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::cad: return "cad";
    case Construction::variety: return "variety";
    case Construction::variety_lower: return "variety_lower";
    case Construction::layered: return "layered";
    case Construction::layered_variety: return "lv";
  }
  return "?";
}

Construction parse_construction(const std::string& name) {
  if (name == "cad" || name == "full") return Construction::cad;
  if (name == "variety") return Construction::variety;
  if (name == "variety_lower") return Construction::variety_lower;
  if (name == "layered") return Construction::layered;
  if (name == "lv") return Construction::layered_variety;
  throw std::invalid_argument("unknown construction '" + name + "'");
}

ProjectionInput projection_input(const Problem& problem, Operator op) {
  ProjectionInput in;
  in.order = problem.order;
  in.polys = problem.polynomials();
  if (op == Operator::tticad) {
    for (size_t i = 0; i < problem.formulas.size(); ++i) {
      const auto ec = problem.formula_ec(i);
      if (!ec) throw ProjectionError("formula " + std::to_string(i + 1) + " has no equational constraint");
      in.formulas.push_back(FormulaPolys{problem.formulas[i].polynomials(), *ec});
    }
    in.polys.clear();
  } else {
    in.ec = problem.designated_ec();
  }
  return in;
}

Operator default_operator(Construction c, const Problem& problem) {
  if (c == Construction::variety_lower) return Operator::mccallum;
  if (c == Construction::variety || c == Construction::layered_variety) {
    return problem.formulas.size() > 1 ? Operator::tticad : Operator::mccallum_ec;
  }
  return Operator::mccallum;
}

SubCad construct(const ProjectionRun& run, Construction what, int layers, const SubCadOptions& opts) {
  switch (what) {
    case Construction::cad: return complete_cad(run, opts);
    case Construction::variety: return variety_subcad(run, opts);
    case Construction::variety_lower: return variety_subcad_lower(run, opts);
    case Construction::layered: return layered_subcad(run, layers, opts);
    case Construction::layered_variety: return layered_variety_subcad(run, layers, opts);
  }
  throw std::invalid_argument("unknown construction");
}

void evaluate_truth(const Problem& problem, Outcome& out) {
  const Formula phi = problem.combined();
  out.truth.clear();
  out.formula_truth.clear();
  out.true_cells = 0;
  out.truth.reserve(out.cad.cells.size());
  for (const auto& c : out.cad.cells) {
    const bool t = evaluate_on_cell(phi, c);
    out.truth.push_back(t);
    if (t) ++out.true_cells;
  }
  if (problem.formulas.size() > 1) {
    for (const auto& f : problem.formulas) {
      std::vector<bool> v;
      v.reserve(out.cad.cells.size());
      for (const auto& c : out.cad.cells) v.push_back(evaluate_on_cell(f, c));
      out.formula_truth.push_back(std::move(v));
    }
  }
}

Outcome run_request(const Problem& problem, const Request& request) {
  using clock = std::chrono::steady_clock;
  Outcome out;
  const auto t0 = clock::now();
  ProjectionInput input = projection_input(problem, request.op);
  if (request.what == Construction::variety_lower && !input.ec) {
    throw ProjectionError("variety_lower needs a designated equational constraint");
  }
  out.run = projection_phase(input, request.op, request.projection);
  const auto t1 = clock::now();
  out.cad = construct(out.run, request.what, request.layers, request.subcad);
  const auto t2 = clock::now();
  out.projection_seconds = std::chrono::duration<double>(t1 - t0).count();
  out.lifting_seconds = std::chrono::duration<double>(t2 - t1).count();

  evaluate_truth(problem, out);
  return out;
}

}  // namespace subcad
