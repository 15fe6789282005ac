#pragma once

#include "subcad/formula.hpp"
#include "subcad/subcad.hpp"

#include <string>
#include <vector>

namespace subcad {

enum class Construction { cad, variety, variety_lower, layered, layered_variety };

std::string to_string(Construction c);
Construction parse_construction(const std::string& name);

struct Request {
  Construction what = Construction::cad;
  Operator op = Operator::mccallum;
  int layers = 1;
  ProjectionOptions projection;
  SubCadOptions subcad;
};

/// Projection input for a problem under an operator: every polynomial, the
/// designated constraint, and for tticad the per-formula sets.
ProjectionInput projection_input(const Problem& problem, Operator op);

struct Outcome {
  ProjectionRun run;
  SubCad cad;
  /// Truth of the combined formula per cell, and per formula for tticad.
  std::vector<bool> truth;
  std::vector<std::vector<bool>> formula_truth;
  size_t true_cells = 0;
  double projection_seconds = 0;
  double lifting_seconds = 0;
};

/// The construction alone, over an existing projection.
SubCad construct(const ProjectionRun& run, Construction what, int layers, const SubCadOptions& opts = {});

/// Fills truth, formula_truth and true_cells from out.cad.
void evaluate_truth(const Problem& problem, Outcome& out);

/// Projection, the requested construction and truth evaluation. Throws
/// NotWellOriented, ProjectionError or std::invalid_argument.
Outcome run_request(const Problem& problem, const Request& request);

/// The operator a construction implies when none is given: tticad for the
/// variety kinds over several formulas, mccallum_ec over one, mccallum for
/// variety_lower and the rest.
Operator default_operator(Construction c, const Problem& problem);

}  // namespace subcad
