#pragma once

#include "subcad/lifting.hpp"
#include "subcad/projection.hpp"

#include <string>
#include <vector>

namespace subcad {

enum class SubCadKind { complete, variety, variety_lower, layered, layered_variety };

struct SubCadOptions {
  NullificationPolicy nullification = NullificationPolicy::fail;
  int jobs = 0;
};

struct SubCad {
  SubCadKind kind = SubCadKind::complete;
  Operator op = Operator::mccallum;
  int layers = 0;  // layered kinds only
  std::vector<Cell> cells;
  /// Cells of R^(n-1) that the final lift was run over.
  size_t base_cells = 0;
  /// Base cells over which a nullified constraint forced the whole stack in.
  std::vector<Cell> nullified_bases;
  bool superset() const { return !nullified_bases.empty(); }

  /// complete, variety, layered(2), lv(1), v_tticad, l_tticad(2), ...
  std::string kind_name() const;
  /// sign, truth or truth_table.
  std::string invariance() const;
};

/// Complete CAD for the run. With mccallum_ec or tticad the final lift is
/// with respect to the equational constraints only (the EC-invariant CAD and
/// the full TTICAD respectively).
SubCad complete_cad(const ProjectionRun& run, const SubCadOptions& opts = {});

/// Sections of the final lift with respect to E over a CAD of R^(n-1).
SubCad variety_subcad(const ProjectionRun& run, const SubCadOptions& opts = {});

/// Variety sub-CAD for a constraint with main variable x_k, k < n: a CAD of
/// R^(k-1), the sections of its stacks with respect to the whole tier k, then
/// complete lifting above. Needs a mccallum run with a designated constraint.
SubCad variety_subcad_lower(const ProjectionRun& run, const SubCadOptions& opts = {});

/// Cells of dimension n-i for 0 <= i < layers.
SubCad layered_subcad(const ProjectionRun& run, int layers, const SubCadOptions& opts = {});

/// Terminating sections per level plus the cells produced so far.
struct LayeredState {
  int layers = 0;
  std::vector<std::vector<Cell>> terminating;
  std::vector<Cell> cells;
};

/// Adds one layer to state: the first call gives the 1-layered sub-CAD and
/// later calls lift the stored terminating sections.
SubCad layered_recursive(const ProjectionRun& run, LayeredState& state, const SubCadOptions& opts = {});

/// Layered sub-CAD of R^(n-1) followed by a section-only lift with respect to E.
SubCad layered_variety_subcad(const ProjectionRun& run, int layers, const SubCadOptions& opts = {});

}  // namespace subcad
