#include "subcad/subcad.hpp"

#include <algorithm>
#include <mutex>

namespace subcad {

std::string SubCad::kind_name() const {
  const bool tti = op == Operator::tticad;
  const std::string l = "(" + std::to_string(layers) + ")";
  switch (kind) {
    case SubCadKind::complete: return tti ? "tticad" : op == Operator::mccallum_ec ? "ec_cad" : "complete";
    case SubCadKind::variety: return tti ? "v_tticad" : "variety";
    case SubCadKind::variety_lower: return "variety_lower";
    case SubCadKind::layered: return (tti ? "l_tticad" : "layered") + l;
    case SubCadKind::layered_variety: return (tti ? "lv_tticad" : "lv") + l;
  }
  return "?";
}

std::string SubCad::invariance() const {
  if (op == Operator::tticad) return "truth_table";
  if (op == Operator::mccallum_ec || kind == SubCadKind::variety || kind == SubCadKind::variety_lower ||
      kind == SubCadKind::layered_variety) {
    return "truth";
  }
  return "sign";
}

namespace {

bool reduced_final_lift(const ProjectionRun& run) {
  return run.op == Operator::mccallum_ec || run.op == Operator::tticad;
}

struct StackCells {
  std::vector<Cell> cells;
  bool whole = false;  // a nullified constraint forced the full stack
};

// Stack construction with the well-orientedness rules of one construction.
class Lifter {
 public:
  Lifter(const ProjectionRun& run, const SubCadOptions& opts) : run_(run), opts_(opts) {}

  bool check_well_oriented = true;
  // Final lift with respect to E only (reduced operators and variety kinds).
  bool ec_final = false;
  // Under ec_final, nullification of E over a point cell means lifting with
  // the whole top tier instead (complete and layered constructions).
  bool point_nullification_ok = false;

  int n() const { return run_.dimension(); }

  StackCells stack(const Cell& c) {
    const int level = c.level() + 1;
    const auto& tier = run_.tiers[static_cast<size_t>(level - 1)];
    if (level < n() || !ec_final) {
      Stack s = generate_stack(tier, c);
      // Sign-invariance in the final lift survives nullification.
      if (level < n() && check_well_oriented && !s.nullified.empty() && c.dim() > 0) {
        throw NotWellOriented(s.nullified.front(), c);
      }
      return {std::move(s.cells), false};
    }
    Stack s = generate_stack(run_.ec, c);
    if (s.nullified.empty()) return {std::move(s.cells), false};
    if (c.dim() == 0 && point_nullification_ok) return {generate_stack(tier, c).cells, false};
    if (opts_.nullification == NullificationPolicy::fail) throw NotWellOriented(s.nullified.front(), c);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      nullified_.push_back(c);
    }
    return {generate_stack(tier, c).cells, true};
  }

  // Stacks over every base cell, in base order.
  std::vector<StackCells> stacks(const std::vector<Cell>& base) {
    std::vector<StackCells> out(base.size());
    parallel_for(base.size(), resolve_jobs(opts_.jobs), [&](size_t i) { out[i] = stack(base[i]); });
    return out;
  }

  // Lifts base and keeps the cells selected by keep (whole stacks always).
  template <typename Keep>
  std::vector<Cell> lift(const std::vector<Cell>& base, Keep keep) {
    std::vector<Cell> out;
    for (auto& s : stacks(base)) {
      for (auto& c : s.cells) {
        if (s.whole || keep(c)) out.push_back(std::move(c));
      }
    }
    return out;
  }

  std::vector<Cell> nullified_bases() {
    std::sort(nullified_.begin(), nullified_.end(), index_less);
    return nullified_;
  }

 private:
  const ProjectionRun& run_;
  const SubCadOptions& opts_;
  std::mutex mutex_;
  std::vector<Cell> nullified_;
};

auto keep_all = [](const Cell&) { return true; };
auto keep_sections = [](const Cell& c) { return c.is_section(); };

// Cells of R^m (m < n allowed) from the first m tiers; at level i a stack is
// built over c only when dim(c) > i - 1 - layers (all cells when layers is large).
std::vector<Cell> build(Lifter& lifter, int m, int layers) {
  std::vector<Cell> cells = {root_cell()};
  for (int i = 1; i <= m; ++i) {
    std::vector<Cell> admitted;
    for (auto& c : cells) {
      if (c.dim() > i - 1 - layers) admitted.push_back(std::move(c));
    }
    cells = lifter.lift(admitted, keep_all);
  }
  return cells;
}

void require_top_ec(const ProjectionRun& run) {
  if (!run.has_ec() || run.ec_level != run.dimension() - 1) {
    throw ProjectionError("this construction needs an equational constraint in the main variable " +
                          run.order->name(run.dimension() - 1));
  }
}

SubCad make(const ProjectionRun& run, SubCadKind kind, int layers) {
  SubCad out;
  out.kind = kind;
  out.op = run.op;
  out.layers = layers;
  return out;
}

}  // namespace

SubCad complete_cad(const ProjectionRun& run, const SubCadOptions& opts) {
  SubCad out = make(run, SubCadKind::complete, run.dimension() + 1);
  Lifter lifter(run, opts);
  lifter.ec_final = reduced_final_lift(run);
  lifter.point_nullification_ok = true;
  const int n = run.dimension();
  const std::vector<Cell> base = build(lifter, n - 1, n + 1);
  out.base_cells = base.size();
  out.cells = lifter.lift(base, keep_all);
  out.nullified_bases = lifter.nullified_bases();
  return out;
}

SubCad variety_subcad(const ProjectionRun& run, const SubCadOptions& opts) {
  require_top_ec(run);
  SubCad out = make(run, SubCadKind::variety, 0);
  Lifter lifter(run, opts);
  lifter.ec_final = true;
  const int n = run.dimension();
  const std::vector<Cell> base = build(lifter, n - 1, n + 1);
  out.base_cells = base.size();
  out.cells = lifter.lift(base, keep_sections);
  out.nullified_bases = lifter.nullified_bases();
  return out;
}

SubCad variety_subcad_lower(const ProjectionRun& run, const SubCadOptions& opts) {
  if (!run.has_ec()) throw ProjectionError("variety_lower needs a designated equational constraint");
  if (run.op != Operator::mccallum) throw ProjectionError("variety_lower uses the mccallum operator");
  SubCad out = make(run, SubCadKind::variety_lower, 0);
  Lifter lifter(run, opts);
  const int n = run.dimension();
  const int k = run.ec_level + 1;
  std::vector<Cell> cells = build(lifter, k - 1, n + 1);
  for (int i = k; i <= n; ++i) {
    if (i == n) out.base_cells = cells.size();
    if (i == k) {
      cells = lifter.lift(cells, keep_sections);
    } else {
      cells = lifter.lift(cells, keep_all);
    }
  }
  out.cells = std::move(cells);
  return out;
}

SubCad layered_subcad(const ProjectionRun& run, int layers, const SubCadOptions& opts) {
  const int n = run.dimension();
  if (layers < 1 || layers > n + 1) throw std::invalid_argument("layers must be in 1.." + std::to_string(n + 1));
  SubCad out = make(run, SubCadKind::layered, layers);
  Lifter lifter(run, opts);
  lifter.check_well_oriented = layers > 2;
  lifter.ec_final = reduced_final_lift(run);
  lifter.point_nullification_ok = true;
  std::vector<Cell> base = build(lifter, n - 1, layers);
  std::vector<Cell> admitted;
  for (auto& c : base) {
    if (c.dim() > n - 1 - layers) admitted.push_back(std::move(c));
  }
  out.base_cells = admitted.size();
  out.cells = lifter.lift(admitted, [&](const Cell& c) { return c.dim() > n - layers; });
  out.nullified_bases = lifter.nullified_bases();
  return out;
}

SubCad layered_recursive(const ProjectionRun& run, LayeredState& state, const SubCadOptions& opts) {
  const int n = run.dimension();
  if (state.layers >= n + 1) throw std::invalid_argument("the state already holds the complete CAD");
  Lifter lifter(run, opts);
  lifter.check_well_oriented = state.layers + 1 > 2;
  lifter.ec_final = reduced_final_lift(run);
  lifter.point_nullification_ok = true;

  // d[i] holds cells of R^(i+1) still to be lifted or output.
  std::vector<std::vector<Cell>> d(static_cast<size_t>(n));
  std::vector<std::vector<Cell>> stored(static_cast<size_t>(n));
  if (state.layers == 0) {
    for (auto& s : lifter.stacks({root_cell()})) {
      for (auto& c : s.cells) (c.is_section() ? stored[0] : d[0]).push_back(std::move(c));
    }
  } else {
    d = state.terminating;
    d.resize(static_cast<size_t>(n));
  }
  for (int i = 2; i <= n; ++i) {
    auto stacks = lifter.stacks(d[static_cast<size_t>(i - 2)]);
    for (auto& s : stacks) {
      for (auto& c : s.cells) {
        // A whole stack forced in by nullification is output, not stored.
        (c.is_section() && !s.whole ? stored : d)[static_cast<size_t>(i - 1)].push_back(std::move(c));
      }
    }
  }
  // The new layer is everything left at level n, including the terminating
  // sections stored there by the previous call.
  std::vector<Cell>& layer = d[static_cast<size_t>(n - 1)];
  state.cells.insert(state.cells.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  std::sort(state.cells.begin(), state.cells.end(), index_less);
  state.terminating = std::move(stored);
  ++state.layers;

  SubCad out = make(run, SubCadKind::layered, state.layers);
  out.cells = state.cells;
  out.nullified_bases = lifter.nullified_bases();
  return out;
}

SubCad layered_variety_subcad(const ProjectionRun& run, int layers, const SubCadOptions& opts) {
  require_top_ec(run);
  const int n = run.dimension();
  if (layers < 1 || layers > n) throw std::invalid_argument("layers must be in 1.." + std::to_string(n));
  SubCad out = make(run, SubCadKind::layered_variety, layers);
  Lifter lifter(run, opts);
  lifter.check_well_oriented = layers > 2;
  lifter.ec_final = true;
  std::vector<Cell> base = build(lifter, n - 1, layers);
  std::vector<Cell> admitted;
  for (auto& c : base) {
    if (c.dim() > n - 1 - layers) admitted.push_back(std::move(c));
  }
  out.base_cells = admitted.size();
  out.cells = lifter.lift(admitted, keep_sections);
  out.nullified_bases = lifter.nullified_bases();
  return out;
}

}  // namespace subcad
