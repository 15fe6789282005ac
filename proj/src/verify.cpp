#include "subcad/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace subcad {

namespace {

bool reduced_lift(const Outcome& out) {
  const auto k = out.cad.kind;
  return out.run.op == Operator::mccallum_ec || out.run.op == Operator::tticad || k == SubCadKind::variety ||
         k == SubCadKind::layered_variety;
}

bool variety_kind(SubCadKind k) { return k == SubCadKind::variety || k == SubCadKind::layered_variety; }

// Stack position of v among sorted roots.
int position(const Coord& v, const std::vector<TaggedRoot>& roots) {
  for (size_t k = 0; k < roots.size(); ++k) {
    const int c = compare(v, roots[k].root);
    if (c < 0) return static_cast<int>(2 * k + 1);
    if (c == 0) return static_cast<int>(2 * k + 2);
  }
  return static_cast<int>(2 * roots.size() + 1);
}

bool on_constraint(const ProjectionRun& run, const SamplePoint& s) {
  return std::any_of(run.ec.begin(), run.ec.end(), [&](const Polynomial& e) { return sign_at(e, s) == 0; });
}

}  // namespace

GridReport grid_oracle(const Problem& problem, const Outcome& out, const Rational& step, const Rational& lo,
                       const Rational& hi) {
  if (out.run.dimension() != 2) throw std::invalid_argument("grid oracle needs two variables");
  GridReport report;
  const ProjectionRun& run = out.run;
  std::map<std::vector<int>, size_t> by_index;
  for (size_t i = 0; i < out.cad.cells.size(); ++i) by_index[out.cad.cells[i].index] = i;

  const std::vector<Polynomial> polys = problem.polynomials();
  const bool sign_kind = out.cad.invariance() == "sign";
  const auto base_roots = isolate_roots_of_set(run.tiers[0], {});
  const bool reduced = reduced_lift(out);

  for (Rational x = lo; x <= hi; x += step) {
    const SamplePoint base = {Coord(x)};
    const int i0 = position(base[0], base_roots);
    std::vector<Polynomial> lifting = reduced ? run.ec : run.tiers[1];
    if (reduced && std::any_of(run.ec.begin(), run.ec.end(),
                               [&](const Polynomial& e) { return nullified_at(e, base); })) {
      lifting = run.tiers[1];
    }
    const auto roots = isolate_roots_of_set(lifting, base);
    for (Rational y = lo; y <= hi; y += step) {
      ++report.points;
      const SamplePoint point = {base[0], Coord(y)};
      const std::vector<int> index = {i0, position(point[1], roots)};
      const auto it = by_index.find(index);
      if (it == by_index.end()) continue;
      ++report.located;
      const Cell& cell = out.cad.cells[it->second];

      std::string bad;
      const auto at_point = [&](const Polynomial& p) { return sign_at(p, point); };
      if (out.formula_truth.empty()) {
        if (evaluate(problem.combined(), at_point) != out.truth[it->second]) bad = "truth of the formula";
      } else {
        for (size_t f = 0; f < problem.formulas.size() && bad.empty(); ++f) {
          if (evaluate(problem.formulas[f], at_point) != out.formula_truth[f][it->second]) {
            bad = "truth of formula " + std::to_string(f + 1);
          }
        }
      }
      const bool signs_claimed =
          sign_kind || (run.op == Operator::mccallum_ec && on_constraint(run, cell.sample));
      if (bad.empty() && signs_claimed) {
        for (const auto& p : polys) {
          if (sign_at(p, point) != sign_at(p, cell.sample)) {
            bad = "sign of " + p.to_string();
            break;
          }
        }
      }
      if (!bad.empty()) {
        if (report.violations++ == 0) {
          report.first_violation = "(" + to_string(x) + ", " + to_string(y) + ") in cell " + cell.index_string() +
                                   ": " + bad;
        }
      }
    }
  }
  return report;
}

Check check_variety_membership(const Outcome& out) {
  Check c{"variety membership", true, ""};
  if (!variety_kind(out.cad.kind)) {
    c.detail = "not a variety kind";
    return c;
  }
  for (const auto& cell : out.cad.cells) {
    if (!on_constraint(out.run, cell.sample)) {
      c.ok = false;
      c.detail = "cell " + cell.index_string() + " is off the constraint";
      return c;
    }
  }
  c.detail = std::to_string(out.cad.cells.size()) + " cells on the variety";
  return c;
}

Check check_structure(const Outcome& out) {
  Check c{"structure", true, ""};
  const int n = out.run.dimension();
  const auto& cells = out.cad.cells;
  std::ostringstream err;
  for (size_t i = 0; i < cells.size() && c.ok; ++i) {
    const Cell& cell = cells[i];
    int odd = 0;
    for (int e : cell.index) {
      if (e < 1) err << "cell " << cell.index_string() << " has a nonpositive entry";
      odd += e % 2;
    }
    if (cell.level() != n || static_cast<int>(cell.sample.size()) != n) {
      err << "cell " << cell.index_string() << " has the wrong length";
    } else if (odd != cell.dim()) {
      err << "cell " << cell.index_string() << " has dimension " << cell.dim();
    } else if (i > 0 && !index_less(cells[i - 1], cell)) {
      err << "cells " << cells[i - 1].index_string() << " and " << cell.index_string() << " out of order";
    } else {
      const int layers = out.cad.layers;
      switch (out.cad.kind) {
        case SubCadKind::layered:
          if (cell.dim() <= n - layers) err << "cell " << cell.index_string() << " below the layers";
          break;
        case SubCadKind::layered_variety:
          if (cell.dim() < n - layers || cell.dim() > n - 1) {
            err << "cell " << cell.index_string() << " outside the layers";
          }
          break;
        case SubCadKind::variety:
          if (cell.dim() > n - 1) err << "cell " << cell.index_string() << " is full-dimensional";
          break;
        default:
          break;
      }
    }
    if (!err.str().empty()) {
      c.ok = false;
      c.detail = err.str();
    }
  }
  if (c.ok) c.detail = std::to_string(cells.size()) + " cells";
  return c;
}

Check check_index_subset(const SubCad& sub, const SubCad& full) {
  Check c{"index subset", true, ""};
  std::map<std::vector<int>, bool> known;
  for (const auto& cell : full.cells) known[cell.index] = true;
  for (const auto& cell : sub.cells) {
    if (!known.count(cell.index)) {
      c.ok = false;
      c.detail = "cell " + cell.index_string() + " is not in the complete decomposition";
      return c;
    }
  }
  c.detail = std::to_string(sub.cells.size()) + " of " + std::to_string(full.cells.size());
  return c;
}

Check check_section_dimension(const Outcome& out) {
  Check c{"section dimension", true, ""};
  if (!variety_kind(out.cad.kind)) {
    c.detail = "not a variety kind";
    return c;
  }
  for (const auto& cell : out.cad.cells) {
    Cell base = cell;
    base.index.pop_back();
    if (!cell.is_section() || cell.dim() != base.dim()) {
      c.ok = false;
      c.detail = "cell " + cell.index_string();
      return c;
    }
  }
  return c;
}

bool same_indices(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].index != b[i].index) return false;
  }
  return true;
}

namespace {

class Suite {
 public:
  Suite(const Problem& problem, const SuiteOptions& opts) : problem_(problem), opts_(opts) {}

  std::vector<Check> checks;

  // The outcome, or nothing when not well oriented (recorded as skipped).
  std::optional<Outcome> build(const ProjectionRun& run, Construction what, int layers, const std::string& name) {
    Outcome out;
    out.run = run;
    try {
      out.cad = construct(run, what, layers, opts_.subcad);
    } catch (const NotWellOriented& e) {
      checks.push_back({name, true, std::string("skipped: ") + e.what()});
      return std::nullopt;
    }
    evaluate_truth(problem_, out);
    add(name, check_structure(out));
    if (opts_.grid && run.dimension() == 2) {
      const GridReport g = grid_oracle(problem_, out);
      add(name, Check{"grid oracle", g.violations == 0,
                      std::to_string(g.located) + "/" + std::to_string(g.points) + " points located, " +
                          std::to_string(g.violations) + " violations" +
                          (g.violations ? " first " + g.first_violation : "")});
    }
    return out;
  }

  void add(const std::string& prefix, Check c) {
    c.name = prefix + ": " + c.name;
    checks.push_back(std::move(c));
  }

 private:
  const Problem& problem_;
  const SuiteOptions& opts_;
};

std::vector<Cell> filter(const std::vector<Cell>& cells, const std::function<bool(const Cell&)>& keep) {
  std::vector<Cell> out;
  for (const auto& c : cells) {
    if (keep(c)) out.push_back(c);
  }
  return out;
}

std::string name_of(Construction what, int layers) {
  std::string s = to_string(what);
  if (what == Construction::layered || what == Construction::layered_variety) s += "(" + std::to_string(layers) + ")";
  return s;
}

}  // namespace

std::vector<Check> verify_suite(const Problem& problem, const SuiteOptions& opts) {
  Suite suite(problem, opts);
  const int n = problem.order->size();
  bool tti = problem.formulas.size() > 1;
  for (size_t i = 0; tti && i < problem.formulas.size(); ++i) tti = problem.formula_ec(i).has_value();
  const Operator base_op = tti ? Operator::tticad : Operator::mccallum;
  const ProjectionRun run = projection_phase(projection_input(problem, base_op), base_op, opts.projection);

  const auto full = suite.build(run, Construction::cad, 0, "cad");
  std::vector<std::vector<Cell>> batch;
  for (int l = 1; l <= n + 1; ++l) {
    const std::string name = name_of(Construction::layered, l);
    const auto out = suite.build(run, Construction::layered, l, name);
    batch.push_back(out ? out->cad.cells : std::vector<Cell>{});
    if (!out || !full) continue;
    suite.add(name, check_index_subset(out->cad, full->cad));
    const bool same = same_indices(out->cad.cells, filter(full->cad.cells, [&](const Cell& c) { return c.dim() > n - l; }));
    suite.add(name, Check{"equals filtered complete", same, same ? "" : "cell sets differ"});
  }
  try {
    LayeredState state;
    bool same = true;
    std::string detail;
    for (int l = 1; l <= n + 1 && same; ++l) {
      const SubCad rec = layered_recursive(run, state, opts.subcad);
      same = same_indices(rec.cells, batch[static_cast<size_t>(l - 1)]);
      if (!same) detail = "differs at " + std::to_string(l) + " layers";
    }
    suite.add("layered", Check{"recursive equals batch", same, detail});
  } catch (const NotWellOriented& e) {
    suite.checks.push_back({"layered: recursive equals batch", true, std::string("skipped: ") + e.what()});
  }

  const auto ec = problem.designated_ec();
  const bool top_ec = tti || (ec && ec->main_var() == n - 1);
  if (top_ec) {
    const ProjectionRun ec_run =
        tti ? run : projection_phase(projection_input(problem, Operator::mccallum_ec), Operator::mccallum_ec,
                                     opts.projection);
    const auto ec_full = tti ? full : suite.build(ec_run, Construction::cad, 0, "ec cad");
    const auto variety = suite.build(ec_run, Construction::variety, 0, "variety");
    if (variety) {
      suite.add("variety", check_variety_membership(*variety));
      suite.add("variety", check_section_dimension(*variety));
      if (ec_full) {
        suite.add("variety", check_index_subset(variety->cad, ec_full->cad));
        const auto on = filter(ec_full->cad.cells, [&](const Cell& c) {
          return std::any_of(ec_run.ec.begin(), ec_run.ec.end(), [&](const Polynomial& e) { return sign_at(e, c.sample) == 0; });
        });
        const bool same = same_indices(variety->cad.cells, on);
        suite.add("variety", Check{"equals constraint cells of the complete", same, same ? "" : "cell sets differ"});
      }
    }
    for (int l = 1; l <= n; ++l) {
      const std::string name = name_of(Construction::layered_variety, l);
      const auto lv = suite.build(ec_run, Construction::layered_variety, l, name);
      if (!lv) continue;
      suite.add(name, check_variety_membership(*lv));
      if (variety) {
        suite.add(name, check_index_subset(lv->cad, variety->cad));
        if (l == n) {
          const bool same = same_indices(lv->cad.cells, variety->cad.cells);
          suite.add(name, Check{"equals variety", same, same ? "" : "cell sets differ"});
        }
      }
    }
  } else if (ec && !tti) {
    const auto lower = suite.build(run, Construction::variety_lower, 0, "variety_lower");
    if (lower && full) suite.add("variety_lower", check_index_subset(lower->cad, full->cad));
  }
  return suite.checks;
}

}  // namespace subcad
