#pragma once

#include "subcad/real_roots.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcad {

/// A cell of R^k: its stack positions (odd = sector, even = section) and a
/// sample point.
struct Cell {
  std::vector<int> index;
  SamplePoint sample;

  int level() const { return static_cast<int>(index.size()); }
  int dim() const;
  bool is_section() const { return !index.empty() && index.back() % 2 == 0; }
  std::string index_string() const;
};

bool index_less(const Cell& a, const Cell& b);

/// The cell of R^0 that every base phase lifts from.
Cell root_cell();

struct Stack {
  std::vector<Cell> cells;
  /// Polynomials that vanish identically over the base sample.
  std::vector<Polynomial> nullified;
};

/// Stack over c with respect to the sign of P, whose elements have main
/// variable c.level(). Nullified polynomials are reported, not fatal; the
/// stack is built from the others.
Stack generate_stack(const std::vector<Polynomial>& p, const Cell& c);

/// CAD of R^1 for univariate polynomials.
std::vector<Cell> base_phase(const std::vector<Polynomial>& p1);

bool check_nullified(const Polynomial& p, const Cell& c);

/// Raised when a polynomial is nullified where the operator forbids it.
class NotWellOriented : public std::runtime_error {
 public:
  NotWellOriented(Polynomial poly, Cell cell);
  const Polynomial& poly() const { return poly_; }
  const Cell& cell() const { return cell_; }

 private:
  Polynomial poly_;
  Cell cell_;
};

enum class NullificationPolicy { fail, include_stack };

struct LiftOptions {
  /// Worker threads for stacks within one level; 0 reads SUBCAD_JOBS.
  int jobs = 0;
  /// Throw NotWellOriented on nullification over positive-dimensional cells.
  bool check_well_oriented = true;
};

int resolve_jobs(int requested);

/// Runs fn(i) for i in [0, count) on up to jobs threads. Exceptions from
/// workers are rethrown (the one with the lowest i).
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn);

/// Stacks over each base cell with respect to p, concatenated in base order.
/// keep(cell) selects which new cells are returned.
std::vector<Cell> lift_level(const std::vector<Cell>& base, const std::vector<Polynomial>& p, const LiftOptions& opts,
                             const std::function<bool(const Cell&)>& keep = {});

/// Complete CAD from projection tiers: base phase, then a lift per level.
std::vector<Cell> lift_full(const std::vector<std::vector<Polynomial>>& tiers, const LiftOptions& opts = {});

/// Sign of each polynomial at the sample point.
std::vector<int> signs_at(const std::vector<Polynomial>& p, const Cell& c);

}  // namespace subcad
