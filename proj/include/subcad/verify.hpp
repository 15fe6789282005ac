#pragma once

#include "subcad/driver.hpp"

#include <string>
#include <vector>

namespace subcad {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct GridReport {
  size_t points = 0;
  size_t located = 0;  // points falling in a cell of the output
  size_t violations = 0;
  std::string first_violation;
};

/// Rational grid over [lo, hi]^2 with the given step. Each point is located
/// by recomputing the stacks at its own x coordinate; it must agree with the
/// sample of its cell in the truth of every formula, and in the sign of every
/// input polynomial where the output claims sign-invariance (sign-invariant
/// kinds, and cells on the constraint under the reduced operator).
/// Two-variable problems only.
GridReport grid_oracle(const Problem& problem, const Outcome& out, const Rational& step = Rational(1, 16),
                       const Rational& lo = -3, const Rational& hi = 3);

/// Cells of variety kinds make every constraint factor vanish at the sample.
Check check_variety_membership(const Outcome& out);

/// Dimension is the number of odd index entries, sorted strictly by index,
/// layered kinds hold only the dimensions they promise.
Check check_structure(const Outcome& out);

/// Every index of sub occurs in full (same operator).
Check check_index_subset(const SubCad& sub, const SubCad& full);

/// Sections of a constraint-only final lift have the dimension of their base.
Check check_section_dimension(const Outcome& out);

/// Same cells by index.
bool same_indices(const std::vector<Cell>& a, const std::vector<Cell>& b);

struct SuiteOptions {
  bool grid = true;
  ProjectionOptions projection;
  SubCadOptions subcad;
};

/// Every construction that applies to the problem, each checked for
/// structure and index-consistency against the complete decomposition, plus:
/// layered(l) equals the complete cells of dimension > n - l, the recursive
/// path equals the batch path, variety outputs lie on the constraint, lv(n)
/// equals the variety sub-CAD, and the grid oracle for two variables.
/// Constructions that are not well oriented are reported as skipped.
std::vector<Check> verify_suite(const Problem& problem, const SuiteOptions& opts = {});

}  // namespace subcad
