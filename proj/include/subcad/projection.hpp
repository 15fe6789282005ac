#pragma once

#include "subcad/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcad {

enum class Operator { collins_hong, mccallum, mccallum_ec, tticad };

std::string to_string(Operator op);
Operator parse_operator(const std::string& name);

/// Which coefficients of each basis element enter P(A).
enum class CoefficientRule {
  all_nonconstant,  // every nonconstant coefficient
  until_constant,   // from the leading one down, stopping at a nonzero constant
  /// From the leading one down, stopping once the chosen coefficients have
  /// finitely many common zeros (they then lie on zero-dimensional cells,
  /// where nullification is allowed). Decided exactly below three lower
  /// variables; above that only a nonzero constant stops the scan.
  finite_zeros,
};

std::string to_string(CoefficientRule rule);
CoefficientRule parse_coefficient_rule(const std::string& name);

struct ProjectionOptions {
  CoefficientRule coefficients = CoefficientRule::finite_zeros;
  /// Keep only leading coefficients. Sound only for 1-layered output.
  bool leading_coeff_only = false;
};

/// One formula of a TTICAD input: its polynomials and its equational constraint.
struct FormulaPolys {
  std::vector<Polynomial> polys;
  Polynomial ec;
};

struct ProjectionInput {
  VarOrderPtr order;
  std::vector<Polynomial> polys;
  /// Designated equational constraint (mccallum_ec), possibly a product.
  std::optional<Polynomial> ec;
  /// Per-formula sets for the tticad operator.
  std::vector<FormulaPolys> formulas;
};

struct ProjectionRun {
  VarOrderPtr order;
  Operator op = Operator::mccallum;
  ProjectionOptions options;
  /// tiers[v] holds the projection factors with main variable v, sorted.
  std::vector<std::vector<Polynomial>> tiers;
  /// Basis elements dividing the designated constraint, all in tiers[ec_level].
  std::vector<Polynomial> ec;
  int ec_level = -1;
  /// For tticad: E_i of each formula.
  std::vector<std::vector<Polynomial>> ec_groups;

  int dimension() const { return static_cast<int>(tiers.size()); }
  bool has_ec() const { return ec_level >= 0; }
  bool is_ec(const Polynomial& p) const;
  size_t total_size() const;
};

class ProjectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raw McCallum projection of polynomials with main variable v: selected
/// coefficients, discriminants and pairwise resultants. Not normalised.
std::vector<Polynomial> mccallum_set(const std::vector<Polynomial>& a, int v, const ProjectionOptions& opts);

/// The three operators, each normalised to a squarefree basis with constants
/// dropped. All inputs must have main variable v.
std::vector<Polynomial> proj_mccallum(const std::vector<Polynomial>& a, int v, const ProjectionOptions& opts = {});
std::vector<Polynomial> proj_ec(const std::vector<Polynomial>& a, const std::vector<Polynomial>& e, int v,
                                const ProjectionOptions& opts = {});
struct FormulaBasis {
  std::vector<Polynomial> a;
  std::vector<Polynomial> e;
};
std::vector<Polynomial> proj_tticad(const std::vector<FormulaBasis>& phis, int v, const ProjectionOptions& opts = {});

/// Runs the operator from the top variable down and splits the results into
/// tiers by main variable. mccallum_ec and tticad apply their reduced
/// operator at the top level only.
ProjectionRun projection_phase(const ProjectionInput& input, Operator op, const ProjectionOptions& opts = {});

}  // namespace subcad
