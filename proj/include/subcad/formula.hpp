#pragma once

#include "subcad/lifting.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace subcad {

enum class Relation { eq, ne, lt, le, gt, ge };

std::string to_string(Relation r);
bool holds(Relation r, int sign);

/// Quantifier-free Tarski formula.
struct Formula {
  enum class Kind { atom, conj, disj, neg, truth, falsity };

  Kind kind = Kind::truth;
  Polynomial poly;  // atoms: poly rel 0
  Relation rel = Relation::eq;
  std::vector<Formula> children;

  static Formula atom(Polynomial p, Relation r);
  static Formula both(std::vector<Formula> parts);
  static Formula either(std::vector<Formula> parts);
  static Formula negation(Formula f);

  /// Distinct nonconstant atom polynomials in first-occurrence order.
  std::vector<Polynomial> polynomials() const;
  std::string to_string() const;
};

/// Parses "x^2+y^2-1=0 /\ x<0", with \/, ~, parentheses, true and false.
/// Atoms compare two polynomials. Errors carry line and column.
Formula parse_formula(const std::string& text, const VarOrderPtr& order, int line = 1);

bool evaluate(const Formula& phi, const std::function<int(const Polynomial&)>& sign);
bool evaluate_on_cell(const Formula& phi, const Cell& c);

/// True when f = 0 follows from phi atom by atom: an equation whose
/// polynomial divides f is a conjunct on every disjunctive branch.
bool implies_ec(const Formula& phi, const Polynomial& f);

/// Equations among the top-level conjuncts.
std::vector<Polynomial> explicit_ecs(const Formula& phi);

/// The designated constraint when it is unambiguous: the only top-level
/// equation, or for a disjunction whose branches each have exactly one, the
/// product of those (an implicit constraint).
std::optional<Polynomial> detect_ec(const Formula& phi);

/// One line-oriented input file:
///   vars: x, y          (ascending order)
///   ec: x^2+y^2-1       (or: ec: auto)
///   phi: x^2+y^2-1=0 /\ x<0
/// Several phi lines form a TTICAD list; each may end in "; ec=<poly>".
/// Lines starting with # are comments.
struct Problem {
  VarOrderPtr order;
  std::vector<Formula> formulas;
  std::vector<std::optional<Polynomial>> formula_ecs;
  std::optional<Polynomial> ec;
  bool ec_auto = false;

  /// The disjunction of all formulas.
  Formula combined() const;
  /// The designated constraint for the combined formula, if any.
  std::optional<Polynomial> designated_ec() const;
  /// EC of formula i: annotation, else detected.
  std::optional<Polynomial> formula_ec(size_t i) const;
  std::vector<Polynomial> polynomials() const;
};

Problem parse_problem(const std::string& text);
Problem load_problem(const std::string& path);
std::string to_string(const Problem& p);

}  // namespace subcad
