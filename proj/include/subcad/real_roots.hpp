#pragma once

#include "subcad/polynomial.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace subcad {

class AlgebraicRoot;

/// One coordinate of a sample point: a rational or a real algebraic number
/// given by a root of a polynomial over the preceding coordinates.
class Coord {
 public:
  Coord() = default;
  explicit Coord(Rational q) : value_(std::move(q)) {}
  explicit Coord(std::shared_ptr<AlgebraicRoot> root) : root_(std::move(root)) {}

  /// True for rationals, including algebraic roots that were found to be rational.
  bool is_rational() const;
  Rational value() const;  // requires is_rational()
  const std::shared_ptr<AlgebraicRoot>& root() const { return root_; }

  /// Current enclosure [lo, hi]; lo == hi for rationals.
  std::pair<Rational, Rational> bounds() const;
  double approx() const;
  std::string to_string() const;

 private:
  Rational value_;
  std::shared_ptr<AlgebraicRoot> root_;
};

using SamplePoint = std::vector<Coord>;

/// The unique root in (lo, hi) of defpoly(base, x_level) where level is the
/// number of base coordinates. defpoly is squarefree at the base with a
/// leading coefficient that does not vanish there, and lo, hi are not roots.
/// Refinement narrows the interval in place; it never changes the root.
class AlgebraicRoot {
 public:
  AlgebraicRoot(Polynomial defpoly, SamplePoint base, Rational lo, Rational hi, int sign_lo);

  const Polynomial& defpoly() const { return defpoly_; }
  const SamplePoint& base() const { return base_; }
  int level() const { return static_cast<int>(base_.size()); }

  bool is_exact() const;
  std::pair<Rational, Rational> interval() const;
  /// One bisection step.
  void refine_step();
  /// Bisects until hi - lo <= width (or the root is found to be rational).
  void refine_to(const Rational& width);

 private:
  Polynomial defpoly_;
  SamplePoint base_;
  mutable std::mutex mutex_;
  Rational lo_;
  Rational hi_;
  int sign_lo_;
  bool exact_ = false;
};

/// Exact sign of p at the point; p may only involve variables with index
/// below point.size().
int sign_at(const Polynomial& p, const SamplePoint& point);

/// True iff p vanishes at the point, decided algebraically.
bool is_zero_at(const Polynomial& p, const SamplePoint& point);

/// Real roots of a univariate polynomial, ascending. Rational roots are
/// returned as rationals. Throws on the zero polynomial.
std::vector<Coord> isolate_roots(const Polynomial& f);

/// A root together with the indices of the polynomials that vanish there.
struct TaggedRoot {
  Coord root;
  std::vector<int> tags;
};

/// Distinct real roots of the polynomials specialised at the base point
/// (variable index base.size()), merged and sorted. Polynomials that vanish
/// identically at the base contribute nothing; see nullified_at.
std::vector<TaggedRoot> isolate_roots_of_set(const std::vector<Polynomial>& polys, const SamplePoint& base);

/// True iff p(base, x_k) is the zero polynomial (k = base.size()).
bool nullified_at(const Polynomial& p, const SamplePoint& base);

/// Rational strictly between two consecutive merged roots (or beyond the
/// extreme ones when a side is missing): simplest rational in the gap.
Rational sector_sample(const Coord* below, const Coord* above);

/// Refines an algebraic coordinate so its interval has width at most w.
void refine(const Coord& c, const Rational& width);

/// a < b, a == b, a > b as -1, 0, 1. Exact.
int compare(const Coord& a, const Coord& b);

}  // namespace subcad
