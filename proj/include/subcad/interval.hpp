#pragma once

#include "subcad/rational.hpp"

#include <mpfr.h>

#include <optional>
#include <utility>

namespace subcad {

/// Closed interval of MPFR floats with outward rounding. Every operation
/// returns an enclosure of the exact result.
class FloatInterval {
 public:
  explicit FloatInterval(mpfr_prec_t prec = 64);
  FloatInterval(const Rational& q, mpfr_prec_t prec);
  FloatInterval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  FloatInterval(const FloatInterval& other);
  FloatInterval(FloatInterval&& other) noexcept;
  FloatInterval& operator=(const FloatInterval& other);
  FloatInterval& operator=(FloatInterval&& other) noexcept;
  ~FloatInterval();

  mpfr_prec_t precision() const { return prec_; }

  FloatInterval& operator+=(const FloatInterval& o);
  FloatInterval& operator-=(const FloatInterval& o);
  FloatInterval& operator*=(const FloatInterval& o);
  friend FloatInterval operator+(FloatInterval a, const FloatInterval& b) { return a += b; }
  friend FloatInterval operator-(FloatInterval a, const FloatInterval& b) { return a -= b; }
  friend FloatInterval operator*(FloatInterval a, const FloatInterval& b) { return a *= b; }
  FloatInterval pow(unsigned e) const;
  FloatInterval negated() const;

  /// Sign when the interval excludes zero (or is exactly {0}).
  std::optional<int> sign() const;
  bool contains_zero() const;
  /// Upper bound of |x| and lower bound of |x| as rationals (exact
  /// conversions of the float endpoints).
  Rational abs_upper() const;
  Rational abs_lower() const;
  double mid_double() const;

 private:
  void init();
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
  bool live_ = false;
};

}  // namespace subcad
