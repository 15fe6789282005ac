#pragma once

#include "subcad/rational.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcad {

/// Ordered list of variable names x_1 < ... < x_n. The last variable is the
/// first one eliminated by projection.
class VarOrder {
 public:
  static constexpr int kMaxVars = 8;

  explicit VarOrder(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  bool operator==(const VarOrder& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

VarOrderPtr make_order(std::vector<std::string> names);

class VarOrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector packed into two words, 16 bits per variable. Variable i
/// lives in field i; comparing (hi, lo) as integers is the lexicographic
/// order in which the highest variable is most significant.
struct Monomial {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  static constexpr unsigned kMaxExponent = 0x7fff;

  unsigned exponent(int var) const {
    const std::uint64_t w = var < 4 ? lo : hi;
    return static_cast<unsigned>((w >> (16 * (var & 3))) & 0xffffu);
  }
  void set_exponent(int var, unsigned e);
  bool is_one() const { return hi == 0 && lo == 0; }
  unsigned total_degree() const;

  /// Product; throws std::overflow_error past kMaxExponent.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Quotient other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.hi == b.hi && a.lo == b.lo; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
  }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted in decreasing lexicographic order (highest variable first) with no
/// zero coefficients, so equal polynomials have identical term lists.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarOrderPtr order) : order_(std::move(order)) {}

  static Polynomial constant(VarOrderPtr order, const Rational& c);
  static Polynomial variable(VarOrderPtr order, int var);
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static Polynomial from_terms(VarOrderPtr order, std::vector<Term> terms);
  /// sum_i coeffs[i] * x_var^i
  static Polynomial from_coefficients(VarOrderPtr order, int var, const std::vector<Polynomial>& coeffs);

  const VarOrderPtr& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_value() const;  // requires is_constant()

  /// Greatest variable with positive exponent, -1 for constants.
  int main_var() const;
  unsigned degree(int var) const;
  unsigned total_degree() const;
  bool involves(int var) const { return degree(var) > 0; }
  /// Bit i set iff x_i occurs.
  unsigned variable_mask() const;

  /// Coefficients as a polynomial in `var`, ascending: result[i] multiplies var^i.
  std::vector<Polynomial> coefficients_in(int var) const;
  Polynomial leading_coeff(int var) const;
  Polynomial coeff_of_degree(int var, unsigned d) const;
  /// Leading coefficient of the leading term in the internal order.
  const Rational& leading_term_coeff() const { return terms_.front().coeff; }

  Polynomial derivative(int var) const;
  Polynomial substitute(int var, const Rational& value) const;
  /// Substitutes every variable with index < values.size() ... for which
  /// mask bit is set. Used to specialise rational sample coordinates.
  Polynomial substitute_many(std::span<const Rational> values, unsigned mask) const;
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned e) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  /// Total order used for deterministic sorting of polynomial sets.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  size_t hash() const;

  /// Positive rational c such that c * p has coprime integer coefficients.
  Rational integer_normaliser() const;
  /// c * p with coprime integer coefficients and positive leading term.
  Polynomial canonical() const;
  /// Sum of absolute values of the integer coefficients of canonical().
  Integer norm_length() const;

  std::string to_string() const;

 private:
  void check_same_order(const Polynomial& o) const;

  VarOrderPtr order_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

struct PolynomialHash {
  size_t operator()(const Polynomial& p) const { return p.hash(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the position.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/// Parses polynomial text such as "x^2+y^2-1", "-50 x y + 3/2*z", "(x-1)^2".
Polynomial parse_polynomial(const std::string& text, const VarOrderPtr& order);

/// Parses the longest polynomial expression starting at pos and advances pos
/// past it. Columns in errors count from the start of text.
Polynomial parse_polynomial_prefix(const std::string& text, size_t& pos, const VarOrderPtr& order);

}  // namespace subcad
