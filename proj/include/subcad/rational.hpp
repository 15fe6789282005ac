#pragma once

#include <gmpxx.h>

#include <string>

namespace subcad {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// The rational with smallest denominator (then smallest absolute numerator)
/// in the closed interval [lo, hi]. Requires lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi);
/// Same for the open interval (lo, hi). Requires lo < hi.
Rational simplest_strictly_between(const Rational& lo, const Rational& hi);

}  // namespace subcad
