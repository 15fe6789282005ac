#include "subcad/rational.hpp"

#include <stdexcept>

namespace subcad {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

// Simplest rational in [lo, hi] for 0 <= lo <= hi, via continued fractions.
Rational simplest_nonneg(Rational lo, Rational hi) {
  Integer fl = floor(lo);
  if (fl == lo) return Rational(fl);
  if (fl + 1 <= hi) return Rational(fl + 1);
  // lo and hi share the integer part fl and neither is an integer... except
  // possibly hi; recurse on reciprocals of the fractional parts.
  Rational lo_frac = lo - fl;
  Rational hi_frac = hi - fl;
  Rational inner = simplest_nonneg(1 / hi_frac, 1 / lo_frac);
  Rational r = fl + 1 / inner;
  return r;
}

// Simplest rational in (lo, hi) for 0 <= lo < hi.
Rational simplest_open_nonneg(const Rational& lo, const Rational& hi) {
  const Integer fl = floor(lo);
  if (fl + 1 < hi) return Rational(fl + 1);
  const Rational hi_frac = hi - fl;
  if (fl == lo) {
    // (fl, hi) with hi <= fl + 1: x = fl + 1/t with t in (1/hi_frac, inf).
    const Integer t = floor(1 / hi_frac) + 1;
    return fl + Rational(1) / t;
  }
  const Rational lo_frac = lo - fl;
  const Rational inner = simplest_open_nonneg(1 / hi_frac, 1 / lo_frac);
  return fl + 1 / inner;
}

}  // namespace

Rational simplest_strictly_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_strictly_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (lo >= 0) return simplest_open_nonneg(lo, hi);
  Rational r = simplest_open_nonneg(-hi, -lo);
  return -r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (lo > 0) return simplest_nonneg(lo, hi);
  Rational r = simplest_nonneg(-hi, -lo);
  return -r;
}

}  // namespace subcad
