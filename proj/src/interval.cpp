#include "subcad/interval.hpp"

#include <algorithm>

namespace subcad {

void FloatInterval::init() {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  live_ = true;
}

FloatInterval::FloatInterval(mpfr_prec_t prec) : prec_(prec) {
  init();
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

FloatInterval::FloatInterval(const Rational& q, mpfr_prec_t prec) : prec_(prec) {
  init();
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

FloatInterval::FloatInterval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) : prec_(prec) {
  init();
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

FloatInterval::FloatInterval(const FloatInterval& other) : prec_(other.prec_) {
  init();
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

FloatInterval::FloatInterval(FloatInterval&& other) noexcept : prec_(other.prec_) {
  init();
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

FloatInterval& FloatInterval::operator=(const FloatInterval& other) {
  if (this == &other) return *this;
  if (prec_ != other.prec_) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

FloatInterval& FloatInterval::operator=(FloatInterval&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

FloatInterval::~FloatInterval() {
  if (live_) {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
}

FloatInterval& FloatInterval::operator+=(const FloatInterval& o) {
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

FloatInterval& FloatInterval::operator-=(const FloatInterval& o) {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
  mpfr_swap(lo_, t);
  mpfr_clear(t);
  return *this;
}

FloatInterval& FloatInterval::operator*=(const FloatInterval& o) {
  mpfr_t a, b, lo, hi;
  mpfr_inits2(prec_, a, b, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_mul(lo, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(hi, lo_, o.lo_, MPFR_RNDU);
  auto take = [&](mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_mul(a, x, y, MPFR_RNDD);
    mpfr_mul(b, x, y, MPFR_RNDU);
    if (mpfr_less_p(a, lo)) mpfr_set(lo, a, MPFR_RNDD);
    if (mpfr_greater_p(b, hi)) mpfr_set(hi, b, MPFR_RNDU);
  };
  take(lo_, o.hi_);
  take(hi_, o.lo_);
  take(hi_, o.hi_);
  mpfr_swap(lo_, lo);
  mpfr_swap(hi_, hi);
  mpfr_clears(a, b, lo, hi, static_cast<mpfr_ptr>(nullptr));
  return *this;
}

FloatInterval FloatInterval::pow(unsigned e) const {
  FloatInterval result(Rational(1), prec_);
  if (e == 0) return result;
  if (e % 2 == 0 && contains_zero()) {
    // Even powers of an interval straddling zero are in [0, max^e].
    FloatInterval m(prec_);
    mpfr_t a;
    mpfr_init2(a, prec_);
    mpfr_abs(a, lo_, MPFR_RNDU);
    if (mpfr_cmpabs(hi_, a) > 0) mpfr_abs(a, hi_, MPFR_RNDU);
    mpfr_pow_ui(m.hi_, a, e, MPFR_RNDU);
    mpfr_set_zero(m.lo_, 1);
    mpfr_clear(a);
    return m;
  }
  FloatInterval base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= FloatInterval(base);
  }
  return result;
}

FloatInterval FloatInterval::negated() const {
  FloatInterval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

std::optional<int> FloatInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
  return std::nullopt;
}

bool FloatInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

namespace {
Rational to_rational(mpfr_srcptr x) {
  mpz_class m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  Rational r(m);
  if (e > 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else if (e < 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}
}  // namespace

Rational FloatInterval::abs_upper() const {
  Rational a = abs(to_rational(lo_));
  Rational b = abs(to_rational(hi_));
  return a > b ? a : b;
}

Rational FloatInterval::abs_lower() const {
  if (contains_zero()) return Rational(0);
  Rational a = abs(to_rational(lo_));
  Rational b = abs(to_rational(hi_));
  return a < b ? a : b;
}

double FloatInterval::mid_double() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

}  // namespace subcad
