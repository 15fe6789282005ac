#include "subcad/complexity.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace subcad {

void ComplexityParams::validate() const {
  const auto need = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("complexity parameters: " + what);
  };
  need(n >= 1 && m_A >= 1 && m_E >= 1 && d_A >= 1 && d_E >= 1 && l_A >= 1 && l_E >= 1,
       "n, m_A, m_E, d_A, d_E, l_A, l_E must be positive");
  need(m_E <= m_A, "m_E <= m_A");
  need(m_AminusE == m_A - m_E, "m_AminusE = m_A - m_E");
  need(d_E <= d_A, "d_E <= d_A");
}

ComplexityParams figure7_params(long n) {
  ComplexityParams p;
  p.n = n;
  return p;
}

ComplexityParams parse_params(const std::string& text) {
  ComplexityParams p;
  bool minus_given = false;
  std::stringstream in(text);
  std::string item;
  const std::map<std::string, long ComplexityParams::*> fields = {
      {"n", &ComplexityParams::n},     {"m_A", &ComplexityParams::m_A}, {"m_E", &ComplexityParams::m_E},
      {"m_AminusE", &ComplexityParams::m_AminusE},
      {"d_A", &ComplexityParams::d_A}, {"d_E", &ComplexityParams::d_E}, {"l_A", &ComplexityParams::l_A},
      {"l_E", &ComplexityParams::l_E}};
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=value, got '" + item + "'");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string name = trim(item.substr(0, eq));
    const auto it = fields.find(name);
    if (it == fields.end()) throw std::invalid_argument("unknown parameter '" + name + "'");
    try {
      p.*(it->second) = std::stol(trim(item.substr(eq + 1)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad value for " + name);
    }
    if (name == "m_AminusE") minus_given = true;
  }
  if (!minus_given) p.m_AminusE = p.m_A - p.m_E;
  p.validate();
  return p;
}

const std::vector<BoundKind>& all_bound_kinds() {
  static const std::vector<BoundKind> kinds = {
      BoundKind::root_sep_lower, BoundKind::heindel,     BoundKind::isolate_all,
      BoundKind::refine_all,     BoundKind::uk_ck,       BoundKind::collins_full,
      BoundKind::mccallum_1layer, BoundKind::pEA_size,   BoundKind::pEA_degree,
      BoundKind::pEA_norm,       BoundKind::n1_collins,  BoundKind::n1_mccallum,
      BoundKind::final_lift,     BoundKind::total_variety_collins, BoundKind::total_lv_mccallum};
  return kinds;
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::root_sep_lower: return "root_sep_lower";
    case BoundKind::heindel: return "heindel";
    case BoundKind::isolate_all: return "isolate_all";
    case BoundKind::refine_all: return "refine_all";
    case BoundKind::uk_ck: return "uk_ck";
    case BoundKind::collins_full: return "collins_full";
    case BoundKind::mccallum_1layer: return "mccallum_1layer";
    case BoundKind::pEA_size: return "pEA_size";
    case BoundKind::pEA_degree: return "pEA_degree";
    case BoundKind::pEA_norm: return "pEA_norm";
    case BoundKind::n1_collins: return "n1_collins";
    case BoundKind::n1_mccallum: return "n1_mccallum";
    case BoundKind::final_lift: return "final_lift";
    case BoundKind::total_variety_collins: return "total_variety_collins";
    case BoundKind::total_lv_mccallum: return "total_lv_mccallum";
  }
  return "?";
}

BoundKind parse_bound_kind(const std::string& name) {
  for (auto k : all_bound_kinds()) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown bound '" + name + "'");
}

namespace {

constexpr double kMaxBits = 4294967296.0;

// b^e for exponents that must fit in an unsigned long.
unsigned long exponent(unsigned long b, unsigned long e) {
  unsigned long r = 1;
  for (unsigned long i = 0; i < e; ++i) {
    if (r > static_cast<unsigned long>(-1) / b) throw std::overflow_error("bound exponent overflows");
    r *= b;
  }
  return r;
}

Integer power(const Integer& b, unsigned long e) {
  if (b > 1 && static_cast<double>(mpz_sizeinbase(b.get_mpz_t(), 2)) * static_cast<double>(e) > kMaxBits) {
    throw std::overflow_error("bound too large to evaluate exactly");
  }
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational power(const Rational& b, unsigned long e) {
  Rational r(power(Integer(b.get_num()), e), power(Integer(b.get_den()), e));
  r.canonicalize();
  return r;
}

Integer z(long v) { return Integer(v); }

// m_E (2 d_E + m_A + m_AminusE - 1) / 2
Rational size_bound(const ComplexityParams& p) {
  return Rational(z(p.m_E) * (2 * p.d_E + p.m_A + p.m_AminusE - 1), 2);
}

// m_E (2 d_E + 2 m_A - 1) / 2
Rational size_bound_simplified(const ComplexityParams& p) {
  return Rational(z(p.m_E) * (2 * p.d_E + 2 * p.m_A - 1), 2);
}

Integer root_sep_reciprocal(long d, long l) {
  const double bits = 1 + static_cast<double>(d) * (1.0 + 1.5 * std::log2(static_cast<double>(d)) +
                                                   std::log2(static_cast<double>(l)));
  if (bits > kMaxBits) throw std::overflow_error("bound too large to evaluate exactly");
  mpfr_t t, u;
  const auto prec = static_cast<mpfr_prec_t>(bits) + 128;
  mpfr_init2(t, prec);
  mpfr_init2(u, prec);
  mpfr_set_ui(t, 1, MPFR_RNDU);
  mpfr_exp(t, t, MPFR_RNDU);
  mpfr_sqrt(t, t, MPFR_RNDU);
  mpfr_set_ui(u, static_cast<unsigned long>(d), MPFR_RNDU);
  mpfr_pow_ui(u, u, 3, MPFR_RNDU);
  mpfr_sqrt(u, u, MPFR_RNDU);
  mpfr_mul(t, t, u, MPFR_RNDU);
  mpfr_mul_ui(t, t, static_cast<unsigned long>(l), MPFR_RNDU);
  mpfr_pow_ui(t, t, static_cast<unsigned long>(d), MPFR_RNDU);
  mpfr_mul_ui(t, t, 2, MPFR_RNDU);
  Integer r;
  mpfr_get_z(r.get_mpz_t(), t, MPFR_RNDU);
  mpfr_clear(t);
  mpfr_clear(u);
  return r;
}

Integer ceil_of(const Rational& q) { return ceil(q); }

unsigned long ul(long v) { return static_cast<unsigned long>(v); }

// (2d)^{3^{n+1}} m^{2^n}
Integer cells_bound(long n, long d, long m) {
  return power(z(2 * d), exponent(3, ul(n + 1))) * power(z(m), exponent(2, ul(n)));
}

}  // namespace

Integer bound_value(BoundKind kind, const ComplexityParams& p) {
  p.validate();
  const long n = p.n, d = p.d_A, m = p.m_A, l = p.l_A;
  switch (kind) {
    case BoundKind::root_sep_lower:
      return root_sep_reciprocal(d, l);
    case BoundKind::heindel:
      return power(z(d), 8) + power(z(d), 7) * power(z(l), 3);
    case BoundKind::isolate_all:
      return z(m) * power(z(d), 8) + z(m) * power(z(d), 7) * power(z(l), 3);
    case BoundKind::refine_all:
      return z(m) * power(z(d), 8) + power(z(m), 7) * power(z(d), 7) * power(z(l), 3);
    case BoundKind::uk_ck:
      return cells_bound(n, d, m);
    case BoundKind::collins_full:
      return power(z(2 * d), exponent(4, ul(n + 4))) * power(z(m), exponent(2, ul(n + 6))) * power(z(l), 3);
    case BoundKind::mccallum_1layer:
      return power(z(2 * d), exponent(3, ul(n + 4))) * power(z(m), exponent(2, ul(n + 4))) * power(z(l), 3);
    case BoundKind::pEA_size:
      return ceil_of(size_bound(p));
    case BoundKind::pEA_degree:
      return z(d) * d;
    case BoundKind::pEA_norm:
      return 16 * power(z(d), 4) * l;
    case BoundKind::n1_collins:
      return ceil_of(Rational(power(z(16), 3) * power(z(4 * d * d), exponent(2, ul(2 * n + 6))) * power(z(l), 3) *
                              power(z(d), 12)) *
                     power(size_bound_simplified(p), exponent(2, ul(n + 5))));
    case BoundKind::n1_mccallum:
      return ceil_of(Rational(power(z(16), 3) * power(z(4 * d * d), exponent(3, ul(n + 3))) * power(z(l), 3) *
                              power(z(d), 12)) *
                     power(size_bound_simplified(p), exponent(2, ul(n + 3))));
    case BoundKind::final_lift: {
      const Integer u = cells_bound(n, p.d_E, p.m_E);
      return u * power(z(p.d_E), 8) + power(u, 7) * power(z(p.d_E), 7) * power(z(p.l_E), 3);
    }
    case BoundKind::total_variety_collins: {
      // 2^12 (2^2 d_A^2)^{4^{n+3}} is the n1 form with 4^{n+3} = 2^{2n+6}.
      return bound_value(BoundKind::n1_collins, p) + bound_value(BoundKind::final_lift, p);
    }
    case BoundKind::total_lv_mccallum:
      return bound_value(BoundKind::n1_mccallum, p) + bound_value(BoundKind::final_lift, p);
  }
  throw std::invalid_argument("unknown bound");
}

Integer pEA_degree_max_form(const ComplexityParams& p) {
  p.validate();
  return std::max(2 * z(p.d_E) * p.d_E, 2 * z(p.d_A) * p.d_A);
}

Integer n1_collins_substituted(const ComplexityParams& p) {
  p.validate();
  const long n = p.n, d = p.d_A;
  return ceil_of(Rational(power(z(4 * d * d), exponent(2, ul(2 * (n - 1) + 8))) *
                          power(Integer(16 * power(z(d), 4) * p.l_A), 3)) *
                 power(size_bound(p), exponent(2, ul(n - 1 + 6))));
}

Integer n1_mccallum_substituted(const ComplexityParams& p) {
  p.validate();
  const long n = p.n, d = p.d_A;
  return ceil_of(Rational(power(z(4 * d * d), exponent(3, ul(n - 1 + 4))) * power(Integer(16 * power(z(d), 4) * p.l_A), 3)) *
                 power(size_bound(p), exponent(2, ul(n - 1 + 4))));
}

std::optional<double> log_log(const Integer& v) {
  if (v <= 0) return std::nullopt;
  long e = 0;
  const double mant = mpz_get_d_2exp(&e, v.get_mpz_t());
  const double ln = std::log(mant) + static_cast<double>(e) * std::log(2.0);
  if (ln < std::exp(1.0)) return std::nullopt;
  return std::log(ln);
}

Figure7Table figure7_table(const ComplexityParams& base, long n_from, long n_to) {
  Figure7Table t;
  for (long n = n_from; n <= n_to; ++n) {
    ComplexityParams p = base;
    p.n = n;
    const auto cad = log_log(bound_value(BoundKind::collins_full, p));
    const auto variety = log_log(bound_value(BoundKind::total_variety_collins, p));
    const auto layered = log_log(bound_value(BoundKind::mccallum_1layer, p));
    const auto lv = log_log(bound_value(BoundKind::total_lv_mccallum, p));
    if (!cad || !variety || !layered || !lv) {
      t.notes.push_back("n=" + std::to_string(n) + " omitted: a value is below e^e");
      continue;
    }
    t.rows.push_back(Figure7Row{n, *cad, *variety, *layered, *lv});
  }
  return t;
}

std::string figure7_csv(const Figure7Table& t) {
  std::ostringstream os;
  os.precision(10);
  os << "n,cad,variety,layered1,lv1\n";
  for (const auto& r : t.rows) os << r.n << ',' << r.cad << ',' << r.variety << ',' << r.layered << ',' << r.lv << '\n';
  for (const auto& note : t.notes) os << "# " << note << '\n';
  return os.str();
}

}  // namespace subcad
