#include "subcad/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace subcad {

// ---------------------------------------------------------------- VarOrder

VarOrder::VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("variable order must be nonempty");
  if (names_.size() > static_cast<size_t>(kMaxVars)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  }
}

int VarOrder::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

VarOrderPtr make_order(std::vector<std::string> names) {
  return std::make_shared<const VarOrder>(std::move(names));
}

// ---------------------------------------------------------------- Monomial

namespace {
constexpr std::uint64_t kHighBits = 0x8000800080008000ULL;
}

void Monomial::set_exponent(int var, unsigned e) {
  if (e > kMaxExponent) throw std::overflow_error("exponent too large");
  std::uint64_t& w = var < 4 ? lo : hi;
  const unsigned shift = 16 * (var & 3);
  w = (w & ~(std::uint64_t{0xffff} << shift)) | (std::uint64_t{e} << shift);
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (int v = 0; v < VarOrder::kMaxVars; ++v) d += exponent(v);
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r{hi + other.hi, lo + other.lo};
  if ((r.hi | r.lo) & kHighBits) throw std::overflow_error("monomial exponent overflow");
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  return (((other.lo | kHighBits) - lo) & kHighBits) == kHighBits &&
         (((other.hi | kHighBits) - hi) & kHighBits) == kHighBits;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  return Monomial{other.hi - hi, other.lo - lo};
}

// -------------------------------------------------------------- Polynomial

namespace {

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  size_t out = 0;
  for (size_t i = 0; i < terms.size();) {
    size_t j = i + 1;
    Rational c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c += terms[j].coeff;
      ++j;
    }
    if (sgn(c) != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Monomial var_power(int var, unsigned e) {
  Monomial m;
  m.set_exponent(var, e);
  return m;
}

}  // namespace

void Polynomial::check_same_order(const Polynomial& o) const {
  if (order_ == o.order_) return;
  if (!order_) return;
  if (!o.order_) return;
  if (!(*order_ == *o.order_)) throw VarOrderMismatch("polynomials use different variable orders");
}

Polynomial Polynomial::constant(VarOrderPtr order, const Rational& c) {
  Polynomial p(std::move(order));
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(VarOrderPtr order, int var) {
  if (var < 0 || var >= order->size()) throw std::out_of_range("variable index out of range");
  Polynomial p(std::move(order));
  p.terms_.push_back(Term{var_power(var, 1), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(VarOrderPtr order, std::vector<Term> terms) {
  Polynomial p(std::move(order));
  sort_and_combine(terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_coefficients(VarOrderPtr order, int var, const std::vector<Polynomial>& coeffs) {
  std::vector<Term> terms;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const Monomial shift = var_power(var, static_cast<unsigned>(i));
    for (const auto& t : coeffs[i].terms()) terms.push_back(Term{t.mono * shift, t.coeff});
  }
  return from_terms(std::move(order), std::move(terms));
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value of a nonconstant polynomial");
  return terms_[0].coeff;
}

int Polynomial::main_var() const {
  if (terms_.empty()) return -1;
  // The leading term carries the largest exponent of the highest variable present.
  const Monomial& m = terms_.front().mono;
  for (int v = VarOrder::kMaxVars - 1; v >= 0; --v) {
    if (m.exponent(v) > 0) return v;
  }
  return -1;
}

unsigned Polynomial::degree(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

unsigned Polynomial::variable_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_) {
    for (int v = 0; v < VarOrder::kMaxVars; ++v) {
      if (t.mono.exponent(v) > 0) mask |= 1u << v;
    }
  }
  return mask;
}

std::vector<Polynomial> Polynomial::coefficients_in(int var) const {
  const unsigned d = degree(var);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(var);
    Monomial m = t.mono;
    m.set_exponent(var, 0);
    buckets[e].push_back(Term{m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(d + 1);
  for (auto& b : buckets) {
    Polynomial c(order_);
    // Removing one variable from a lex-sorted list keeps it sorted only when
    // that variable is the most significant one present.
    if (var == main_var() || b.size() < 2) {
      c.terms_ = std::move(b);
    } else {
      sort_and_combine(b);
      c.terms_ = std::move(b);
    }
    out.push_back(std::move(c));
  }
  if (terms_.empty()) out.assign(1, Polynomial(order_));
  return out;
}

Polynomial Polynomial::coeff_of_degree(int var, unsigned d) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    if (t.mono.exponent(var) == d) {
      Monomial m = t.mono;
      m.set_exponent(var, 0);
      ts.push_back(Term{m, t.coeff});
    }
  }
  return from_terms(order_, std::move(ts));
}

Polynomial Polynomial::leading_coeff(int var) const { return coeff_of_degree(var, degree(var)); }

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(var);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exponent(var, e - 1);
    ts.push_back(Term{m, t.coeff * e});
  }
  return from_terms(order_, std::move(ts));
}

Polynomial Polynomial::substitute(int var, const Rational& value) const {
  if (!involves(var)) return *this;
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  const unsigned d = degree(var);
  std::vector<Rational> powers(d + 1);
  powers[0] = 1;
  for (unsigned i = 1; i <= d; ++i) powers[i] = powers[i - 1] * value;
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(var);
    Monomial m = t.mono;
    m.set_exponent(var, 0);
    ts.push_back(Term{m, t.coeff * powers[e]});
  }
  return from_terms(order_, std::move(ts));
}

Polynomial Polynomial::substitute_many(std::span<const Rational> values, unsigned mask) const {
  const unsigned present = variable_mask() & mask;
  if (present == 0) return *this;
  std::vector<std::vector<Rational>> powers(values.size());
  for (size_t v = 0; v < values.size(); ++v) {
    if (!(present & (1u << v))) continue;
    const unsigned d = degree(static_cast<int>(v));
    powers[v].resize(d + 1);
    powers[v][0] = 1;
    for (unsigned i = 1; i <= d; ++i) powers[v][i] = powers[v][i - 1] * values[v];
  }
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Rational c = t.coeff;
    for (size_t v = 0; v < values.size(); ++v) {
      if (!(present & (1u << v))) continue;
      const unsigned e = m.exponent(static_cast<int>(v));
      if (e == 0) continue;
      c *= powers[v][e];
      m.set_exponent(static_cast<int>(v), 0);
    }
    ts.push_back(Term{m, std::move(c)});
  }
  return from_terms(order_, std::move(ts));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational acc(0);
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    for (int v = 0; v < VarOrder::kMaxVars; ++v) {
      const unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      if (static_cast<size_t>(v) >= point.size()) throw std::out_of_range("evaluate: point too short");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[v].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[v].get_den_mpz_t(), e);
      c *= p;
    }
    acc += c;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(Term{b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_order(o);
  if (!order_) order_ = o.order_;
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_order(o);
  if (!order_) order_ = o.order_;
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_order(b);
  Polynomial r(a.order_ ? a.order_ : b.order_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Polynomial& large = a.terms_.size() <= b.terms_.size() ? b : a;
  // Accumulate one shifted copy of `large` per term of `small`; each copy is
  // already sorted so a pairwise merge keeps everything ordered.
  std::vector<Term> acc;
  for (const auto& t : small.terms_) {
    std::vector<Term> row;
    row.reserve(large.terms_.size());
    for (const auto& u : large.terms_) row.push_back(Term{t.mono * u.mono, t.coeff * u.coeff});
    acc = acc.empty() ? std::move(row) : merge_terms(acc, row, false);
  }
  r.terms_ = std::move(acc);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(order_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(order_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  const int ma = a.main_var(), mb = b.main_var();
  if (ma != mb) return ma < mb;
  const size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono) return a.terms_[i].mono < b.terms_[i].mono;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

size_t Polynomial::hash() const {
  size_t h = 0x9e3779b97f4a7c15ULL ^ terms_.size();
  auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& t : terms_) {
    mix(std::hash<std::uint64_t>{}(t.mono.hi));
    mix(std::hash<std::uint64_t>{}(t.mono.lo));
    const mpz_srcptr num = t.coeff.get_num_mpz_t();
    mix(static_cast<size_t>(mpz_size(num) ? mpz_getlimbn(num, 0) : 0) ^ static_cast<size_t>(mpz_sgn(num) + 1));
    const mpz_srcptr den = t.coeff.get_den_mpz_t();
    mix(static_cast<size_t>(mpz_getlimbn(den, 0)));
  }
  return h;
}

Rational Polynomial::integer_normaliser() const {
  if (terms_.empty()) return Rational(1);
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational c(den_lcm, num_gcd);
  c.canonicalize();
  return c;
}

Polynomial Polynomial::canonical() const {
  if (terms_.empty()) return *this;
  Rational c = integer_normaliser();
  if (sgn(terms_.front().coeff) < 0) c = -c;
  if (c == 1) return *this;
  Polynomial r = *this;
  r *= c;
  return r;
}

Integer Polynomial::norm_length() const {
  Polynomial c = canonical();
  Integer s = 0;
  for (const auto& t : c.terms()) s += abs(t.coeff.get_num());
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (int v = VarOrder::kMaxVars - 1; v >= 0; --v) {
      const unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      if (wrote) os << "*";
      os << (order_ ? order_->name(v) : "x" + std::to_string(v + 1));
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ------------------------------------------------------------------ parsing

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      message_(msg),
      line_(line),
      column_(column) {}

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const VarOrderPtr& order, size_t pos = 0)
      : text_(text), order_(order), pos_(pos) {}

  size_t pos() const { return pos_; }

  Polynomial parse_prefix() { return expr(); }

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(order_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (peek('/') && !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '\\')) {
        ++pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division is only allowed by a nonzero constant");
        acc *= Rational(1 / d.constant_value());
      } else if (starts_factor()) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = factor();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      if (e > Monomial::kMaxExponent) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(order_, Rational(Integer(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = text_.substr(start, pos_ - start);
      const int idx = order_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(order_, idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  VarOrderPtr order_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarOrderPtr& order) {
  ExprParser parser(text, order);
  return parser.parse_all();
}

Polynomial parse_polynomial_prefix(const std::string& text, size_t& pos, const VarOrderPtr& order) {
  ExprParser parser(text, order, pos);
  Polynomial p = parser.parse_prefix();
  pos = parser.pos();
  return p;
}

}  // namespace subcad
