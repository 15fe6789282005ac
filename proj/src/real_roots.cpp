#include "subcad/real_roots.hpp"

#include "subcad/algebra.hpp"
#include "subcad/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace subcad {

// ------------------------------------------------------------------- Coord

bool Coord::is_rational() const { return !root_ || root_->is_exact(); }

Rational Coord::value() const {
  if (!root_) return value_;
  if (!root_->is_exact()) throw std::logic_error("Coord::value on an irrational coordinate");
  return root_->interval().first;
}

std::pair<Rational, Rational> Coord::bounds() const {
  if (!root_) return {value_, value_};
  return root_->interval();
}

double Coord::approx() const {
  auto [lo, hi] = bounds();
  if (root_ && !root_->is_exact() && hi - lo > Rational(1, 1000000000)) {
    root_->refine_to(Rational(1, 1000000000));
    std::tie(lo, hi) = bounds();
  }
  const Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

std::string Coord::to_string() const {
  if (is_rational()) return subcad::to_string(value());
  auto [lo, hi] = bounds();
  std::ostringstream os;
  os << "root of " << root_->defpoly().to_string() << " in (" << subcad::to_string(lo) << ", "
     << subcad::to_string(hi) << ")";
  return os.str();
}

// ----------------------------------------------------------- AlgebraicRoot

AlgebraicRoot::AlgebraicRoot(Polynomial defpoly, SamplePoint base, Rational lo, Rational hi, int sign_lo)
    : defpoly_(std::move(defpoly)), base_(std::move(base)), lo_(std::move(lo)), hi_(std::move(hi)), sign_lo_(sign_lo) {
  if (!(lo_ < hi_)) throw std::invalid_argument("AlgebraicRoot: empty interval");
  if (sign_lo_ == 0) throw std::invalid_argument("AlgebraicRoot: interval endpoint is a root");
}

bool AlgebraicRoot::is_exact() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return exact_;
}

std::pair<Rational, Rational> AlgebraicRoot::interval() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return {lo_, hi_};
}

void AlgebraicRoot::refine_step() {
  std::lock_guard<std::mutex> lock(mutex_);
  if (exact_) return;
  Rational mid = (lo_ + hi_) / 2;
  const int s = sign_at(defpoly_.substitute(level(), mid), base_);
  if (s == 0) {
    exact_ = true;
    lo_ = mid;
    hi_ = mid;
  } else if (s == sign_lo_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

void AlgebraicRoot::refine_to(const Rational& width) {
  while (true) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (exact_ || hi_ - lo_ <= width) return;
    }
    refine_step();
  }
}

void refine(const Coord& c, const Rational& width) {
  if (c.root()) c.root()->refine_to(width);
}

// ------------------------------------------------------- sign determination

namespace {

Polynomial substitute_rationals(const Polynomial& p, const SamplePoint& point) {
  const unsigned mask = p.variable_mask();
  std::vector<Rational> values(point.size());
  unsigned sub = 0;
  for (size_t v = 0; v < point.size(); ++v) {
    if (!(mask & (1u << v))) continue;
    if (point[v].is_rational()) {
      values[v] = point[v].value();
      sub |= 1u << v;
    }
  }
  if (sub == 0) return p;
  return p.substitute_many(values, sub);
}

long log2_inverse_width(const Rational& lo, const Rational& hi) {
  const Rational w = hi - lo;
  if (sgn(w) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(w.get_den_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(w.get_num_mpz_t(), 2));
}

// Interval enclosure of p over the boxes of the algebraic coordinates it uses.
FloatInterval enclose(const Polynomial& p, const SamplePoint& point, mpfr_prec_t prec) {
  const unsigned mask = p.variable_mask();
  std::vector<std::vector<FloatInterval>> powers(point.size());
  for (size_t v = 0; v < point.size(); ++v) {
    if (!(mask & (1u << v))) continue;
    const auto [lo, hi] = point[v].bounds();
    const unsigned d = p.degree(static_cast<int>(v));
    auto& pw = powers[v];
    pw.reserve(d + 1);
    pw.emplace_back(Rational(1), prec);
    FloatInterval x(lo, hi, prec);
    pw.push_back(x);
    for (unsigned e = 2; e <= d; ++e) pw.push_back(x.pow(e));
  }
  FloatInterval acc(prec);
  for (const auto& t : p.terms()) {
    FloatInterval term(t.coeff, prec);
    for (size_t v = 0; v < point.size(); ++v) {
      const unsigned e = t.mono.exponent(static_cast<int>(v));
      if (e > 0) term *= powers[v][e];
    }
    acc += term;
  }
  return acc;
}

mpfr_prec_t working_precision(const Polynomial& p, const SamplePoint& point) {
  const unsigned mask = p.variable_mask();
  long bits = 0;
  for (size_t v = 0; v < point.size(); ++v) {
    if (!(mask & (1u << v))) continue;
    const auto [lo, hi] = point[v].bounds();
    bits = std::max(bits, log2_inverse_width(lo, hi));
  }
  return static_cast<mpfr_prec_t>(64 + 2 * std::max(0L, bits));
}

void check_point_covers(const Polynomial& p, const SamplePoint& point) {
  const unsigned mask = p.variable_mask();
  if (point.size() < 32 && (mask >> point.size()) != 0) {
    throw std::invalid_argument("sign_at: polynomial involves variables beyond the sample point: " + p.to_string());
  }
}

void refine_involved(const Polynomial& p, const SamplePoint& point) {
  const unsigned mask = p.variable_mask();
  for (size_t v = 0; v < point.size(); ++v) {
    if (!(mask & (1u << v)) || point[v].is_rational()) continue;
    const auto [lo, hi] = point[v].bounds();
    point[v].root()->refine_to((hi - lo) / 16);
  }
}

SamplePoint prefix(const SamplePoint& point, int k) { return SamplePoint(point.begin(), point.begin() + k); }

// Drops leading coefficients (in var) that vanish at the point.
Polynomial trim_at(Polynomial q, int var, const SamplePoint& base) {
  while (q.involves(var)) {
    const unsigned d = q.degree(var);
    const Polynomial lc = q.coeff_of_degree(var, d);
    if (sign_at(lc, base) != 0) break;
    Monomial m;
    m.set_exponent(var, d);
    q -= lc.mul_term(m, Rational(1));
  }
  return q;
}

class ChainCache {
 public:
  std::shared_ptr<const SubresultantChain> get(const Polynomial& a, const Polynomial& b, int var) {
    const size_t key = a.hash() * 31 + b.hash() + static_cast<size_t>(var);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto range = map_.equal_range(key);
      for (auto it = range.first; it != range.second; ++it) {
        if (it->second.var == var && it->second.a == a && it->second.b == b) return it->second.chain;
      }
    }
    auto chain = std::make_shared<const SubresultantChain>(subresultant_chain(a, b, var));
    std::lock_guard<std::mutex> lock(mutex_);
    if (map_.size() > 50000) map_.clear();
    map_.emplace(key, Entry{a, b, var, chain});
    return chain;
  }

 private:
  struct Entry {
    Polynomial a;
    Polynomial b;
    int var;
    std::shared_ptr<const SubresultantChain> chain;
  };
  std::mutex mutex_;
  std::unordered_multimap<size_t, Entry> map_;
};

ChainCache& chain_cache() {
  static ChainCache cache;
  return cache;
}

// q has its rational coordinates substituted and involves an algebraic one.
bool zero_test(Polynomial q, const SamplePoint& point) {
  const int j = q.main_var();
  const Coord& c = point.at(static_cast<size_t>(j));
  const SamplePoint base = prefix(point, j);
  if (c.is_rational()) return sign_at(q.substitute(j, c.value()), base) == 0;
  const AlgebraicRoot& root = *c.root();
  const Polynomial& def = root.defpoly();
  q = trim_at(std::move(q), j, base);
  if (!q.involves(j)) return sign_at(q, base) == 0;
  if (q.degree(j) >= def.degree(j)) {
    q = trim_at(prem(q, def, j), j, base);
    if (q.is_zero()) return true;
    if (!q.involves(j)) return sign_at(q, base) == 0;
  }
  const auto chain = chain_cache().get(def, q.canonical(), j);
  const int top = static_cast<int>(q.degree(j));
  int first = top;
  for (int i = 0; i < top; ++i) {
    if (sign_at(chain->principal(i), base) != 0) {
      first = i;
      break;
    }
  }
  if (first == 0) return false;
  const Polynomial& g = chain->s[static_cast<size_t>(first)];
  const auto [lo, hi] = root.interval();
  if (root.is_exact()) return sign_at(q.substitute(j, lo), base) == 0;
  const int s_lo = sign_at(g.substitute(j, lo), base);
  const int s_hi = sign_at(g.substitute(j, hi), base);
  return s_lo != s_hi;
}

}  // namespace

int sign_at(const Polynomial& p, const SamplePoint& point) {
  bool zero_tested = false;
  for (int round = 0;; ++round) {
    const Polynomial q = substitute_rationals(p, point);
    if (q.is_constant()) return sgn(q.constant_value());
    check_point_covers(q, point);
    const auto s = enclose(q, point, working_precision(q, point)).sign();
    if (s) return *s;
    if (round >= 2 && !zero_tested) {
      if (zero_test(q, point)) return 0;
      zero_tested = true;
    }
    refine_involved(q, point);
  }
}

bool is_zero_at(const Polynomial& p, const SamplePoint& point) { return sign_at(p, point) == 0; }

bool nullified_at(const Polynomial& p, const SamplePoint& base) {
  const int k = static_cast<int>(base.size());
  for (const auto& c : p.coefficients_in(k)) {
    if (sign_at(c, base) != 0) return false;
  }
  return true;
}

// --------------------------------------------------------- root isolation

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// ---- exact univariate isolation on integer coefficient vectors

using IntPoly = std::vector<Integer>;  // ascending

void taylor_shift_one(IntPoly& c) {
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
  }
}

int descartes_unit(const IntPoly& c) {
  IntPoly r(c.rbegin(), c.rend());
  taylor_shift_one(r);
  int v = 0, last = 0;
  for (const auto& x : r) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
    if (v > 1) return v;
  }
  return v;
}

Rational eval_rational(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

struct RawRoot {
  bool exact = false;
  Rational lo;
  Rational hi;
};

// Roots of a squarefree integer polynomial (ascending coefficients).
std::vector<RawRoot> isolate_integer(const IntPoly& poly) {
  const size_t d = poly.size() - 1;
  std::vector<RawRoot> out;
  if (d == 0) return out;
  // Cauchy bound rounded up to a power of two.
  Rational bound(0);
  for (size_t i = 0; i < d; ++i) {
    Rational r(abs(poly[i]), abs(poly[d]));
    if (r > bound) bound = r;
  }
  bound += 1;
  unsigned long k = 0;
  Integer b(1);
  while (b <= bound) {
    b *= 2;
    ++k;
  }
  // R(t) = P(-b + 2b t), t in (0, 1).
  IntPoly r = poly;
  {
    // Shift by -b: P(x - b).
    const size_t n = r.size();
    for (size_t i = 0; i + 1 < n; ++i) {
      for (size_t j = n - 1; j > i; --j) r[j - 1] -= b * r[j];
    }
    Integer scale(1);
    const Integer two_b = 2 * b;
    for (size_t i = 0; i < n; ++i) {
      r[i] *= scale;
      scale *= two_b;
    }
  }
  struct Node {
    IntPoly poly;
    Rational lo;
    Rational hi;
  };
  std::vector<Node> stack;
  stack.push_back(Node{std::move(r), Rational(-b), Rational(b)});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const int v = descartes_unit(node.poly);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back(RawRoot{false, node.lo, node.hi});
      continue;
    }
    const Rational mid = (node.lo + node.hi) / 2;
    // left(t) = 2^d R(t/2)
    IntPoly left = node.poly;
    for (size_t i = 0; i <= d; ++i) mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), d - i);
    IntPoly right = left;
    taylor_shift_one(right);
    if (sgn(right[0]) == 0) {
      out.push_back(RawRoot{true, mid, mid});
      // Divide out the root at t = 0 of the right half... keep degree, the
      // Descartes test on the open interval ignores it.
    }
    stack.push_back(Node{std::move(right), mid, node.hi});
    stack.push_back(Node{std::move(left), node.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RawRoot& a, const RawRoot& b) { return a.lo < b.lo; });
  return out;
}

// Shrinks an isolating interval whose endpoints may be roots until they are
// not, using the sign of `p` just right of lo. Returns true when the root
// turned out to be a rational bisection point.
template <typename SignFn, typename SignRightFn>
bool clear_endpoints(Rational& lo, Rational& hi, SignFn sign_of, SignRightFn sign_right_of_lo) {
  int s_lo = sign_of(lo);
  int s_hi = sign_of(hi);
  if (s_lo != 0 && s_hi != 0) return false;
  int right_of_lo = s_lo != 0 ? s_lo : sign_right_of_lo(lo);
  while (s_lo == 0 || s_hi == 0) {
    const Rational mid = (lo + hi) / 2;
    const int s = sign_of(mid);
    if (s == 0) {
      lo = mid;
      hi = mid;
      return true;
    }
    if (s != right_of_lo) {
      hi = mid;
      s_hi = s;
    } else {
      lo = mid;
      s_lo = s;
      right_of_lo = s;
    }
  }
  return false;
}

Polynomial univariate_from_ints(const VarOrderPtr& order, int var, const IntPoly& c) {
  std::vector<Term> ts;
  for (size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    Monomial m;
    m.set_exponent(var, static_cast<unsigned>(i));
    ts.push_back(Term{m, Rational(c[i])});
  }
  return Polynomial::from_terms(order, std::move(ts));
}

// Roots of q(base, x_k) when q involves only x_k.
std::vector<Coord> isolate_univariate_at(const Polynomial& q, const SamplePoint& base) {
  const int k = static_cast<int>(base.size());
  const Polynomial sf = squarefree_part(q);  // canonical, integer coefficients
  const unsigned d = sf.degree(k);
  IntPoly c(d + 1);
  std::vector<Rational> cq(d + 1);
  for (const auto& t : sf.terms()) {
    c[t.mono.exponent(k)] = t.coeff.get_num();
    cq[t.mono.exponent(k)] = t.coeff;
  }
  auto sign_of = [&](const Rational& x) { return sgn(eval_rational(cq, x)); };
  std::vector<Rational> dcq(d);
  for (unsigned i = 1; i <= d; ++i) dcq[i - 1] = cq[i] * i;
  auto sign_right = [&](const Rational& x) { return sgn(eval_rational(dcq, x)); };
  const Integer lc = abs(c[d]);
  const Rational rational_width(1, 2 * lc * lc);

  std::vector<Coord> out;
  for (auto& raw : isolate_integer(c)) {
    if (raw.exact) {
      out.emplace_back(raw.lo);
      continue;
    }
    if (clear_endpoints(raw.lo, raw.hi, sign_of, sign_right)) {
      out.emplace_back(raw.lo);
      continue;
    }
    // A rational root has denominator dividing lc; once the interval is
    // shorter than 1/(2 lc^2) it can only be the simplest rational inside.
    int s_lo = sign_of(raw.lo);
    bool exact = false;
    Rational lo = raw.lo, hi = raw.hi;
    while (hi - lo > rational_width) {
      const Rational mid = (lo + hi) / 2;
      const int s = sign_of(mid);
      if (s == 0) {
        exact = true;
        lo = hi = mid;
        break;
      }
      if (s == s_lo) lo = mid; else hi = mid;
    }
    if (!exact) {
      const Rational cand = simplest_between(lo, hi);
      if (mpz_divisible_p(lc.get_mpz_t(), cand.get_den_mpz_t()) && sign_of(cand) == 0) {
        exact = true;
        lo = cand;
      }
    }
    if (exact) {
      out.emplace_back(lo);
    } else {
      out.emplace_back(std::make_shared<AlgebraicRoot>(univariate_from_ints(q.order(), k, c), base, lo, hi, s_lo));
    }
  }
  return out;
}

// ---- isolation over an algebraic base

using PolyVec = std::vector<Polynomial>;  // ascending coefficients in x_k

void taylor_shift_one(PolyVec& c) {
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = n - 1; j > i; --j) {
      if (!c[j].is_zero()) c[j - 1] += c[j];
    }
  }
}

int descartes_unit(const PolyVec& c, const SamplePoint& base) {
  PolyVec r(c.rbegin(), c.rend());
  taylor_shift_one(r);
  std::vector<int> signs;
  signs.reserve(r.size());
  // Cheap first pass: count with known signs, resolving only ambiguous ones.
  for (const auto& x : r) signs.push_back(x.is_zero() ? 0 : sign_at(x, base));
  return variations(signs);
}

// q(base, x_k) squarefree with nonvanishing leading coefficient.
std::vector<Coord> isolate_tower(const Polynomial& q, const SamplePoint& base) {
  const int k = static_cast<int>(base.size());
  const unsigned d = q.degree(k);
  PolyVec c = q.coefficients_in(k);
  // Bound |roots| by 1 + max |c_i| / |c_d| using enclosures.
  const Polynomial& lead = c[d];
  sign_at(lead, base);  // refines the base until lead is separated from 0
  Rational lead_lower;
  mpfr_prec_t prec = 64;
  for (int attempt = 0;; ++attempt) {
    lead_lower = enclose(lead, base, prec).abs_lower();
    if (sgn(lead_lower) > 0) break;
    refine_involved(lead, base);
    prec += 32;
  }
  Rational bound(0);
  for (unsigned i = 0; i < d; ++i) {
    if (c[i].is_zero()) continue;
    const Rational up = enclose(c[i], base, prec).abs_upper();
    if (up / lead_lower > bound) bound = up / lead_lower;
  }
  bound += 1;
  Integer b(1);
  while (b <= bound) b *= 2;

  auto sign_of = [&](const Rational& x) { return sign_at(q.substitute(k, x), base); };
  const Polynomial dq = q.derivative(k);
  auto sign_right = [&](const Rational& x) { return sign_at(dq.substitute(k, x), base); };

  // R(t) = q(-b + 2b t)
  PolyVec r = c;
  {
    const size_t n = r.size();
    const Rational mb(-b);
    for (size_t i = 0; i + 1 < n; ++i) {
      for (size_t j = n - 1; j > i; --j) {
        if (!r[j].is_zero()) r[j - 1] += r[j] * mb;
      }
    }
    Rational scale(1);
    for (size_t i = 0; i < n; ++i) {
      r[i] *= scale;
      scale *= 2 * b;
    }
  }
  struct Node {
    PolyVec poly;
    Rational lo;
    Rational hi;
  };
  struct Found {
    bool exact;
    Rational lo;
    Rational hi;
  };
  std::vector<Found> found;
  std::vector<Node> stack;
  stack.push_back(Node{std::move(r), Rational(-b), Rational(b)});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const int v = descartes_unit(node.poly, base);
    if (v == 0) continue;
    if (v == 1) {
      found.push_back(Found{false, node.lo, node.hi});
      continue;
    }
    const Rational mid = (node.lo + node.hi) / 2;
    PolyVec left = node.poly;
    Rational scale(1);
    for (size_t i = 0; i <= d; ++i) {
      left[d - i] *= scale;
      scale *= 2;
    }
    PolyVec right = left;
    taylor_shift_one(right);
    if (right[0].is_zero() || sign_at(right[0], base) == 0) found.push_back(Found{true, mid, mid});
    stack.push_back(Node{std::move(right), mid, node.hi});
    stack.push_back(Node{std::move(left), node.lo, mid});
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.lo < b.lo; });
  std::vector<Coord> out;
  const Polynomial def = q.canonical();
  for (auto& f : found) {
    if (f.exact || clear_endpoints(f.lo, f.hi, sign_of, sign_right)) {
      out.emplace_back(f.lo);
      continue;
    }
    out.emplace_back(std::make_shared<AlgebraicRoot>(def, base, f.lo, f.hi, sign_at(def.substitute(k, f.lo), base)));
  }
  return out;
}

// Pseudo-quotient of a by b in var.
Polynomial pquo(const Polynomial& a, const Polynomial& b, int var) {
  const unsigned p = a.degree(var);
  const unsigned q = b.degree(var);
  const Polynomial lcb = b.leading_coeff(var);
  Polynomial r = a;
  Polynomial quo(a.order());
  unsigned steps = p - q + 1;
  while (!r.is_zero() && r.degree(var) >= q) {
    const unsigned dr = r.degree(var);
    Monomial m;
    m.set_exponent(var, dr - q);
    const Polynomial t = r.leading_coeff(var).mul_term(m, Rational(1));
    quo = quo * lcb + t;
    r = r * lcb - t * b;
    --steps;
  }
  if (steps > 0) quo *= lcb.pow(steps);
  return quo;
}

// Squarefree part of q(base, x_k), as a polynomial over the base variables.
Polynomial squarefree_at(const Polynomial& q, const SamplePoint& base) {
  const int k = static_cast<int>(base.size());
  if (q.degree(k) < 2) return q;
  const Polynomial dq = q.derivative(k);
  const auto chain = chain_cache().get(q, dq, k);
  const int top = static_cast<int>(dq.degree(k));
  int first = top;
  for (int i = 0; i < top; ++i) {
    if (sign_at(chain->principal(i), base) != 0) {
      first = i;
      break;
    }
  }
  if (first == 0) return q;
  return pquo(q, chain->s[static_cast<size_t>(first)], k).canonical();
}

std::vector<Coord> roots_at(const Polynomial& p, const SamplePoint& base) {
  const int k = static_cast<int>(base.size());
  Polynomial q = substitute_rationals(p, base);
  if (!q.involves(k)) return {};
  if ((q.variable_mask() & ((1u << k) - 1)) == 0) return isolate_univariate_at(q, base);
  q = trim_at(std::move(q), k, base);
  if (!q.involves(k)) return {};
  return isolate_tower(squarefree_at(q, base), base);
}

}  // namespace

std::vector<Coord> isolate_roots(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  if (f.is_constant()) return {};
  const int v = f.main_var();
  if (f.variable_mask() != (1u << v)) throw std::invalid_argument("isolate_roots: polynomial is not univariate");
  // Roots of a univariate polynomial in x_v are described over a base of
  // placeholder coordinates that the polynomial never touches.
  SamplePoint base(static_cast<size_t>(v), Coord(Rational(0)));
  return isolate_univariate_at(f, base);
}

// -------------------------------------------------------------- comparison

namespace {

// Is the algebraic root a zero of p (a polynomial over base and x_k)?
bool vanishes_at_root(const Polynomial& p, const Coord& root) {
  SamplePoint pt = root.root()->base();
  pt.push_back(root);
  return sign_at(p, pt) == 0;
}

int sign_of_rational_in(const Coord& alg, const Rational& r) {
  const AlgebraicRoot& a = *alg.root();
  return sign_at(a.defpoly().substitute(a.level(), r), a.base());
}

}  // namespace

int compare(const Coord& a, const Coord& b) {
  bool tested = false;
  bool was_a_rat = a.is_rational();
  bool was_b_rat = b.is_rational();
  while (true) {
    const auto [alo, ahi] = a.bounds();
    const auto [blo, bhi] = b.bounds();
    const bool a_rat = a.is_rational();
    const bool b_rat = b.is_rational();
    if (a_rat != was_a_rat || b_rat != was_b_rat) {
      tested = false;
      was_a_rat = a_rat;
      was_b_rat = b_rat;
    }
    if (a_rat && b_rat) {
      const Rational x = a.value(), y = b.value();
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    // Open intervals for algebraic roots, points for rationals.
    if (a_rat ? (b_rat ? alo < blo : alo <= blo) : (b_rat ? ahi <= blo : ahi <= blo)) return -1;
    if (b_rat ? (a_rat ? blo < alo : blo <= alo) : (a_rat ? bhi <= alo : bhi <= alo)) return 1;
    if (!tested) {
      tested = true;
      if (a_rat && !b_rat) {
        if (sign_of_rational_in(b, a.value()) == 0) return 0;
      } else if (b_rat && !a_rat) {
        if (sign_of_rational_in(a, b.value()) == 0) return 0;
      } else if (!a_rat && !b_rat) {
        // Make one interval nest inside the other, then test.
        for (int guard = 0; guard < 4096; ++guard) {
          const auto [l1, h1] = a.bounds();
          const auto [l2, h2] = b.bounds();
          if (h1 <= l2 || h2 <= l1) break;
          if (a.is_rational() || b.is_rational()) break;
          if (l2 <= l1 && h1 <= h2) {
            if (vanishes_at_root(b.root()->defpoly(), a)) return 0;
            break;
          }
          if (l1 <= l2 && h2 <= h1) {
            if (vanishes_at_root(a.root()->defpoly(), b)) return 0;
            break;
          }
          if (h1 - l1 >= h2 - l2) a.root()->refine_step(); else b.root()->refine_step();
        }
        continue;
      }
    }
    if (!a_rat) a.root()->refine_step();
    if (!b_rat) b.root()->refine_step();
  }
}

Rational sector_sample(const Coord* below, const Coord* above) {
  if (!below && !above) return Rational(0);
  if (!below) {
    const auto [lo, hi] = above->bounds();
    const Integer f = floor(lo);
    return Rational(above->is_rational() && f == lo ? Integer(f - 1) : f);
  }
  if (!above) {
    const auto [lo, hi] = below->bounds();
    const Integer c = ceil(hi);
    return Rational(below->is_rational() && c == hi ? Integer(c + 1) : c);
  }
  while (true) {
    const auto [lo, hi1] = below->bounds();
    const auto [lo2, hi] = above->bounds();
    (void)lo;
    (void)hi;
    if (hi1 < lo2) return simplest_strictly_between(hi1, lo2);
    if (hi1 == lo2 && !below->is_rational() && !above->is_rational()) return hi1;
    if (!below->is_rational()) below->root()->refine_step();
    if (!above->is_rational()) above->root()->refine_step();
  }
}

std::vector<TaggedRoot> isolate_roots_of_set(const std::vector<Polynomial>& polys, const SamplePoint& base) {
  std::vector<TaggedRoot> all;
  for (size_t i = 0; i < polys.size(); ++i) {
    for (auto& r : roots_at(polys[i], base)) all.push_back(TaggedRoot{std::move(r), {static_cast<int>(i)}});
  }
  // Insertion into a sorted list using exact comparison; equal roots merge.
  std::vector<TaggedRoot> merged;
  for (auto& r : all) {
    size_t lo = 0, hi = merged.size();
    bool equal = false;
    while (lo < hi) {
      const size_t mid = (lo + hi) / 2;
      const int c = compare(r.root, merged[mid].root);
      if (c == 0) {
        for (int t : r.tags) merged[mid].tags.push_back(t);
        // Prefer a rational representative.
        if (r.root.is_rational() && !merged[mid].root.is_rational()) merged[mid].root = r.root;
        equal = true;
        break;
      }
      if (c < 0) hi = mid; else lo = mid + 1;
    }
    if (!equal) merged.insert(merged.begin() + static_cast<long>(lo), std::move(r));
  }
  for (auto& m : merged) {
    std::sort(m.tags.begin(), m.tags.end());
    m.tags.erase(std::unique(m.tags.begin(), m.tags.end()), m.tags.end());
  }
  return merged;
}

}  // namespace subcad
