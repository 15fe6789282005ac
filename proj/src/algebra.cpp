#include "subcad/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcad {

namespace {

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.order(), Rational(1)); }

}  // namespace

Polynomial prem(const Polynomial& a, const Polynomial& b, int var) {
  if (b.is_zero()) throw std::domain_error("prem: division by zero");
  const unsigned p = a.degree(var);
  const unsigned q = b.degree(var);
  if (a.is_zero() || p < q) return a;
  const Polynomial lcb = b.leading_coeff(var);
  if (q == 0) return Polynomial(a.order());
  // Work on the coefficient vector so each elimination step touches only the
  // coefficients that change.
  std::vector<Polynomial> r = a.coefficients_in(var);
  const std::vector<Polynomial> bc = b.coefficients_in(var);
  unsigned steps = p - q + 1;
  int deg = static_cast<int>(p);
  while (deg >= static_cast<int>(q)) {
    if (r[deg].is_zero()) {
      --deg;
      continue;
    }
    const Polynomial lead = r[deg];
    const unsigned shift = static_cast<unsigned>(deg) - q;
    for (int i = 0; i < deg; ++i) {
      Polynomial t = lcb.is_constant() && lcb.constant_value() == 1 ? r[i] : lcb * r[i];
      if (i >= static_cast<int>(shift) && !bc[i - shift].is_zero()) t -= lead * bc[i - shift];
      r[i] = std::move(t);
    }
    r[deg] = Polynomial(a.order());
    --deg;
    --steps;
  }
  r.resize(q);
  Polynomial out = Polynomial::from_coefficients(a.order(), var, r);
  if (steps > 0) out *= lcb.pow(steps);
  return out;
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (a.is_zero()) return a;
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  for (int v = 0; v < VarOrder::kMaxVars; ++v) {
    if (b.degree(v) > a.degree(v)) return std::nullopt;
  }
  const Term& lead = b.terms().front();
  std::vector<Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Term& lt = r.terms().front();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    const Monomial m = lead.mono.quotient_of(lt.mono);
    const Rational c = lt.coeff / lead.coeff;
    quotient.push_back(Term{m, c});
    r -= b.mul_term(m, c);
  }
  return Polynomial::from_terms(a.order(), std::move(quotient));
}

Polynomial divide_or_throw(const Polynomial& a, const Polynomial& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::logic_error("inexact division of " + a.to_string() + " by " + b.to_string());
  return *q;
}

Polynomial SubresultantChain::principal(int j) const { return s.at(static_cast<size_t>(j)).coeff_of_degree(var, static_cast<unsigned>(j)); }

SubresultantChain subresultant_chain(const Polynomial& a, const Polynomial& b, int var) {
  const int p = static_cast<int>(a.degree(var));
  const int q = static_cast<int>(b.degree(var));
  if (b.is_zero() || p <= q) throw std::invalid_argument("subresultant_chain: need deg A > deg B and B nonzero");
  SubresultantChain chain;
  chain.var = var;
  chain.s.assign(static_cast<size_t>(q) + 1, Polynomial(a.order()));
  const Polynomial lcb = b.leading_coeff(var);
  chain.s[q] = p - q - 1 > 0 ? lcb.pow(static_cast<unsigned>(p - q - 1)) * b : b;
  if (q == 0) return chain;
  Polynomial s = lcb.pow(static_cast<unsigned>(p - q));
  Polynomial x = b;
  Polynomial y = prem(a, -b, var);
  while (!y.is_zero()) {
    const int d = static_cast<int>(x.degree(var));
    const int e = static_cast<int>(y.degree(var));
    chain.s[d - 1] = y;
    const int delta = d - e;
    Polynomial c = y;
    if (delta > 1) {
      const Polynomial lcy = y.leading_coeff(var);
      c = divide_or_throw(lcy.pow(static_cast<unsigned>(delta - 1)) * y, s.pow(static_cast<unsigned>(delta - 1)));
      chain.s[e] = c;
    }
    if (e == 0) break;
    const Polynomial denom = s.pow(static_cast<unsigned>(delta)) * x.leading_coeff(var);
    y = divide_or_throw(prem(x, -y, var), denom);
    x = std::move(c);
    s = x.leading_coeff(var);
  }
  return chain;
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, int var) {
  const unsigned p = f.degree(var);
  const unsigned q = g.degree(var);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.order() ? f.order() : g.order());
  if (p == 0 && q == 0) throw std::invalid_argument("resultant: both polynomials are constant in the variable");
  if (q == 0) return g.pow(p);
  if (p == 0) return f.pow(q);
  if (p < q) {
    Polynomial r = resultant(g, f, var);
    return (p * q) % 2 ? -r : r;
  }
  if (p == q) {
    // Res(f, g) = (-1)^(pq + rq) Res(R, g) / lc(g)^r with R = prem(f, g).
    const Polynomial r = prem(f, g, var);
    if (r.is_zero()) return r;
    const unsigned rd = r.degree(var);
    Polynomial rg = resultant(r, g, var);
    if (rd > 0) rg = divide_or_throw(rg, g.leading_coeff(var).pow(rd));
    return (p * q + rd * q) % 2 ? -rg : rg;
  }
  return subresultant_chain(f, g, var).s[0];
}

Polynomial discriminant(const Polynomial& f, int var) {
  const unsigned d = f.degree(var);
  if (d < 2) throw std::invalid_argument("discriminant: degree must be at least 2");
  Polynomial r = divide_or_throw(subresultant_chain(f, f.derivative(var), var).s[0], f.leading_coeff(var));
  return (d * (d - 1) / 2) % 2 ? -r : r;
}

std::vector<Polynomial> coefficients(const Polynomial& f, int var) {
  std::vector<Polynomial> c = f.coefficients_in(var);
  std::reverse(c.begin(), c.end());
  return c;
}

namespace {

// gcd of two polynomials that are primitive in var and both involve var.
Polynomial primitive_gcd(Polynomial a, Polynomial b, int var) {
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  if (a.degree(var) == b.degree(var)) {
    Polynomial r = prem(a, b, var);
    if (r.is_zero()) return b.canonical();
    if (!r.involves(var)) return one_like(a);
    a = std::move(b);
    b = primitive_part(r, var);
  }
  const SubresultantChain chain = subresultant_chain(a, b, var);
  for (int j = 0; j < chain.size(); ++j) {
    if (chain.s[j].is_zero()) continue;
    if (j == 0) return one_like(a);
    return primitive_part(chain.s[j], var);
  }
  return one_like(a);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  if (a.is_constant() || b.is_constant()) return one_like(a);
  const int va = a.main_var();
  const int vb = b.main_var();
  if (va != vb) {
    const Polynomial& hi = va > vb ? a : b;
    const Polynomial& lo = va > vb ? b : a;
    return gcd(content(hi, hi.main_var()), lo);
  }
  const Polynomial ca = content(a, va);
  const Polynomial cb = content(b, va);
  const Polynomial c = gcd(ca, cb);
  const Polynomial pa = divide_or_throw(a, ca);
  const Polynomial pb = divide_or_throw(b, cb);
  const Polynomial g = primitive_gcd(pa, pb, va);
  return (c * g).canonical();
}

Polynomial content(const Polynomial& f, int var) {
  if (!f.involves(var)) return f.canonical();
  const std::vector<Polynomial> coeffs = f.coefficients_in(var);
  // Start from the sparsest coefficient; it bounds the gcd quickly.
  std::vector<const Polynomial*> order;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) order.push_back(&c);
  }
  std::sort(order.begin(), order.end(), [](const Polynomial* x, const Polynomial* y) {
    return x->term_count() < y->term_count();
  });
  Polynomial g;
  bool first = true;
  for (const Polynomial* c : order) {
    if (c->is_constant()) return one_like(f);
    g = first ? c->canonical() : gcd(g, *c);
    first = false;
    if (g.is_constant()) return one_like(f);
  }
  return g;
}

Polynomial primitive_part(const Polynomial& f, int var) {
  if (f.is_zero()) return f;
  const Polynomial c = content(f, var);
  if (c.is_constant()) return f.canonical();
  return divide_or_throw(f, c).canonical();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_constant()) return one_like(f);
  const int v = f.main_var();
  const Polynomial g = gcd(f, f.derivative(v));
  if (g.is_constant()) return f.canonical();
  return divide_or_throw(f, g).canonical();
}

namespace {

// Distinct nonconstant factors of the squarefree decomposition of f, which is
// primitive in its main variable.
std::vector<Polynomial> squarefree_factors(const Polynomial& f) {
  const int v = f.main_var();
  Polynomial w = gcd(f, f.derivative(v));
  if (w.is_constant()) return {f.canonical()};
  Polynomial u = divide_or_throw(f, w);
  std::vector<Polynomial> out;
  while (!u.is_constant()) {
    const Polynomial y = w.is_constant() ? one_like(f) : gcd(u, w);
    const Polynomial factor = divide_or_throw(u, y);
    if (!factor.is_constant()) out.push_back(factor.canonical());
    if (!w.is_constant()) w = divide_or_throw(w, y);
    u = y;
  }
  return out;
}

void collect_pieces(const Polynomial& f, std::vector<Polynomial>& pieces) {
  if (f.is_constant()) return;
  const int v = f.main_var();
  const Polynomial c = content(f, v);
  Polynomial p = f;
  if (!c.is_constant()) {
    collect_pieces(c, pieces);
    p = divide_or_throw(f, c);
  }
  for (auto& q : squarefree_factors(p)) pieces.push_back(std::move(q));
}

}  // namespace

void sort_unique(std::vector<Polynomial>& polys) {
  std::sort(polys.begin(), polys.end());
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

std::vector<Polynomial> squarefree_basis(const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> queue;
  for (const auto& f : polys) collect_pieces(f, queue);
  sort_unique(queue);
  std::reverse(queue.begin(), queue.end());
  std::vector<Polynomial> basis;
  while (!queue.empty()) {
    Polynomial a = std::move(queue.back());
    queue.pop_back();
    if (a.is_constant()) continue;
    bool split = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].main_var() != a.main_var()) continue;
      if (basis[i] == a) {
        split = true;
        break;
      }
      const Polynomial g = gcd(a, basis[i]);
      if (g.is_constant()) continue;
      const Polynomial b = basis[i];
      basis.erase(basis.begin() + static_cast<long>(i));
      queue.push_back(g);
      const Polynomial bq = divide_or_throw(b, g);
      if (!bq.is_constant()) queue.push_back(bq.canonical());
      const Polynomial aq = divide_or_throw(a, g);
      if (!aq.is_constant()) queue.push_back(aq.canonical());
      split = true;
      break;
    }
    if (!split) basis.push_back(a.canonical());
  }
  sort_unique(basis);
  return basis;
}

}  // namespace subcad
