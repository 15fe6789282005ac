#pragma once

#include "subcad/polynomial.hpp"

#include <optional>
#include <vector>

namespace subcad {

/// Pseudo-remainder R with lc_v(B)^(deg A - deg B + 1) * A = Q * B + R.
/// Returns A unchanged when deg_v A < deg_v B.
Polynomial prem(const Polynomial& a, const Polynomial& b, int var);

/// a / b when b divides a exactly in Q[x], nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);
/// a / b, throwing std::logic_error when the division is not exact.
Polynomial divide_or_throw(const Polynomial& a, const Polynomial& b);

/// Subresultants S_0 .. S_q of A and B with respect to var, where
/// deg A = p > q = deg B >= 0. S[q] = lc(B)^(p-q-1) B; entries may be zero.
struct SubresultantChain {
  int var = -1;
  std::vector<Polynomial> s;

  /// Coefficient of var^j in S_j (zero when S_j is defective).
  Polynomial principal(int j) const;
  int size() const { return static_cast<int>(s.size()); }
};

SubresultantChain subresultant_chain(const Polynomial& a, const Polynomial& b, int var);

/// Determinant of the Sylvester matrix of f and g in var. At least one of
/// them must have positive degree in var.
Polynomial resultant(const Polynomial& f, const Polynomial& g, int var);

/// (-1)^(d(d-1)/2) res(f, f') / lc(f). Requires deg_var f >= 2.
Polynomial discriminant(const Polynomial& f, int var);

/// Coefficients in var, highest degree first.
std::vector<Polynomial> coefficients(const Polynomial& f, int var);

/// Greatest common divisor, normalised by canonical(). gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// gcd of the coefficients of f with respect to var (canonical).
Polynomial content(const Polynomial& f, int var);
/// f / content(f, var), canonical.
Polynomial primitive_part(const Polynomial& f, int var);

/// Squarefree part with respect to the main variable of a polynomial that is
/// primitive in that variable.
Polynomial squarefree_part(const Polynomial& f);

/// Pairwise coprime, squarefree, canonical polynomials, each primitive in its
/// main variable, such that every input is a constant times a product of
/// powers of basis elements. Constants are dropped. Output is sorted.
std::vector<Polynomial> squarefree_basis(const std::vector<Polynomial>& polys);

/// Sorts by the polynomial total order and removes duplicates.
void sort_unique(std::vector<Polynomial>& polys);

}  // namespace subcad
