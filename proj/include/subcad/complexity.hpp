#pragma once

#include "subcad/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subcad {

struct ComplexityParams {
  long n = 2;
  long m_A = 3;
  long m_E = 1;
  long m_AminusE = 2;
  long d_A = 3;
  long d_E = 2;
  long l_A = 2;
  long l_E = 2;

  /// Throws std::invalid_argument unless every field is positive (m_AminusE
  /// may be 0), m_E <= m_A, m_AminusE = m_A - m_E and d_E <= d_A.
  void validate() const;
};

/// The figure parameters: d_A 3, d_E 2, m_A 3, m_E 1, m_AminusE 2, l_A 2, l_E 2.
ComplexityParams figure7_params(long n);

/// Parses "n=3,d_A=3,m_E=1". Unnamed fields keep their figure values;
/// m_AminusE defaults to m_A - m_E.
ComplexityParams parse_params(const std::string& text);

enum class BoundKind {
  root_sep_lower,  // reciprocal of the root separation bound, rounded up
  heindel,
  isolate_all,
  refine_all,
  uk_ck,
  collins_full,
  mccallum_1layer,
  pEA_size,
  pEA_degree,
  pEA_norm,
  n1_collins,
  n1_mccallum,
  final_lift,
  total_variety_collins,
  total_lv_mccallum,
};

const std::vector<BoundKind>& all_bound_kinds();
std::string to_string(BoundKind k);
BoundKind parse_bound_kind(const std::string& name);

/// The bound evaluated as written, over the integers. Halves are kept exact
/// until a final ceiling. Generic d, m, l are d_A, m_A, l_A. Throws
/// std::overflow_error when the result would exceed about 2^32 bits.
Integer bound_value(BoundKind kind, const ComplexityParams& p);

/// The intermediate degree bound max(2 d_E^2, 2 d_AminusE^2), taking
/// d_AminusE = d_A. bound_value(pEA_degree) is the final d_A^2.
Integer pEA_degree_max_form(const ComplexityParams& p);

/// The full Collins bound for n - 1 variables with degree 2 d_A^2, size
/// |P_E(A)| and norm length 16 d_A^4 l_A substituted, before simplification.
/// Likewise for the 1-layered bound.
Integer n1_collins_substituted(const ComplexityParams& p);
Integer n1_mccallum_substituted(const ComplexityParams& p);

/// ln ln v, or nothing when v < e^e.
std::optional<double> log_log(const Integer& v);

struct Figure7Row {
  long n = 0;
  /// CAD, variety sub-CAD, 1-layered sub-CAD, 1-LV sub-CAD.
  double cad = 0, variety = 0, layered = 0, lv = 0;
};

struct Figure7Table {
  std::vector<Figure7Row> rows;
  std::vector<std::string> notes;  // omitted rows
};

Figure7Table figure7_table(const ComplexityParams& p, long n_from, long n_to);
std::string figure7_csv(const Figure7Table& t);

}  // namespace subcad
