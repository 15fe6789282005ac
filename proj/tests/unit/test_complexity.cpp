#include "doctest.h"

#include "subcad/complexity.hpp"

#include <cmath>

using namespace subcad;

TEST_CASE("parameters") {
  auto p = parse_params("n=3,d_A=4");
  CHECK(p.n == 3);
  CHECK(p.d_A == 4);
  CHECK(p.m_AminusE == 2);
  CHECK(parse_params("m_A=5,m_E=2").m_AminusE == 3);
  CHECK_THROWS_AS(parse_params("n=0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("d_E=5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("q=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_params("m_A=3,m_E=1,m_AminusE=1"), std::invalid_argument);
  for (auto k : all_bound_kinds()) CHECK(parse_bound_kind(to_string(k)) == k);
}

TEST_CASE("small closed values") {
  ComplexityParams p;
  p.n = 2;
  p.m_A = 2;
  p.m_E = 1;
  p.m_AminusE = 1;
  p.d_A = 1;
  p.d_E = 1;
  // (1/2)(2 + 1 + 2 - 1) = 2; with d_E = 2: (1/2)(4 + 1 + 2 - 1) = 3.
  CHECK(bound_value(BoundKind::pEA_size, p) == 2);
  p.d_A = 2;
  p.d_E = 2;
  CHECK(bound_value(BoundKind::pEA_size, p) == 3);
  p.m_A = 3;
  p.m_AminusE = 2;
  CHECK(bound_value(BoundKind::pEA_size, p) == 4);

  auto f = figure7_params(2);
  CHECK(bound_value(BoundKind::root_sep_lower, parse_params("d_A=3,l_A=2")) == 10061);
  CHECK(bound_value(BoundKind::pEA_degree, f) == 9);
  CHECK(pEA_degree_max_form(f) == 18);
}

TEST_CASE("bounds grow with every parameter") {
  const char* fields[] = {"n", "m_A", "d_A", "l_A"};
  for (auto k : all_bound_kinds()) {
    for (long n = 2; n <= 3; ++n) {
      for (long d = 2; d <= 3; ++d) {
        ComplexityParams base = figure7_params(n);
        base.d_A = d;
        const Integer v = bound_value(k, base);
        CHECK(v > 0);
        for (const char* field : fields) {
          ComplexityParams up = base;
          if (std::string(field) == "n") up.n += 1;
          if (std::string(field) == "m_A") {
            up.m_A += 1;
            up.m_AminusE += 1;
          }
          if (std::string(field) == "d_A") up.d_A += 1;
          if (std::string(field) == "l_A") up.l_A += 1;
          INFO(to_string(k) << " " << field << " n=" << n << " d=" << d);
          CHECK(bound_value(k, up) >= v);
        }
      }
    }
  }
}

TEST_CASE("substituted n1 bounds sit below their simplified forms") {
  for (long n = 2; n <= 6; ++n) {
    auto p = figure7_params(n);
    INFO("n=" << n);
    CHECK(n1_collins_substituted(p) <= bound_value(BoundKind::n1_collins, p));
    CHECK(n1_mccallum_substituted(p) <= bound_value(BoundKind::n1_mccallum, p));
    CHECK(bound_value(BoundKind::total_variety_collins, p) ==
          bound_value(BoundKind::n1_collins, p) + bound_value(BoundKind::final_lift, p));
  }
}

TEST_CASE("figure table ordering") {
  auto t = figure7_table(figure7_params(1), 1, 8);
  CHECK(!t.rows.empty());
  for (const auto& r : t.rows) {
    INFO("n=" << r.n);
    CHECK(r.cad > r.variety);
    CHECK(r.variety > r.layered);
    CHECK(r.layered > r.lv);
    CHECK(std::isfinite(r.cad));
  }
  for (size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i].cad > t.rows[i - 1].cad);
  auto csv = figure7_csv(t);
  CHECK(csv.rfind("n,cad,variety,layered1,lv1\n", 0) == 0);
}

TEST_CASE("log_log") {
  CHECK(!log_log(Integer(15)));
  CHECK(log_log(Integer(16)));
  CHECK(*log_log(Integer(1000000)) == doctest::Approx(std::log(std::log(1e6))));
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 100000);
  CHECK(*log_log(big) == doctest::Approx(std::log(100000 * std::log(2.0))));
}
