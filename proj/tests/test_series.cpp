#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldp/series.hpp"
#include "test_util.hpp"

using namespace ldp;

TEST_CASE("series weights and degree") {
  CHECK(series_weights(1) == validate_weights(2, 3, 3, 5));
  CHECK(series_weights(1).d == 12);
  CHECK(series_weights(7).d == 60);
  CHECK_THROWS_AS(series_weights(0), std::invalid_argument);
}

TEST_CASE("equation terms have degree 8k+4") {
  for (Weight k = 1; k <= 100; ++k) {
    auto terms = series_equation_terms(k);
    REQUIRE(terms.size() == 5);
    for (const auto& t : terms) CHECK(t.degree == 8 * k + 4);
  }
  // spot checks at k=1: x0^6 has degree 2*6 = 12
  auto t1 = series_equation_terms(1);
  CHECK(t1[0].monomial == ExponentVector{{6, 0, 0, 0}});
  CHECK(t1[0].degree == 12);
  CHECK(t1[1].monomial == ExponentVector{{1, 0, 0, 2}});  // x3^2 x0
}

TEST_CASE("intersection numbers") {
  auto s1 = series_intersection_numbers(1);
  CHECK(s1.ci_cj == Rational(1, 5));
  CHECK(s1.ci_o1 == Rational(1, 15));
  CHECK(s1.ci_ci == Rational(-7, 15));

  auto s2 = series_intersection_numbers(2);
  CHECK(s2.ci_cj == Rational(1, 9));

  for (Weight k = 1; k <= 100; ++k) {
    auto s = series_intersection_numbers(k);
    CHECK(s.ci_cj == Rational(1, 4 * k + 1));
    CHECK(s.ci_o1 == Rational(1, (2 * k + 1) * (4 * k + 1)));
    CHECK(s.ci_ci == Rational(-(6 * k + 1), (2 * k + 1) * (4 * k + 1)));
    // the self-intersection identity: C ~ O(2) restricted to X
    CHECK(s.ci_ci + Rational(3) * s.ci_cj == Rational(2) * s.ci_o1);
  }
}

TEST_CASE("log-canonical chain bounds") {
  auto c1 = series_lc_chain(1);
  CHECK(c1.smooth_mult_bound == Rational(4, 5));
  CHECK(c1.smooth_bound_ok);
  CHECK(c1.p3_mult_bound == Rational(2));
  CHECK(c1.ai_bound == Rational(9, 10));
  CHECK(c1.dprime_bound == Rational(1, 3));
  CHECK(c1.lc_total == Rational(37, 30));
  CHECK(c1.lc_total > Rational(1));
  CHECK_FALSE(c1.lc_inequality_holds);  // the flagged k=1 exception

  auto c2 = series_lc_chain(2);
  CHECK(c2.lc_total == Rational(83, 90));
  CHECK(c2.lc_inequality_holds);

  Rational prev = c1.lc_total;
  for (Weight k = 2; k <= 100; ++k) {
    auto c = series_lc_chain(k);
    CHECK(c.smooth_mult_bound == Rational(4, 4 * k + 1));
    CHECK(c.smooth_mult_bound < Rational(1));
    CHECK(c.p3_mult_bound == Rational(2));
    CHECK(c.ai_bound == Rational(1, 2) + Rational(2, 4 * k + 1));
    CHECK(c.dprime_bound == Rational(1, 2 * k + 1));
    CHECK(c.lc_total < prev);  // strictly decreasing in k
    CHECK(c.lc_inequality_holds);
    // equivalent closed form of the final inequality
    CHECK(c.lc_inequality_holds ==
          (Rational(2, 4 * k + 1) + Rational(1, 2 * k + 1) < Rational(1, 2)));
    prev = c.lc_total;
  }
}

TEST_CASE("tiger witness multiplicity is 2 for every k") {
  for (Weight k = 1; k <= 100; ++k) {
    Rational m = series_tiger_witness(k);
    CHECK(m == Rational(2));
    CHECK(m > Rational(1));  // fails the klt multiplicity test
  }
}

TEST_CASE("singular points of a series member") {
  auto p1 = series_singular_points(1);
  CHECK(p1.p3_index == 5);
  CHECK(p1.pa_count == 4);
  CHECK(p1.pa_index == 3);
  CHECK(p1.pa_dprime_bound == Rational(1, 5));

  for (Weight k = 1; k <= 50; ++k) {
    auto p = series_singular_points(k);
    CHECK(p.p3_index == 4 * k + 1);
    CHECK(p.pa_index == 2 * k + 1);
    CHECK(p.pa_dprime_bound == Rational(1, 4 * k + 1));
  }
}

TEST_CASE("full report is assembled consistently") {
  SeriesReport r = series_report(3);
  CHECK(r.k == 3);
  CHECK(r.w == validate_weights(2, 7, 7, 13));
  CHECK(r.equation_terms.size() == 5);
  CHECK(r.intersections.ci_cj == Rational(1, 13));
  CHECK(r.tiger_witness_mult == Rational(2));
  CHECK(r.lc.lc_inequality_holds);
}
