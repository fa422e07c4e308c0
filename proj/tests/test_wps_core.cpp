#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ldp/monomials.hpp"
#include "ldp/weights.hpp"
#include "test_util.hpp"

using namespace ldp;

namespace {

// independent count of monomials of weighted degree m: plain nested loops
long long brute_count(const WeightVector& w, Weight m) {
  if (m < 0) return 0;
  long long n = 0;
  for (Weight b0 = 0; b0 * w.a[0] <= m; ++b0)
    for (Weight b1 = 0; b0 * w.a[0] + b1 * w.a[1] <= m; ++b1)
      for (Weight b2 = 0; b0 * w.a[0] + b1 * w.a[1] + b2 * w.a[2] <= m; ++b2) {
        Weight r = m - b0 * w.a[0] - b1 * w.a[1] - b2 * w.a[2];
        if (r % w.a[3] == 0) ++n;
      }
  return n;
}

// coefficients of prod_i 1/(1 - t^{a_i}) up to degree cap
std::vector<unsigned long long> power_series_counts(const WeightVector& w,
                                                    Weight cap) {
  std::vector<unsigned long long> c(cap + 1, 0);
  c[0] = 1;
  for (Weight a : w.a)
    for (Weight m = a; m <= cap; ++m) c[m] += c[m - a];
  return c;
}

}  // namespace

TEST_CASE("validate_weights canonicalizes and checks triples") {
  WeightVector w = validate_weights(1, 2, 3, 5);
  CHECK(w.a == std::array<Weight, 4>{1, 2, 3, 5});
  CHECK(w.d == 10);
  CHECK(validate_weights(5, 3, 2, 1) == w);

  CHECK_THROWS_AS(validate_weights(2, 2, 2, 3), WeightError);
  try {
    validate_weights(2, 2, 2, 3);
  } catch (const WeightError& e) {
    CHECK(e.kind == WeightErrorKind::TripleGcdViolation);
    CHECK(e.triple == std::array<Weight, 3>{2, 2, 2});
  }
  CHECK_THROWS_AS(validate_weights(0, 1, 1, 1), WeightError);
  CHECK_THROWS_AS(validate_weights(-3, 1, 1, 1), WeightError);
  // pairwise gcd > 1 is allowed when every triple is coprime
  CHECK_NOTHROW(validate_weights(2, 3, 3, 5));
  CHECK_NOTHROW(validate_weights(9, 15, 17, 20));
}

TEST_CASE("validate_weights is permutation invariant") {
  Rng rng(11);
  for (int it = 0; it < 2000; ++it) {
    std::array<Weight, 4> a;
    for (auto& x : a) x = rng.range(1, 40);
    std::array<Weight, 4> p = a;
    for (int i = 3; i > 0; --i)
      std::swap(p[i], p[rng.range(0, i)]);
    bool ok_a = true, ok_p = true;
    WeightVector wa, wp;
    try {
      wa = validate_weights(a);
    } catch (const WeightError&) {
      ok_a = false;
    }
    try {
      wp = validate_weights(p);
    } catch (const WeightError&) {
      ok_p = false;
    }
    CHECK(ok_a == ok_p);
    if (ok_a) CHECK(wa == wp);
  }
}

TEST_CASE("monomials_of_degree: counts and order") {
  WeightVector w1111 = validate_weights(1, 1, 1, 1);
  auto basis = monomials_of_degree(w1111, 3);
  CHECK(basis.size() == 20);  // C(6,3)
  CHECK(std::is_sorted(basis.begin(), basis.end()));

  WeightVector w1123 = validate_weights(1, 1, 2, 3);
  auto b6 = monomials_of_degree(w1123, 6);
  CHECK(static_cast<long long>(b6.size()) == brute_count(w1123, 6));
  for (const auto& e : b6) CHECK(e.weighted_degree(w1123) == 6);

  CHECK(monomials_of_degree(validate_weights(1, 2, 3, 5), -1).empty());
  auto zero = monomials_of_degree(w1123, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == ExponentVector{});
}

TEST_CASE("monomial counts match the power series expansion") {
  Rng rng(12);
  for (int it = 0; it < 25; ++it) {
    WeightVector w = random_valid_weights(rng, 12);
    auto series = power_series_counts(w, 60);
    for (Weight m : {0, 1, 7, 23, 60}) {
      auto basis = monomials_of_degree(w, m);
      CHECK(basis.size() == series[m]);
    }
  }
}

TEST_CASE("has_monomial_supported_on") {
  CHECK(has_monomial_supported_on(validate_weights(3, 5, 7, 11), 25, {2, 3}));
  CHECK_FALSE(
      has_monomial_supported_on(validate_weights(1, 2, 2, 3), 7, {1, 2}));
  CHECK(has_monomial_supported_on(validate_weights(1, 1, 1, 1), 3, {0}));
  CHECK_FALSE(has_monomial_supported_on(validate_weights(1, 1, 1, 1), -2, {0}));
  CHECK_THROWS_AS(
      has_monomial_supported_on(validate_weights(1, 1, 1, 1), 3, 0u),
      std::invalid_argument);

  // subsets agree with a scan over the full basis
  Rng rng(13);
  for (int it = 0; it < 200; ++it) {
    WeightVector w = random_valid_weights(rng, 9);
    Weight m = rng.range(0, 40);
    unsigned mask = static_cast<unsigned>(rng.range(1, 15));
    bool expected = false;
    for (const auto& e : monomials_of_degree(w, m)) {
      bool inside = true;
      for (int i = 0; i < 4; ++i)
        if (e.b[i] != 0 && !(mask & (1u << i))) inside = false;
      expected = expected || inside;
    }
    CHECK(has_monomial_supported_on(w, m, mask) == expected);
  }
}

TEST_CASE("solve_two_term finds minimal solutions") {
  Rng rng(14);
  for (int it = 0; it < 2000; ++it) {
    Weight a = rng.range(1, 60), b = rng.range(1, 60);
    Weight t = rng.range(0, 400);
    auto got = solve_two_term(a, b, t);
    // brute scan
    std::optional<std::pair<Weight, Weight>> expected;
    for (Weight x = 0; x * a <= t && !expected; ++x)
      if ((t - x * a) % b == 0) expected = {x, (t - x * a) / b};
    CHECK(got == expected);
    if (got) CHECK(got->first * a + got->second * b == t);
  }
}

TEST_CASE("intersection_degree: values, symmetry, bilinearity") {
  // series member k=1
  WeightVector w = validate_weights(2, 3, 3, 5);
  CHECK(intersection_degree(w, 1, 1) == Rational(2, 15));
  CHECK(intersection_degree(w, 0, 7) == Rational(0));

  // series identity (C . O(1)) pattern: m1=1, m2=2(2k+1) gives 4/(4k+1)
  for (Weight k = 1; k <= 20; ++k) {
    WeightVector wk = validate_weights(2, 2 * k + 1, 2 * k + 1, 4 * k + 1);
    CHECK(intersection_degree(wk, 1, 2 * (2 * k + 1)) ==
          Rational(4, 4 * k + 1));
  }

  Rng rng(15);
  for (int it = 0; it < 500; ++it) {
    WeightVector v = random_valid_weights(rng, 30);
    Weight m1 = rng.range(0, 50), m2 = rng.range(0, 50), m3 = rng.range(0, 50);
    CHECK(intersection_degree(v, m1, m2) == intersection_degree(v, m2, m1));
    CHECK(intersection_degree(v, m1 + m3, m2) ==
          intersection_degree(v, m1, m2) + intersection_degree(v, m3, m2));
  }
  CHECK_THROWS_AS(intersection_degree(w, -1, 1), std::invalid_argument);
}
