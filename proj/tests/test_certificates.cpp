#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <vector>

#include "ldp/certificates.hpp"
#include "test_util.hpp"

using namespace ldp;

TEST_CASE("multiplicity bound specializes to d/(a0 a1) and d/(a0 a2)") {
  // surface case: n = 3, 1-cycle of degree d/(a0a1a2a3)
  for (auto a : std::vector<std::array<Weight, 4>>{
           {3, 3, 5, 5}, {5, 14, 17, 21}, {1, 2, 3, 5}, {2, 3, 3, 5}}) {
    WeightVector w = validate_weights(a);
    Rational deg(BigInt(w.d), BigInt(a[0]) * BigInt(a[1]) * BigInt(a[2]) *
                                  BigInt(a[3]));
    CHECK(multiplicity_bound(w.a, 1, deg, false) ==
          Rational(BigInt(w.d), BigInt(a[0]) * BigInt(a[1])));
    CHECK(multiplicity_bound(w.a, 1, deg, true) ==
          Rational(BigInt(w.d), BigInt(a[0]) * BigInt(a[2])));
  }

  // unweighted space: the bound is the degree itself
  std::array<Weight, 4> ones{1, 1, 1, 1};
  CHECK(multiplicity_bound(ones, 1, Rational(7, 2), false) == Rational(7, 2));
  CHECK(multiplicity_bound(ones, 2, Rational(7, 2), true) == Rational(7, 2));

  // general n: five weights, 2-cycle
  std::array<Weight, 5> five{1, 2, 3, 4, 5};
  CHECK(multiplicity_bound(five, 2, Rational(1), false) ==
        Rational(5 * 4 * 3));
  CHECK(multiplicity_bound(five, 2, Rational(1), true) == Rational(5 * 4 * 2));
}

TEST_CASE("multiplicity bound rejects bad dimensions") {
  std::array<Weight, 4> a{1, 2, 3, 4};
  CHECK_THROWS_AS(multiplicity_bound(a, 3, Rational(1)), DimensionOutOfRange);
  CHECK_THROWS_AS(multiplicity_bound(a, -1, Rational(1)), DimensionOutOfRange);
  std::array<Weight, 4> unsorted{2, 1, 3, 4};
  CHECK_THROWS_AS(multiplicity_bound(unsorted, 1, Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(multiplicity_bound(a, 1, Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("strengthened bound never exceeds the plain bound") {
  Rng rng(31);
  for (int it = 0; it < 2000; ++it) {
    WeightVector w = random_valid_weights(rng, 50);
    Rational deg(rng.range(1, 100), rng.range(1, 100));
    int dim = static_cast<int>(rng.range(0, 2));
    CHECK(multiplicity_bound(w.a, dim, deg, true) <=
          multiplicity_bound(w.a, dim, deg, false));
  }
}

TEST_CASE("line containment test") {
  CHECK(line_not_contained(validate_weights(3, 5, 7, 14)));   // x2^4
  CHECK(line_not_contained(validate_weights(3, 5, 7, 11)));   // x2^2 x3
  CHECK(line_not_contained(validate_weights(1, 1, 1, 1)));    // x3^3
  CHECK_FALSE(line_not_contained(validate_weights(1, 1, 5, 7)));  // 5b+7c=13
}

TEST_CASE("tiger certificates on table rows") {
  auto plain = tiger_certificate(validate_weights(5, 14, 17, 21));
  CHECK(plain.certified());
  CHECK(plain.route == CertificateRoute::PlainBound);
  CHECK(plain.checks.front().to_string() == "56 <= 5*14");

  auto strengthened = tiger_certificate(validate_weights(3, 3, 5, 5));
  CHECK(strengthened.certified());
  CHECK(strengthened.route == CertificateRoute::StrengthenedBound);
  CHECK(strengthened.line_free == true);
  CHECK(strengthened.checks.back().to_string() == "15 <= 3*5");

  auto unknown = tiger_certificate(validate_weights(2, 3, 5, 9));
  CHECK_FALSE(unknown.certified());
  CHECK_FALSE(unknown.route.has_value());
}

TEST_CASE("ke certificates on table rows") {
  auto strengthened = ke_certificate(validate_weights(3, 5, 7, 11));
  CHECK(strengthened.certified());
  CHECK(strengthened.route == CertificateRoute::StrengthenedBound);
  CHECK(strengthened.checks.back().to_string() == "2*25 < 3*3*7");

  auto unknown = ke_certificate(validate_weights(1, 3, 5, 7));
  CHECK_FALSE(unknown.certified());

  auto plain = ke_certificate(validate_weights(9, 15, 17, 20));
  CHECK(plain.certified());
  CHECK(plain.route == CertificateRoute::PlainBound);
  CHECK(plain.checks.front().to_string() == "2*60 < 3*9*15");
}

TEST_CASE("certified results re-evaluate to true") {
  Rng rng(32);
  for (int it = 0; it < 2000; ++it) {
    WeightVector w = random_valid_weights(rng, 200);
    for (const CertificateResult& c :
         {tiger_certificate(w), ke_certificate(w)}) {
      if (!c.certified()) continue;
      const Comparison& final = c.checks.back();
      CHECK(final.holds);
      if (final.relation == "<")
        CHECK(final.lhs_value < final.rhs_value);
      else
        CHECK(final.lhs_value <= final.rhs_value);
    }
  }
}

TEST_CASE("no-tiger implies kaehler-einstein") {
  Rng rng(33);
  for (int it = 0; it < 5000; ++it) {
    WeightVector w = random_valid_weights(rng, 300);
    if (tiger_certificate(w).certified()) CHECK(ke_certificate(w).certified());
  }
}

TEST_CASE("classify_row assembles verdicts") {
  // series member: the tiger witness and series proof take over
  ClassificationRow series = classify_row(validate_weights(2, 3, 3, 5), 1);
  CHECK(series.tiger == TigerStatus::HasTigerWitness);
  CHECK(series.ke == KEStatus::SeriesProof);
  CHECK(series.series_k == 1);

  // strengthened tiger route, plain ke route
  ClassificationRow r = classify_row(validate_weights(7, 11, 27, 44));
  CHECK(r.tiger == TigerStatus::NoTigerCertified);
  CHECK(r.tiger_cert.route == CertificateRoute::StrengthenedBound);
  CHECK(r.ke == KEStatus::Certified);
  CHECK(r.ke_cert.route == CertificateRoute::PlainBound);

  // the engine reaches no verdict for the small classical rows
  ClassificationRow u = classify_row(validate_weights(1, 2, 3, 5));
  CHECK(u.tiger == TigerStatus::Unknown);
  CHECK(u.ke == KEStatus::Unknown);
}
