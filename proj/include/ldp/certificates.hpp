#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldp/monomials.hpp"
#include "ldp/rational.hpp"
#include "ldp/weights.hpp"

namespace ldp {

// Sufficient-condition certificates in exact arithmetic.  The engine claims
// "no tiger" when d <= a0*a1, and a Kaehler-Einstein metric when
// 2d < 3*a0*a1; when the general hypersurface provably misses the line
// (x0 = x1 = 0), a1 may be replaced by a2 in both bounds.  Every verdict
// carries the integer comparison it rests on, so reports can be re-checked
// by hand.

class DimensionOutOfRange : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Multiplicity bound for a cycle in a weighted projective n-space: with
// weights a_0 <= ... <= a_n and Z of dimension `cycle_dim` and degree
// (Z . O(1)^dim) = cycle_degree, every orbifold-chart multiplicity of Z is
// at most (a_n ... a_{n-dim}) * cycle_degree.  If Z is not the smallest
// coordinate linear subspace, the factor a_{n-dim} improves to a_{n-dim-1}.
inline Rational multiplicity_bound(std::span<const Weight> weights,
                                   int cycle_dim, const Rational& cycle_degree,
                                   bool strengthened = false) {
  const int n = static_cast<int>(weights.size()) - 1;
  if (n < 1) throw DimensionOutOfRange("need at least two weights");
  if (cycle_dim < 0 || cycle_dim >= n)
    throw DimensionOutOfRange("cycle dimension must satisfy 0 <= dim < n");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1)
      throw std::invalid_argument("weights must be positive");
    if (i && weights[i] < weights[i - 1])
      throw std::invalid_argument("weights must be sorted ascending");
  }
  if (!(cycle_degree > Rational(0)))
    throw std::invalid_argument("cycle degree must be positive");

  BigInt prod(1);
  for (int i = n; i > n - cycle_dim; --i) prod *= BigInt(weights[i]);
  prod *= BigInt(weights[strengthened ? n - cycle_dim - 1 : n - cycle_dim]);
  return Rational(prod) * cycle_degree;
}

// True iff the general degree-d hypersurface misses the line (x0 = x1 = 0),
// i.e. its equation contains a monomial in x2, x3 only.
inline bool line_not_contained(const WeightVector& w) {
  return has_monomial_supported_on(w, w.d, {2, 3});
}

enum class CertificateVerdict { Certified, Unknown };
enum class CertificateRoute { PlainBound, StrengthenedBound };

struct Comparison {
  std::string lhs, relation, rhs;  // factored integers, e.g. "2*25 < 3*3*7"
  BigInt lhs_value, rhs_value;
  bool holds = false;

  std::string to_string() const { return lhs + " " + relation + " " + rhs; }
};

struct CertificateResult {
  CertificateVerdict verdict = CertificateVerdict::Unknown;
  std::optional<CertificateRoute> route;  // set when certified
  std::vector<Comparison> checks;         // every comparison attempted
  std::optional<bool> line_free;          // line test result, when consulted

  bool certified() const {
    return verdict == CertificateVerdict::Certified;
  }
};

namespace detail {

inline Comparison compare_le(BigInt lhs, std::string lhs_text, BigInt rhs,
                             std::string rhs_text, bool strict) {
  Comparison c;
  c.lhs = std::move(lhs_text);
  c.rhs = std::move(rhs_text);
  c.relation = strict ? "<" : "<=";
  c.holds = strict ? lhs < rhs : lhs <= rhs;
  c.lhs_value = std::move(lhs);
  c.rhs_value = std::move(rhs);
  return c;
}

}  // namespace detail

// No tiger if d <= a0*a1; with the line hypothesis, d <= a0*a2 suffices.
inline CertificateResult tiger_certificate(const WeightVector& w) {
  CertificateResult r;
  auto plain = detail::compare_le(
      BigInt(w.d), std::to_string(w.d), BigInt(w.a[0]) * BigInt(w.a[1]),
      std::to_string(w.a[0]) + "*" + std::to_string(w.a[1]), false);
  r.checks.push_back(plain);
  if (plain.holds) {
    r.verdict = CertificateVerdict::Certified;
    r.route = CertificateRoute::PlainBound;
    return r;
  }
  r.line_free = line_not_contained(w);
  if (*r.line_free) {
    auto strong = detail::compare_le(
        BigInt(w.d), std::to_string(w.d), BigInt(w.a[0]) * BigInt(w.a[2]),
        std::to_string(w.a[0]) + "*" + std::to_string(w.a[2]), false);
    r.checks.push_back(strong);
    if (strong.holds) {
      r.verdict = CertificateVerdict::Certified;
      r.route = CertificateRoute::StrengthenedBound;
    }
  }
  return r;
}

// Kaehler-Einstein metric if 2d < 3*a0*a1 (strict), or 2d < 3*a0*a2 with
// the line hypothesis; evaluated purely on integers.
inline CertificateResult ke_certificate(const WeightVector& w) {
  CertificateResult r;
  auto plain = detail::compare_le(
      BigInt(2) * BigInt(w.d), "2*" + std::to_string(w.d),
      BigInt(3) * BigInt(w.a[0]) * BigInt(w.a[1]),
      "3*" + std::to_string(w.a[0]) + "*" + std::to_string(w.a[1]), true);
  r.checks.push_back(plain);
  if (plain.holds) {
    r.verdict = CertificateVerdict::Certified;
    r.route = CertificateRoute::PlainBound;
    return r;
  }
  r.line_free = line_not_contained(w);
  if (*r.line_free) {
    auto strong = detail::compare_le(
        BigInt(2) * BigInt(w.d), "2*" + std::to_string(w.d),
        BigInt(3) * BigInt(w.a[0]) * BigInt(w.a[2]),
        "3*" + std::to_string(w.a[0]) + "*" + std::to_string(w.a[2]), true);
    r.checks.push_back(strong);
    if (strong.holds) {
      r.verdict = CertificateVerdict::Certified;
      r.route = CertificateRoute::StrengthenedBound;
    }
  }
  return r;
}

enum class TigerStatus { HasTigerWitness, NoTigerCertified, Unknown };
enum class KEStatus { Certified, SeriesProof, Unknown };

struct ClassificationRow {
  WeightVector w;
  TigerStatus tiger = TigerStatus::Unknown;
  KEStatus ke = KEStatus::Unknown;
  CertificateResult tiger_cert, ke_cert;
  std::optional<Weight> series_k;  // set when the row is a series member
  // external previously-known marks; never influence the verdicts above
  bool tiger_known = false, ke_known = false;
};

// Assembles the verdicts for one row of the classification.  Series members
// carry the family's own proofs: the four half-weighted branches through the
// top vertex are a tiger, and the log-canonical chain gives the metric.
inline ClassificationRow classify_row(const WeightVector& w,
                                      std::optional<Weight> series_k = {}) {
  ClassificationRow row;
  row.w = w;
  row.series_k = series_k;
  row.tiger_cert = tiger_certificate(w);
  row.ke_cert = ke_certificate(w);
  if (series_k) {
    row.tiger = TigerStatus::HasTigerWitness;
    row.ke = KEStatus::SeriesProof;
    return row;
  }
  row.tiger = row.tiger_cert.certified() ? TigerStatus::NoTigerCertified
                                         : TigerStatus::Unknown;
  row.ke = row.ke_cert.certified() ? KEStatus::Certified : KEStatus::Unknown;
  // d <= P forces 2d <= 2P < 3P, on the same route
  assert(!row.tiger_cert.certified() || row.ke_cert.certified());
  return row;
}

}  // namespace ldp
