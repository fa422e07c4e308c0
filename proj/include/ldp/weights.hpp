#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ldp {

using Weight = std::int64_t;

// Weights beyond this would risk 64-bit overflow in degree sums and the
// Diophantine scans; the classification itself never leaves three digits.
inline constexpr Weight kMaxWeight = 1'000'000'000'000'000LL;

enum class WeightErrorKind {
  NonPositiveWeight,
  WeightTooLarge,
  TripleGcdViolation,
};

class WeightError : public std::runtime_error {
public:
  WeightError(WeightErrorKind kind, std::string msg,
              std::array<Weight, 3> triple = {0, 0, 0})
      : std::runtime_error(std::move(msg)), kind(kind), triple(triple) {}

  WeightErrorKind kind;
  std::array<Weight, 3> triple;  // offending triple for TripleGcdViolation
};

// The ambient datum: weights a0 <= a1 <= a2 <= a3 with every 3-element
// sub-multiset coprime, plus the anticanonical degree d = a0+a1+a2+a3-1.
// Construct through validate_weights.
struct WeightVector {
  std::array<Weight, 4> a{};
  Weight d = 0;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend std::strong_ordering operator<=>(const WeightVector& x,
                                          const WeightVector& y) {
    return x.a <=> y.a;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i)
      s += std::to_string(a[i]) + (i < 3 ? "," : ")");
    return s;
  }
};

// Fast validity predicate on an already sorted tuple; used in the oracle's
// hot loop. Checks positivity, bounds, and that every triple is coprime
// (pairwise gcd > 1 is fine: the series has a1 = a2).
inline bool weights_valid_sorted(Weight a0, Weight a1, Weight a2,
                                 Weight a3) noexcept {
  if (a0 < 1 || a3 > kMaxWeight) return false;
  if (std::gcd(std::gcd(a0, a1), a2) != 1) return false;
  if (std::gcd(std::gcd(a0, a1), a3) != 1) return false;
  if (std::gcd(std::gcd(a0, a2), a3) != 1) return false;
  if (std::gcd(std::gcd(a1, a2), a3) != 1) return false;
  return true;
}

// Canonicalizes (sorts ascending) and validates. The result is invariant
// under permutations of the input. Throws WeightError on rejection.
inline WeightVector validate_weights(std::array<Weight, 4> raw) {
  for (Weight w : raw) {
    if (w < 1)
      throw WeightError(WeightErrorKind::NonPositiveWeight,
                        "weights must be positive integers");
    if (w > kMaxWeight)
      throw WeightError(WeightErrorKind::WeightTooLarge,
                        "weight exceeds supported range");
  }
  std::sort(raw.begin(), raw.end());
  // scan triples in a fixed order so the reported triple is canonical
  static constexpr int kTriples[4][3] = {
      {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : kTriples) {
    Weight g = std::gcd(std::gcd(raw[t[0]], raw[t[1]]), raw[t[2]]);
    if (g != 1)
      throw WeightError(
          WeightErrorKind::TripleGcdViolation,
          "triple {" + std::to_string(raw[t[0]]) + "," +
              std::to_string(raw[t[1]]) + "," + std::to_string(raw[t[2]]) +
              "} has gcd " + std::to_string(g),
          {raw[t[0]], raw[t[1]], raw[t[2]]});
  }
  WeightVector w;
  w.a = raw;
  w.d = raw[0] + raw[1] + raw[2] + raw[3] - 1;
  return w;
}

inline WeightVector validate_weights(Weight a0, Weight a1, Weight a2,
                                     Weight a3) {
  return validate_weights(std::array<Weight, 4>{a0, a1, a2, a3});
}

}  // namespace ldp
