#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ldp/rational.hpp"
#include "ldp/weights.hpp"

namespace ldp {

// A monomial x0^b0 x1^b1 x2^b2 x3^b3 as its exponent tuple.
struct ExponentVector {
  std::array<Weight, 4> b{};

  Weight weighted_degree(const WeightVector& w) const {
    Weight s = 0;
    for (int i = 0; i < 4; ++i) s += b[i] * w.a[i];
    return s;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) =
      default;
  friend std::strong_ordering operator<=>(const ExponentVector& x,
                                          const ExponentVector& y) {
    return x.b <=> y.b;
  }

  std::string to_string() const {
    std::string s;
    static const char* vars[4] = {"x0", "x1", "x2", "x3"};
    for (int i = 0; i < 4; ++i) {
      if (b[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars[i];
      if (b[i] > 1) s += "^" + std::to_string(b[i]);
    }
    return s.empty() ? "1" : s;
  }
};

namespace detail {

// extended gcd: returns g and (x, y) with a*x + b*y = g; a, b >= 0
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x,
                            std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace detail

// Minimal-x nonnegative solution of a*x + b*y = target (a, b >= 1,
// target >= 0), or nullopt if none exists.
inline std::optional<std::pair<Weight, Weight>> solve_two_term(Weight a,
                                                               Weight b,
                                                               Weight target) {
  assert(a >= 1 && b >= 1);
  if (target < 0) return std::nullopt;
  Weight g = std::gcd(a, b);
  if (target % g != 0) return std::nullopt;
  Weight ar = a / g, br = b / g, t = target / g;
  // x must satisfy ar*x == t (mod br); ar and br are coprime
  Weight x0 = 0;
  if (br > 1) {
    std::int64_t inv, tmp;
    detail::ext_gcd(((ar % br) + br) % br, br, inv, tmp);
    inv = ((inv % br) + br) % br;
    x0 = static_cast<Weight>(
        (static_cast<__int128>(t % br) * inv) % br);
  }
  if (static_cast<__int128>(ar) * x0 > t) return std::nullopt;
  Weight y = (t - ar * x0) / br;
  return std::make_pair(x0, y);
}

// All monomials of weighted degree m, in ascending lexicographic order on
// (b0, b1, b2, b3); empty for m < 0.
inline std::vector<ExponentVector> monomials_of_degree(const WeightVector& w,
                                                       Weight m) {
  std::vector<ExponentVector> out;
  if (m < 0) return out;
  for (Weight b0 = 0; b0 * w.a[0] <= m; ++b0) {
    Weight r0 = m - b0 * w.a[0];
    for (Weight b1 = 0; b1 * w.a[1] <= r0; ++b1) {
      Weight r1 = r0 - b1 * w.a[1];
      for (Weight b2 = 0; b2 * w.a[2] <= r1; ++b2) {
        Weight r2 = r1 - b2 * w.a[2];
        if (r2 % w.a[3] == 0)
          out.push_back(ExponentVector{{b0, b1, b2, r2 / w.a[3]}});
      }
    }
  }
  return out;
}

// True iff some monomial of degree m uses only the variables in `vars`
// (a nonempty subset of {0,1,2,3}, given as a bitmask).
inline bool has_monomial_supported_on(const WeightVector& w, Weight m,
                                      unsigned vars_mask) {
  if (vars_mask == 0 || vars_mask > 0xf)
    throw std::invalid_argument("variable subset must be nonempty");
  if (m < 0) return false;
  std::array<Weight, 4> ws;
  int n = 0;
  for (int i = 0; i < 4; ++i)
    if (vars_mask & (1u << i)) ws[n++] = w.a[i];
  switch (n) {
    case 1:
      return m % ws[0] == 0;
    case 2:
      return solve_two_term(ws[0], ws[1], m).has_value();
    case 3:
      for (Weight e = 0; e * ws[2] <= m; ++e)
        if (solve_two_term(ws[0], ws[1], m - e * ws[2])) return true;
      return false;
    default:
      for (Weight e3 = 0; e3 * ws[3] <= m; ++e3)
        for (Weight e2 = 0; e2 * ws[2] <= m - e3 * ws[3]; ++e2)
          if (solve_two_term(ws[0], ws[1], m - e3 * ws[3] - e2 * ws[2]))
            return true;
      return false;
  }
}

inline bool has_monomial_supported_on(const WeightVector& w, Weight m,
                                      std::initializer_list<int> vars) {
  unsigned mask = 0;
  for (int v : vars) {
    if (v < 0 || v > 3) throw std::invalid_argument("variable index out of range");
    mask |= 1u << v;
  }
  return has_monomial_supported_on(w, m, mask);
}

// Intersection number of O(m1)|_X and O(m2)|_X on an anticanonically
// embedded X_d:  m1*m2*d / (a0*a1*a2*a3), exactly.
inline Rational intersection_degree(const WeightVector& w, Weight m1,
                                    Weight m2) {
  if (m1 < 0 || m2 < 0)
    throw std::invalid_argument("intersection_degree needs m1, m2 >= 0");
  Rational r = Rational(BigInt(m1) * BigInt(m2) * BigInt(w.d),
                        BigInt(w.a[0]) * BigInt(w.a[1]) * BigInt(w.a[2]) *
                            BigInt(w.a[3]));
  return r;
}

}  // namespace ldp
