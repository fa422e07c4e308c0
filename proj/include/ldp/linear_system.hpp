#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ldp/monomials.hpp"
#include "ldp/weights.hpp"

namespace ldp {

// The enumeration solves (M + J + U) a = (-1,-1,-1,-1)^t over positive
// integers, where M = diag(m0..m3), J is the all-(-1) matrix and U has one
// unit entry per row.  Row i encodes m_i*a_i + a_{u(i)} = d with
// d = a0+a1+a2+a3-1, i.e. the vertex condition witness for index i.
// m1..m3 are bounded a priori (m3*a3 = d - a_j < 3*a3 forces m3 <= 2);
// m0 is kept symbolic and eliminated by Cramer's rule: every determinant
// involved is affine in m0 because m0 sits in a single matrix entry.

struct SearchBounds {
  Weight m1_lo = 1, m1_hi = 14;
  Weight m2_lo = 1, m2_hi = 6;
  Weight m3_lo = 1, m3_hi = 2;
};

// the hard cap keeps every determinant and divisor scan inside int64
inline constexpr Weight kMaxExponentBound = 60;

struct SearchConfiguration {
  std::array<int, 4> u{};     // column of the unit entry in each row of U
  std::array<Weight, 4> m{};  // m[0] is symbolic (stored as 0)

  friend bool operator==(const SearchConfiguration&,
                         const SearchConfiguration&) = default;
};

// All 256 U matrices crossed with the (m1,m2,m3) boxes; deterministic order.
inline std::vector<SearchConfiguration> enumerate_configurations(
    const SearchBounds& b = {}) {
  if (b.m1_lo < 1 || b.m2_lo < 1 || b.m3_lo < 1 || b.m1_hi < b.m1_lo ||
      b.m2_hi < b.m2_lo || b.m3_hi < b.m3_lo || b.m1_hi > kMaxExponentBound ||
      b.m2_hi > kMaxExponentBound || b.m3_hi > kMaxExponentBound)
    throw std::invalid_argument("bad exponent bounds");
  std::vector<SearchConfiguration> out;
  out.reserve(256 * static_cast<std::size_t>(b.m1_hi - b.m1_lo + 1) *
              (b.m2_hi - b.m2_lo + 1) * (b.m3_hi - b.m3_lo + 1));
  for (int u0 = 0; u0 < 4; ++u0)
    for (int u1 = 0; u1 < 4; ++u1)
      for (int u2 = 0; u2 < 4; ++u2)
        for (int u3 = 0; u3 < 4; ++u3)
          for (Weight m1 = b.m1_lo; m1 <= b.m1_hi; ++m1)
            for (Weight m2 = b.m2_lo; m2 <= b.m2_hi; ++m2)
              for (Weight m3 = b.m3_lo; m3 <= b.m3_hi; ++m3)
                out.push_back(SearchConfiguration{{u0, u1, u2, u3},
                                                  {0, m1, m2, m3}});
  return out;
}

// A row with m_i = 1 and u(i) = j != i encodes a_i + a_j = d, i.e. the
// other two weights sum to 1: no positive solutions can exist.  (In monomial
// terms, x_i x_j never has degree d = sum(a) - 1.)  Such configurations are
// refuted outright; every degenerate system inside the default boxes is of
// this form.
inline bool provably_unsolvable(const SearchConfiguration& cfg) {
  for (int i = 1; i < 4; ++i)
    if (cfg.m[i] == 1 && cfg.u[i] != i) return true;
  return false;
}

enum class SolutionBranch { Finite, Series, Degenerate };

// Cramer data for the system with m0 symbolic:
//   a0 = gamma0 / (m0*alpha + beta)
//   ai = (m0*delta[i-1] + gamma[i-1]) / (m0*alpha + beta),  i = 1..3.
// Finite:     alpha != 0, finitely many m0 can divide gamma0.
// Series:     alpha == 0 != beta, one solution line parametrized by m0.
// Degenerate: alpha == beta == 0; consistent only if gamma0 == 0, which the
//             pipeline asserts never happens.
struct SymbolicSolution {
  Weight alpha = 0, beta = 0, gamma0 = 0;
  std::array<Weight, 3> delta{};
  std::array<Weight, 3> gamma{};
  SolutionBranch branch = SolutionBranch::Degenerate;
};

namespace detail {

// affine polynomial c + m*T in the symbolic exponent T
struct Lin {
  Weight c = 0, m = 0;

  friend Lin operator+(Lin a, Lin b) { return {a.c + b.c, a.m + b.m}; }
  friend Lin operator-(Lin a, Lin b) { return {a.c - b.c, a.m - b.m}; }
  friend Lin operator*(Lin a, Lin b) {
    // the symbol occupies a single matrix entry, so no T^2 term can form
    assert(a.m == 0 || b.m == 0);
    return {a.c * b.c, a.c * b.m + a.m * b.c};
  }
};

inline Lin det2(Lin a, Lin b, Lin c, Lin d) { return a * d - b * c; }

inline Lin det3(const std::array<std::array<Lin, 3>, 3>& m) {
  return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
         m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

inline Lin det4(const std::array<std::array<Lin, 4>, 4>& m) {
  Lin out{0, 0};
  int sign = 1;
  for (int col = 0; col < 4; ++col) {
    std::array<std::array<Lin, 3>, 3> minor;
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c)
        if (c != col) minor[r - 1][cc++] = m[r][c];
    }
    Lin term = m[0][col] * det3(minor);
    out = sign > 0 ? out + term : out - term;
    sign = -sign;
  }
  return out;
}

inline std::array<std::array<Lin, 4>, 4> system_matrix(
    const SearchConfiguration& cfg) {
  std::array<std::array<Lin, 4>, 4> a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Weight c = -1 + (cfg.u[i] == j ? 1 : 0);
      if (i == j && i > 0) c += cfg.m[i];
      a[i][j] = Lin{c, (i == 0 && j == 0) ? Weight{1} : Weight{0}};
    }
  return a;
}

}  // namespace detail

inline SymbolicSolution solve_symbolic(const SearchConfiguration& cfg) {
  using detail::Lin;
  auto a = detail::system_matrix(cfg);
  Lin det = detail::det4(a);

  SymbolicSolution s;
  s.alpha = det.m;
  s.beta = det.c;
  for (int col = 0; col < 4; ++col) {
    auto num = a;
    for (int r = 0; r < 4; ++r) num[r][col] = Lin{-1, 0};
    Lin n = detail::det4(num);
    if (col == 0) {
      assert(n.m == 0);
      s.gamma0 = n.c;
    } else {
      s.delta[col - 1] = n.m;
      s.gamma[col - 1] = n.c;
    }
  }
  s.branch = s.alpha != 0 ? SolutionBranch::Finite
             : s.beta != 0 ? SolutionBranch::Series
                           : SolutionBranch::Degenerate;
  return s;
}

// One all-positive-integer solution of a configuration at a concrete m0.
struct FiniteSolution {
  Weight m0 = 0;
  std::array<Weight, 4> a{};  // in system order, not sorted
};

struct FiniteInstantiation {
  std::vector<FiniteSolution> solutions;
  // gamma0 == 0 and the single m0 with det == 0 leaves a consistent
  // rank-deficient system: would mean solutions the divisor scan cannot see
  bool singular_consistent = false;
  Weight singular_m0 = 0;
};

namespace detail {

inline void check_row_equations(const SearchConfiguration& cfg, Weight m0,
                                const std::array<Weight, 4>& a) {
  __int128 d = static_cast<__int128>(a[0]) + a[1] + a[2] + a[3] - 1;
  for (int i = 0; i < 4; ++i) {
    Weight mi = i == 0 ? m0 : cfg.m[i];
    if (static_cast<__int128>(mi) * a[i] + a[cfg.u[i]] != d)
      throw std::logic_error("solution violates its row equation");
  }
}

}  // namespace detail

// Scans every divisor t (both signs) of gamma0 as a value of m0*alpha + beta
// and keeps the all-positive integral solutions with m0 >= 1.
inline FiniteInstantiation instantiate_finite(const SymbolicSolution& s,
                                              const SearchConfiguration& cfg) {
  if (s.branch != SolutionBranch::Finite)
    throw std::invalid_argument("instantiate_finite needs the finite branch");
  FiniteInstantiation out;

  if (s.gamma0 == 0) {
    // a0 = 0 for every regular m0; only a singular m0 could hide solutions
    if ((-s.beta) % s.alpha == 0) {
      Weight m0s = (-s.beta) / s.alpha;
      if (m0s >= 1) {
        bool consistent = true;
        for (int i = 0; i < 3; ++i)
          consistent = consistent && (s.delta[i] * m0s + s.gamma[i] == 0);
        if (consistent) {
          out.singular_consistent = true;
          out.singular_m0 = m0s;
        }
      }
    }
    return out;
  }

  Weight g = s.gamma0 < 0 ? -s.gamma0 : s.gamma0;
  std::vector<Weight> divisors;
  for (Weight p = 1; p * p <= g; ++p) {
    if (g % p != 0) continue;
    divisors.push_back(p);
    if (p != g / p) divisors.push_back(g / p);
  }

  for (Weight p : divisors) {
    for (Weight t : {p, -p}) {
      if ((t - s.beta) % s.alpha != 0) continue;
      Weight m0 = (t - s.beta) / s.alpha;
      if (m0 < 1) continue;
      Weight a0 = s.gamma0 / t;
      if (a0 < 1 || a0 > kMaxWeight) continue;
      std::array<Weight, 4> a{a0, 0, 0, 0};
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        __int128 num = static_cast<__int128>(s.delta[i]) * m0 + s.gamma[i];
        if (num % t != 0) {
          ok = false;
          break;
        }
        __int128 ai = num / t;
        if (ai < 1 || ai > kMaxWeight) {
          ok = false;
          break;
        }
        a[i + 1] = static_cast<Weight>(ai);
      }
      if (!ok) continue;
      detail::check_row_equations(cfg, m0, a);
      out.solutions.push_back(FiniteSolution{m0, a});
    }
  }
  // deterministic order independent of the divisor scan
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const FiniteSolution& x, const FiniteSolution& y) {
              return x.m0 < y.m0;
            });
  return out;
}

// One-parameter solution line of a series-branch configuration:
// member(t) = start + t*step for t = 0..t_max (t_max empty when infinite),
// where member(t) solves the system at m0 = m0_start + t*m0_step.
struct RawSeriesFamily {
  std::array<Weight, 4> start{};
  std::array<Weight, 4> step{};
  std::optional<Weight> t_max;
  Weight m0_start = 0, m0_step = 0;
};

namespace detail {

inline Weight floor_div(__int128 a, __int128 b) {
  assert(b > 0);
  __int128 q = a / b;
  if (a % b != 0 && a < 0) --q;
  assert(q >= INT64_MIN && q <= INT64_MAX);
  return static_cast<Weight>(q);
}

inline Weight ceil_div(__int128 a, __int128 b) {
  assert(b > 0);
  __int128 q = a / b;
  if (a % b != 0 && a > 0) ++q;
  assert(q >= INT64_MIN && q <= INT64_MAX);
  return static_cast<Weight>(q);
}

// x with delta*x == -gamma (mod n), as a progression (residue, modulus)
inline std::optional<std::pair<Weight, Weight>> solve_congruence(Weight delta,
                                                                 Weight gamma,
                                                                 Weight n) {
  Weight dd = ((delta % n) + n) % n;
  Weight c = ((-gamma) % n + n) % n;
  if (dd == 0) {
    if (c != 0) return std::nullopt;
    return std::make_pair(Weight{0}, Weight{1});
  }
  Weight g = std::gcd(dd, n);
  if (c % g != 0) return std::nullopt;
  Weight n2 = n / g;
  if (n2 == 1) return std::make_pair(Weight{0}, Weight{1});
  std::int64_t inv, tmp;
  ext_gcd(((dd / g) % n2 + n2) % n2, n2, inv, tmp);
  inv = ((inv % n2) + n2) % n2;
  Weight r = static_cast<Weight>(
      (static_cast<__int128>((c / g) % n2) * inv) % n2);
  return std::make_pair(r, n2);
}

inline std::optional<std::pair<Weight, Weight>> merge_progressions(
    Weight r1, Weight s1, Weight r2, Weight s2) {
  Weight g = std::gcd(s1, s2);
  if (((r2 - r1) % g + g) % g != 0) return std::nullopt;
  Weight s2g = s2 / g;
  Weight lcm = s1 * s2g;
  if (s2g == 1) return std::make_pair(r1 % lcm, lcm);
  std::int64_t inv, tmp;
  ext_gcd(((s1 / g) % s2g + s2g) % s2g, s2g, inv, tmp);
  inv = ((inv % s2g) + s2g) % s2g;
  Weight diff = (((r2 - r1) / g) % s2g + s2g) % s2g;
  Weight k = static_cast<Weight>((static_cast<__int128>(diff) * inv) % s2g);
  __int128 r = static_cast<__int128>(r1) + static_cast<__int128>(s1) * k;
  r %= lcm;
  if (r < 0) r += lcm;
  return std::make_pair(static_cast<Weight>(r), lcm);
}

}  // namespace detail

// Resolves the integrality congruences for m0 and the positivity window of
// the members; returns the family or nullopt when no valid member exists.
inline std::optional<RawSeriesFamily> instantiate_series(
    const SymbolicSolution& s, const SearchConfiguration& cfg) {
  if (s.branch != SolutionBranch::Series)
    throw std::invalid_argument("instantiate_series needs the series branch");
  const Weight B = s.beta;
  if (s.gamma0 % B != 0) return std::nullopt;
  const Weight a0 = s.gamma0 / B;
  if (a0 < 1 || a0 > kMaxWeight) return std::nullopt;

  // m0 must make every (delta_i*m0 + gamma_i)/beta an integer
  const Weight n = B < 0 ? -B : B;
  Weight res = 0, mod = 1;
  for (int i = 0; i < 3; ++i) {
    auto c = detail::solve_congruence(s.delta[i], s.gamma[i], n);
    if (!c) return std::nullopt;
    auto m = detail::merge_progressions(res, mod, c->first, c->second);
    if (!m) return std::nullopt;
    res = m->first;
    mod = m->second;
  }
  Weight m0_start = res >= 1 ? res : res + mod;
  const Weight m0_step = mod;

  RawSeriesFamily fam;
  fam.m0_start = m0_start;
  fam.m0_step = m0_step;
  fam.start[0] = a0;
  fam.step[0] = 0;
  for (int i = 0; i < 3; ++i) {
    __int128 num = static_cast<__int128>(s.delta[i]) * m0_start + s.gamma[i];
    assert(num % B == 0);
    __int128 st = num / B;
    __int128 stp = static_cast<__int128>(s.delta[i]) * m0_step / B;
    assert(static_cast<__int128>(s.delta[i]) * m0_step % B == 0);
    if (st < INT64_MIN / 2 || st > INT64_MAX / 2 || stp < INT64_MIN / 2 ||
        stp > INT64_MAX / 2)
      return std::nullopt;  // members start far outside any weight range
    fam.start[i + 1] = static_cast<Weight>(st);
    fam.step[i + 1] = static_cast<Weight>(stp);
  }

  // positivity window of t: every component >= 1
  Weight t_lo = 0;
  std::optional<Weight> t_hi;
  for (int i = 0; i < 4; ++i) {
    if (fam.step[i] > 0) {
      t_lo = std::max(
          t_lo, detail::ceil_div(static_cast<__int128>(1) - fam.start[i],
                                 fam.step[i]));
    } else if (fam.step[i] < 0) {
      Weight hi = detail::floor_div(static_cast<__int128>(fam.start[i]) - 1,
                                    -fam.step[i]);
      t_hi = t_hi ? std::min(*t_hi, hi) : hi;
    } else if (fam.start[i] < 1) {
      return std::nullopt;
    }
  }
  if (t_hi && *t_hi < t_lo) return std::nullopt;

  if (t_lo > 0) {  // shift so the first valid member sits at t = 0
    for (int i = 0; i < 4; ++i) {
      __int128 v = static_cast<__int128>(fam.start[i]) +
                   static_cast<__int128>(fam.step[i]) * t_lo;
      if (v < INT64_MIN / 2 || v > INT64_MAX / 2) return std::nullopt;
      fam.start[i] = static_cast<Weight>(v);
    }
    __int128 m0 = static_cast<__int128>(fam.m0_start) +
                  static_cast<__int128>(fam.m0_step) * t_lo;
    if (m0 > INT64_MAX / 2) return std::nullopt;
    fam.m0_start = static_cast<Weight>(m0);
    if (t_hi) t_hi = *t_hi - t_lo;
  }
  fam.t_max = t_hi;

  // sanity: the first members really solve the system at their m0
  for (Weight t = 0; t <= 1; ++t) {
    if (t_hi && t > *t_hi) break;
    std::array<Weight, 4> a;
    bool in_range = true;
    for (int i = 0; i < 4 && in_range; ++i) {
      __int128 v = static_cast<__int128>(fam.start[i]) +
                   static_cast<__int128>(fam.step[i]) * t;
      in_range = v >= INT64_MIN / 2 && v <= INT64_MAX / 2;
      a[i] = static_cast<Weight>(v);
    }
    if (in_range)
      detail::check_row_equations(cfg, fam.m0_start + fam.m0_step * t, a);
  }
  return fam;
}

}  // namespace ldp
