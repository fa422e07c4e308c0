#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>

#include "ldp/monomials.hpp"
#include "ldp/weights.hpp"

namespace ldp {

// Decides whether the general anticanonical hypersurface in P(a0,..,a3) is
// quasi-smooth, via three monomial-existence conditions on the degree-d
// linear system:
//   (vertex)  for every i there are j and m >= 1 with m*a_i + a_j = d
//             (j = i allowed: the general member misses that vertex);
//   (lines)   for every pair with gcd(a_i,a_j) > 1 there is a monomial
//             x_i^{bi} x_j^{bj} of degree d, so X avoids the singular line;
//   (axes)    for every pair, either such a pure monomial exists, or both
//             x_i^{ci} x_j^{cj} x_k and x_i^{di} x_j^{dj} x_l of degree d
//             exist, making X generically smooth along the coordinate axis.
// Witnesses are recorded so reports and certificates stay auditable.

inline constexpr std::array<std::array<int, 2>, 6> kIndexPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct VertexWitness {
  bool ok = false;
  Weight m = 0;  // exponent of x_i
  int j = -1;    // the partner variable (may equal i)

  ExponentVector monomial(int i) const {
    ExponentVector e;
    e.b[i] += m;
    e.b[j] += 1;
    return e;
  }
};

struct LineWitness {
  bool ok = false;
  bool vacuous = false;  // gcd(a_i, a_j) == 1: nothing to check
  Weight bi = 0, bj = 0;

  ExponentVector monomial(int i, int j) const {
    ExponentVector e;
    e.b[i] = bi;
    e.b[j] = bj;
    return e;
  }
};

struct AxisWitness {
  enum class Kind { PurePair, Mixed };
  bool ok = false;
  Kind kind = Kind::PurePair;
  Weight bi = 0, bj = 0;        // pure-pair witness
  Weight ci = 0, cj = 0;        // mixed witness with x_k
  Weight di = 0, dj = 0;        // mixed witness with x_l
  int k = -1, l = -1;

  ExponentVector pure_monomial(int i, int j) const {
    ExponentVector e;
    e.b[i] = bi;
    e.b[j] = bj;
    return e;
  }
  ExponentVector mixed_monomial_k(int i, int j) const {
    ExponentVector e;
    e.b[i] = ci;
    e.b[j] = cj;
    e.b[k] = 1;
    return e;
  }
  ExponentVector mixed_monomial_l(int i, int j) const {
    ExponentVector e;
    e.b[i] = di;
    e.b[j] = dj;
    e.b[l] = 1;
    return e;
  }
};

struct ConditionReport {
  WeightVector w;
  std::array<VertexWitness, 4> vertex;
  std::array<LineWitness, 6> lines;  // indexed by kIndexPairs
  std::array<AxisWitness, 6> axes;
  bool vertex_ok = false;
  bool lines_ok = false;
  bool axes_ok = false;
  bool overall = false;
};

namespace detail {

// smallest m >= 1 with m*a_i + a_j = d for some j (ties broken by smaller j)
inline VertexWitness find_vertex_witness(const std::array<Weight, 4>& a,
                                         Weight d, int i) {
  VertexWitness best;
  for (int j = 0; j < 4; ++j) {
    Weight r = d - a[j];
    if (r < a[i] || r % a[i] != 0) continue;
    Weight m = r / a[i];
    if (!best.ok || m < best.m) {
      best.ok = true;
      best.m = m;
      best.j = j;
    }
  }
  return best;
}

inline bool vertex_ok_fast(const std::array<Weight, 4>& a, Weight d, int i) {
  for (int j = 0; j < 4; ++j) {
    Weight r = d - a[j];
    if (r >= a[i] && r % a[i] == 0) return true;
  }
  return false;
}

}  // namespace detail

// Condition (vertex): per-index result.
inline std::array<VertexWitness, 4> check_vertex_condition(
    const WeightVector& w) {
  std::array<VertexWitness, 4> out;
  for (int i = 0; i < 4; ++i)
    out[i] = detail::find_vertex_witness(w.a, w.d, i);
  return out;
}

// Condition (lines): per-pair result; pairs with coprime weights are
// vacuously fine.
inline std::array<LineWitness, 6> check_singular_line_condition(
    const WeightVector& w) {
  std::array<LineWitness, 6> out;
  for (int p = 0; p < 6; ++p) {
    auto [i, j] = kIndexPairs[p];
    LineWitness& lw = out[p];
    if (std::gcd(w.a[i], w.a[j]) == 1) {
      lw.ok = true;
      lw.vacuous = true;
      continue;
    }
    if (auto s = solve_two_term(w.a[i], w.a[j], w.d)) {
      lw.ok = true;
      lw.bi = s->first;
      lw.bj = s->second;
    }
  }
  return out;
}

// Condition (axes): per-pair result, checked for all six pairs.
inline std::array<AxisWitness, 6> check_axis_condition(const WeightVector& w) {
  std::array<AxisWitness, 6> out;
  for (int p = 0; p < 6; ++p) {
    auto [i, j] = kIndexPairs[p];
    AxisWitness& aw = out[p];
    int k = 0, l = 0;
    for (int v = 0, n = 0; v < 4; ++v)
      if (v != i && v != j) (n++ == 0 ? k : l) = v;
    aw.k = k;
    aw.l = l;
    if (auto s = solve_two_term(w.a[i], w.a[j], w.d)) {
      aw.ok = true;
      aw.kind = AxisWitness::Kind::PurePair;
      aw.bi = s->first;
      aw.bj = s->second;
      continue;
    }
    auto sk = solve_two_term(w.a[i], w.a[j], w.d - w.a[k]);
    auto sl = solve_two_term(w.a[i], w.a[j], w.d - w.a[l]);
    if (sk && sl) {
      aw.ok = true;
      aw.kind = AxisWitness::Kind::Mixed;
      aw.ci = sk->first;
      aw.cj = sk->second;
      aw.di = sl->first;
      aw.dj = sl->second;
    }
  }
  return out;
}

inline ConditionReport is_quasismooth_candidate(const WeightVector& w) {
  ConditionReport r;
  r.w = w;
  r.vertex = check_vertex_condition(w);
  r.lines = check_singular_line_condition(w);
  r.axes = check_axis_condition(w);
  r.vertex_ok = true;
  for (const auto& v : r.vertex) r.vertex_ok = r.vertex_ok && v.ok;
  r.lines_ok = true;
  for (const auto& l : r.lines) r.lines_ok = r.lines_ok && l.ok;
  r.axes_ok = true;
  for (const auto& ax : r.axes) r.axes_ok = r.axes_ok && ax.ok;
  r.overall = r.vertex_ok && r.lines_ok && r.axes_ok;
  return r;
}

// Allocation-free equivalent of is_quasismooth_candidate(...).overall for a
// sorted tuple; this is what the brute-force oracle runs millions of times.
inline bool passes_quasismooth_conditions(Weight a0, Weight a1, Weight a2,
                                          Weight a3) noexcept {
  const std::array<Weight, 4> a{a0, a1, a2, a3};
  const Weight d = a0 + a1 + a2 + a3 - 1;
  // cheapest rejections first: big-weight vertices fail most often
  for (int i = 3; i >= 0; --i)
    if (!detail::vertex_ok_fast(a, d, i)) return false;
  for (const auto& pr : kIndexPairs) {
    if (std::gcd(a[pr[0]], a[pr[1]]) == 1) continue;
    if (!solve_two_term(a[pr[0]], a[pr[1]], d)) return false;
  }
  for (const auto& pr : kIndexPairs) {
    int i = pr[0], j = pr[1];
    if (solve_two_term(a[i], a[j], d)) continue;
    int k = 0, l = 0;
    for (int v = 0, n = 0; v < 4; ++v)
      if (v != i && v != j) (n++ == 0 ? k : l) = v;
    if (!solve_two_term(a[i], a[j], d - a[k])) return false;
    if (!solve_two_term(a[i], a[j], d - a[l])) return false;
  }
  return true;
}

inline bool passes_quasismooth_conditions(const WeightVector& w) noexcept {
  return passes_quasismooth_conditions(w.a[0], w.a[1], w.a[2], w.a[3]);
}

}  // namespace ldp
