#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldp/linear_system.hpp"
#include "ldp/quasismooth.hpp"
#include "ldp/weights.hpp"

namespace ldp {

// A one-parameter family of weight vectors, a_i(k) = slope[i]*k + icept[i]
// for k >= 1, with components sorted ascending at every k in range.  The
// classification's only surviving family is (2, 2k+1, 2k+1, 4k+1) with
// degree 8k+4.
struct SeriesFamily {
  std::array<Weight, 4> slope{};
  std::array<Weight, 4> icept{};

  Weight degree_slope() const { return slope[0] + slope[1] + slope[2] + slope[3]; }
  Weight degree_icept() const {
    return icept[0] + icept[1] + icept[2] + icept[3] - 1;
  }

  std::optional<std::array<Weight, 4>> member_tuple(Weight k) const {
    if (k < 1) return std::nullopt;
    std::array<Weight, 4> out;
    for (int i = 0; i < 4; ++i) {
      __int128 v = static_cast<__int128>(slope[i]) * k + icept[i];
      if (v < 1 || v > kMaxWeight) return std::nullopt;
      out[i] = static_cast<Weight>(v);
    }
    return out;
  }

  WeightVector member(Weight k) const {
    auto t = member_tuple(k);
    if (!t) throw std::out_of_range("series member outside the valid range");
    return validate_weights(*t);
  }

  // k with member(k) == w, if any
  std::optional<Weight> parameter_of(const WeightVector& w) const {
    // the largest component has positive slope in any infinite family
    assert(slope[3] > 0);
    Weight delta = w.a[3] - icept[3];
    if (delta < slope[3] || delta % slope[3] != 0) return std::nullopt;
    Weight k = delta / slope[3];
    auto t = member_tuple(k);
    if (t && *t == w.a) return k;
    return std::nullopt;
  }

  bool contains(const WeightVector& w) const {
    return parameter_of(w).has_value();
  }

  static std::string affine_form(Weight slope, Weight icept) {
    if (slope == 0) return std::to_string(icept);
    std::string s = slope == 1 ? "k" : std::to_string(slope) + "k";
    if (icept > 0) s += "+" + std::to_string(icept);
    if (icept < 0) s += std::to_string(icept);
    return s;
  }

  std::string weight_form(int i) const { return affine_form(slope[i], icept[i]); }
  std::string degree_form() const {
    return affine_form(degree_slope(), degree_icept());
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) s += weight_form(i) + (i < 3 ? "," : ")");
    return s + ", d=" + degree_form() + ", k>=1";
  }

  friend bool operator==(const SeriesFamily&, const SeriesFamily&) = default;
  friend auto operator<=>(const SeriesFamily& a, const SeriesFamily& b) {
    if (auto c = a.slope <=> b.slope; c != 0) return c;
    return a.icept <=> b.icept;
  }
};

namespace detail {

// valid + quasi-smooth + sorted-ascending test for one family member
inline bool family_member_passes(const std::array<Weight, 4>& t) {
  if (!(t[0] <= t[1] && t[1] <= t[2] && t[2] <= t[3])) return false;
  if (!weights_valid_sorted(t[0], t[1], t[2], t[3])) return false;
  return passes_quasismooth_conditions(t[0], t[1], t[2], t[3]);
}

}  // namespace detail

// Knobs for turning raw solution lines into families and leftover tuples.
struct FamilyProbeOptions {
  int window = 64;       // members probed per family
  int period_cap = 16;   // maximal sub-progression period searched
  int depth_cap = 3;     // recursive split depth
  // members above this never enter the sporadic candidate pool; the final
  // table tops out at weight 128, so the default leaves a wide margin
  Weight candidate_weight_ceiling = 1024;
};

struct FamilyExtraction {
  std::vector<SeriesFamily> families;
  std::vector<std::array<Weight, 4>> members;  // unsorted leftover tuples
  int zone_clipped = 0;    // feasible range wider than the candidate zone
  int probe_fallbacks = 0; // pass pattern had no small period
};

namespace detail {

// t-interval on which every component of start + t*step lies in [1, cap];
// empty intervals come out with lo > hi
inline std::pair<Weight, Weight> candidate_zone(
    const std::array<Weight, 4>& start, const std::array<Weight, 4>& step,
    Weight cap, Weight t_lo, Weight t_hi) {
  Weight lo = t_lo, hi = t_hi;
  for (int i = 0; i < 4; ++i) {
    if (step[i] > 0) {
      lo = std::max(lo, ceil_div(static_cast<__int128>(1) - start[i], step[i]));
      hi = std::min(hi, floor_div(static_cast<__int128>(cap) - start[i], step[i]));
    } else if (step[i] < 0) {
      lo = std::max(lo, ceil_div(static_cast<__int128>(start[i]) - cap, -step[i]));
      hi = std::min(hi, floor_div(static_cast<__int128>(start[i]) - 1, -step[i]));
    } else if (start[i] < 1 || start[i] > cap) {
      return {1, 0};
    }
  }
  return {lo, hi};
}

inline std::optional<std::array<Weight, 4>> eval_affine(
    const std::array<Weight, 4>& start, const std::array<Weight, 4>& step,
    Weight t) {
  std::array<Weight, 4> out;
  for (int i = 0; i < 4; ++i) {
    __int128 v = static_cast<__int128>(start[i]) +
                 static_cast<__int128>(step[i]) * t;
    if (v < 1 || v > kMaxWeight) return std::nullopt;
    out[i] = static_cast<Weight>(v);
  }
  return out;
}

inline void probe_and_split(const SeriesFamily& fam,
                            const FamilyProbeOptions& opt, int depth,
                            FamilyExtraction& out) {
  const int W = opt.window;
  std::vector<bool> pass(W + 1, false);
  int passing = 0;
  for (int k = 1; k <= W; ++k) {
    auto t = fam.member_tuple(k);
    pass[k] = t && family_member_passes(*t);
    passing += pass[k];
  }
  if (passing == 0) return;
  if (passing == W) {
    out.families.push_back(fam);
    return;
  }

  auto keep_member = [&](Weight k) {
    if (auto t = fam.member_tuple(k)) out.members.push_back(*t);
  };

  if (depth >= opt.depth_cap) {
    for (int k = 1; k <= W; ++k)
      if (pass[k]) keep_member(k);
    ++out.probe_fallbacks;
    return;
  }

  // minimal period of the tail of the pass pattern: quasi-smoothness of an
  // affine family is governed by divisibility conditions, which are
  // eventually periodic in the parameter
  int best_s = 0, best_k0 = 0;
  for (int s = 1; s <= opt.period_cap && !best_s; ++s) {
    for (int k0 = 1; k0 + 2 * s <= W; ++k0) {
      bool periodic = true;
      for (int k = k0; k + s <= W && periodic; ++k)
        periodic = pass[k] == pass[k + s];
      if (periodic) {
        best_s = s;
        best_k0 = k0;
        break;
      }
    }
  }
  if (!best_s) {
    for (int k = 1; k <= W; ++k)
      if (pass[k]) keep_member(k);
    ++out.probe_fallbacks;
    return;
  }

  for (int k = 1; k < best_k0; ++k)
    if (pass[k]) keep_member(k);
  for (int r = best_k0; r < best_k0 + best_s; ++r) {
    if (!pass[r]) continue;
    SeriesFamily sub;
    bool fits = true;
    for (int i = 0; i < 4 && fits; ++i) {
      __int128 sl = static_cast<__int128>(fam.slope[i]) * best_s;
      __int128 ic = static_cast<__int128>(fam.icept[i]) +
                    static_cast<__int128>(fam.slope[i]) * (r - best_s);
      fits = sl <= INT64_MAX / 2 && ic > INT64_MIN / 2 && ic < INT64_MAX / 2;
      sub.slope[i] = static_cast<Weight>(sl);
      sub.icept[i] = static_cast<Weight>(ic);
    }
    if (!fits) {
      ++out.probe_fallbacks;
      continue;
    }
    probe_and_split(sub, opt, depth + 1, out);
  }
}

}  // namespace detail

// Turns one raw solution line into (a) concrete candidate tuples and (b)
// canonical infinite families whose every probed member is a quasi-smooth
// candidate.  Bounded families and members before the sorted-order
// stabilizes are expanded into tuples; infinite tails are probed and, when
// the pass pattern is periodic, split into sub-progressions.
inline void extract_from_raw_family(const RawSeriesFamily& raw,
                                    const FamilyProbeOptions& opt,
                                    FamilyExtraction& out) {
  // members worth considering as classification candidates
  Weight zone_hi_limit = raw.t_max ? *raw.t_max : INT64_MAX / 2;
  auto [z_lo, z_hi] = detail::candidate_zone(
      raw.start, raw.step, opt.candidate_weight_ceiling, 0, zone_hi_limit);

  auto keep_if_candidate = [&](std::array<Weight, 4> m) {
    std::sort(m.begin(), m.end());
    if (detail::family_member_passes(m)) out.members.push_back(m);
  };

  if (raw.t_max) {
    // a decreasing component bounds the family: finitely many members, all
    // interesting ones inside the zone
    if (z_lo > 0 || z_hi < *raw.t_max) ++out.zone_clipped;
    for (Weight t = z_lo; t <= z_hi; ++t)
      if (auto m = detail::eval_affine(raw.start, raw.step, t))
        keep_if_candidate(*m);
    return;
  }

  // infinite family: find where the component order stabilizes
  Weight js = 0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) {
      if (raw.step[p] == raw.step[q]) continue;
      // order of components p, q flips at most once, at t = cross
      __int128 num = static_cast<__int128>(raw.start[q]) - raw.start[p];
      __int128 den = static_cast<__int128>(raw.step[p]) - raw.step[q];
      if (den < 0) {
        num = -num;
        den = -den;
      }
      Weight cross = detail::floor_div(num, den);
      if (cross >= 0) js = std::max(js, cross + 1);
    }

  if (z_lo <= z_hi) {
    Weight lead_hi = std::min(z_hi, js - 1);
    for (Weight t = z_lo; t <= lead_hi; ++t)
      if (auto m = detail::eval_affine(raw.start, raw.step, t))
        keep_if_candidate(*m);
  }

  // stabilized tail, reindexed to k >= 1 and sorted componentwise
  std::array<int, 4> perm{0, 1, 2, 3};
  auto first = detail::eval_affine(raw.start, raw.step, js);
  if (!first) {
    // tail starts beyond any admissible weight and never comes back down
    ++out.zone_clipped;
    return;
  }
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    if ((*first)[x] != (*first)[y]) return (*first)[x] < (*first)[y];
    return raw.step[x] < raw.step[y];
  });
  SeriesFamily tail;
  bool fits = true;
  for (int i = 0; i < 4 && fits; ++i) {
    __int128 ic = static_cast<__int128>(raw.start[perm[i]]) +
                  static_cast<__int128>(raw.step[perm[i]]) * (js - 1);
    fits = ic > INT64_MIN / 2 && ic < INT64_MAX / 2;
    tail.slope[i] = raw.step[perm[i]];
    tail.icept[i] = static_cast<Weight>(ic);
  }
  if (!fits) {
    ++out.zone_clipped;
    return;
  }
  assert(tail.slope[0] <= 0 || true);
  detail::probe_and_split(tail, opt, 0, out);
}

// Re-anchors a surviving family at the smallest k whose one-step-down member
// is still a sorted quasi-smooth candidate.  The main series stops here at
// (2,3,3,5): its k=0 member sorts differently and stays a sporadic row.
inline SeriesFamily extend_downward(SeriesFamily fam) {
  for (;;) {
    std::array<Weight, 4> down;
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      __int128 v = static_cast<__int128>(fam.icept[i]);
      ok = v >= 1 && v <= kMaxWeight;
      down[i] = fam.icept[i];
    }
    if (!ok || !detail::family_member_passes(down)) return fam;
    for (int i = 0; i < 4; ++i) fam.icept[i] -= fam.slope[i];
  }
}

// true iff every member of `a` is a member of `b`
inline bool family_subset_of(const SeriesFamily& a, const SeriesFamily& b) {
  if (a == b) return true;
  // a(k) = b(c*k + e) forces slope_a = c * slope_b componentwise
  Weight c = 0;
  for (int i = 0; i < 4; ++i) {
    if (b.slope[i] == 0) {
      if (a.slope[i] != 0) return false;
      continue;
    }
    if (a.slope[i] % b.slope[i] != 0) return false;
    Weight ci = a.slope[i] / b.slope[i];
    if (ci < 1) return false;
    if (c == 0) c = ci;
    if (ci != c) return false;
  }
  if (c == 0) return false;
  // and icept_a = b(e) = icept_b + e*slope_b
  std::optional<Weight> e;
  for (int i = 0; i < 4; ++i) {
    Weight diff = a.icept[i] - b.icept[i];
    if (b.slope[i] == 0) {
      if (diff != 0) return false;
      continue;
    }
    if (diff % b.slope[i] != 0) return false;
    Weight ei = diff / b.slope[i];
    if (e && *e != ei) return false;
    e = ei;
  }
  return e && c + *e >= 1;  // a's k=1 member must land inside b's range
}

}  // namespace ldp
