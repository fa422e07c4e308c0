#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ldp/families.hpp"
#include "ldp/linear_system.hpp"
#include "ldp/quasismooth.hpp"
#include "ldp/weights.hpp"

namespace ldp {

struct SearchOptions {
  SearchBounds bounds;
  FamilyProbeOptions probe;
};

// Raised when the pipeline's completeness assumptions are violated
// (a consistent degenerate system, or a consistent singular m0); both are
// expected never to happen and must not be skipped silently.
class SearchInvariantViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SearchDiagnostics {
  std::int64_t configurations = 0;
  std::int64_t refuted = 0;  // rows of the form a_i + a_j = d: unsolvable
  std::int64_t finite_branch = 0, series_branch = 0, degenerate_branch = 0;
  // raw counts before any deduplication or validation
  std::int64_t finite_raw = 0;  // all-positive integral finite solutions
  std::int64_t series_raw = 0;  // series families with a nonempty range
  std::int64_t deduped = 0;     // distinct valid sorted tuples, pre-filter
  std::int64_t final_sporadic = 0, final_series = 0;
  int zone_clipped_families = 0;
  int probe_fallback_families = 0;
  // largest minimal vertex-witness exponent per sorted index over the final
  // rows; hitting the configured bound suggests the box may be too small
  std::array<Weight, 4> max_witness_m{0, 0, 0, 0};
  std::vector<std::string> warnings;

  // Raw-solution counts reported by the original run of this enumeration.
  // Its counting convention (permutations, dedup stage, bounds) is not
  // recorded anywhere, so these serve as a soft diagnostic only.
  static constexpr std::int64_t kReferenceFiniteRaw = 1362;
  static constexpr std::int64_t kReferenceSeriesRaw = 405;
};

struct ClassificationOutcome {
  std::vector<WeightVector> sporadic;  // sorted by (a3,a2,a1,a0)
  std::vector<SeriesFamily> series;
  SearchDiagnostics diagnostics;
};

namespace detail {

inline bool table_order(const WeightVector& x, const WeightVector& y) {
  return std::array{x.a[3], x.a[2], x.a[1], x.a[0]} <
         std::array{y.a[3], y.a[2], y.a[1], y.a[0]};
}

// smallest m >= 1 with m*a_i + a_j = d for some j
inline std::optional<Weight> min_vertex_witness(const WeightVector& w, int i) {
  std::optional<Weight> best;
  for (int j = 0; j < 4; ++j) {
    Weight r = w.d - w.a[j];
    if (r < w.a[i] || r % w.a[i] != 0) continue;
    Weight m = r / w.a[i];
    if (!best || m < *best) best = m;
  }
  return best;
}

}  // namespace detail

// The full weight-level pipeline: enumerate configurations, solve each with
// m0 symbolic, instantiate both branches, canonicalize, deduplicate, filter
// by quasi-smoothness and separate the surviving one-parameter families from
// the sporadic tuples.
inline ClassificationOutcome classify_weights(const SearchOptions& opt = {}) {
  ClassificationOutcome out;
  SearchDiagnostics& diag = out.diagnostics;

  const auto configs = enumerate_configurations(opt.bounds);
  diag.configurations = static_cast<std::int64_t>(configs.size());

  std::set<std::array<Weight, 4>> pool;  // valid sorted candidate tuples
  FamilyExtraction extraction;
  std::vector<std::string> violations;

  auto offer_tuple = [&](std::array<Weight, 4> t) {
    std::sort(t.begin(), t.end());
    if (weights_valid_sorted(t[0], t[1], t[2], t[3])) pool.insert(t);
  };

  for (const auto& cfg : configs) {
    if (provably_unsolvable(cfg)) {
      ++diag.refuted;
      continue;
    }
    SymbolicSolution sol = solve_symbolic(cfg);
    switch (sol.branch) {
      case SolutionBranch::Finite: {
        ++diag.finite_branch;
        FiniteInstantiation inst = instantiate_finite(sol, cfg);
        if (inst.singular_consistent)
          violations.push_back(
              "consistent singular system at m0=" +
              std::to_string(inst.singular_m0) + " (u=" +
              std::to_string(cfg.u[0]) + std::to_string(cfg.u[1]) +
              std::to_string(cfg.u[2]) + std::to_string(cfg.u[3]) + ", m=" +
              std::to_string(cfg.m[1]) + "," + std::to_string(cfg.m[2]) +
              "," + std::to_string(cfg.m[3]) + ")");
        diag.finite_raw += static_cast<std::int64_t>(inst.solutions.size());
        for (const auto& s : inst.solutions) offer_tuple(s.a);
        break;
      }
      case SolutionBranch::Series: {
        ++diag.series_branch;
        if (auto fam = instantiate_series(sol, cfg)) {
          ++diag.series_raw;
          extract_from_raw_family(*fam, opt.probe, extraction);
        }
        break;
      }
      case SolutionBranch::Degenerate: {
        ++diag.degenerate_branch;
        if (sol.gamma0 == 0)
          violations.push_back(
              "degenerate system with gamma0 == 0 (u=" +
              std::to_string(cfg.u[0]) + std::to_string(cfg.u[1]) +
              std::to_string(cfg.u[2]) + std::to_string(cfg.u[3]) + ", m=" +
              std::to_string(cfg.m[1]) + "," + std::to_string(cfg.m[2]) +
              "," + std::to_string(cfg.m[3]) + ")");
        // gamma0 != 0 makes the system inconsistent for every m0: no
        // solutions can be missed by skipping it
        break;
      }
    }
  }
  if (!violations.empty()) {
    std::string msg = "search invariants violated:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw SearchInvariantViolation(msg);
  }

  diag.zone_clipped_families = extraction.zone_clipped;
  diag.probe_fallback_families = extraction.probe_fallbacks;
  for (const auto& t : extraction.members) offer_tuple(t);

  // canonicalize the surviving families: re-anchor, deduplicate, absorb
  // sub-progressions of coarser step
  std::set<SeriesFamily> fams;
  for (const auto& f : extraction.families) fams.insert(extend_downward(f));
  std::vector<SeriesFamily> families(fams.begin(), fams.end());
  std::vector<SeriesFamily> kept;
  for (const auto& f : families) {
    bool absorbed = false;
    for (const auto& g : families)
      if (!(f == g) && family_subset_of(f, g)) {
        absorbed = true;
        break;
      }
    if (!absorbed) kept.push_back(f);
  }

  diag.deduped = static_cast<std::int64_t>(pool.size());

  for (const auto& t : pool) {
    if (!passes_quasismooth_conditions(t[0], t[1], t[2], t[3])) continue;
    WeightVector w;
    w.a = t;
    w.d = t[0] + t[1] + t[2] + t[3] - 1;
    bool in_series = false;
    for (const auto& f : kept) in_series = in_series || f.contains(w);
    if (!in_series) out.sporadic.push_back(w);
  }
  std::sort(out.sporadic.begin(), out.sporadic.end(), detail::table_order);
  out.series = std::move(kept);

  diag.final_sporadic = static_cast<std::int64_t>(out.sporadic.size());
  diag.final_series = static_cast<std::int64_t>(out.series.size());

  // vertex-witness saturation statistics over everything we accepted
  std::vector<WeightVector> sampled = out.sporadic;
  for (const auto& f : out.series)
    for (Weight k = 1; k <= 2; ++k)
      if (f.member_tuple(k)) sampled.push_back(f.member(k));
  for (const auto& w : sampled)
    for (int i = 0; i < 4; ++i)
      if (auto m = detail::min_vertex_witness(w, i))
        diag.max_witness_m[i] = std::max(diag.max_witness_m[i], *m);

  const std::array<Weight, 4> hi = {0, opt.bounds.m1_hi, opt.bounds.m2_hi,
                                    opt.bounds.m3_hi};
  for (int i = 1; i < 4; ++i) {
    if (i == 3 && hi[3] >= 2) continue;  // m3 <= 2 holds a priori
    if (diag.max_witness_m[i] >= hi[i])
      diag.warnings.push_back(
          "m" + std::to_string(i) + " witness bound saturated (used " +
          std::to_string(diag.max_witness_m[i]) + ", box ends at " +
          std::to_string(hi[i]) + "); enlarge the box to rule out" +
          " missed solutions");
  }
  if (diag.probe_fallback_families > 0)
    diag.warnings.push_back(
        "some solution families had no periodic quasi-smoothness pattern;"
        " their probed members were kept individually");
  return out;
}

// Independent check: a direct quadruple loop over all sorted tuples with
// a3 <= max_a3, with no linear-system machinery involved.
inline std::vector<WeightVector> brute_force_oracle(Weight max_a3,
                                                    int threads = 1) {
  std::vector<WeightVector> out;
  if (max_a3 < 1) return out;
  const int n = static_cast<int>(max_a3);

  // pairwise gcd table: the triple-coprimality test dominates otherwise
  std::vector<std::uint16_t> gcd_table;
  const bool use_table = max_a3 <= 4096;
  if (use_table) {
    gcd_table.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (int x = 0; x <= n; ++x)
      for (int y = 0; y <= x; ++y) {
        auto g = static_cast<std::uint16_t>(std::gcd(x, y));
        gcd_table[static_cast<std::size_t>(x) * (n + 1) + y] = g;
        gcd_table[static_cast<std::size_t>(y) * (n + 1) + x] = g;
      }
  }
  auto G = [&](Weight x, Weight y) -> Weight {
    if (use_table)
      return gcd_table[static_cast<std::size_t>(x) * (n + 1) + y];
    return std::gcd(x, y);
  };

  auto scan_a0 = [&](Weight a0, std::vector<WeightVector>& local) {
    for (Weight a1 = a0; a1 <= max_a3; ++a1) {
      const Weight g01 = G(a0, a1);
      for (Weight a2 = a1; a2 <= max_a3; ++a2) {
        if (G(g01, a2) != 1) continue;  // triple {a0,a1,a2}
        const Weight g02 = G(a0, a2), g12 = G(a1, a2);
        for (Weight a3 = a2; a3 <= max_a3; ++a3) {
          if (G(g01, a3) != 1 || G(g02, a3) != 1 || G(g12, a3) != 1) continue;
          if (!passes_quasismooth_conditions(a0, a1, a2, a3)) continue;
          WeightVector w;
          w.a = {a0, a1, a2, a3};
          w.d = a0 + a1 + a2 + a3 - 1;
          local.push_back(w);
        }
      }
    }
  };

  if (threads <= 1) {
    for (Weight a0 = 1; a0 <= max_a3; ++a0) scan_a0(a0, out);
  } else {
    std::vector<std::vector<WeightVector>> parts(threads);
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        for (Weight a0 = 1 + t; a0 <= max_a3; a0 += threads)
          scan_a0(a0, parts[t]);
      });
    for (auto& th : workers) th.join();
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end(), detail::table_order);
  return out;
}

// The classification restricted to a3 <= max_a3, with every family expanded
// into its members; comparable 1:1 against brute_force_oracle(max_a3).
inline std::vector<WeightVector> restrict_to_max_a3(
    const ClassificationOutcome& outcome, Weight max_a3) {
  std::vector<WeightVector> out;
  for (const auto& w : outcome.sporadic)
    if (w.a[3] <= max_a3) out.push_back(w);
  for (const auto& f : outcome.series)
    for (Weight k = 1;; ++k) {
      auto t = f.member_tuple(k);
      if (!t || (*t)[3] > max_a3) break;
      out.push_back(f.member(k));
    }
  std::sort(out.begin(), out.end(), detail::table_order);
  return out;
}

}  // namespace ldp
