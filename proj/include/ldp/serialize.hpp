#pragma once

#include <string>

#include <json.hpp>

#include "ldp/certificates.hpp"
#include "ldp/families.hpp"
#include "ldp/quasismooth.hpp"
#include "ldp/search.hpp"
#include "ldp/series.hpp"

// JSON views of the library types.  Weight vectors serialize as plain
// 4-tuples, rationals as "p/q" strings, witness monomials as exponent
// 4-tuples; the schemas are documented in the README.

namespace ldp {

using json = nlohmann::json;

inline json to_json(const WeightVector& w) {
  return json::array({w.a[0], w.a[1], w.a[2], w.a[3]});
}

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const ExponentVector& e) {
  return json::array({e.b[0], e.b[1], e.b[2], e.b[3]});
}

inline json to_json(const ConditionReport& r) {
  json vertex = json::array();
  for (int i = 0; i < 4; ++i) {
    const auto& v = r.vertex[i];
    json o{{"index", i}, {"ok", v.ok}};
    if (v.ok) {
      o["m"] = v.m;
      o["j"] = v.j;
      o["monomial"] = to_json(v.monomial(i));
    }
    vertex.push_back(o);
  }
  json lines = json::array();
  json axes = json::array();
  for (int p = 0; p < 6; ++p) {
    auto [i, j] = kIndexPairs[p];
    const auto& l = r.lines[p];
    json lo{{"pair", {i, j}}, {"ok", l.ok}, {"vacuous", l.vacuous}};
    if (l.ok && !l.vacuous) lo["monomial"] = to_json(l.monomial(i, j));
    lines.push_back(lo);
    const auto& ax = r.axes[p];
    json ao{{"pair", {i, j}}, {"ok", ax.ok}};
    if (ax.ok) {
      if (ax.kind == AxisWitness::Kind::PurePair) {
        ao["kind"] = "pure-pair";
        ao["monomial"] = to_json(ax.pure_monomial(i, j));
      } else {
        ao["kind"] = "mixed";
        ao["monomial_k"] = to_json(ax.mixed_monomial_k(i, j));
        ao["monomial_l"] = to_json(ax.mixed_monomial_l(i, j));
      }
    }
    axes.push_back(ao);
  }
  return json{{"weights", to_json(r.w)},     {"d", r.w.d},
              {"vertex", vertex},            {"vertex_ok", r.vertex_ok},
              {"singular_lines", lines},     {"lines_ok", r.lines_ok},
              {"axes", axes},                {"axes_ok", r.axes_ok},
              {"quasismooth", r.overall}};
}

inline json to_json(const Comparison& c) {
  return json{{"comparison", c.to_string()},
              {"lhs", c.lhs_value.to_string()},
              {"relation", c.relation},
              {"rhs", c.rhs_value.to_string()},
              {"holds", c.holds}};
}

inline json to_json(const CertificateResult& r) {
  json o;
  o["verdict"] = r.certified() ? "certified" : "unknown";
  if (r.route)
    o["route"] = *r.route == CertificateRoute::PlainBound ? "plain"
                                                          : "strengthened";
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  o["checks"] = checks;
  if (r.line_free) o["line_not_contained"] = *r.line_free;
  return o;
}

inline const char* to_label(TigerStatus s) {
  switch (s) {
    case TigerStatus::HasTigerWitness: return "has-tiger-witness";
    case TigerStatus::NoTigerCertified: return "no-tiger-certified";
    default: return "unknown";
  }
}

inline const char* to_label(KEStatus s) {
  switch (s) {
    case KEStatus::Certified: return "ke-certified";
    case KEStatus::SeriesProof: return "ke-series-proof";
    default: return "unknown";
  }
}

inline json to_json(const ClassificationRow& row) {
  json o{{"weights", to_json(row.w)},
         {"d", row.w.d},
         {"tiger", to_label(row.tiger)},
         {"ke", to_label(row.ke)},
         {"tiger_certificate", to_json(row.tiger_cert)},
         {"ke_certificate", to_json(row.ke_cert)}};
  if (row.series_k) o["series_k"] = *row.series_k;
  if (row.tiger_known) o["tiger_previously_known"] = true;
  if (row.ke_known) o["ke_previously_known"] = true;
  return o;
}

inline json to_json(const SeriesFamily& f) {
  return json{{"weights",
               {f.weight_form(0), f.weight_form(1), f.weight_form(2),
                f.weight_form(3)}},
              {"degree", f.degree_form()},
              {"slope", {f.slope[0], f.slope[1], f.slope[2], f.slope[3]}},
              {"intercept", {f.icept[0], f.icept[1], f.icept[2], f.icept[3]}},
              {"k_min", 1}};
}

inline json to_json(const SearchDiagnostics& d) {
  json o{{"configurations", d.configurations},
         {"refuted", d.refuted},
         {"finite_branch", d.finite_branch},
         {"series_branch", d.series_branch},
         {"degenerate_branch", d.degenerate_branch},
         {"finite_raw", d.finite_raw},
         {"series_raw", d.series_raw},
         {"deduped", d.deduped},
         {"final_sporadic", d.final_sporadic},
         {"final_series", d.final_series},
         {"zone_clipped_families", d.zone_clipped_families},
         {"probe_fallback_families", d.probe_fallback_families},
         {"max_witness_m",
          {d.max_witness_m[1], d.max_witness_m[2], d.max_witness_m[3]}},
         {"reference_finite_raw", SearchDiagnostics::kReferenceFiniteRaw},
         {"reference_series_raw", SearchDiagnostics::kReferenceSeriesRaw}};
  o["warnings"] = d.warnings;
  return o;
}

inline json to_json(const SeriesReport& r) {
  json terms = json::array();
  for (const auto& t : r.equation_terms)
    terms.push_back(json{{"term", t.label},
                         {"monomial", to_json(t.monomial)},
                         {"degree", t.degree}});
  return json{{"k", r.k},
              {"weights", to_json(r.w)},
              {"d", r.w.d},
              {"equation_terms", terms},
              {"ci_cj", to_json(r.intersections.ci_cj)},
              {"ci_o1", to_json(r.intersections.ci_o1)},
              {"ci_ci", to_json(r.intersections.ci_ci)},
              {"smooth_mult_bound", to_json(r.lc.smooth_mult_bound)},
              {"smooth_bound_ok", r.lc.smooth_bound_ok},
              {"p3_mult_bound", to_json(r.lc.p3_mult_bound)},
              {"ai_bound", to_json(r.lc.ai_bound)},
              {"dprime_bound", to_json(r.lc.dprime_bound)},
              {"lc_total", to_json(r.lc.lc_total)},
              {"lc_inequality_holds", r.lc.lc_inequality_holds},
              {"tiger_witness_mult", to_json(r.tiger_witness_mult)},
              {"singular_points",
               {{"p3_index", r.singular_points.p3_index},
                {"pa_count", r.singular_points.pa_count},
                {"pa_index", r.singular_points.pa_index},
                {"pa_dprime_bound",
                 to_json(r.singular_points.pa_dprime_bound)}}}};
}

}  // namespace ldp
