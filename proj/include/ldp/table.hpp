#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ldp/certificates.hpp"
#include "ldp/search.hpp"
#include "ldp/serialize.hpp"

namespace ldp {

// Previously-known verdicts (the classical smooth cases and the handful of
// surfaces whose metric predates these bounds).  Loaded from a static file
// or taken from the built-in copy; the certificate engine never produces
// these marks, they only decorate the rendered table as lowercase 'y'.
struct Annotations {
  std::set<std::array<Weight, 4>> tiger_known;
  std::set<std::array<Weight, 4>> ke_known;

  static Annotations builtin() {
    Annotations a;
    a.tiger_known = {{1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 3},
                     {1, 2, 3, 5}, {1, 3, 5, 7}, {1, 3, 5, 8}};
    a.ke_known = {{1, 1, 1, 1},    {1, 1, 1, 2},    {1, 1, 2, 3},
                  {9, 15, 17, 20}, {11, 49, 69, 128}, {13, 35, 81, 128}};
    return a;
  }

  static Annotations load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open annotation file " + path);
    json j = json::parse(in);
    Annotations a;
    for (const auto& t : j.at("tiger_known"))
      a.tiger_known.insert({t.at(0).get<Weight>(), t.at(1).get<Weight>(),
                            t.at(2).get<Weight>(), t.at(3).get<Weight>()});
    for (const auto& t : j.at("ke_known"))
      a.ke_known.insert({t.at(0).get<Weight>(), t.at(1).get<Weight>(),
                         t.at(2).get<Weight>(), t.at(3).get<Weight>()});
    return a;
  }
};

struct StrengthenedRouteStats {
  std::vector<std::array<Weight, 4>> tiger_rows;  // line fact used for N
  std::vector<std::array<Weight, 4>> ke_rows;     // line fact used for Y
  int total_uses() const {
    return static_cast<int>(tiger_rows.size() + ke_rows.size());
  }
};

struct ClassificationTable {
  std::vector<ClassificationRow> rows;  // sporadic, sorted by (a3,a2,a1,a0)
  std::vector<SeriesFamily> series;
  SearchDiagnostics diagnostics;
  StrengthenedRouteStats strengthened;
};

// The whole pipeline: enumerate and solve the linear systems, filter by
// quasi-smoothness, split off the one-parameter families, then attach
// certificates and external annotations to every surviving row.
inline ClassificationTable classify_all(const SearchOptions& opt = {},
                                        const Annotations& ann =
                                            Annotations::builtin()) {
  ClassificationOutcome outcome = classify_weights(opt);
  ClassificationTable table;
  table.diagnostics = outcome.diagnostics;
  table.series = outcome.series;
  for (const auto& w : outcome.sporadic) {
    ClassificationRow row = classify_row(w);
    row.tiger_known = ann.tiger_known.count(w.a) > 0;
    row.ke_known = ann.ke_known.count(w.a) > 0;
    // a certified no-tiger row cannot simultaneously be known to have one
    assert(!(row.tiger_known && row.tiger == TigerStatus::NoTigerCertified));
    table.rows.push_back(std::move(row));
    const ClassificationRow& r = table.rows.back();
    if (r.tiger_cert.certified() &&
        r.tiger_cert.route == CertificateRoute::StrengthenedBound)
      table.strengthened.tiger_rows.push_back(w.a);
    if (r.ke_cert.certified() &&
        r.ke_cert.route == CertificateRoute::StrengthenedBound)
      table.strengthened.ke_rows.push_back(w.a);
  }
  return table;
}

// Rendered verdict marks, mirroring the classical table encoding:
// 'Y' proved here, 'y' previously known, 'N' certified impossible,
// '?' undecided.  Previously-known takes display precedence.
inline char tiger_mark(const ClassificationRow& r) {
  if (r.tiger == TigerStatus::HasTigerWitness) return 'Y';
  if (r.tiger == TigerStatus::NoTigerCertified) return 'N';
  return r.tiger_known ? 'y' : '?';
}

inline char ke_mark(const ClassificationRow& r) {
  if (r.ke_known) return 'y';
  if (r.ke != KEStatus::Unknown) return 'Y';
  return '?';
}

inline std::string csv_row(const ClassificationRow& r) {
  std::string s;
  for (int i = 0; i < 4; ++i) s += std::to_string(r.w.a[i]) + ",";
  s += std::to_string(r.w.d);
  s += std::string(",") + tiger_mark(r) + "," + ke_mark(r);
  return s;
}

inline std::string csv_row(const SeriesFamily& f) {
  std::string s;
  for (int i = 0; i < 4; ++i) s += f.weight_form(i) + ",";
  return s + f.degree_form() + ",Y,Y";
}

inline std::string render_csv(const ClassificationTable& t) {
  std::string out = "a0,a1,a2,a3,d,tiger,ke\n";
  for (const auto& f : t.series) out += csv_row(f) + "\n";
  for (const auto& r : t.rows) out += csv_row(r) + "\n";
  return out;
}

inline std::string render_table(const ClassificationTable& t) {
  std::ostringstream os;
  auto line = [&](const std::array<std::string, 7>& cells, bool head = false) {
    static const int widths[7] = {10, 10, 10, 10, 8, 6, 3};
    for (int i = 0; i < 7; ++i) {
      os.width(widths[i]);
      os << cells[i];
    }
    os << "\n";
    if (head) os << std::string(57, '-') << "\n";
  };
  line({"a0", "a1", "a2", "a3", "d", "tiger", "KE"}, true);
  for (const auto& f : t.series)
    line({f.weight_form(0), f.weight_form(1), f.weight_form(2),
          f.weight_form(3), f.degree_form(), "Y", "Y"});
  for (const auto& r : t.rows)
    line({std::to_string(r.w.a[0]), std::to_string(r.w.a[1]),
          std::to_string(r.w.a[2]), std::to_string(r.w.a[3]),
          std::to_string(r.w.d), std::string(1, tiger_mark(r)),
          std::string(1, ke_mark(r))});
  return os.str();
}

inline json strengthened_to_json(const StrengthenedRouteStats& s) {
  json tiger = json::array(), ke = json::array();
  for (const auto& a : s.tiger_rows)
    tiger.push_back(json::array({a[0], a[1], a[2], a[3]}));
  for (const auto& a : s.ke_rows)
    ke.push_back(json::array({a[0], a[1], a[2], a[3]}));
  return json{{"tiger_rows", tiger},
              {"ke_rows", ke},
              {"total_uses", s.total_uses()}};
}

inline json to_json(const ClassificationTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json o = to_json(r);
    o["tiger_mark"] = std::string(1, tiger_mark(r));
    o["ke_mark"] = std::string(1, ke_mark(r));
    rows.push_back(o);
  }
  json series = json::array();
  for (const auto& f : t.series) series.push_back(to_json(f));
  return json{{"series", series},
              {"rows", rows},
              {"strengthened_route", strengthened_to_json(t.strengthened)},
              {"diagnostics", to_json(t.diagnostics)}};
}

inline std::string render(const ClassificationTable& t,
                          const std::string& format) {
  if (format == "csv") return render_csv(t);
  if (format == "json") return to_json(t).dump(2) + "\n";
  if (format == "table") return render_table(t);
  throw std::invalid_argument("unknown format: " + format);
}

// ---- golden-table comparison -------------------------------------------

struct GoldenDiff {
  std::vector<std::string> missing;  // expected but not produced
  std::vector<std::string> extra;    // produced but not expected
  bool clean() const { return missing.empty() && extra.empty(); }
};

inline std::set<std::string> canonical_rows(const ClassificationTable& t) {
  std::set<std::string> out;
  for (const auto& f : t.series) out.insert(csv_row(f));
  for (const auto& r : t.rows) out.insert(csv_row(r));
  return out;
}

inline std::set<std::string> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table " + path);
  std::set<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#' || line.rfind("a0,", 0) == 0) continue;
    rows.insert(line);
  }
  return rows;
}

inline GoldenDiff compare_to_golden(const ClassificationTable& t,
                                    const std::string& path) {
  std::set<std::string> expected = load_golden(path);
  std::set<std::string> got = canonical_rows(t);
  GoldenDiff diff;
  for (const auto& r : expected)
    if (!got.count(r)) diff.missing.push_back(r);
  for (const auto& r : got)
    if (!expected.count(r)) diff.extra.push_back(r);
  return diff;
}

}  // namespace ldp
