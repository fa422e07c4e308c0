#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "ldp/config.hpp"
#include "ldp/table.hpp"

using namespace ldp;

namespace {
const std::string kGolden = std::string(LDP_DATA_DIR) + "/golden_table.csv";
const std::string kAnnotations =
    std::string(LDP_DATA_DIR) + "/annotations.json";
}  // namespace

TEST_CASE("classify_all matches the bundled golden table") {
  ClassificationTable t = classify_all();
  GoldenDiff diff = compare_to_golden(t, kGolden);
  for (const auto& r : diff.missing) MESSAGE("missing: ", r);
  for (const auto& r : diff.extra) MESSAGE("extra: ", r);
  CHECK(diff.clean());
  CHECK(t.rows.size() == 22);
  CHECK(t.series.size() == 1);
}

TEST_CASE("verdict marks mirror the classical encoding") {
  ClassificationTable t = classify_all();
  auto find = [&](std::array<Weight, 4> a) -> const ClassificationRow& {
    for (const auto& r : t.rows)
      if (r.w.a == a) return r;
    throw std::runtime_error("row not found");
  };
  CHECK(tiger_mark(find({1, 1, 1, 1})) == 'y');
  CHECK(ke_mark(find({1, 1, 1, 1})) == 'y');
  CHECK(tiger_mark(find({2, 3, 5, 9})) == '?');
  CHECK(ke_mark(find({2, 3, 5, 9})) == '?');
  CHECK(tiger_mark(find({3, 3, 5, 5})) == 'N');
  CHECK(ke_mark(find({3, 3, 5, 5})) == 'Y');
  CHECK(tiger_mark(find({3, 5, 7, 11})) == '?');
  CHECK(ke_mark(find({3, 5, 7, 11})) == 'Y');
  // engine certifies these, but they were known before: lowercase y
  CHECK(ke_mark(find({9, 15, 17, 20})) == 'y');
  CHECK(find({9, 15, 17, 20}).ke == KEStatus::Certified);
}

TEST_CASE("annotation file agrees with the built-in copy") {
  Annotations file = Annotations::load(kAnnotations);
  Annotations builtin = Annotations::builtin();
  CHECK(file.tiger_known == builtin.tiger_known);
  CHECK(file.ke_known == builtin.ke_known);
}

TEST_CASE("strengthened-route statistics") {
  ClassificationTable t = classify_all();
  // the engine's own accounting of where the line hypothesis was needed
  std::set<std::array<Weight, 4>> tiger(t.strengthened.tiger_rows.begin(),
                                        t.strengthened.tiger_rows.end());
  std::set<std::array<Weight, 4>> ke(t.strengthened.ke_rows.begin(),
                                     t.strengthened.ke_rows.end());
  CHECK(tiger == std::set<std::array<Weight, 4>>{
                     {3, 3, 5, 5}, {5, 19, 27, 50}, {7, 11, 27, 37},
                     {7, 11, 27, 44}});
  CHECK(ke == std::set<std::array<Weight, 4>>{
                  {3, 3, 5, 5}, {3, 5, 7, 11}, {3, 5, 7, 14}, {3, 5, 11, 18}});
}

TEST_CASE("csv and json renderings are lossless and deterministic") {
  ClassificationTable t = classify_all();
  std::string csv1 = render(t, "csv");
  std::string csv2 = render(t, "csv");
  CHECK(csv1 == csv2);

  // csv round trip: every non-header line reparses to a row we know
  std::istringstream in(csv1);
  std::string line;
  std::getline(in, line);
  CHECK(line == "a0,a1,a2,a3,d,tiger,ke");
  std::set<std::string> seen;
  while (std::getline(in, line))
    if (!line.empty()) seen.insert(line);
  CHECK(seen == canonical_rows(t));

  // json round trip
  json j = json::parse(render(t, "json"));
  CHECK(j.at("rows").size() == 22);
  CHECK(j.at("series").size() == 1);
  CHECK(j.at("series").at(0).at("weights") ==
        json::array({"2", "2k+1", "2k+1", "4k+1"}));
  CHECK(j.at("series").at(0).at("degree") == "8k+4");
  CHECK(j.at("diagnostics").at("final_sporadic") == 22);
  // every row's weights parse back to the original tuple
  for (const auto& row : j.at("rows")) {
    auto a = row.at("weights");
    WeightVector w = validate_weights(a.at(0).get<Weight>(),
                                      a.at(1).get<Weight>(),
                                      a.at(2).get<Weight>(),
                                      a.at(3).get<Weight>());
    CHECK(w.d == row.at("d").get<Weight>());
  }

  CHECK_THROWS_AS(render(t, "yaml"), std::invalid_argument);
}

TEST_CASE("golden diff detects a sabotaged table") {
  SearchOptions narrow;
  narrow.bounds.m3_hi = 1;  // drops the series and more
  ClassificationTable t = classify_all(narrow);
  GoldenDiff diff = compare_to_golden(t, kGolden);
  CHECK_FALSE(diff.clean());
  CHECK_FALSE(diff.missing.empty());
}

TEST_CASE("config parsing") {
  CHECK(parse_range("1..14") == std::pair<Weight, Weight>{1, 14});
  CHECK_THROWS_AS(parse_range("14"), std::invalid_argument);

  std::istringstream cfg(
      "# comment\n"
      "m1 = 1..10\n"
      "m3=1..1   # narrow\n"
      "format = csv\n"
      "threads = 3\n");
  auto kv = parse_config(cfg);
  CliSettings s;
  apply_config(kv, s);
  CHECK(s.search.bounds.m1_hi == 10);
  CHECK(s.search.bounds.m3_hi == 1);
  CHECK(s.search.bounds.m2_hi == 6);  // untouched default
  CHECK(s.format == "csv");
  CHECK(s.threads == 3);

  SearchBounds b;
  apply_m_bounds_flag("m1:2..12,m3:1..2", b);
  CHECK(b.m1_lo == 2);
  CHECK(b.m1_hi == 12);
  CHECK(b.m3_hi == 2);
  CHECK_THROWS_AS(apply_m_bounds_flag("m9:1..2", b), std::invalid_argument);
}

TEST_CASE("environment variable points at a config file") {
  std::string path = "/tmp/delpezzo_test_env.cfg";
  {
    std::ofstream out(path);
    out << "format = json\n";
  }
  setenv("DELPEZZO_CONFIG", path.c_str(), 1);
  CliSettings s;
  apply_default_config(s);
  CHECK(s.format == "json");
  unsetenv("DELPEZZO_CONFIG");
  std::remove(path.c_str());
}
