#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "ldp/search.hpp"

namespace ldp {

// Plain key = value configuration, '#' comments.  Recognized keys:
//   m1, m2, m3        exponent boxes as "LO..HI"
//   format            table | csv | json
//   threads           worker count for the oracle
//   probe_window      members probed per candidate family
// Precedence is CLI flag > config file > built-in default; the environment
// variable DELPEZZO_CONFIG names the default config path.

inline std::pair<Weight, Weight> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("range must look like LO..HI: " + s);
  return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

inline std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      auto last = s.find_last_not_of(" \t");
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

inline std::map<std::string, std::string> load_config(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  return parse_config(in);
}

struct CliSettings {
  SearchOptions search;
  std::string format = "table";
  int threads = 1;
};

inline void apply_config(const std::map<std::string, std::string>& kv,
                         CliSettings& s) {
  if (auto it = kv.find("m1"); it != kv.end()) {
    auto [lo, hi] = parse_range(it->second);
    s.search.bounds.m1_lo = lo;
    s.search.bounds.m1_hi = hi;
  }
  if (auto it = kv.find("m2"); it != kv.end()) {
    auto [lo, hi] = parse_range(it->second);
    s.search.bounds.m2_lo = lo;
    s.search.bounds.m2_hi = hi;
  }
  if (auto it = kv.find("m3"); it != kv.end()) {
    auto [lo, hi] = parse_range(it->second);
    s.search.bounds.m3_lo = lo;
    s.search.bounds.m3_hi = hi;
  }
  if (auto it = kv.find("format"); it != kv.end()) s.format = it->second;
  if (auto it = kv.find("threads"); it != kv.end())
    s.threads = std::stoi(it->second);
  if (auto it = kv.find("probe_window"); it != kv.end())
    s.search.probe.window = std::stoi(it->second);
}

// config resolution used by the CLI before flags override it
inline void apply_default_config(CliSettings& s,
                                 const std::string& explicit_path = "") {
  std::string path = explicit_path;
  if (path.empty()) {
    if (const char* env = std::getenv("DELPEZZO_CONFIG")) path = env;
  }
  if (path.empty()) return;
  apply_config(load_config(path), s);
}

// "m1:1..14,m2:1..6,m3:1..2" (any subset of the three keys)
inline void apply_m_bounds_flag(const std::string& flag, SearchBounds& b) {
  std::string rest = flag;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string item = rest.substr(0, comma);
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected mN:LO..HI, got " + item);
    std::string key = item.substr(0, colon);
    auto [lo, hi] = parse_range(item.substr(colon + 1));
    if (key == "m1") {
      b.m1_lo = lo;
      b.m1_hi = hi;
    } else if (key == "m2") {
      b.m2_lo = lo;
      b.m2_hi = hi;
    } else if (key == "m3") {
      b.m3_lo = lo;
      b.m3_hi = hi;
    } else {
      throw std::invalid_argument("unknown exponent key " + key);
    }
  }
}

}  // namespace ldp
