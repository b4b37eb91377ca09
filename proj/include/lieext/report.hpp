#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lieext/scalar.hpp"

namespace lieext {

inline constexpr const char* kToolVersion = "lieext 1.0.0";

struct CheckRecord {
  std::string id;  // "<section>/<nNN>/<name>", sortable
  std::string section;
  std::string anchor;  // the claim being checked, named in words
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
  int criterion = 0;  // numbered acceptance criterion, 0 if none; not serialized
};

struct SuiteConfig {
  std::size_t n_min = 4;
  std::size_t n_max = 9;
  std::uint64_t seed = 1;
  std::string seed_source = "default";  // default | flag | env:LIEEXT_SEED
  std::set<std::string> families;       // empty: every section
  std::size_t weight_samples = 10;
  std::size_t cocycle_samples = 20;
  unsigned jobs = 1;  // not echoed: output must not depend on it
  bool allow_large = false;
};

struct Report {
  std::string tool_version = kToolVersion;
  SuiteConfig config;
  std::vector<CheckRecord> records;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; }));
  }
  std::size_t failed() const { return records.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

enum class ReportFormat { Json, Text };

inline nlohmann::json to_json(const Scalar& s) { return to_string(s); }

inline nlohmann::json to_json(const std::vector<Scalar>& v) {
  auto a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline nlohmann::json report_to_json(const Report& r) {
  // nlohmann::json keeps object keys in a std::map, so dump() is key-sorted
  nlohmann::json j;
  j["tool_version"] = r.tool_version;
  nlohmann::json c;
  c["n_min"] = r.config.n_min;
  c["n_max"] = r.config.n_max;
  c["seed"] = r.config.seed;
  c["seed_source"] = r.config.seed_source;
  c["families"] = r.config.families.empty() ? nlohmann::json::array({"all"}) : nlohmann::json(r.config.families);
  c["weight_samples"] = r.config.weight_samples;
  c["cocycle_samples"] = r.config.cocycle_samples;
  c["allow_large"] = r.config.allow_large;
  j["config"] = c;
  auto checks = nlohmann::json::array();
  std::map<std::string, std::pair<std::size_t, std::size_t>> per;
  for (const auto& rec : r.records) {
    checks.push_back({{"id", rec.id},
                      {"section", rec.section},
                      {"anchor", rec.anchor},
                      {"inputs", rec.inputs},
                      {"expected", rec.expected},
                      {"computed", rec.computed},
                      {"pass", rec.pass}});
    auto& p = per[rec.section];
    ++p.first;
    if (rec.pass) ++p.second;
  }
  j["checks"] = checks;
  nlohmann::json s;
  s["total"] = r.records.size();
  s["passed"] = r.passed();
  s["failed"] = r.failed();
  nlohmann::json sec = nlohmann::json::object();
  for (const auto& [name, p] : per) sec[name] = {{"total", p.first}, {"passed", p.second}, {"failed", p.first - p.second}};
  s["sections"] = sec;
  j["summary"] = s;
  return j;
}

inline std::string emit_report(const Report& r, ReportFormat f) {
  if (f == ReportFormat::Json) return report_to_json(r).dump(2) + "\n";
  std::ostringstream o;
  o << r.tool_version << "  n=" << r.config.n_min << ".." << r.config.n_max << "  seed=" << r.config.seed << " ("
    << r.config.seed_source << ")\n\n";
  std::size_t w = 10;
  for (const auto& rec : r.records) w = std::max(w, rec.id.size());
  for (const auto& rec : r.records) {
    o << (rec.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(w)) << rec.id << "  " << rec.anchor << '\n';
    if (!rec.pass) o << "      expected " << rec.expected.dump() << "\n      computed " << rec.computed.dump() << '\n';
  }
  o << '\n' << r.records.size() << " checks, " << r.passed() << " passed, " << r.failed() << " failed\n";
  return o.str();
}

}  // namespace lieext
