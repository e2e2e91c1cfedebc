#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modtriple/app/random_gen.hpp"
#include "modtriple/app/text_io.hpp"

namespace modtriple::suites {

using io::json;

struct SuiteConfig {
  std::uint64_t seed = 0;
  int samples = 0;  // 0: each suite's own default counts
  gen::Bounds bounds;
  std::vector<std::string> suites;
};

// One property checked over many generated instances.
struct CheckRecord {
  std::string id;
  json inputs;                // what was sampled, enough to rerun
  std::int64_t checked = 0;   // instances evaluated
  std::int64_t failed = 0;
  std::int64_t required = 0;  // minimum number of evaluated instances
  std::optional<json> counterexample;  // first failure, with its inputs
  bool pass() const { return failed == 0 && checked >= required; }
};

struct SuiteResult {
  std::string name;
  std::vector<CheckRecord> checks;
  double seconds = 0;
  bool pass() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// expands "all" and validates names; InvalidArgument on unknown ones
std::vector<std::string> parse_suite_list(const std::string& csv);

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<SuiteResult> run_suites(const SuiteConfig& cfg);

// schema 1 report; everything except "timing" is a function of the config
json report_json(const SuiteConfig& cfg, const std::vector<SuiteResult>& results);

}  // namespace modtriple::suites
