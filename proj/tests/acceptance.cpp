// One line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "modtriple/app/suites.hpp"

using namespace modtriple;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Timed {
  suites::SuiteResult result;
  double seconds;
};

std::map<std::string, Timed> cache;

const Timed& run(const std::string& name) {
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  suites::SuiteConfig cfg;
  cfg.seed = kSeed;
  auto t0 = std::chrono::steady_clock::now();
  suites::SuiteResult r = suites::run_suite(name, cfg);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cache.emplace(name, Timed{std::move(r), s}).first->second;
}

// all checks of the suite whose id ends with one of the names; empty names means every check
bool checks_pass(const std::string& suite, const std::vector<std::string>& names, std::string& note) {
  const Timed& t = run(suite);
  bool ok = true;
  int seen = 0;
  for (const auto& c : t.result.checks) {
    bool wanted = names.empty();
    for (const auto& n : names)
      if (c.id == suite + "/" + n) wanted = true;
    if (!wanted) continue;
    ++seen;
    if (!c.pass()) {
      ok = false;
      note += " " + c.id + " (" + std::to_string(c.failed) + " failed of " + std::to_string(c.checked) + ", need " +
              std::to_string(c.required) + ")";
    }
  }
  if (!names.empty() && seen != static_cast<int>(names.size())) {
    ok = false;
    note += " missing checks in " + suite;
  }
  return ok;
}

bool within(const std::string& suite, double limit, std::string& note) {
  double s = run(suite).seconds;
  char buf[96];
  std::snprintf(buf, sizeof buf, " %s %.2fs (limit %.0fs)", suite.c_str(), s, limit);
  note += buf;
  return s < limit;
}

struct Criterion {
  int id;
  const char* what;
  std::function<bool(std::string&)> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "min divisor iff disjoint differences, against brute force, 1000 pairs",
       [](std::string& n) { return checks_pass("key-lem", {}, n) & within("key-lem", 10, n); }},
      {2, "separation disjoint and idempotent, 500 triples",
       [](std::string& n) { return checks_pass("separation", {}, n) & within("separation", 5, n); }},
      {3, "composites of admissible graphs admissible (500), associativity (200)",
       [](std::string& n) {
         return checks_pass("composition", {"errors", "generated-admissible", "closure", "graph-of-composite", "associativity"}, n) &
                within("composition", 60, n);
       }},
      {4, "every generated admissible component satisfies the inequality and the inclusion",
       [](std::string& n) { return checks_pass("composition", {"goes-inequality", "goes-inclusion"}, n); }},
      {5, "identity, shift and composite fixtures have the stated verdicts",
       [](std::string& n) { return checks_pass("fixtures", {}, n); }},
      {6, "bridge round trips (200) and morphism bi-implications (500)",
       [](std::string& n) { return checks_pass("bridges", {}, n) & within("bridges", 30, n); }},
      {7, "signed-pair embedding saturated (300), hom bi-implication and pullback support (200)",
       [](std::string& n) { return checks_pass("ne", {}, n); }},
      {8, "compactification level minimal and stable, 100 instances",
       [](std::string& n) { return checks_pass("compactify", {}, n); }},
      {9, "adjunction membership bi-implications (200 each), empty hom from p (50)",
       [](std::string& n) { return checks_pass("adjunctions", {}, n); }},
      {10, "factorization recombines and factors pass the irreducibility oracle, 500 products",
       [](std::string& n) { return checks_pass("kernel", {}, n) & within("kernel", 20, n); }},
      {11, "point-condition pullback and closure-criterion bi-implications, 200 each",
       [](std::string& n) { return checks_pass("point-condition", {}, n) & checks_pass("closure-criterion", {}, n); }},
      {12, "very good closed under composition, bad absorbs, reduce compatible, 300 each",
       [](std::string& n) { return checks_pass("positions", {}, n); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note += std::string(" exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("criterion %2d: %s  %s;%s\n", c.id, ok ? "PASS" : "FAIL", c.what, note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
