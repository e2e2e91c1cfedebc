#include <gtest/gtest.h>

#include "modtriple/app/random_gen.hpp"
#include "modtriple/app/suites.hpp"
#include "modtriple/error.hpp"

namespace modtriple {
namespace {

using suites::SuiteConfig;

TEST(SuiteList, AllExpands) { EXPECT_EQ(suites::parse_suite_list("all"), suites::suite_names()); }

TEST(SuiteList, UnknownRejected) {
  try {
    suites::parse_suite_list("key-lem,bogus");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(SuiteRun, EverySuitePassesOnFewSamples) {
  for (const auto& name : suites::suite_names()) {
    SuiteConfig cfg;
    cfg.seed = 3;
    cfg.samples = 3;
    suites::SuiteResult r = suites::run_suite(name, cfg);
    EXPECT_TRUE(r.pass()) << name << "\n" << suites::report_json(cfg, {r}).dump(2);
  }
}

TEST(SuiteRun, ReportDeterministicApartFromTiming) {
  SuiteConfig cfg;
  cfg.seed = 11;
  cfg.samples = 2;
  cfg.suites = {"kernel", "composition", "adjunctions"};
  auto a = suites::report_json(cfg, suites::run_suites(cfg));
  auto b = suites::report_json(cfg, suites::run_suites(cfg));
  ASSERT_TRUE(a.contains("timing"));
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a, b);
}

TEST(SuiteRun, SeedChangesSamples) {
  SuiteConfig c1, c2;
  c1.seed = 1;
  c2.seed = 2;
  c1.samples = c2.samples = 2;
  auto r1 = suites::run_suite("key-lem", c1), r2 = suites::run_suite("key-lem", c2);
  EXPECT_NE(r1.checks.front().inputs["seed"], r2.checks.front().inputs["seed"]);
}

TEST(SuiteRun, RequiredCountsEnforced) {
  suites::CheckRecord rec;
  rec.required = 5;
  rec.checked = 4;
  EXPECT_FALSE(rec.pass());
  rec.checked = 5;
  EXPECT_TRUE(rec.pass());
  rec.failed = 1;
  EXPECT_FALSE(rec.pass());
}

TEST(Rng, RangeAndReproducible) {
  gen::Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t x = a.uniform(-3, 5);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 5);
    EXPECT_EQ(x, b.uniform(-3, 5));
  }
}

TEST(Rng, SeedMixingSeparatesLabels) {
  EXPECT_NE(gen::mix_seed(0, "kernel"), gen::mix_seed(0, "divisors"));
  EXPECT_NE(gen::mix_seed(0, "kernel"), gen::mix_seed(1, "kernel"));
  EXPECT_EQ(gen::mix_seed(9, "ne"), gen::mix_seed(9, "ne"));
}

}  // namespace
}  // namespace modtriple
