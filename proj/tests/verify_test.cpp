#include <gtest/gtest.h>

#include <json.hpp>

#include "tribo/error.hpp"
#include "tribo/verify.hpp"

namespace tribo {
namespace {

SuiteConfig all_presets() {
  SuiteConfig config;
  config.presets.assign(kAllPresets.begin(), kAllPresets.end());
  return config;
}

TEST(VerifySuiteTest, PresetsPassEveryCategory) {
  const auto report = run_suite(all_presets());
  EXPECT_TRUE(report.passed());
  ASSERT_EQ(report.categories.size(), kCategoryNames.size());
  for (auto name : kCategoryNames) {
    const auto& c = report.categories.at(std::string(name));
    EXPECT_GT(c.run, 0u) << name;
    EXPECT_EQ(c.failed, 0u) << name;
    if (is_exact_category(name)) {
      EXPECT_EQ(c.max_rel_residual, 0.0) << name;
    } else {
      EXPECT_LE(c.max_rel_residual, default_tolerances().at(std::string(name))) << name;
    }
  }
}

TEST(VerifySuiteTest, TableErratumIsReported) {
  const auto report = run_suite(all_presets());
  bool found = false;
  for (const auto& note : report.errata) found = found || note.find("third_order_jacobsthal") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(VerifySuiteTest, TamperedSummationConstantFails) {
  auto config = all_presets();
  config.tables.table3.at(0).subtracted[3] += 1;
  const auto report = run_suite(config);
  EXPECT_GE(report.categories.at("table3").failed, 1u);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.categories.at("p3-oct-sum").failed, 0u);
}

TEST(VerifySuiteTest, TamperedShiftRowFails) {
  auto config = all_presets();
  config.tables.table4.at(1).coefficients[0].front().first += 1;
  const auto report = run_suite(config);
  EXPECT_GE(report.categories.at("table4-p5").failed, 1u);
}

TEST(VerifySuiteTest, RandomSetsHoldWithCorrectedSign) {
  SuiteConfig config;
  config.random_sets = 200;
  config.seed = 1;
  const auto report = run_suite(config);
  EXPECT_EQ(report.categories.at("p2-sum").failed, 0u);
  EXPECT_GT(report.categories.at("p2-sum").run, 0u);
  EXPECT_GE(report.printed_sign_counterexamples, 1u);
  EXPECT_TRUE(report.passed());
}

TEST(VerifySuiteTest, DegenerateSetsAreSkippedNotFailed) {
  SuiteConfig config;
  config.extra_params.push_back(RecurrenceParams::from_ints(1, 1, -1, 0, 1, 1));  // delta = 0
  config.extra_params.push_back(RecurrenceParams::from_ints(0, 3, 0, 0, 1, 1));   // three real roots
  const auto report = run_suite(config);
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.categories.at("p2-sum").skipped, 0u);
  EXPECT_GT(report.categories.at("p3-oct-sum").skipped, 0u);
  for (auto name : {"binet-v", "binet-oct", "p4-norm", "p6-quad"}) {
    EXPECT_GT(report.categories.at(name).skipped, 0u) << name;
  }
  EXPECT_GT(report.categories.at("recurrence").run, 0u);
}

TEST(VerifySuiteTest, InvalidConfigThrows) {
  auto config = all_presets();
  config.n_max = 2;
  EXPECT_THROW(run_suite(config), DomainError);
  config = all_presets();
  config.m_max = 2;
  EXPECT_THROW(run_suite(config), DomainError);
  config = all_presets();
  config.tolerances["p4-norm"] = 0.0;
  EXPECT_THROW(run_suite(config), DomainError);
}

TEST(VerifySuiteTest, JsonSchema) {
  auto config = all_presets();
  config.seed = 42;
  const auto j = nlohmann::json::parse(run_suite(config).to_json());
  EXPECT_EQ(j.at("seed").get<int>(), 42);
  EXPECT_TRUE(j.at("errata").is_array());
  for (auto name : kCategoryNames) {
    const auto& c = j.at("categories").at(std::string(name));
    EXPECT_TRUE(c.at("run").is_number_integer());
    EXPECT_TRUE(c.at("failed").is_number_integer());
    EXPECT_TRUE(c.at("skipped").is_number_integer());
    EXPECT_TRUE(c.at("max_rel_residual").is_number());
  }
}

TEST(VerifySuiteTest, DeterministicAndThreadIndependent) {
  auto config = all_presets();
  config.random_sets = 30;
  config.seed = 9;
  const auto serial = run_suite(config).to_json();
  EXPECT_EQ(run_suite(config).to_json(), serial);
  config.threads = 4;
  EXPECT_EQ(run_suite(config).to_json(), serial);
  EXPECT_EQ(run_suite(config).to_text(), [&] {
    auto c = config;
    c.threads = 1;
    return run_suite(c).to_text();
  }());
}

TEST(CategoryResultTest, MergeIsOrderIndependent) {
  CategoryResult a, b, c;
  a.record(true, 1e-12, 1e-13);
  b.record(false, 3.0, 0.5);
  c.skipped = 2;
  c.record(true);
  CategoryResult ab = a, ba = b;
  ab.merge(b);
  ab.merge(c);
  ba.merge(c);
  ba.merge(a);
  EXPECT_EQ(ab, ba);
  EXPECT_EQ(ab.run, 3u);
  EXPECT_EQ(ab.failed, 1u);
  EXPECT_EQ(ab.skipped, 2u);
  EXPECT_EQ(ab.max_rel_residual, 0.5);
}

TEST(RandomParamsTest, DeterministicAndBounded) {
  const auto a = random_params(1, 100, {.coefficient_bound = 5, .initial_bound = 5, .require_nonzero_delta = true});
  const auto b = random_params(1, 100, {.coefficient_bound = 5, .initial_bound = 5, .require_nonzero_delta = true});
  ASSERT_EQ(a.size(), 100u);
  EXPECT_EQ(a, b);
  EXPECT_NE(random_params(2, 100), random_params(1, 100));
  for (const auto& p : a) {
    EXPECT_FALSE(p.delta().is_zero());
    for (const Scalar& x : {p.r(), p.s(), p.t(), p.v0(), p.v1(), p.v2()}) {
      EXPECT_LE(abs(x.as_int()), 5);
    }
  }
}

}  // namespace
}  // namespace tribo
