#include <gtest/gtest.h>

#include "qcactus/suites/suites.hpp"

using namespace qcactus::suites;

namespace {

nlohmann::json without_timing(nlohmann::json report) {
  for (auto& c : report.at("checks")) c.erase("wall_time");
  return report;
}

}  // namespace

TEST(Suites, RunCheckOutcomes) {
  const Check ok = run_check("ok", "a", [] { return std::optional<nlohmann::json>{}; });
  EXPECT_EQ(ok.status, Status::Pass);
  EXPECT_TRUE(ok.witness.is_null());
  const Check bad = run_check("bad", "a", [] { return std::optional<nlohmann::json>{nlohmann::json{{"x", 1}}}; });
  EXPECT_EQ(bad.status, Status::Fail);
  EXPECT_EQ(bad.witness.at("x"), 1);
  const Check thrown = run_check("thrown", "a", []() -> std::optional<nlohmann::json> { throw std::runtime_error("boom"); });
  EXPECT_EQ(thrown.status, Status::Fail);
  EXPECT_EQ(thrown.witness.at("exception"), "boom");
  EXPECT_TRUE(all_passed({ok}));
  EXPECT_FALSE(all_passed({ok, bad}));
}

TEST(Suites, ReportSchema) {
  const auto checks = run_suite("qarith", 3);
  const auto report = make_report({{"seed", 3}}, checks);
  EXPECT_EQ(report.at("version"), kVersion);
  EXPECT_EQ(report.at("config").at("seed"), 3);
  ASSERT_EQ(report.at("checks").size(), checks.size());
  for (const auto& c : report.at("checks"))
    for (const char* key : {"name", "anchor", "status", "witness", "wall_time"}) EXPECT_TRUE(c.contains(key)) << key;
}

TEST(Suites, SeededRunsAreReproducible) {
  for (const std::string name : {"crystal", "gk"}) {
    const auto a = without_timing(make_report({}, run_suite(name, 7)));
    const auto b = without_timing(make_report({}, run_suite(name, 7)));
    EXPECT_EQ(a, b) << name;
    EXPECT_TRUE(all_passed(run_suite(name, 1))) << name;
  }
  EXPECT_THROW(run_suite("nope", 1), std::invalid_argument);
}

TEST(Suites, ConjectureSweepOrdering) {
  const auto single = conjecture_sweep(0, 4);
  ASSERT_EQ(single.size(), 1U);
  EXPECT_EQ(single[0].status, Status::Pass);
  const auto sweep = conjecture_sweep(3, 3);
  ASSERT_EQ(sweep.size(), 10U);
  EXPECT_TRUE(all_passed(sweep));
  const auto serial = conjecture_sweep(3, 1);
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    EXPECT_EQ(sweep[k].name, serial[k].name);
    EXPECT_EQ(sweep[k].details, serial[k].details);
  }
  EXPECT_EQ(sweep.back().details.at("dim"), 10);
}
