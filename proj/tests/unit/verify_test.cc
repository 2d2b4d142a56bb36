#include <gtest/gtest.h>

#include "zetareg/errors.hpp"
#include "zetareg/verify.hpp"

namespace zetareg {
namespace {

TEST(VerifyTest, EverySuitePassesOnDefaultSeed) {
  for (std::string_view name : kSuiteNames) {
    const auto suite = run_suite(name, 20, 0, 1e-10);
    EXPECT_EQ(suite.suite, name);
    EXPECT_GT(suite.reports.size(), 0u);
    EXPECT_EQ(suite.pass_count + suite.fail_count, suite.reports.size());
    for (const auto& r : suite.reports) {
      EXPECT_TRUE(r.pass) << name << " " << r.identity << " " << r.params << " err=" << r.abs_err;
    }
  }
}

TEST(VerifyTest, Deterministic) {
  const auto a = run_suites("all", 5, 42, 1e-10);
  const auto b = run_suites("all", 5, 42, 1e-10);
  ASSERT_EQ(a.size(), std::size(kSuiteNames));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    ASSERT_EQ(a[s].reports.size(), b[s].reports.size());
    for (std::size_t k = 0; k < a[s].reports.size(); ++k) {
      EXPECT_EQ(a[s].reports[k].params, b[s].reports[k].params);
      EXPECT_EQ(a[s].reports[k].lhs, b[s].reports[k].lhs);
      EXPECT_EQ(a[s].reports[k].rhs, b[s].reports[k].rhs);
    }
  }
}

TEST(VerifyTest, ZeroSamplesAndUnknownSuite) {
  for (std::string_view name : kSuiteNames) EXPECT_TRUE(run_suite(name, 0, 1, 1e-10).reports.empty());
  EXPECT_FALSE(is_suite_name("bogus"));
  EXPECT_TRUE(is_suite_name("qgamma"));
  EXPECT_THROW(run_suite("bogus", 1, 0, 1e-10), DomainError);
  EXPECT_THROW(run_suites("bogus", 1, 0, 1e-10), DomainError);
}

}  // namespace
}  // namespace zetareg
