#include <gtest/gtest.h>

#include "contact/suite.hpp"
#include "helpers.hpp"

using namespace contact;

TEST(Suite, NamesRoundTrip) {
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(suite_name(s)), s);
  EXPECT_FALSE(parse_suite("nonsense").has_value());
  EXPECT_EQ(all_suites().size(), 9u);
}

TEST(Suite, DeterministicForAConfig) {
  SuiteConfig cfg;
  cfg.n = 2;
  cfg.seed = 11;
  cfg.samples = 10;
  for (Suite s : {Suite::Exactness, Suite::Sl2, Suite::Equivariance}) {
    const auto first = run_suite(s, cfg);
    const auto second = run_suite(s, cfg);
    ASSERT_EQ(first.size(), second.size());
    for (std::size_t k = 0; k < first.size(); ++k) {
      EXPECT_EQ(first[k].name, second[k].name);
      EXPECT_EQ(first[k].cases, second[k].cases);
      EXPECT_EQ(first[k].detail, second[k].detail);
    }
  }
}

TEST(Suite, AllPassSmall) {
  for (int n = 1; n <= 2; ++n) {
    SuiteConfig cfg;
    cfg.n = n;
    cfg.samples = 8;
    for (Suite s : all_suites()) {
      for (const auto& r : run_suite(s, cfg)) EXPECT_TRUE(r.pass()) << r.suite << "/" << r.name << " n=" << n << ": " << r.detail;
    }
  }
}

TEST(Suite, NegativeControlsAreExpectedFailures) {
  SuiteConfig cfg;
  cfg.n = 2;
  cfg.samples = 5;
  cfg.negative_controls = true;
  int controls = 0;
  for (const auto& r : run_suite(Suite::Equivariance, cfg)) {
    if (r.expected_failure) {
      ++controls;
      EXPECT_GT(r.failures, 0) << r.name;
    }
    EXPECT_TRUE(r.pass()) << r.name;
  }
  EXPECT_EQ(controls, 3);
}

TEST(Suite, ReproduceCommand) {
  SuiteConfig cfg;
  cfg.n = 2;
  cfg.seed = 5;
  cfg.samples = 12;
  CheckResult r;
  r.suite = "sl2";
  r.n = 2;
  EXPECT_EQ(reproduce_command(r, cfg), "contact check --n 2 --seed 5 --samples 12 --degree 3 --only sl2");
  r.suite = "equivariance";
  r.expected_failure = true;
  EXPECT_EQ(reproduce_command(r, cfg), "contact check --n 2 --seed 5 --samples 12 --degree 3 --only equivariance --negative-controls");
}

TEST(Suite, CriteriaCoverSevenIds) {
  const auto& crit = acceptance_criteria();
  ASSERT_EQ(crit.size(), 7u);
  for (std::size_t k = 0; k < crit.size(); ++k) {
    EXPECT_EQ(crit[k].id, static_cast<int>(k) + 1);
    EXPECT_FALSE(crit[k].suites.empty());
  }
}

TEST(Suite, LinearSolveDecompositionMatchesClosedForm) {
  const HorizontalForm phi(contact::testing::F("x1 dx1^dy1 + z dx1^dx2 + y2 dx2^dy2", 2));
  const LefschetzDecomposition solved = decompose_by_linear_solve(phi);
  const LefschetzDecomposition closed = primitive_projections(phi);
  ASSERT_EQ(solved.components.size(), closed.components.size());
  for (const auto& [i, pi] : closed.components) EXPECT_EQ(solved.component(i), pi) << "i=" << i;
}
