#include <bivar/sweep.hpp>

#include <gtest/gtest.h>

#include <random>

namespace bivar {
namespace {

TEST(Sweep, SmallRunHasNoViolations) {
  auto report = gasca_maeztu_sweep(5, 12, 1);
  EXPECT_TRUE(report.clean());
  ASSERT_EQ(report.degrees.size(), 5u);
  for (const auto& d : report.degrees) {
    EXPECT_EQ(d.trials, 12u);
    EXPECT_EQ(d.skipped, 0u);
    EXPECT_EQ(d.with_maximal_line, d.gc_sets);
    const auto& natural = d.generators[static_cast<std::size_t>(GCGenerator::NaturalLattice)];
    const auto& principal = d.generators[static_cast<std::size_t>(GCGenerator::PrincipalLattice)];
    const auto& chain = d.generators[static_cast<std::size_t>(GCGenerator::FreePointChain)];
    EXPECT_GE(natural.min_maximal_lines, static_cast<std::size_t>(d.degree + 2));
    EXPECT_GE(principal.min_maximal_lines, 3u);
    EXPECT_GE(chain.min_maximal_lines, static_cast<std::size_t>(d.degree + 1));
  }
}

TEST(Sweep, ThreadCountDoesNotChangeTheReport) {
  EXPECT_EQ(gasca_maeztu_sweep(4, 9, 7, 1), gasca_maeztu_sweep(4, 9, 7, 4));
}

TEST(Sweep, MergeIsOrderIndependent) {
  std::vector<TrialOutcome> outcomes;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t t = 0; t < 6; ++t) outcomes.push_back(run_trial(3, n, t));
  auto shuffled = outcomes;
  std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937(5));
  EXPECT_EQ(merge_outcomes(3, 6, 3, outcomes), merge_outcomes(3, 6, 3, shuffled));
}

TEST(Sweep, TrialIsAPureFunction) {
  EXPECT_EQ(run_trial(11, 4, 2), run_trial(11, 4, 2));
  EXPECT_FALSE(run_trial(11, 4, 2).nodes == run_trial(12, 4, 2).nodes);
}

TEST(Sweep, RejectsDegreesAboveFive) {
  EXPECT_THROW(gasca_maeztu_sweep(6, 1, 1), DomainError);
}

}  // namespace
}  // namespace bivar
