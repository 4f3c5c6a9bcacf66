#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

constexpr std::size_t kCases = 500;

void expect_ok(const props::Outcome& o) {
  EXPECT_TRUE(o.ok()) << o.failure;
  EXPECT_EQ(o.cases, kCases);
}

}  // namespace

TEST(Properties, SimilaritySymmetricAndInRange) { expect_ok(props::similarity_symmetry_and_range(1, kCases)); }
TEST(Properties, CompetitionZeroDiagonalNonnegative) { expect_ok(props::competition_diagonal_and_sign(2, kCases)); }
TEST(Properties, Reciprocity) { expect_ok(props::reciprocity(3, kCases)); }
TEST(Properties, TcGaugeInvariance) { expect_ok(props::tc_gauge_invariance(4, kCases)); }
TEST(Properties, CosineRowScaleInvariance) { expect_ok(props::cosine_row_scale_invariance(5, kCases)); }
TEST(Properties, PermutationEquivariance) { expect_ok(props::permutation_equivariance(6, kCases)); }
TEST(Properties, MeanBound) { expect_ok(props::mean_bound(7, kCases)); }
TEST(Properties, PressureMonotonicity) { expect_ok(props::pressure_monotonicity(8, kCases)); }

TEST(Properties, OracleEquivalence) {
  const auto o = props::oracle_equivalence(9, 200);
  EXPECT_TRUE(o.ok()) << o.failure;
}

TEST(Properties, OracleEquivalenceUpToEightJournals) {
  const auto o = props::oracle_equivalence(10, 200, 8);
  EXPECT_TRUE(o.ok()) << o.failure;
}
