#include <cmath>

#include <gtest/gtest.h>

#include "coupon/exact.hpp"
#include "coupon/expansion.hpp"
#include "oracles.hpp"

namespace coupon {
namespace {

TEST(PoissonOrder0, MatchesRunningProduct) {
  for (double lambda : {0.0, 0.1, 1.0, 2.5, 7.0}) {
    for (int k = 0; k <= 25; ++k) {
      const double ref = oracle::poisson_by_product(lambda, k);
      EXPECT_NEAR(poisson_order0(lambda, k), ref, 1e-14 * std::max(1.0, ref)) << lambda << " " << k;
    }
    EXPECT_EQ(poisson_order0(lambda, -1), 0.0);
  }
  EXPECT_EQ(poisson_order0(0.0, 0), 1.0);
}

TEST(PoissonOrder1, DeskValues) {
  const CollectorInstance inst(10, 5);
  EXPECT_NEAR(poisson_order1(inst, 0).order1, 0.31269752499572595, 1e-15);
  EXPECT_NEAR(poisson_order1(inst, 1).order1, 0.31269752499572595, 1e-15);
  EXPECT_NEAR(poisson_order1(inst, 2).order1, 0.21153067867357933, 1e-15);
  EXPECT_NEAR(poisson_order1(inst, 2).order0, std::exp(-1.0) / 2.0, 1e-16);
}

TEST(PoissonOrder1, ThreeRoutesAgree) {
  for (double lambda : {0.05, 0.7, 1.0, 2.0, 4.5}) {
    for (double lambda2 : {0.0, 0.01, 0.3}) {
      for (int k = 0; k <= 20; ++k) {
        const double a = poisson_order1(lambda, lambda2, k);
        EXPECT_NEAR(a, theorem_cases(lambda, lambda2, k), 1e-14);
        EXPECT_NEAR(a, theorem_via_sk(lambda, lambda2, k), 1e-14);
      }
    }
  }
}

TEST(PoissonOrder1, CorrectionMassSumsToZero) {
  double total = 0.0;
  for (int k = 0; k <= 60; ++k) total += poisson_order1(1.7, 0.2, k);
  EXPECT_NEAR(total, 1.0, 1e-14);
}

TEST(ComparisonTable, FirstOrderBeatsZerothOnLargeInstance) {
  const auto rows = comparison_table(CollectorInstance(1600, 1520), 15);
  ASSERT_EQ(rows.size(), 16u);
  double e0 = 0.0, e1 = 0.0;
  for (const auto& row : rows) {
    ASSERT_TRUE(row.exact.has_value());
    e0 = std::max(e0, std::abs(row.err0()));
    e1 = std::max(e1, std::abs(row.err1()));
  }
  EXPECT_LT(e1, e0);
}

TEST(ProductGap, DeskValuesAndExactDecomposition) {
  const CollectorInstance inst(10, 5);
  const auto g = product_exponential_gap(inst);
  EXPECT_NEAR(g.gap, 0.06547944117144233, 1e-15);
  EXPECT_NEAR(g.leading, 0.05518191617571635, 1e-15);
  EXPECT_NEAR(g.residual, 0.010297524995725983, 1e-15);
  EXPECT_NEAR(g.gap, std::exp(-1.0) - to_double(stage_success_product(inst)), 1e-15);
  EXPECT_EQ(g.gap, g.leading + g.residual);
}

TEST(ProductGap, ResidualBoundOnLargeInstance) {
  const CollectorInstance inst(10000, 9800);
  const double lambda = to_double(lambda_moment(inst, 1));
  ASSERT_TRUE(tail_bound_applicable(lambda, 10000.0));
  const auto g = product_exponential_gap(inst);
  EXPECT_GT(g.residual, 0.0);
  EXPECT_LE(std::abs(g.residual), product_residual_bound(lambda, 10000.0));
}

TEST(MomentTail, SumMatchesDirectAndStaysUnderBound) {
  const CollectorInstance inst(400, 360);
  const double lambda = to_double(lambda_moment(inst, 1));
  ASSERT_TRUE(tail_bound_applicable(lambda, 400.0));
  for (unsigned j0 : {2u, 3u, 5u}) {
    double direct = 0.0;
    for (unsigned j = j0; j < j0 + 200; ++j) direct += to_double(lambda_moment(inst, j)) / j;
    EXPECT_NEAR(moment_tail_sum(inst, j0), direct, 1e-15 * direct);
    EXPECT_LE(moment_tail_sum(inst, j0), moment_tail_bound(lambda, 400.0, j0));
  }
  EXPECT_FALSE(tail_bound_applicable(2.0, 10.0));
}

}  // namespace
}  // namespace coupon
