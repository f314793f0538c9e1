#include <cmath>

#include <gtest/gtest.h>

#include "coupon/diagnostics.hpp"
#include "coupon/exact.hpp"

namespace coupon {
namespace {

TEST(Schedule, Examples) {
  const auto s = build_schedule(2.0, {100, 10000});
  ASSERT_EQ(s.instances.size(), 2u);
  EXPECT_EQ(s.instances[0].m(), 80);
  EXPECT_EQ(s.instances[1].m(), 9800);
  EXPECT_EQ(lambda_moment(s.instances[0], 1), make_rational(19, 10));
  EXPECT_EQ(lambda_moment(s.instances[1], 1), make_rational(199, 100));
  EXPECT_EQ(schedule_to_collect(2.0, 400), 40);
}

TEST(Schedule, Rejections) {
  EXPECT_THROW(build_schedule(0.0, {100}), std::invalid_argument);
  EXPECT_THROW(build_schedule(-1.0, {100}), std::invalid_argument);
  EXPECT_THROW(build_schedule(2.0, {400, 100}), std::invalid_argument);
  EXPECT_THROW(build_schedule(2.0, {100, 100}), std::invalid_argument);
  EXPECT_THROW(build_schedule(50.0, {10}), std::invalid_argument);   // r > n
  EXPECT_THROW(build_schedule(0.01, {10}), std::invalid_argument);   // r < 2
}

TEST(FitLogLog, RecoversPowerLaw) {
  const auto fit = fit_loglog({1, 10, 100, 1000}, {3, 0.3, 0.03, 0.003});
  EXPECT_NEAR(fit.slope, -1.0, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-12);
  EXPECT_THROW(fit_loglog({1}, {1}), std::invalid_argument);
}

TEST(ScalingStudy, SlopesNearHalfAndOne) {
  const auto report = scaling_study(build_schedule(2.0, {400, 1600, 6400}), 20);
  ASSERT_EQ(report.rows.size(), 3u);
  ASSERT_TRUE(report.slope0 && report.slope1);
  EXPECT_NEAR(*report.slope0, -0.5, 0.15);
  EXPECT_NEAR(*report.slope1, -1.0, 0.25);
  for (const auto& row : report.rows) EXPECT_LT(row.e1, row.e0);
  EXPECT_FALSE(scaling_study(build_schedule(2.0, {400, 1600}), 10).slope0.has_value());
}

TEST(ScheduleConstants, Bounded) {
  const auto s = build_schedule(2.0, {100, 400, 1600, 6400, 25600});
  EXPECT_LT(lambda_convergence_constant(s), 10.0);
  EXPECT_LT(lambda2_asymptotic_constant(s), 10.0);
}

TEST(TotalVariation, ZeroForExactPoisson) {
  Pmf pmf;
  pmf.offset = 0;
  double mass = 0.0;
  for (int k = 0; k <= 30; ++k) {
    pmf.probs.push_back(std::exp(-2.0) * std::pow(2.0, k) / std::tgamma(k + 1.0));
    mass += pmf.probs.back();
  }
  pmf.tail_mass = 1.0 - mass;
  EXPECT_NEAR(total_variation_to_poisson(pmf, 2.0), 0.0, 1e-14);
  const auto real = exact_pmf_dp(CollectorInstance(400, 360), 60);
  EXPECT_GT(total_variation_to_poisson(real, 2.0), 0.0);
  EXPECT_LT(total_variation_to_poisson(real, 2.0), 0.1);
}

TEST(Certify, IdentitiesAndCorrectedFormsHold) {
  const auto report = certify_bounds(CollectorInstance(40, 28), 6);
  EXPECT_FALSE(report.checks.empty());
  EXPECT_EQ(report.sum_path, "enumeration");
  EXPECT_TRUE(report.all_hold(BoundForm::corrected));
  for (const auto& c : report.checks) {
    if (c.name == "s_kk_identity" || c.name == "remainder_split" || c.name == "moment_decay" || c.name == "stage_count") {
      EXPECT_EQ(c.status, CheckStatus::holds) << c.name << " " << c.detail;
    }
  }
}

TEST(Certify, DpAndEnumerationGiveSameVerdicts) {
  const CollectorInstance inst(30, 20);
  const auto a = certify_bounds(inst, 6, {.max_moment_order = 12, .rtol = 1e-9, .path = SumPath::enumeration, .enumeration_budget = 1'000'000});
  const auto b = certify_bounds(inst, 6, {.max_moment_order = 12, .rtol = 1e-9, .path = SumPath::dp, .enumeration_budget = 1'000'000});
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].status, b.checks[i].status);
  }
  EXPECT_EQ(b.sum_path, "dp");
}

TEST(Certify, LargeKIsSkipped) {
  const auto report = certify_bounds(CollectorInstance(10, 7), 5);
  EXPECT_GT(report.count(CheckStatus::skipped, BoundForm::both), 0u);
}

}  // namespace
}  // namespace coupon
