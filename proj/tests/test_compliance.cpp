#include <gtest/gtest.h>

#include "snep/compliance.hpp"
#include "snep/games.hpp"

using namespace snep;

namespace {

const Finding* find(const ComplianceReport& r, const std::string& id) {
  for (const auto& f : r.findings)
    if (f.check == id) return &f;
  return nullptr;
}

AlgorithmConfig vr_constant(double gamma) {
  auto c = AlgorithmConfig::make(Algorithm::sfb, StepSchedule::constant(gamma), 10);
  c.oracle = OracleKind::vr;
  c.batch = BatchSchedule::polynomial(1, 1, 1);
  return c;
}

}  // namespace

TEST(Compliance, SaNeedsVanishingStep) {
  const auto constants = diag_game({1, 2}, 10, 0).constants;
  const auto good = check_compliance(AlgorithmConfig::make(Algorithm::sfb, StepSchedule::polynomial(1, 1000, 1), 5),
                                     constants);
  EXPECT_TRUE(good.ok());
  EXPECT_EQ(find(good, "vanishing-step")->status, CheckStatus::pass);
  for (double p : {0.5, 1.5}) {
    const auto bad = check_compliance(AlgorithmConfig::make(Algorithm::sfb, StepSchedule::polynomial(1, 10, p), 5),
                                      constants);
    EXPECT_FALSE(bad.ok()) << p;
    EXPECT_EQ(find(bad, "vanishing-step")->status, CheckStatus::fail);
  }
  const auto constant = check_compliance(AlgorithmConfig::make(Algorithm::sfb, StepSchedule::constant(0.1), 5),
                                         constants);
  EXPECT_FALSE(constant.ok());
}

TEST(Compliance, StrongBoundDecidesWhenDeclared) {
  // diag(1, 2): 2 mu / ell^2 = 0.5 while 2 beta = 1.
  const auto constants = diag_game({1, 2}, 10, 0).constants;
  const auto bad = check_compliance(vr_constant(0.6), constants);
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(find(bad, "step-bound-strong")->status, CheckStatus::fail);
  EXPECT_EQ(find(bad, "step-bound-cocoercive")->status, CheckStatus::pass);
  EXPECT_TRUE(check_compliance(vr_constant(0.25), constants).ok());
  EXPECT_TRUE(check_compliance(vr_constant(0.5), constants).ok());
}

TEST(Compliance, CocoerciveBoundWithoutStrongConstants) {
  MonotonicityConstants c;
  c.cocoercivity = 0.5;
  EXPECT_TRUE(check_compliance(vr_constant(0.9), c).ok());
  EXPECT_FALSE(check_compliance(vr_constant(1.1), c).ok());
}

TEST(Compliance, UnknownConstantsAreNotFailures) {
  const auto r = check_compliance(vr_constant(10.0), MonotonicityConstants{});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(find(r, "step-bound-strong")->status, CheckStatus::unknown);
}

TEST(Compliance, VrConstantBatchNeedsVanishingStep) {
  const auto constants = diag_game({1, 2}, 10, 0).constants;
  auto c = AlgorithmConfig::make(Algorithm::sfb, StepSchedule::constant(0.25), 10);
  c.oracle = OracleKind::vr;
  c.batch = BatchSchedule::constant(8);
  const auto r = check_compliance(c, constants);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(find(r, "batch-growth")->status, CheckStatus::fail);
  c.step = StepSchedule::polynomial(0.1, 1, 1);
  EXPECT_TRUE(check_compliance(c, constants).ok());
}

TEST(Compliance, GameAVerbatimHasNoStrongConstants) {
  const auto r = check_compliance(vr_constant(0.001), game_a_verbatim().constants);
  EXPECT_NE(find(r, "step-bound-strong")->status, CheckStatus::pass);
}
