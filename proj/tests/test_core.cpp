#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "snep/config.hpp"
#include "snep/errors.hpp"
#include "snep/profile.hpp"
#include "snep/rng.hpp"
#include "snep/schedule.hpp"

using namespace snep;

TEST(Profile, SplitsIntoBlocks) {
  const auto p = make_profile(Eigen::Vector3d(1, 2, 3), {1, 2});
  ASSERT_EQ(p.agents(), 2u);
  EXPECT_EQ(p.block(0), Eigen::VectorXd::Constant(1, 1.0));
  EXPECT_EQ(p.block(1), Eigen::Vector2d(2, 3));
}

TEST(Profile, SingleAgent) {
  const auto p = make_profile(Eigen::Vector2d(0, 0), {2});
  ASSERT_EQ(p.agents(), 1u);
  EXPECT_EQ(p.block(0), Eigen::Vector2d(0, 0));
}

TEST(Profile, DimensionMismatch) {
  EXPECT_THROW(make_profile(Eigen::Vector3d(1, 2, 3), {1, 1}), DimensionMismatch);
}

TEST(Profile, ZeroBlockRejected) { EXPECT_THROW(make_profile(Eigen::Vector2d(1, 2), {2, 0}), InvalidParameter); }

TEST(Profile, StackOfSplitIsIdentity) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<std::size_t> blocks(1, 5), size(1, 4);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> sizes(blocks(gen));
    std::size_t n = 0;
    for (auto& s : sizes) n += (s = size(gen));
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (auto& e : v) e = normal(gen);
    const auto p = make_profile(v, sizes);
    const auto parts = p.split();
    const auto back = DecisionProfile::stack(parts);
    EXPECT_EQ(back.values(), v);
    EXPECT_EQ(back.partition(), p.partition());
  }
}

TEST(StepSchedule, Examples) {
  const auto poly = StepSchedule::polynomial(1.0, 1000.0, 1.0);
  EXPECT_DOUBLE_EQ(poly.at(0), 0.001);
  EXPECT_DOUBLE_EQ(poly.at(1000), 0.0005);
  EXPECT_DOUBLE_EQ(StepSchedule::constant(0.25).at(7), 0.25);
}

TEST(StepSchedule, Cap) {
  const auto s = StepSchedule::polynomial(1.0, 1.0, 1.0, 0.1);
  EXPECT_DOUBLE_EQ(s.at(0), 0.1);
  EXPECT_DOUBLE_EQ(s.at(19), 0.05);
  EXPECT_DOUBLE_EQ(s.supremum(), 0.1);
}

TEST(StepSchedule, VanishingRange) {
  for (double p : {0.51, 0.75, 1.0}) EXPECT_TRUE(StepSchedule::polynomial(1, 10, p).is_vanishing_summable()) << p;
  for (double p : {0.25, 0.5, 1.01, 2.0})
    EXPECT_FALSE(StepSchedule::polynomial(1, 10, p).is_vanishing_summable()) << p;
  EXPECT_FALSE(StepSchedule::constant(0.1).is_vanishing_summable());
}

TEST(StepSchedule, RejectsBadParameters) {
  EXPECT_THROW(StepSchedule::constant(-1.0), InvalidParameter);
  EXPECT_THROW(StepSchedule::polynomial(1.0, 0.0, 1.0), InvalidParameter);
  EXPECT_THROW(StepSchedule::polynomial(1.0, 1.0, 0.0), InvalidParameter);
  EXPECT_THROW(StepSchedule::constant(std::nan("")), InvalidParameter);
}

TEST(BatchSchedule, Examples) {
  const auto b = BatchSchedule::polynomial(1.0, 1.0, 1.0);
  EXPECT_EQ(b.at(0), 1u);
  EXPECT_EQ(b.at(9), 100u);
  EXPECT_EQ(BatchSchedule::constant(5).at(123), 5u);
  EXPECT_EQ(batch_at(b, 9), 100u);
}

TEST(BatchSchedule, MonotoneSweep) {
  for (const auto& b : {BatchSchedule::polynomial(1.0, 1.0, 1.0), BatchSchedule::polynomial(0.3, 2.5, 0.2)}) {
    std::uint64_t prev = b.at(0);
    for (std::uint64_t k = 1; k <= 10000; ++k) {
      const auto cur = b.at(k);
      ASSERT_GE(cur, prev) << k;
      prev = cur;
    }
  }
}

TEST(BatchSchedule, RejectsBadParameters) {
  EXPECT_THROW(BatchSchedule::constant(0), InvalidParameter);
  EXPECT_THROW(BatchSchedule::polynomial(0.0, 1.0, 1.0), InvalidParameter);
  EXPECT_THROW(BatchSchedule::polynomial(1.0, 1.0, 0.0), InvalidParameter);
}

TEST(Rng, SameStreamSameDraws) {
  const RngStream s{42, 3, 17, 5};
  auto a = s.engine();
  auto b = RngStream{42, 3, 17, 5}.engine();
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a(), b());
}

TEST(Rng, DistinctStreamsDistinctKeys) {
  std::set<std::uint64_t> keys;
  for (std::uint64_t run = 0; run < 8; ++run)
    for (std::uint64_t it = 0; it < 8; ++it)
      for (std::uint64_t s = 0; s < 8; ++s) keys.insert(RngStream{1, run, it, s}.key());
  EXPECT_EQ(keys.size(), 512u);
  EXPECT_NE(RngStream({1, 2, 0, 0}).key(), RngStream({1, 0, 2, 0}).key());
  EXPECT_NE(RngStream{1}.key(), RngStream{2}.key());
}

TEST(Rng, KnownSplitMixOutput) {
  // Reference value of the standard SplitMix64 sequence seeded with 0.
  SplitMix64 g(0);
  EXPECT_EQ(g(), 0xE220A8397B1DCDAFULL);
}

TEST(Rng, UnitIntervalRange) {
  auto g = RngStream{5}.engine();
  double lo = 1, hi = 0, sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = unit_interval(g);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(AlgorithmConfig, DefaultsPerAlgorithm) {
  const auto step = StepSchedule::polynomial(1, 1000, 1);
  const auto tik = AlgorithmConfig::make(Algorithm::tik, step, 10);
  ASSERT_TRUE(tik.tik_eps);
  EXPECT_DOUBLE_EQ(tik.tik_eps->at(0), 1.0 / std::sqrt(1000.0));
  const auto rssa = AlgorithmConfig::make(Algorithm::rssa, step, 10);
  ASSERT_TRUE(rssa.rssa_delta && rssa.rssa_eta);
  EXPECT_DOUBLE_EQ(rssa.rssa_delta->at(0), 1.0);
  EXPECT_DOUBLE_EQ(rssa.rssa_delta->at(3), 0.25);
  EXPECT_NO_THROW(AlgorithmConfig::make(Algorithm::seg, step, 10).validate());
}

TEST(AlgorithmConfig, ParameterGroupMustMatchAlgorithm) {
  auto c = AlgorithmConfig::make(Algorithm::sfb, StepSchedule::constant(0.1), 10);
  c.tik_eps = default_tik_eps();
  EXPECT_THROW(c.validate(), InvalidParameter);
  auto t = AlgorithmConfig::make(Algorithm::tik, StepSchedule::constant(0.1), 10);
  t.tik_eps.reset();
  EXPECT_THROW(t.validate(), InvalidParameter);
}

TEST(AlgorithmConfig, ParseAlgorithmNames) {
  EXPECT_EQ(parse_algorithm("SFB"), Algorithm::sfb);
  EXPECT_EQ(parse_algorithm("sprg"), Algorithm::sprg);
  EXPECT_FALSE(parse_algorithm("adam"));
  for (auto a : {Algorithm::sfb, Algorithm::seg, Algorithm::tik, Algorithm::rssa, Algorithm::sprg})
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
}

TEST(AlgorithmConfig, OracleAtFollowsBatch) {
  auto c = AlgorithmConfig::make(Algorithm::sfb, StepSchedule::constant(0.1), 10);
  c.oracle = OracleKind::vr;
  c.batch = BatchSchedule::polynomial(1, 1, 1);
  EXPECT_EQ(c.oracle_at(9).samples_per_call(), 100u);
  c.oracle = OracleKind::sa;
  EXPECT_EQ(c.oracle_at(9).samples_per_call(), 1u);
}
