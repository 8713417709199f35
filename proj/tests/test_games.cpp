#include <cmath>
#include <cstring>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "snep/config_io.hpp"
#include "snep/errors.hpp"
#include "snep/games.hpp"
#include "snep/residual.hpp"

using namespace snep;

TEST(GameA, MeanOracle) {
  const auto game = game_a_verbatim().spec();
  EXPECT_EQ(game.mean_oracle(Eigen::Vector2d(1, 1)), Eigen::Vector2d(2, 2000));
  EXPECT_EQ(game.mean_oracle(Eigen::Vector2d(0, 0)), Eigen::Vector2d(0, 0));
  EXPECT_EQ(residual(game, Eigen::Vector2d(0, 0)), 0.0);
}

TEST(GameA, VerbatimFailsMonotonicityProbe) {
  const auto g = game_a_verbatim();
  const Eigen::Vector2d x(2, -1);
  EXPECT_DOUBLE_EQ(x.dot(g.mean_matrix * x), -998.0);
  EXPECT_FALSE(g.constants.strong_monotonicity);
}

TEST(GameA, RepairedPassesMonotonicityProbe) {
  const auto g = game_a_repaired();
  ASSERT_TRUE(g.constants.strong_monotonicity);
  const double mu = *g.constants.strong_monotonicity;
  EXPECT_DOUBLE_EQ(mu, 1.0);
  const Eigen::Matrix2d sym = 0.5 * (g.mean_matrix + g.mean_matrix.transpose());
  EXPECT_TRUE(sym.isApprox(Eigen::Vector2d(1, 1000).asDiagonal().toDenseMatrix()));
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1000, 1000);
  for (int t = 0; t < 10000; ++t) {
    const Eigen::Vector2d x(u(gen), u(gen));
    ASSERT_GE(x.dot(g.mean_matrix * x), mu * x.squaredNorm() * (1 - 1e-12));
  }
}

TEST(GameA, RepairedLipschitzClosedForm) {
  // M^T M = [[2, -999], [-999, 1000001]]; its largest eigenvalue from the 2x2 quadratic.
  const double tr = 2.0 + 1000001.0, det = 2.0 * 1000001.0 - 999.0 * 999.0;
  const double ell = std::sqrt((tr + std::sqrt(tr * tr - 4 * det)) / 2);
  const auto g = game_a_repaired();
  ASSERT_TRUE(g.constants.lipschitz);
  EXPECT_NEAR(*g.constants.lipschitz, ell, 1e-9 * ell);
  EXPECT_EQ(g.mean_matrix, (Eigen::Matrix2d() << 1, 1, -1, 1000).finished());
}

TEST(GameB, PositiveDefiniteForManySeeds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Eigen::MatrixXd m = game_b_matrix(seed);
    const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
    ASSERT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sym).eigenvalues().minCoeff(), 0.0) << seed;
  }
}

TEST(GameB, DeterministicAndSeeded) {
  const Eigen::MatrixXd a = game_b_matrix(7), b = game_b_matrix(7);
  EXPECT_EQ(std::memcmp(a.data(), b.data(), sizeof(double) * 9), 0);
  EXPECT_NE(game_b_matrix(7), game_b_matrix(8));
}

TEST(GameB, StructureAndNoise) {
  const auto g = game_b(3, 4.0);
  const auto game = g.spec();
  EXPECT_EQ(game.agents(), 3u);
  EXPECT_EQ(game.mean_oracle(Eigen::Vector3d::Zero()), Eigen::Vector3d::Zero());
  ASSERT_EQ(g.noisy_entries.size(), 3u);
  EXPECT_EQ(g.noisy_entries[0].row, 0u);
  EXPECT_EQ(g.noisy_entries[0].col, 2u);
  EXPECT_EQ(g.noisy_entries[1].row, 1u);
  EXPECT_EQ(g.noisy_entries[1].col, 1u);
  EXPECT_EQ(g.noisy_entries[2].row, 2u);
  EXPECT_EQ(g.noisy_entries[2].col, 0u);
  EXPECT_EQ(g.noise.variance(), Eigen::Vector3d::Constant(4.0));
  EXPECT_TRUE(is_feasible(game, Eigen::Vector3d(10, -10, 0)));
  EXPECT_FALSE(is_feasible(game, Eigen::Vector3d(11, 0, 0)));
  EXPECT_TRUE(is_feasible(game_b(3, 4.0, false).spec(), Eigen::Vector3d(1e6, 0, 0)));
  EXPECT_EQ(game_b(3, 0.0).noise.kind(), NoiseModel::Kind::degenerate);
  EXPECT_THROW(game_b(3, -1.0), InvalidParameter);
}

TEST(DiagGame, Constants) {
  const auto g = diag_game({1, 2}, 10, 0.1);
  EXPECT_EQ(*g.constants.strong_monotonicity, 1.0);
  EXPECT_EQ(*g.constants.lipschitz, 2.0);
  EXPECT_EQ(*g.constants.cocoercivity, 0.5);
  EXPECT_DOUBLE_EQ(2 * *g.constants.strong_monotonicity / std::pow(*g.constants.lipschitz, 2), 0.5);
  std::mt19937_64 gen(2);
  std::normal_distribution<double> n;
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Vector2d u(n(gen), n(gen));
    const Eigen::Vector2d mu = g.mean_matrix * u;
    ASSERT_GE(u.dot(mu), 0.5 * mu.squaredNorm() * (1 - 1e-12));
  }
  EXPECT_THROW(diag_game({1, 0}, 10, 0.1), InvalidParameter);
}

TEST(LinearConstants, MatchesDiagonalClosedForm) {
  const auto c = linear_constants(Eigen::Vector3d(1, 2, 4).asDiagonal().toDenseMatrix());
  EXPECT_NEAR(*c.strong_monotonicity, 1.0, 1e-12);
  EXPECT_NEAR(*c.lipschitz, 4.0, 1e-12);
  EXPECT_NEAR(*c.cocoercivity, 0.25, 1e-12);
}

TEST(LinearConstants, CocoercivityHoldsOnGameB) {
  const Eigen::MatrixXd m = game_b_matrix(4);
  const auto c = linear_constants(m);
  ASSERT_TRUE(c.cocoercivity);
  std::mt19937_64 gen(3);
  std::normal_distribution<double> n;
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Vector3d u(n(gen), n(gen), n(gen));
    const Eigen::Vector3d mu = m * u;
    ASSERT_GE(u.dot(mu), *c.cocoercivity * mu.squaredNorm() * (1 - 1e-9));
  }
}

TEST(GameSpec, ValidateCatchesBadDeclarations) {
  auto game = diag_game({1, 2}, 10, 0).spec();
  EXPECT_NO_THROW(game.validate());
  auto swapped = game;
  swapped.constants.strong_monotonicity = 3.0;
  EXPECT_THROW(swapped.validate(), InvalidParameter);
  auto wrong = game;
  wrong.known_solution = Eigen::Vector2d(1, 1);
  EXPECT_THROW(wrong.validate(), InvalidParameter);
  auto missing = game;
  missing.prox_ops.pop_back();
  EXPECT_THROW(missing.validate(), InvalidParameter);
}

TEST(GameSpec, MonteCarloMean) {
  auto game = game_b(2, 1.0).spec();
  const Eigen::VectorXd x = Eigen::Vector3d(1, -2, 3);
  const Eigen::VectorXd exact = game.mean_oracle(x);
  game.mean_oracle = nullptr;
  const auto mc = with_monte_carlo_mean(game, 100000, 5);
  EXPECT_TRUE(mc.mean_is_approximate);
  EXPECT_EQ(mc.mean_samples, 100000u);
  EXPECT_LT((mc.mean_oracle(x) - exact).norm(), 0.05);
  EXPECT_EQ(mc.mean_oracle(x), mc.mean_oracle(x));
}

TEST(Registry, BuildsByName) {
  for (const auto& info : list_games()) EXPECT_NO_THROW(make_game(info.name)) << info.name;
  const auto b = make_game("game_b", {{"seed", 3}, {"variance", 2.0}});
  EXPECT_EQ(b.dimension(), 3u);
  const auto d = make_game("diag", {{"eigenvalues", {1, 2, 3}}});
  EXPECT_EQ(d.dimension(), 3u);
  EXPECT_THROW(make_game("game_z"), ConfigError);
  EXPECT_THROW(make_game("game_a", {{"thetta", 3}}), ConfigError);
  EXPECT_THROW(make_game("diag", {{"eigenvalues", {1, -2}}}), ConfigError);
}
