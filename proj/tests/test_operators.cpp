#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "snep/errors.hpp"
#include "snep/games.hpp"
#include "snep/prox.hpp"
#include "snep/residual.hpp"

using namespace snep;

namespace {

Eigen::VectorXd random_vector(std::mt19937_64& gen, Eigen::Index n, double scale) {
  std::normal_distribution<double> d(0.0, scale);
  Eigen::VectorXd v(n);
  for (auto& e : v) e = d(gen);
  return v;
}

}  // namespace

TEST(Prox, BoxClamp) {
  const auto box = box_prox(2, 1000.0);
  EXPECT_EQ(prox(box, Eigen::Vector2d(1500, -3), 0.001), Eigen::Vector2d(1000, -3));
}

TEST(Prox, Identity) { EXPECT_EQ(prox(identity_prox(), Eigen::Vector2d(2, -7), 0.5), Eigen::Vector2d(2, -7)); }

TEST(Prox, SoftThreshold) {
  const Eigen::Vector2d v(2, -0.5);
  const Eigen::VectorXd u = prox(l1_prox(1.0), v, 1.0);
  EXPECT_EQ(u, Eigen::Vector2d(1, 0));
  // Optimality: 0 in gamma*lambda*d|u_i| + (u_i - v_i) coordinatewise.
  const double gl = 1.0;
  for (Eigen::Index i = 0; i < 2; ++i) {
    const double g = v[i] - u[i];
    if (u[i] != 0.0)
      EXPECT_NEAR(g, gl * (u[i] > 0 ? 1.0 : -1.0), 1e-15);
    else
      EXPECT_LE(std::abs(g), gl);
  }
}

TEST(Prox, SoftThresholdSubgradientRandom) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> w(0.0, 3.0), step(0.01, 2.0);
  for (int t = 0; t < 1000; ++t) {
    const double lambda = w(gen), gamma = step(gen);
    const Eigen::VectorXd v = random_vector(gen, 4, 2.0);
    const Eigen::VectorXd u = prox(l1_prox(lambda), v, gamma);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double g = v[i] - u[i];
      if (u[i] != 0.0)
        ASSERT_NEAR(g, gamma * lambda * (u[i] > 0 ? 1.0 : -1.0), 1e-12);
      else
        ASSERT_LE(std::abs(g), gamma * lambda + 1e-12);
    }
  }
}

TEST(Prox, CustomDescriptor) {
  CustomProx half{[](const Eigen::VectorXd& v, double) { return Eigen::VectorXd(0.5 * v); },
                  [](const Eigen::VectorXd& u) { return u.norm() <= 1.0; }, "half"};
  EXPECT_EQ(prox(half, Eigen::Vector2d(2, 4), 1.0), Eigen::Vector2d(1, 2));
  EXPECT_TRUE(in_domain(half, Eigen::Vector2d(0.5, 0)));
  EXPECT_FALSE(in_domain(half, Eigen::Vector2d(2, 0)));
  EXPECT_EQ(describe(half), "half");
}

TEST(Prox, Errors) {
  EXPECT_THROW(prox(box_prox(2, 1.0), Eigen::Vector2d(std::nan(""), 0), 1.0), NonFiniteInput);
  EXPECT_THROW(prox(box_prox(2, 1.0), Eigen::Vector2d(0, 0), 0.0), InvalidParameter);
  EXPECT_THROW(prox(box_prox(3, 1.0), Eigen::Vector2d(0, 0), 1.0), DimensionMismatch);
}

TEST(Prox, Nonexpansive) {
  std::mt19937_64 gen(2);
  const std::vector<ProxDescriptor> kinds{box_prox(3, 1.0), identity_prox(), l1_prox(0.7)};
  for (const auto& d : kinds) {
    for (int t = 0; t < 1000; ++t) {
      const Eigen::VectorXd v = random_vector(gen, 3, 2.0), w = random_vector(gen, 3, 2.0);
      ASSERT_LE((prox(d, v, 0.8) - prox(d, w, 0.8)).norm(), (v - w).norm() + 1e-12) << describe(d);
    }
  }
}

TEST(Prox, BoxFirmlyNonexpansiveAndFeasible) {
  std::mt19937_64 gen(3);
  const Eigen::Vector3d lo(-1, 0, -2), hi(1, 0.5, 3);
  const auto box = box_prox(lo, hi);
  for (int t = 0; t < 1000; ++t) {
    const Eigen::VectorXd v = random_vector(gen, 3, 3.0), w = random_vector(gen, 3, 3.0);
    const Eigen::VectorXd pv = prox(box, v, 1.0), pw = prox(box, w, 1.0);
    const double lhs = (pv - pw).squaredNorm() + ((v - pv) - (w - pw)).squaredNorm();
    ASSERT_LE(lhs, (v - w).squaredNorm() + 1e-12);
    for (Eigen::Index i = 0; i < 3; ++i) {
      ASSERT_GE(pv[i], lo[i]);
      ASSERT_LE(pv[i], hi[i]);
    }
  }
}

TEST(Residual, GameAExamples) {
  const auto game = game_a_verbatim().spec();
  EXPECT_EQ(residual(game, Eigen::Vector2d(0, 0)), 0.0);
  // Hand evaluation: M x = (1000, 10^6), x - M x = (0, -10^6), clamp to (0, -1000).
  EXPECT_NEAR(residual(game, Eigen::Vector2d(1000, 0)), 1000.0 * std::sqrt(2.0), 1e-9);
}

TEST(Residual, ZeroAtKnownSolutions) {
  for (const auto& g : {game_a_verbatim().spec(), game_a_repaired().spec(), game_b(1, 1.0).spec(),
                        diag_game({1, 2, 3}, 5, 0.1).spec()}) {
    ASSERT_TRUE(g.known_solution);
    EXPECT_LE(residual(g, *g.known_solution), 1e-9) << g.name;
  }
}

TEST(Residual, NonnegativeAndFixedPoint) {
  const auto game = game_a_verbatim().spec();
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> u(-1000, 1000);
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Vector2d x(u(gen), u(gen));
    ASSERT_GE(residual(game, Eigen::VectorXd(x)), 0.0);
  }
  // Points on the null line of the mean matrix are solutions.
  const Eigen::VectorXd x = Eigen::Vector2d(300, -300);
  ASSERT_EQ(residual(game, x), 0.0);
  const Eigen::VectorXd next = forward_backward(game, x, game.mean_oracle(x), 1.0);
  EXPECT_LE((next - x).norm(), 1e-12);
}

TEST(Residual, MissingMeanOracle) {
  auto game = game_b(1, 1.0).spec();
  game.mean_oracle = nullptr;
  EXPECT_THROW(residual(game, Eigen::Vector3d(0, 0, 0)), MissingMeanOracle);
}

TEST(Residual, AgentScaleAppliesPerBlock) {
  const auto game = diag_game({1, 1}, 10, 0).spec();
  const std::vector<double> scale{1.0, 0.5};
  const Eigen::VectorXd out = forward_backward(game, Eigen::Vector2d(1, 1), Eigen::Vector2d(1, 1), 0.5, scale);
  EXPECT_DOUBLE_EQ(out[0], 0.5);
  EXPECT_DOUBLE_EQ(out[1], 0.75);
}

TEST(Residual, Feasibility) {
  const auto game = game_a_verbatim().spec();
  EXPECT_TRUE(is_feasible(game, Eigen::Vector2d(1000, -1000)));
  EXPECT_FALSE(is_feasible(game, Eigen::Vector2d(1000.5, 0)));
}
