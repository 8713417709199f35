#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "snep/game.hpp"
#include "snep/noise.hpp"
#include "snep/profile.hpp"
#include "snep/prox.hpp"

namespace snep {

struct NoisyEntry {
  std::size_t row = 0;
  std::size_t col = 0;
};

/// F(x, xi) = M(xi) x, where the listed entries of M are random with means
/// equal to the corresponding entries of mean_matrix.
struct LinearStochasticGame {
  std::string name;
  Eigen::MatrixXd mean_matrix;
  std::vector<NoisyEntry> noisy_entries;
  NoiseModel noise = NoiseModel::degenerate(Eigen::VectorXd());
  Partition partition;
  std::vector<ProxDescriptor> prox;
  std::optional<Eigen::VectorXd> known_solution;
  MonotonicityConstants constants;

  Eigen::MatrixXd sampled_matrix(const Eigen::VectorXd& xi) const;
  /// Analytic E||F(x, xi) - mean_matrix x||^2 (entries are independent).
  double error_variance(const Eigen::VectorXd& x) const;
  GameSpec spec() const;
  void validate() const;
};

enum class NoiseFamily { normal, uniform, degenerate };

struct GameANoise {
  double xi1_stddev = 0.1;
  double xi2_stddev = 10.0;
  double theta = 1000.0;
  NoiseFamily family = NoiseFamily::normal;
};

/// Two players, F(x) = [[1, xi1], [xi2, 1000]] x with E[xi1] = 1,
/// E[xi2] = 1000, box [-theta, theta] per player.
LinearStochasticGame game_a_verbatim(const GameANoise& noise = {});

/// As game_a_verbatim with E[xi2] = -1, so the symmetric part of the mean
/// matrix is diag(1, 1000).
LinearStochasticGame game_a_repaired(const GameANoise& noise = {});

/// Symmetric positive definite 3x3 mean matrix derived from `seed`.
Eigen::MatrixXd game_b_matrix(std::uint64_t seed);

/// Three players; normal noise of the given variance on the antidiagonal
/// entries (0,2), (1,1), (2,0). Variance 0 gives degenerate noise. Box
/// [-theta, theta] per player, or no constraint when `constrained` is false.
LinearStochasticGame game_b(std::uint64_t seed, double variance, bool constrained = true,
                            double theta = 10.0);

/// One player per eigenvalue, M = diag(eigenvalues), additive normal noise
/// of the given standard deviation on each diagonal entry.
LinearStochasticGame diag_game(const std::vector<double>& eigenvalues, double theta,
                               double noise_stddev);

/// Restricted constants at x* = 0 of the map x -> M x: mu = lambda_min of
/// the symmetric part, ell = largest singular value, beta = the largest b
/// with <Mu, u> >= b ||Mu||^2 (left empty when M is not positive definite).
MonotonicityConstants linear_constants(const Eigen::MatrixXd& mean_matrix);

}  // namespace snep
