#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "snep/game.hpp"
#include "snep/profile.hpp"
#include "snep/rng.hpp"

namespace snep {

enum class OracleKind { sa, vr };

enum class BatchEvaluation {
  // Average S separately drawn realizations.
  per_sample,
  // For games affine in the noise whose noise family is closed under
  // averaging, draw the batch-mean realization directly (same distribution,
  // O(1) cost). Falls back to per_sample otherwise, and always for S = 1.
  automatic,
};

struct OracleSpec {
  OracleKind kind = OracleKind::sa;
  std::uint64_t batch = 1;  // ignored for sa
  BatchEvaluation evaluation = BatchEvaluation::automatic;

  std::uint64_t samples_per_call() const noexcept { return kind == OracleKind::sa ? 1 : batch; }
};

/// F_SA(x, xi) for the single joint realization addressed by `stream`.
Eigen::VectorXd sa_sample(const GameSpec& game, const Eigen::VectorXd& x, const RngStream& stream);
Eigen::VectorXd sa_sample(const GameSpec& game, const DecisionProfile& x, const RngStream& stream);

/// (1/S) * sum_t F_SA(x, xi_t). Per-sample realizations use sample indices
/// stream.sample, ..., stream.sample + S - 1.
Eigen::VectorXd vr_sample(const GameSpec& game, const Eigen::VectorXd& x, std::uint64_t batch,
                          const RngStream& stream,
                          BatchEvaluation evaluation = BatchEvaluation::per_sample);
Eigen::VectorXd vr_sample(const GameSpec& game, const DecisionProfile& x, std::uint64_t batch,
                          const RngStream& stream,
                          BatchEvaluation evaluation = BatchEvaluation::per_sample);

/// Average of F_SA over explicitly given realizations.
Eigen::VectorXd vr_average(const GameSpec& game, const Eigen::VectorXd& x,
                           std::span<const Eigen::VectorXd> realizations);

/// Dispatches on `oracle`; SA consumes sample index stream.sample only.
Eigen::VectorXd estimate(const GameSpec& game, const Eigen::VectorXd& x, const OracleSpec& oracle,
                         const RngStream& stream);

struct ErrorStats {
  Eigen::VectorXd mean_error;    // empirical E[eps]
  Eigen::VectorXd error_stddev;  // per-coordinate empirical std of eps
  double mean_squared_norm = 0;  // empirical E||eps||^2
  std::uint64_t trials = 0;

  /// Per-coordinate standard error of mean_error.
  Eigen::VectorXd standard_error() const;
};

/// Empirical statistics of eps = F_hat(x, .) - F(x) over `trials`
/// independent estimates; trial t uses iteration index stream.iteration + t.
/// Requires a mean oracle and trials >= 100.
ErrorStats error_stats(const GameSpec& game, const Eigen::VectorXd& x, const OracleSpec& oracle,
                       std::uint64_t trials, const RngStream& stream);

/// Uniform draw from the n-ball of the given radius centred at the origin.
/// Returns the zero vector without consuming randomness when radius == 0.
Eigen::VectorXd uniform_ball(std::size_t dimension, double radius, const RngStream& stream);

}  // namespace snep
