#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "snep/noise.hpp"
#include "snep/profile.hpp"
#include "snep/prox.hpp"

namespace snep {

/// Restricted monotonicity constants of the mean pseudogradient, when known.
struct MonotonicityConstants {
  std::optional<double> strong_monotonicity;  // mu
  std::optional<double> lipschitz;            // ell
  std::optional<double> cocoercivity;         // beta
};

using NoisyOracle = std::function<Eigen::VectorXd(const Eigen::VectorXd& x, const Eigen::VectorXd& xi)>;
using MeanOracle = std::function<Eigen::VectorXd(const Eigen::VectorXd& x)>;

/// A stochastic Nash equilibrium problem: per-agent proximal terms g_i, a
/// sampled pseudogradient F_SA(x, xi) = col(grad_{x_i} f_i(x, xi_i)), and
/// optionally its exact expectation.
struct GameSpec {
  std::string name;
  Partition partition;
  std::vector<ProxDescriptor> prox_ops;
  NoiseModel noise = NoiseModel::degenerate(Eigen::VectorXd());
  NoisyOracle noisy_oracle;
  // Set when noisy_oracle is affine in xi, so that averaging oracle values
  // equals evaluating at the averaged realization.
  bool affine_in_noise = false;
  MeanOracle mean_oracle;
  bool mean_is_approximate = false;
  std::uint64_t mean_samples = 0;
  std::optional<Eigen::VectorXd> known_solution;
  MonotonicityConstants constants;

  std::size_t dimension() const noexcept { return partition.dimension(); }
  std::size_t agents() const noexcept { return partition.agents(); }
  bool has_mean_oracle() const noexcept { return static_cast<bool>(mean_oracle); }

  /// Checks structural consistency, mu <= ell, and that known_solution has
  /// residual <= 1e-9. Throws InvalidParameter on violation.
  void validate() const;
};

/// Replaces a missing mean oracle with a sample average over `samples` fixed
/// realizations (common to every evaluation point, so the result is
/// deterministic). Marks the game's mean as approximate.
GameSpec with_monte_carlo_mean(GameSpec game, std::uint64_t samples = 100000, std::uint64_t seed = 0);

}  // namespace snep
