#pragma once

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "snep/rng.hpp"

namespace snep {

/// Distribution of the joint random parameter xi of a game.
class NoiseModel {
 public:
  enum class Kind { normal, uniform, degenerate };

  static NoiseModel normal(Eigen::VectorXd mean, Eigen::VectorXd stddev);
  static NoiseModel uniform(Eigen::VectorXd lower, Eigen::VectorXd upper);
  static NoiseModel degenerate(Eigen::VectorXd value);

  Kind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(first_.size()); }
  Eigen::VectorXd mean() const;
  Eigen::VectorXd variance() const;

  Eigen::VectorXd draw(SplitMix64& engine) const;
  Eigen::VectorXd draw(const RngStream& stream) const;

  /// The average of `count` i.i.d. draws, sampled directly from its exact
  /// distribution. Only available for families closed under averaging
  /// (normal, degenerate); empty otherwise.
  std::optional<Eigen::VectorXd> draw_average(std::uint64_t count, const RngStream& stream) const;

  /// Declared uniform bound on E||F_SA(x, xi) - F(x)||^2 over the feasible set.
  const std::optional<double>& variance_bound() const noexcept { return variance_bound_; }
  NoiseModel& set_variance_bound(double bound);

 private:
  NoiseModel(Kind kind, Eigen::VectorXd first, Eigen::VectorXd second)
      : kind_(kind), first_(std::move(first)), second_(std::move(second)) {}

  Kind kind_;
  Eigen::VectorXd first_;   // mean | lower | value
  Eigen::VectorXd second_;  // stddev | upper | unused
  std::optional<double> variance_bound_;
};

}  // namespace snep
