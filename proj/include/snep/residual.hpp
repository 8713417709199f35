#pragma once

#include <span>

#include <Eigen/Dense>

#include "snep/game.hpp"
#include "snep/profile.hpp"

namespace snep {

/// Applies each agent's prox to its block of v with step gamma * scale_i
/// (scale_i = 1 when `agent_scale` is empty).
Eigen::VectorXd prox_blockwise(const GameSpec& game, const Eigen::VectorXd& v, double gamma,
                               std::span<const double> agent_scale = {});

/// One forward-backward map: prox_{gamma g}(x - gamma * direction), blockwise.
Eigen::VectorXd forward_backward(const GameSpec& game, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& direction, double gamma,
                                 std::span<const double> agent_scale = {});

/// ||x - prox_g(x - F(x))|| with the exact mean pseudogradient F. Zero exactly
/// at fixed points of the unit-step forward-backward map.
double residual(const GameSpec& game, const Eigen::VectorXd& x);
double residual(const GameSpec& game, const DecisionProfile& x);

bool is_feasible(const GameSpec& game, const Eigen::VectorXd& x);

}  // namespace snep
