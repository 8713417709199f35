#include "snep/residual.hpp"

#include "snep/errors.hpp"

namespace snep {

Eigen::VectorXd prox_blockwise(const GameSpec& game, const Eigen::VectorXd& v, double gamma,
                               std::span<const double> agent_scale) {
  const auto& part = game.partition;
  if (static_cast<std::size_t>(v.size()) != part.dimension())
    throw DimensionMismatch("prox input does not match the game dimension");
  if (!agent_scale.empty() && agent_scale.size() != part.agents())
    throw DimensionMismatch("agent step scale needs one entry per agent");

  if (part.agents() == 1) {
    const double g = agent_scale.empty() ? gamma : gamma * agent_scale[0];
    return prox(game.prox_ops[0], v, g);
  }
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < part.agents(); ++i) {
    const auto off = static_cast<Eigen::Index>(part.offset(i));
    const auto len = static_cast<Eigen::Index>(part.size(i));
    const double g = agent_scale.empty() ? gamma : gamma * agent_scale[i];
    out.segment(off, len) = prox(game.prox_ops[i], v.segment(off, len), g);
  }
  return out;
}

Eigen::VectorXd forward_backward(const GameSpec& game, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& direction, double gamma,
                                 std::span<const double> agent_scale) {
  if (agent_scale.empty()) return prox_blockwise(game, x - gamma * direction, gamma);

  Eigen::VectorXd forward = x;
  for (std::size_t i = 0; i < game.partition.agents(); ++i) {
    const auto off = static_cast<Eigen::Index>(game.partition.offset(i));
    const auto len = static_cast<Eigen::Index>(game.partition.size(i));
    forward.segment(off, len) -= (gamma * agent_scale[i]) * direction.segment(off, len);
  }
  return prox_blockwise(game, forward, gamma, agent_scale);
}

double residual(const GameSpec& game, const Eigen::VectorXd& x) {
  if (!game.has_mean_oracle()) throw MissingMeanOracle();
  const Eigen::VectorXd mapped = prox_blockwise(game, x - game.mean_oracle(x), 1.0);
  return (x - mapped).norm();
}

double residual(const GameSpec& game, const DecisionProfile& x) { return residual(game, x.values()); }

bool is_feasible(const GameSpec& game, const Eigen::VectorXd& x) {
  const auto& part = game.partition;
  if (static_cast<std::size_t>(x.size()) != part.dimension()) return false;
  for (std::size_t i = 0; i < part.agents(); ++i) {
    const Eigen::VectorXd block = x.segment(static_cast<Eigen::Index>(part.offset(i)),
                                            static_cast<Eigen::Index>(part.size(i)));
    if (!in_domain(game.prox_ops[i], block)) return false;
  }
  return true;
}

}  // namespace snep
