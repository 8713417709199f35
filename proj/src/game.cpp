#include "snep/game.hpp"

#include <cmath>
#include <string>

#include "snep/errors.hpp"
#include "snep/residual.hpp"

namespace snep {

void GameSpec::validate() const {
  if (partition.agents() == 0) throw InvalidParameter("game '" + name + "' has no agents");
  if (prox_ops.size() != partition.agents())
    throw InvalidParameter("game '" + name + "' needs one prox descriptor per agent");
  if (!noisy_oracle) throw InvalidParameter("game '" + name + "' has no noisy oracle");

  const auto& c = constants;
  for (const auto* v : {&c.strong_monotonicity, &c.lipschitz, &c.cocoercivity})
    if (*v && !(**v > 0)) throw InvalidParameter("game '" + name + "': constants must be positive");
  if (c.strong_monotonicity && c.lipschitz && *c.strong_monotonicity > *c.lipschitz * (1 + 1e-12))
    throw InvalidParameter("game '" + name + "': mu exceeds ell");

  if (known_solution) {
    if (static_cast<std::size_t>(known_solution->size()) != dimension())
      throw DimensionMismatch("game '" + name + "': known solution has wrong dimension");
    if (has_mean_oracle()) {
      const double r = residual(*this, *known_solution);
      if (!(r <= 1e-9))
        throw InvalidParameter("game '" + name + "': known solution has residual " + std::to_string(r));
    }
  }
}

GameSpec with_monte_carlo_mean(GameSpec game, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw InvalidParameter("Monte Carlo mean needs at least one sample");
  std::vector<Eigen::VectorXd> draws;
  draws.reserve(samples);
  const RngStream base{seed, 0, 0, 0};
  for (std::uint64_t t = 0; t < samples; ++t) draws.push_back(game.noise.draw(base.with_sample(t)));

  game.mean_oracle = [oracle = game.noisy_oracle, draws = std::move(draws)](const Eigen::VectorXd& x) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(x.size());
    for (const auto& xi : draws) acc += oracle(x, xi);
    return Eigen::VectorXd(acc / static_cast<double>(draws.size()));
  };
  game.mean_is_approximate = true;
  game.mean_samples = samples;
  return game;
}

}  // namespace snep
