#include "snep/sampling.hpp"

#include <cmath>
#include <random>

#include "snep/errors.hpp"

namespace snep {

Eigen::VectorXd sa_sample(const GameSpec& game, const Eigen::VectorXd& x, const RngStream& stream) {
  return game.noisy_oracle(x, game.noise.draw(stream));
}

Eigen::VectorXd sa_sample(const GameSpec& game, const DecisionProfile& x, const RngStream& stream) {
  return sa_sample(game, x.values(), stream);
}

Eigen::VectorXd vr_sample(const GameSpec& game, const Eigen::VectorXd& x, std::uint64_t batch,
                          const RngStream& stream, BatchEvaluation evaluation) {
  if (batch == 0) throw InvalidParameter("batch size must be >= 1");
  if (batch == 1) return sa_sample(game, x, stream);

  if (evaluation == BatchEvaluation::automatic && game.affine_in_noise) {
    if (auto averaged = game.noise.draw_average(batch, stream))
      return game.noisy_oracle(x, *averaged);
  }

  Eigen::VectorXd acc = Eigen::VectorXd::Zero(x.size());
  for (std::uint64_t t = 0; t < batch; ++t) acc += sa_sample(game, x, stream.with_sample(stream.sample + t));
  return acc / static_cast<double>(batch);
}

Eigen::VectorXd vr_sample(const GameSpec& game, const DecisionProfile& x, std::uint64_t batch,
                          const RngStream& stream, BatchEvaluation evaluation) {
  return vr_sample(game, x.values(), batch, stream, evaluation);
}

Eigen::VectorXd vr_average(const GameSpec& game, const Eigen::VectorXd& x,
                           std::span<const Eigen::VectorXd> realizations) {
  if (realizations.empty()) throw InvalidParameter("need at least one realization");
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(x.size());
  for (const auto& xi : realizations) acc += game.noisy_oracle(x, xi);
  return acc / static_cast<double>(realizations.size());
}

Eigen::VectorXd estimate(const GameSpec& game, const Eigen::VectorXd& x, const OracleSpec& oracle,
                         const RngStream& stream) {
  if (oracle.kind == OracleKind::sa) return sa_sample(game, x, stream);
  return vr_sample(game, x, oracle.batch, stream, oracle.evaluation);
}

Eigen::VectorXd ErrorStats::standard_error() const {
  return error_stddev / std::sqrt(static_cast<double>(trials));
}

ErrorStats error_stats(const GameSpec& game, const Eigen::VectorXd& x, const OracleSpec& oracle,
                       std::uint64_t trials, const RngStream& stream) {
  if (!game.has_mean_oracle()) throw MissingMeanOracle();
  if (trials < 100) throw InvalidParameter("error_stats needs at least 100 trials");

  const Eigen::VectorXd exact = game.mean_oracle(x);
  const Eigen::Index n = exact.size();
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sum_sq = Eigen::VectorXd::Zero(n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Eigen::VectorXd err = estimate(game, x, oracle, stream.at(stream.iteration + t, stream.sample)) - exact;
    sum += err;
    sum_sq += err.cwiseProduct(err);
  }
  const double count = static_cast<double>(trials);
  ErrorStats stats;
  stats.trials = trials;
  stats.mean_error = sum / count;
  stats.mean_squared_norm = sum_sq.sum() / count;
  const Eigen::VectorXd var = (sum_sq / count - stats.mean_error.cwiseProduct(stats.mean_error)) * (count / (count - 1));
  stats.error_stddev = var.cwiseMax(0.0).cwiseSqrt();
  return stats;
}

Eigen::VectorXd uniform_ball(std::size_t dimension, double radius, const RngStream& stream) {
  const auto n = static_cast<Eigen::Index>(dimension);
  if (!(radius >= 0)) throw InvalidParameter("ball radius must be >= 0");
  if (radius == 0 || n == 0) return Eigen::VectorXd::Zero(n);

  auto engine = stream.engine();
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd direction(n);
  double norm = 0;
  do {
    for (Eigen::Index i = 0; i < n; ++i) direction[i] = normal(engine);
    norm = direction.norm();
  } while (norm == 0);
  const double r = radius * std::pow(unit_interval(engine), 1.0 / static_cast<double>(n));
  return direction * (r / norm);
}

}  // namespace snep
