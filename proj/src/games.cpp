#include "snep/games.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "snep/errors.hpp"
#include "snep/rng.hpp"

namespace snep {

namespace {

NoiseModel entry_noise(NoiseFamily family, const Eigen::VectorXd& mean, const Eigen::VectorXd& stddev) {
  switch (family) {
    case NoiseFamily::normal:
      return NoiseModel::normal(mean, stddev);
    case NoiseFamily::uniform: {
      const Eigen::VectorXd half = stddev * std::sqrt(3.0);
      return NoiseModel::uniform(mean - half, mean + half);
    }
    case NoiseFamily::degenerate:
      break;
  }
  return NoiseModel::degenerate(mean);
}

// sup over the box of sum_e var_e * x_{col(e)}^2.
void declare_variance_bound(LinearStochasticGame& game, double radius) {
  const Eigen::VectorXd var = game.noise.variance();
  double bound = 0;
  for (std::size_t e = 0; e < game.noisy_entries.size(); ++e) bound += var[static_cast<Eigen::Index>(e)] * radius * radius;
  game.noise.set_variance_bound(bound);
}

LinearStochasticGame two_player_game(std::string name, double xi2_mean, const GameANoise& opts) {
  if (!(opts.theta > 0)) throw InvalidParameter("theta must be > 0");
  if (!(opts.xi1_stddev >= 0) || !(opts.xi2_stddev >= 0)) throw InvalidParameter("noise stddev must be >= 0");

  LinearStochasticGame g;
  g.name = std::move(name);
  g.mean_matrix.resize(2, 2);
  g.mean_matrix << 1.0, 1.0, xi2_mean, 1000.0;
  g.noisy_entries = {{0, 1}, {1, 0}};
  g.noise = entry_noise(opts.family, Eigen::Vector2d(1.0, xi2_mean), Eigen::Vector2d(opts.xi1_stddev, opts.xi2_stddev));
  g.partition = Partition({1, 1});
  g.prox = {box_prox(1, opts.theta), box_prox(1, opts.theta)};
  g.known_solution = Eigen::VectorXd::Zero(2);
  g.constants = linear_constants(g.mean_matrix);
  declare_variance_bound(g, opts.theta);
  return g;
}

}  // namespace

Eigen::MatrixXd LinearStochasticGame::sampled_matrix(const Eigen::VectorXd& xi) const {
  Eigen::MatrixXd m = mean_matrix;
  for (std::size_t e = 0; e < noisy_entries.size(); ++e)
    m(static_cast<Eigen::Index>(noisy_entries[e].row), static_cast<Eigen::Index>(noisy_entries[e].col)) =
        xi[static_cast<Eigen::Index>(e)];
  return m;
}

double LinearStochasticGame::error_variance(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd var = noise.variance();
  double total = 0;
  for (std::size_t e = 0; e < noisy_entries.size(); ++e) {
    const double xc = x[static_cast<Eigen::Index>(noisy_entries[e].col)];
    total += var[static_cast<Eigen::Index>(e)] * xc * xc;
  }
  return total;
}

void LinearStochasticGame::validate() const {
  const auto n = mean_matrix.rows();
  if (mean_matrix.cols() != n || static_cast<std::size_t>(n) != partition.dimension())
    throw DimensionMismatch(name + ": mean matrix does not match the partition");
  if (noise.dimension() != noisy_entries.size())
    throw DimensionMismatch(name + ": one noise coordinate per random entry required");
  const Eigen::VectorXd m = noise.mean();
  for (std::size_t e = 0; e < noisy_entries.size(); ++e) {
    const auto& entry = noisy_entries[e];
    if (static_cast<Eigen::Index>(entry.row) >= n || static_cast<Eigen::Index>(entry.col) >= n)
      throw DimensionMismatch(name + ": random entry outside the matrix");
    const double target = mean_matrix(static_cast<Eigen::Index>(entry.row), static_cast<Eigen::Index>(entry.col));
    if (std::abs(m[static_cast<Eigen::Index>(e)] - target) > 1e-12 * std::max(1.0, std::abs(target)))
      throw InvalidParameter(name + ": random entry mean differs from the mean matrix");
  }
}

GameSpec LinearStochasticGame::spec() const {
  validate();
  GameSpec spec;
  spec.name = name;
  spec.partition = partition;
  spec.prox_ops = prox;
  spec.noise = noise;
  spec.affine_in_noise = true;
  spec.noisy_oracle = [m = mean_matrix, entries = noisy_entries](const Eigen::VectorXd& x, const Eigen::VectorXd& xi) {
    Eigen::MatrixXd sampled = m;
    for (std::size_t e = 0; e < entries.size(); ++e)
      sampled(static_cast<Eigen::Index>(entries[e].row), static_cast<Eigen::Index>(entries[e].col)) =
          xi[static_cast<Eigen::Index>(e)];
    return Eigen::VectorXd(sampled * x);
  };
  spec.mean_oracle = [m = mean_matrix](const Eigen::VectorXd& x) { return Eigen::VectorXd(m * x); };
  spec.known_solution = known_solution;
  spec.constants = constants;
  spec.validate();
  return spec;
}

MonotonicityConstants linear_constants(const Eigen::MatrixXd& mean_matrix) {
  MonotonicityConstants c;
  const Eigen::MatrixXd sym = 0.5 * (mean_matrix + mean_matrix.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
  const double mu = eig.eigenvalues().minCoeff();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(mean_matrix);
  const double ell = svd.singularValues()(0);
  if (ell > 0) c.lipschitz = ell;

  if (mu > 0) {
    c.strong_monotonicity = mu;
    // Largest beta with u' S u >= beta u' M'M u: the smallest eigenvalue of the pencil (S, M'M).
    const Eigen::MatrixXd gram = mean_matrix.transpose() * mean_matrix;
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> pencil(sym, gram, Eigen::EigenvaluesOnly);
    const double beta = pencil.eigenvalues().minCoeff();
    if (beta > 0) c.cocoercivity = beta;
  }
  return c;
}

LinearStochasticGame game_a_verbatim(const GameANoise& noise) {
  return two_player_game("game_a", 1000.0, noise);
}

LinearStochasticGame game_a_repaired(const GameANoise& noise) {
  return two_player_game("game_a_repaired", -1.0, noise);
}

Eigen::MatrixXd game_b_matrix(std::uint64_t seed) {
  auto engine = RngStream{seed, 0, 0, 0}.engine();
  Eigen::MatrixXd a(3, 3);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) a(i, j) = unit_interval(engine);
  Eigen::MatrixXd m = a + a.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m, Eigen::EigenvaluesOnly);
  const double lambda_min = eig.eigenvalues().minCoeff();
  if (lambda_min <= 0) m += (std::abs(lambda_min) + 1.0) * Eigen::MatrixXd::Identity(3, 3);
  return m;
}

LinearStochasticGame game_b(std::uint64_t seed, double variance, bool constrained, double theta) {
  if (!(variance >= 0) || !std::isfinite(variance)) throw InvalidParameter("game_b variance must be >= 0");
  if (constrained && !(theta > 0)) throw InvalidParameter("game_b theta must be > 0");

  LinearStochasticGame g;
  g.name = "game_b";
  g.mean_matrix = game_b_matrix(seed);
  g.noisy_entries = {{0, 2}, {1, 1}, {2, 0}};
  Eigen::VectorXd mean(3);
  for (std::size_t e = 0; e < 3; ++e)
    mean[static_cast<Eigen::Index>(e)] = g.mean_matrix(static_cast<Eigen::Index>(g.noisy_entries[e].row),
                                                       static_cast<Eigen::Index>(g.noisy_entries[e].col));
  g.noise = variance > 0 ? NoiseModel::normal(mean, Eigen::VectorXd::Constant(3, std::sqrt(variance)))
                         : NoiseModel::degenerate(mean);
  g.partition = Partition({1, 1, 1});
  if (constrained) {
    g.prox = {box_prox(1, theta), box_prox(1, theta), box_prox(1, theta)};
    declare_variance_bound(g, theta);
  } else {
    g.prox = {identity_prox(), identity_prox(), identity_prox()};
  }
  g.known_solution = Eigen::VectorXd::Zero(3);
  g.constants = linear_constants(g.mean_matrix);
  return g;
}

LinearStochasticGame diag_game(const std::vector<double>& eigenvalues, double theta, double noise_stddev) {
  if (eigenvalues.empty()) throw InvalidParameter("diag_game needs at least one eigenvalue");
  for (double v : eigenvalues)
    if (!(v > 0) || !std::isfinite(v)) throw InvalidParameter("diag_game eigenvalues must be > 0");
  if (!(theta > 0)) throw InvalidParameter("diag_game theta must be > 0");
  if (!(noise_stddev >= 0)) throw InvalidParameter("diag_game noise stddev must be >= 0");

  const auto n = static_cast<Eigen::Index>(eigenvalues.size());
  const Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(eigenvalues.data(), n);
  LinearStochasticGame g;
  g.name = "diag";
  g.mean_matrix = diag.asDiagonal();
  for (Eigen::Index i = 0; i < n; ++i)
    g.noisy_entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(i)});
  g.noise = noise_stddev > 0 ? NoiseModel::normal(diag, Eigen::VectorXd::Constant(n, noise_stddev))
                             : NoiseModel::degenerate(diag);
  g.partition = Partition(std::vector<std::size_t>(eigenvalues.size(), 1));
  for (Eigen::Index i = 0; i < n; ++i) g.prox.push_back(box_prox(1, theta));
  g.known_solution = Eigen::VectorXd::Zero(n);
  g.constants.strong_monotonicity = diag.minCoeff();
  g.constants.lipschitz = diag.maxCoeff();
  g.constants.cocoercivity = 1.0 / diag.maxCoeff();
  declare_variance_bound(g, theta);
  return g;
}

}  // namespace snep
