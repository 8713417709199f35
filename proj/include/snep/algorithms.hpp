#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "snep/config.hpp"
#include "snep/game.hpp"
#include "snep/profile.hpp"
#include "snep/rng.hpp"
#include "snep/sampling.hpp"

namespace snep {

struct SolverState {
  DecisionProfile x;
  std::optional<DecisionProfile> x_prev;  // SPRG only
  std::uint64_t k = 0;
  RngStream rng;             // seed and run; the iteration index is taken from k
  std::uint64_t samples = 0;  // cumulative joint realizations consumed

  RngStream stream(std::uint64_t sample = 0) const noexcept { return rng.at(k, sample); }
};

/// Sample index reserved for the RSSA smoothing perturbation.
inline constexpr std::uint64_t kSmoothingSample = std::uint64_t{1} << 63;

SolverState initial_state(const DecisionProfile& x0, RngStream rng, bool keep_previous = false);

/// Projection of the zero vector onto every agent's domain (prox with unit step).
Eigen::VectorXd default_initial_point(const GameSpec& game);

// Every agent updates from the same pre-step profile.
SolverState sfb_step(const GameSpec& game, const SolverState& state, double gamma,
                     const OracleSpec& oracle, std::span<const double> agent_scale = {});

// Two forward-backward evaluations with independent realizations: samples
// [0, S) for the extrapolation and [S, 2S) for the update.
SolverState seg_step(const GameSpec& game, const SolverState& state, double gamma,
                     const OracleSpec& oracle, std::span<const double> agent_scale = {});

SolverState tik_step(const GameSpec& game, const SolverState& state, double gamma, double eps,
                     const OracleSpec& oracle, std::span<const double> agent_scale = {});

SolverState rssa_step(const GameSpec& game, const SolverState& state, double gamma, double delta,
                      double eta, const OracleSpec& oracle, std::span<const double> agent_scale = {});

/// RSSA update with an explicit smoothing perturbation z instead of a ball draw.
SolverState rssa_step_shifted(const GameSpec& game, const SolverState& state, double gamma,
                              const Eigen::VectorXd& shift, double eta, const OracleSpec& oracle,
                              std::span<const double> agent_scale = {});

// Reflected step; uses x_prev = x when the state carries no previous iterate.
SolverState sprg_step(const GameSpec& game, const SolverState& state, double gamma,
                      const OracleSpec& oracle, std::span<const double> agent_scale = {});

/// Advances `state` by one iteration of `config.algorithm`, reading every
/// schedule at state.k.
SolverState advance(const GameSpec& game, const AlgorithmConfig& config, const SolverState& state);

/// Joint realizations consumed by one iteration at step k.
std::uint64_t samples_per_iteration(const AlgorithmConfig& config, std::uint64_t k);

struct MetricPoint {
  std::uint64_t iteration = 0;
  double residual = 0;   // NaN when the game has no mean oracle
  double distance = 0;   // NaN when the game has no known solution
  std::uint64_t samples = 0;
  std::int64_t elapsed_ns = 0;
};

struct RunRecord {
  std::string label;
  std::uint64_t run_index = 0;
  MetricPoint initial;
  std::vector<MetricPoint> points;  // after iterations stride, 2*stride, ..., and the last
  Eigen::VectorXd final_point;
  bool stopped_early = false;
};

/// Called for the initial metrics and every recorded point; return false to stop.
using IterationObserver = std::function<bool(const MetricPoint&)>;

struct RunOptions {
  std::uint64_t run_index = 0;
  std::optional<Eigen::VectorXd> initial_point;
  std::uint64_t metric_stride = 1;
  double tolerance = 0;  // stop once residual <= tolerance; 0 disables
  IterationObserver observer;
  bool check_feasibility = false;  // throw if an iterate leaves dom g
};

/// Runs config.max_iters iterations. Throws DivergenceError when an iterate
/// becomes non-finite.
RunRecord run(const GameSpec& game, const AlgorithmConfig& config, const RunOptions& options = {});

}  // namespace snep
