#include "snep/algorithms.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "snep/errors.hpp"
#include "snep/residual.hpp"

namespace snep {

namespace {

SolverState advanced(const SolverState& state, Eigen::VectorXd next, std::uint64_t samples,
                     bool keep_previous) {
  SolverState out{state.x.with_values(std::move(next)), std::nullopt, state.k + 1, state.rng,
                  state.samples + samples};
  if (keep_previous) out.x_prev = state.x;
  return out;
}

void require_step(double gamma) {
  if (!(gamma >= 0) || !std::isfinite(gamma)) throw InvalidParameter("step size must be finite and >= 0");
}

// gamma == 0 leaves the iterate untouched; the prox itself needs a positive step.
Eigen::VectorXd fb_or_hold(const GameSpec& game, const Eigen::VectorXd& x, const Eigen::VectorXd& direction,
                           double gamma, std::span<const double> agent_scale) {
  if (gamma == 0) return x;
  return forward_backward(game, x, direction, gamma, agent_scale);
}

}  // namespace

SolverState initial_state(const DecisionProfile& x0, RngStream rng, bool keep_previous) {
  SolverState state{x0, std::nullopt, 0, rng, 0};
  if (keep_previous) state.x_prev = x0;
  return state;
}

Eigen::VectorXd default_initial_point(const GameSpec& game) {
  return prox_blockwise(game, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(game.dimension())), 1.0);
}

SolverState sfb_step(const GameSpec& game, const SolverState& state, double gamma, const OracleSpec& oracle,
                     std::span<const double> agent_scale) {
  require_step(gamma);
  const Eigen::VectorXd& x = state.x.values();
  const Eigen::VectorXd direction = estimate(game, x, oracle, state.stream(0));
  return advanced(state, fb_or_hold(game, x, direction, gamma, agent_scale), oracle.samples_per_call(), false);
}

SolverState seg_step(const GameSpec& game, const SolverState& state, double gamma, const OracleSpec& oracle,
                     std::span<const double> agent_scale) {
  require_step(gamma);
  const Eigen::VectorXd& x = state.x.values();
  const std::uint64_t per_call = oracle.samples_per_call();
  const Eigen::VectorXd y = fb_or_hold(game, x, estimate(game, x, oracle, state.stream(0)), gamma, agent_scale);
  const Eigen::VectorXd direction = estimate(game, y, oracle, state.stream(per_call));
  return advanced(state, fb_or_hold(game, x, direction, gamma, agent_scale), 2 * per_call, false);
}

SolverState tik_step(const GameSpec& game, const SolverState& state, double gamma, double eps,
                     const OracleSpec& oracle, std::span<const double> agent_scale) {
  require_step(gamma);
  if (!(eps >= 0)) throw InvalidParameter("Tikhonov weight must be >= 0");
  const Eigen::VectorXd& x = state.x.values();
  const Eigen::VectorXd direction = estimate(game, x, oracle, state.stream(0)) + eps * x;
  return advanced(state, fb_or_hold(game, x, direction, gamma, agent_scale), oracle.samples_per_call(), false);
}

SolverState rssa_step_shifted(const GameSpec& game, const SolverState& state, double gamma,
                              const Eigen::VectorXd& shift, double eta, const OracleSpec& oracle,
                              std::span<const double> agent_scale) {
  require_step(gamma);
  if (!(eta >= 0)) throw InvalidParameter("RSSA regularization must be >= 0");
  const Eigen::VectorXd& x = state.x.values();
  const Eigen::VectorXd direction = estimate(game, x + shift, oracle, state.stream(0)) + eta * x;
  return advanced(state, fb_or_hold(game, x, direction, gamma, agent_scale), oracle.samples_per_call(), false);
}

SolverState rssa_step(const GameSpec& game, const SolverState& state, double gamma, double delta, double eta,
                      const OracleSpec& oracle, std::span<const double> agent_scale) {
  const Eigen::VectorXd shift = uniform_ball(game.dimension(), delta, state.stream(kSmoothingSample));
  return rssa_step_shifted(game, state, gamma, shift, eta, oracle, agent_scale);
}

SolverState sprg_step(const GameSpec& game, const SolverState& state, double gamma, const OracleSpec& oracle,
                      std::span<const double> agent_scale) {
  require_step(gamma);
  const Eigen::VectorXd& x = state.x.values();
  const Eigen::VectorXd& prev = state.x_prev ? state.x_prev->values() : x;
  const Eigen::VectorXd reflected = 2.0 * x - prev;
  const Eigen::VectorXd direction = estimate(game, reflected, oracle, state.stream(0));
  return advanced(state, fb_or_hold(game, x, direction, gamma, agent_scale), oracle.samples_per_call(), true);
}

SolverState advance(const GameSpec& game, const AlgorithmConfig& config, const SolverState& state) {
  const std::uint64_t k = state.k;
  const double gamma = config.step.at(k);
  const OracleSpec oracle = config.oracle_at(k);
  const std::span<const double> scale(config.agent_step_scale);
  switch (config.algorithm) {
    case Algorithm::sfb:
      return sfb_step(game, state, gamma, oracle, scale);
    case Algorithm::seg:
      return seg_step(game, state, gamma, oracle, scale);
    case Algorithm::tik:
      return tik_step(game, state, gamma, config.tik_eps->at(k), oracle, scale);
    case Algorithm::rssa:
      return rssa_step(game, state, gamma, config.rssa_delta->at(k), config.rssa_eta->at(k), oracle, scale);
    case Algorithm::sprg:
      return sprg_step(game, state, gamma, oracle, scale);
  }
  throw InvalidParameter("unknown algorithm");
}

std::uint64_t samples_per_iteration(const AlgorithmConfig& config, std::uint64_t k) {
  const std::uint64_t per_call = config.oracle_at(k).samples_per_call();
  return config.algorithm == Algorithm::seg ? 2 * per_call : per_call;
}

RunRecord run(const GameSpec& game, const AlgorithmConfig& config, const RunOptions& options) {
  config.validate();
  if (options.metric_stride == 0) throw InvalidParameter("metric stride must be >= 1");

  Eigen::VectorXd x0 = options.initial_point ? *options.initial_point : default_initial_point(game);
  if (static_cast<std::size_t>(x0.size()) != game.dimension())
    throw DimensionMismatch("initial point has the wrong dimension");
  if (!is_feasible(game, x0)) throw InvalidParameter("initial point is outside the feasible set");

  const bool has_mean = game.has_mean_oracle();
  auto measure = [&](const SolverState& s, std::int64_t elapsed) {
    MetricPoint p;
    p.iteration = s.k;
    p.residual = has_mean ? residual(game, s.x.values()) : std::numeric_limits<double>::quiet_NaN();
    p.distance = game.known_solution ? (s.x.values() - *game.known_solution).norm()
                                     : std::numeric_limits<double>::quiet_NaN();
    p.samples = s.samples;
    p.elapsed_ns = elapsed;
    return p;
  };
  auto should_stop = [&](const MetricPoint& p) {
    if (options.observer && !options.observer(p)) return true;
    return options.tolerance > 0 && p.residual <= options.tolerance;
  };

  RunRecord record;
  record.label = config.label.empty() ? std::string(to_string(config.algorithm)) : config.label;
  record.run_index = options.run_index;

  const RngStream rng{config.seed, options.run_index, 0, 0};
  SolverState state = initial_state(DecisionProfile(x0, game.partition), rng,
                                    config.algorithm == Algorithm::sprg);
  record.initial = measure(state, 0);
  if (should_stop(record.initial)) {
    record.stopped_early = true;
    record.final_point = state.x.values();
    return record;
  }

  const std::uint64_t stride = options.metric_stride;
  record.points.reserve(static_cast<std::size_t>((config.max_iters + stride - 1) / stride));
  std::chrono::steady_clock::duration elapsed{};
  while (state.k < config.max_iters) {
    const auto started = std::chrono::steady_clock::now();
    try {
      state = advance(game, config, state);
    } catch (const NonFiniteInput&) {
      throw DivergenceError(state.k + 1);
    }
    elapsed += std::chrono::steady_clock::now() - started;

    if (!state.x.values().allFinite()) throw DivergenceError(state.k);
    if (options.check_feasibility && !is_feasible(game, state.x.values()))
      throw InvalidParameter("iterate left the feasible set at iteration " + std::to_string(state.k));

    if (state.k % stride == 0 || state.k == config.max_iters) {
      record.points.push_back(
          measure(state, std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count()));
      if (should_stop(record.points.back())) {
        record.stopped_early = state.k < config.max_iters;
        break;
      }
    }
  }
  record.final_point = state.x.values();
  return record;
}

}  // namespace snep
