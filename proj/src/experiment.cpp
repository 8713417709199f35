#include "snep/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "snep/config_io.hpp"
#include "snep/errors.hpp"
#include "snep/games.hpp"

namespace snep {

namespace {

// Runs body(i) for i in [0, count) on up to `workers` threads. The first
// exception (by task index) is rethrown after all workers finish.
template <class Body>
void parallel_for(std::size_t count, std::size_t workers, Body body) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::size_t resolve_workers(std::size_t requested) { return requested > 0 ? requested : default_worker_count(); }

std::string number(double v) { return fmt::format("{}", v); }
std::string optional_number(double v) { return std::isnan(v) ? std::string() : number(v); }

std::ofstream open_csv(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::size_t default_worker_count() {
  if (const char* env = std::getenv("SNEP_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

void ExperimentConfig::validate() const {
  if (runs < 1) throw ConfigError("runs", "must be >= 1");
  if (window < 1) throw ConfigError("window", "must be >= 1");
  if (metric_stride < 1) throw ConfigError("metric_stride", "must be >= 1");
  if (algorithms.empty()) throw ConfigError("algorithms", "at least one algorithm is required");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    const auto& a = algorithms[i];
    const std::string field = fmt::format("algorithms[{}]", i);
    if (a.label.empty()) throw ConfigError(field + ".name", "must not be empty");
    if (!labels.insert(a.label).second) throw ConfigError(field + ".name", "duplicate algorithm name '" + a.label + "'");
    try {
      a.validate();
    } catch (const InvalidParameter& e) {
      throw ConfigError(field, e.what());
    }
  }
}

std::vector<AggregateRow> AggregateSeries::series(const std::string& algorithm) const {
  std::vector<AggregateRow> out;
  for (const auto& r : rows)
    if (r.algorithm == algorithm) out.push_back(r);
  return out;
}

const AggregateRow& AggregateSeries::last(const std::string& algorithm) const {
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    if (it->algorithm == algorithm) return *it;
  throw Error("no aggregate rows for algorithm '" + algorithm + "'");
}

std::vector<double> trailing_average(std::span<const double> values, std::size_t window) {
  if (window == 0) throw InvalidParameter("smoothing window must be >= 1");
  std::vector<double> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const std::size_t count = std::min(j + 1, window);
    double sum = 0;
    for (std::size_t i = j + 1 - count; i <= j; ++i) sum += values[i];
    out[j] = sum / static_cast<double>(count);
  }
  return out;
}

AggregateSeries aggregate_runs(std::span<const std::string> algorithms, std::span<const RunRecord> runs,
                               std::span<const ExcludedRun> excluded, std::size_t window) {
  AggregateSeries out;
  for (const auto& name : algorithms) {
    std::vector<const RunRecord*> members;
    for (const auto& r : runs)
      if (r.label == name) members.push_back(&r);
    const auto n_excluded = static_cast<std::uint64_t>(
        std::count_if(excluded.begin(), excluded.end(), [&](const ExcludedRun& e) { return e.algorithm == name; }));

    std::size_t length = 0;
    for (const auto* r : members) length = std::max(length, r->points.size());

    std::vector<AggregateRow> rows(length);
    std::vector<double> mean_residual(length);
    for (std::size_t j = 0; j < length; ++j) {
      double res = 0, dist = 0, samples = 0, elapsed = 0;
      std::size_t count = 0;
      for (const auto* r : members) {
        if (j >= r->points.size()) continue;
        const auto& p = r->points[j];
        if (count == 0) rows[j].iteration = p.iteration;
        res += p.residual;
        dist += p.distance;
        samples += static_cast<double>(p.samples);
        elapsed += static_cast<double>(p.elapsed_ns);
        ++count;
      }
      const double c = static_cast<double>(count);
      rows[j].algorithm = name;
      rows[j].mean_residual = mean_residual[j] = res / c;
      rows[j].mean_distance = dist / c;
      rows[j].mean_samples = samples / c;
      rows[j].mean_elapsed_ns = elapsed / c;
      rows[j].excluded_runs = n_excluded;
    }
    const auto smooth = trailing_average(mean_residual, window);
    for (std::size_t j = 0; j < length; ++j) rows[j].smooth_residual = smooth[j];
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  }
  return out;
}

void write_raw_csv(const std::filesystem::path& path, std::span<const RunRecord> runs) {
  auto out = open_csv(path);
  out << "algorithm,run,iteration,residual,distance,samples,elapsed_ns\n";
  for (const auto& r : runs)
    for (const auto& p : r.points)
      out << fmt::format("{},{},{},{},{},{},{}\n", r.label, r.run_index, p.iteration, number(p.residual),
                         optional_number(p.distance), p.samples, p.elapsed_ns);
  if (!out) throw Error("failed writing " + path.string());
}

void write_aggregate_csv(const std::filesystem::path& path, const AggregateSeries& aggregate) {
  auto out = open_csv(path);
  out << "algorithm,iteration,mean_residual,smooth_residual,mean_distance,mean_samples,mean_elapsed_ns,"
         "excluded_runs\n";
  for (const auto& r : aggregate.rows)
    out << fmt::format("{},{},{},{},{},{},{},{}\n", r.algorithm, r.iteration, number(r.mean_residual),
                       number(r.smooth_residual), optional_number(r.mean_distance), number(r.mean_samples),
                       number(r.mean_elapsed_ns), r.excluded_runs);
  if (!out) throw Error("failed writing " + path.string());
}

ExperimentResult run_experiment(const ExperimentConfig& config, std::ostream* log) {
  config.validate();
  const GameSpec game = make_game(config.game_name, config.game_params);

  ExperimentResult result;
  bool compliant = true;
  for (const auto& a : config.algorithms) {
    auto report = check_compliance(a, game.constants);
    for (const auto& f : report.findings)
      if (log && f.status != CheckStatus::pass)
        *log << fmt::format("[{}] {} {}: {}\n", report.label, to_string(f.status), f.check, f.message);
    compliant = compliant && report.ok();
    result.compliance.push_back(std::move(report));
  }
  if (config.strict && !compliant) throw ComplianceError("schedule compliance failed in strict mode");

  RunOptions base;
  base.metric_stride = config.metric_stride;
  if (config.initial_point) {
    const auto& p = *config.initial_point;
    base.initial_point = Eigen::Map<const Eigen::VectorXd>(p.data(), static_cast<Eigen::Index>(p.size()));
  }

  const std::size_t n_alg = config.algorithms.size();
  const std::size_t n_tasks = n_alg * config.runs;
  std::vector<std::optional<RunRecord>> records(n_tasks);
  std::vector<std::optional<ExcludedRun>> failures(n_tasks);

  parallel_for(n_tasks, resolve_workers(config.workers), [&](std::size_t task) {
    const std::size_t a = task / config.runs;
    const std::uint64_t r = task % config.runs;
    AlgorithmConfig alg = config.algorithms[a];
    alg.seed = config.base_seed + r;
    RunOptions options = base;
    options.run_index = r;
    try {
      records[task] = run(game, alg, options);
    } catch (const DivergenceError& e) {
      failures[task] = ExcludedRun{alg.label, r, e.iteration(), e.what()};
    }
  });

  std::vector<std::string> labels;
  for (const auto& a : config.algorithms) labels.push_back(a.label);
  for (std::size_t t = 0; t < n_tasks; ++t) {
    if (records[t]) result.runs.push_back(std::move(*records[t]));
    if (failures[t]) {
      if (log) *log << fmt::format("[{}] run {} excluded: {}\n", failures[t]->algorithm, failures[t]->run_index,
                                   failures[t]->reason);
      result.excluded.push_back(std::move(*failures[t]));
    }
  }
  result.aggregate = aggregate_runs(labels, result.runs, result.excluded, config.window);

  if (!config.output_dir.empty()) {
    write_raw_csv(config.output_dir / "raw.csv", result.runs);
    write_aggregate_csv(config.output_dir / "aggregate.csv", result.aggregate);
  }
  return result;
}

AlgorithmConfig VarianceStudyConfig::default_variance_algorithm() {
  return AlgorithmConfig::make(Algorithm::sfb, StepSchedule::polynomial(1.0, 10.0, 1.0), 20000);
}

void VarianceStudyConfig::validate() const {
  if (runs < 1) throw ConfigError("runs", "must be >= 1");
  if (variances.empty()) throw ConfigError("variances", "at least one variance is required");
  for (double v : variances)
    if (!(v >= 0) || !std::isfinite(v)) throw ConfigError("variances", "variances must be finite and >= 0");
  if (thresholds.empty()) throw ConfigError("thresholds", "at least one threshold is required");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0)) throw ConfigError("thresholds", "thresholds must be positive");
    if (i > 0 && !(thresholds[i] < thresholds[i - 1]))
      throw ConfigError("thresholds", "thresholds must be strictly decreasing");
  }
  if (initial_point.size() != 3) throw ConfigError("initial_point", "game_b has three players");
  try {
    algorithm.validate();
  } catch (const InvalidParameter& e) {
    throw ConfigError("algorithm", e.what());
  }
}

const VarianceCell& VarianceTable::at(double variance, double threshold) const {
  for (const auto& c : cells)
    if (c.variance == variance && c.threshold == threshold) return c;
  throw Error(fmt::format("no variance-study cell for variance {} threshold {}", variance, threshold));
}

VarianceTable variance_study(const VarianceStudyConfig& config, std::ostream* log) {
  config.validate();
  const std::size_t n_var = config.variances.size();
  const std::size_t n_thr = config.thresholds.size();
  const Eigen::VectorXd x0 = Eigen::Map<const Eigen::VectorXd>(config.initial_point.data(), 3);
  const std::uint64_t cap = config.algorithm.max_iters;

  std::vector<GameSpec> games;
  for (double v : config.variances) games.push_back(game_b(config.game_seed, v, config.constrained, config.theta).spec());

  // hits[(variance, run)][threshold] = first crossing, or nullopt.
  std::vector<std::vector<std::optional<std::uint64_t>>> hits(n_var * config.runs);
  parallel_for(n_var * config.runs, resolve_workers(config.workers), [&](std::size_t task) {
    const std::size_t vi = task / config.runs;
    const std::uint64_t r = task % config.runs;
    auto& crossing = hits[task];
    crossing.assign(n_thr, std::nullopt);

    AlgorithmConfig alg = config.algorithm;
    alg.seed = config.base_seed + r;
    RunOptions options;
    options.run_index = r;
    options.initial_point = x0;
    options.observer = [&](const MetricPoint& p) {
      bool all = true;
      for (std::size_t t = 0; t < n_thr; ++t) {
        if (!crossing[t] && p.residual < config.thresholds[t]) crossing[t] = p.iteration;
        all = all && crossing[t].has_value();
      }
      return !all;
    };
    try {
      run(games[vi], alg, options);
    } catch (const DivergenceError&) {
      // thresholds not yet crossed stay "not reached"
    }
  });

  VarianceTable table;
  for (std::size_t vi = 0; vi < n_var; ++vi) {
    for (std::size_t t = 0; t < n_thr; ++t) {
      VarianceCell cell;
      cell.variance = config.variances[vi];
      cell.threshold = config.thresholds[t];
      cell.runs = config.runs;
      double total = 0;
      for (std::uint64_t r = 0; r < config.runs; ++r) {
        const auto& hit = hits[vi * config.runs + r][t];
        total += static_cast<double>(hit ? *hit : cap);
        if (hit) ++cell.reached_runs;
      }
      cell.mean_iterations = total / static_cast<double>(config.runs);
      if (log)
        *log << fmt::format("variance {} threshold {}: mean iterations {} ({}/{} reached)\n", cell.variance,
                            cell.threshold, cell.mean_iterations, cell.reached_runs, cell.runs);
      table.cells.push_back(cell);
    }
  }
  if (!config.output_dir.empty()) write_variance_csv(config.output_dir / "variance.csv", table);
  return table;
}

void write_variance_csv(const std::filesystem::path& path, const VarianceTable& table) {
  auto out = open_csv(path);
  out << "variance,threshold,mean_iterations,reached_runs,runs\n";
  for (const auto& c : table.cells)
    out << fmt::format("{},{},{},{},{}\n", number(c.variance), number(c.threshold), number(c.mean_iterations),
                       c.reached_runs, c.runs);
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace snep
