#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "snep/algorithms.hpp"
#include "snep/compliance.hpp"
#include "snep/config.hpp"

namespace snep {

struct ExperimentConfig {
  std::string game_name = "game_a";
  nlohmann::json game_params = nlohmann::json::object();
  std::vector<AlgorithmConfig> algorithms;
  std::uint64_t runs = 100;
  std::uint64_t window = 50;
  std::uint64_t metric_stride = 1;
  std::filesystem::path output_dir;  // empty: no files written
  std::uint64_t base_seed = 0;
  std::optional<std::vector<double>> initial_point;
  std::size_t workers = 0;  // 0: SNEP_WORKERS from the environment, else 1
  bool strict = false;

  void validate() const;
};

struct AggregateRow {
  std::string algorithm;
  std::uint64_t iteration = 0;
  double mean_residual = 0;
  double smooth_residual = 0;
  double mean_distance = 0;  // NaN when the game has no known solution
  double mean_samples = 0;
  double mean_elapsed_ns = 0;
  std::uint64_t excluded_runs = 0;
};

/// Per-algorithm series, algorithms in config order, iterations ascending.
struct AggregateSeries {
  std::vector<AggregateRow> rows;

  std::vector<AggregateRow> series(const std::string& algorithm) const;
  const AggregateRow& last(const std::string& algorithm) const;
};

struct ExcludedRun {
  std::string algorithm;
  std::uint64_t run_index = 0;
  std::uint64_t iteration = 0;
  std::string reason;
};

struct ExperimentResult {
  AggregateSeries aggregate;
  std::vector<RunRecord> runs;  // sorted by (algorithm order, run index)
  std::vector<ExcludedRun> excluded;
  std::vector<ComplianceReport> compliance;
};

/// Runs every algorithm `runs` times (run r uses seed base_seed + r), then
/// averages per recorded iteration over the non-diverged runs and smooths
/// with a trailing window. Writes raw.csv and aggregate.csv into output_dir
/// when it is set. Throws ComplianceError in strict mode.
ExperimentResult run_experiment(const ExperimentConfig& config, std::ostream* log = nullptr);

/// Causal moving average; entry j averages values[max(0, j-w+1) .. j].
std::vector<double> trailing_average(std::span<const double> values, std::size_t window);

AggregateSeries aggregate_runs(std::span<const std::string> algorithms, std::span<const RunRecord> runs,
                               std::span<const ExcludedRun> excluded, std::size_t window);

void write_raw_csv(const std::filesystem::path& path, std::span<const RunRecord> runs);
void write_aggregate_csv(const std::filesystem::path& path, const AggregateSeries& aggregate);

struct VarianceStudyConfig {
  std::uint64_t game_seed = 1;
  double theta = 10.0;
  bool constrained = true;
  std::vector<double> variances{0.1, 1.0, 10.0, 100.0};
  std::vector<double> thresholds{1e-1, 1e-2, 1e-3};
  std::uint64_t runs = 10;
  AlgorithmConfig algorithm = default_variance_algorithm();
  std::vector<double> initial_point{1.0, 1.0, 1.0};
  std::uint64_t base_seed = 0;
  std::filesystem::path output_dir;
  std::size_t workers = 0;

  /// SFB, SA oracle, gamma_k = (10 + k)^-1, 20000 iterations.
  static AlgorithmConfig default_variance_algorithm();
  void validate() const;
};

struct VarianceCell {
  double variance = 0;
  double threshold = 0;
  // Runs that never crossed count as max_iters, so this is a lower bound on
  // the true mean whenever reached_runs < runs.
  double mean_iterations = 0;
  std::uint64_t reached_runs = 0;
  std::uint64_t runs = 0;

  bool all_reached() const noexcept { return reached_runs == runs; }
};

struct VarianceTable {
  std::vector<VarianceCell> cells;  // variance-major, thresholds in config order

  const VarianceCell& at(double variance, double threshold) const;
};

/// For each variance, runs the configured algorithm on game_b and records the
/// first iteration whose residual is strictly below each threshold.
VarianceTable variance_study(const VarianceStudyConfig& config, std::ostream* log = nullptr);

void write_variance_csv(const std::filesystem::path& path, const VarianceTable& table);

/// Worker count from SNEP_WORKERS, defaulting to 1.
std::size_t default_worker_count();

}  // namespace snep
