#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snep/sampling.hpp"
#include "snep/schedule.hpp"

namespace snep {

enum class Algorithm { sfb, seg, tik, rssa, sprg };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view to_string(OracleKind kind);

struct AlgorithmConfig {
  std::string label;
  Algorithm algorithm = Algorithm::sfb;
  StepSchedule step = StepSchedule::polynomial(1.0, 1000.0, 1.0);
  OracleKind oracle = OracleKind::sa;
  BatchSchedule batch = BatchSchedule::constant(1);
  BatchEvaluation batch_evaluation = BatchEvaluation::automatic;
  std::optional<StepSchedule> tik_eps;     // TIK only
  std::optional<StepSchedule> rssa_delta;  // RSSA only
  std::optional<StepSchedule> rssa_eta;    // RSSA only
  // Per-agent multipliers on the shared step; empty means all ones.
  std::vector<double> agent_step_scale;
  std::uint64_t max_iters = 1000;
  std::uint64_t seed = 0;

  /// Config for `algorithm` with its parameter group filled with defaults:
  /// TIK eps_k = (1000+k)^-0.5, RSSA delta_k = (1+k)^-1 and eta_k = (1000+k)^-0.5.
  static AlgorithmConfig make(Algorithm algorithm, StepSchedule step, std::uint64_t max_iters,
                              std::uint64_t seed = 0);

  OracleSpec oracle_at(std::uint64_t k) const;

  /// Throws InvalidParameter when a parameter group is present for the wrong
  /// algorithm or missing for the selected one, or a value is out of range.
  void validate() const;
};

StepSchedule default_tik_eps();
StepSchedule default_rssa_delta();
StepSchedule default_rssa_eta();

}  // namespace snep
