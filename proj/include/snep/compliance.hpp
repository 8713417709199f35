#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "snep/config.hpp"
#include "snep/game.hpp"

namespace snep {

enum class CheckStatus { pass, fail, unknown };

std::string_view to_string(CheckStatus status);

// Check identifiers:
//   vanishing-step         sum of steps diverges, sum of squares converges
//   batch-growth           S_k >= c (k + k0)^(a+1) with c, k0, a > 0
//   step-bound-strong      gamma_k <= 2 mu / ell^2
//   step-bound-cocoercive  gamma_k <= 2 beta
struct Finding {
  std::string check;
  CheckStatus status = CheckStatus::unknown;
  std::string message;
};

struct ComplianceReport {
  std::string label;
  std::vector<Finding> findings;

  /// False when a required condition fails. The strong-monotonicity step
  /// bound decides when mu and ell are declared, else the cocoercive one.
  bool ok() const;
};

/// Evaluates the step/batch conditions required by the selected oracle:
/// the SA oracle needs a vanishing step; the VR oracle needs a growing batch
/// with a bounded step, or a vanishing step with any batch. The step bounds
/// are evaluated whenever the step is constant or the oracle is VR.
ComplianceReport check_compliance(const AlgorithmConfig& config, const MonotonicityConstants& constants);

}  // namespace snep
