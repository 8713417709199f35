#include "snep/compliance.hpp"

#include <fmt/format.h>

namespace snep {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::unknown: return "unknown";
  }
  return "?";
}

namespace {

Finding vanishing_step(const StepSchedule& step) {
  if (step.kind() == StepSchedule::Kind::constant)
    return {"vanishing-step", CheckStatus::fail,
            fmt::format("constant step {} does not vanish (sum of squares diverges)", step.scale())};
  if (step.is_vanishing_summable())
    return {"vanishing-step", CheckStatus::pass,
            fmt::format("step (k + {})^-{} scaled by {}: exponent in (0.5, 1]", step.offset(), step.exponent(),
                        step.scale())};
  return {"vanishing-step", CheckStatus::fail,
          fmt::format("step exponent {} is outside (0.5, 1]", step.exponent())};
}

Finding step_bound(const char* id, const char* formula, double gamma_max, std::optional<double> bound) {
  if (!bound) return {id, CheckStatus::unknown, fmt::format("{} unavailable: constants not declared", formula)};
  const bool ok = gamma_max <= *bound;
  return {id, ok ? CheckStatus::pass : CheckStatus::fail,
          fmt::format("max step {} {} {} = {}", gamma_max, ok ? "<=" : "exceeds", formula, *bound)};
}

}  // namespace

bool ComplianceReport::ok() const {
  const Finding* strong = nullptr;
  const Finding* coco = nullptr;
  for (const auto& f : findings) {
    if (f.check == "step-bound-strong") strong = &f;
    else if (f.check == "step-bound-cocoercive") coco = &f;
    else if (f.status == CheckStatus::fail) return false;
  }
  if (strong && strong->status != CheckStatus::unknown) return strong->status == CheckStatus::pass;
  if (coco) return coco->status != CheckStatus::fail;
  return true;
}

ComplianceReport check_compliance(const AlgorithmConfig& config, const MonotonicityConstants& constants) {
  ComplianceReport report;
  report.label = config.label.empty() ? std::string(to_string(config.algorithm)) : config.label;
  const auto& step = config.step;
  const bool vr = config.oracle == OracleKind::vr;
  const bool constant_step = step.kind() == StepSchedule::Kind::constant;

  if (!vr) {
    report.findings.push_back(vanishing_step(step));
  } else if (config.batch.kind() == BatchSchedule::Kind::polynomial) {
    const auto& b = config.batch;
    report.findings.push_back({"batch-growth", CheckStatus::pass,
                               fmt::format("S_k = ceil({} (k + {})^{})", b.scale(), b.offset(), b.growth() + 1)});
  } else {
    // A constant batch is admissible together with a vanishing step.
    Finding f = vanishing_step(step);
    report.findings.push_back(
        {"batch-growth", f.status,
         fmt::format("constant batch {} requires a vanishing step: {}", config.batch.size(), f.message)});
  }

  if (constant_step || vr) {
    const double gamma_max = step.supremum();
    std::optional<double> strong_bound;
    if (constants.strong_monotonicity && constants.lipschitz)
      strong_bound = 2.0 * *constants.strong_monotonicity / (*constants.lipschitz * *constants.lipschitz);
    std::optional<double> coco_bound;
    if (constants.cocoercivity) coco_bound = 2.0 * *constants.cocoercivity;
    report.findings.push_back(step_bound("step-bound-strong", "2*mu/ell^2", gamma_max, strong_bound));
    report.findings.push_back(step_bound("step-bound-cocoercive", "2*beta", gamma_max, coco_bound));
  }
  return report;
}

}  // namespace snep
