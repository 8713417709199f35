#include "snep/config.hpp"

#include <cctype>
#include <cmath>

#include "snep/errors.hpp"

namespace snep {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::sfb: return "SFB";
    case Algorithm::seg: return "SEG";
    case Algorithm::tik: return "TIK";
    case Algorithm::rssa: return "RSSA";
    case Algorithm::sprg: return "SPRG";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::sfb, Algorithm::seg, Algorithm::tik, Algorithm::rssa, Algorithm::sprg}) {
    const auto canonical = to_string(a);
    if (name.size() != canonical.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < name.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(name[i])) != canonical[i]) same = false;
    if (same) return a;
  }
  return std::nullopt;
}

std::string_view to_string(OracleKind kind) { return kind == OracleKind::sa ? "SA" : "VR"; }

StepSchedule default_tik_eps() { return StepSchedule::polynomial(1.0, 1000.0, 0.5); }
StepSchedule default_rssa_delta() { return StepSchedule::polynomial(1.0, 1.0, 1.0); }
StepSchedule default_rssa_eta() { return StepSchedule::polynomial(1.0, 1000.0, 0.5); }

AlgorithmConfig AlgorithmConfig::make(Algorithm algorithm, StepSchedule step, std::uint64_t max_iters,
                                      std::uint64_t seed) {
  AlgorithmConfig c;
  c.label = std::string(to_string(algorithm));
  c.algorithm = algorithm;
  c.step = step;
  c.max_iters = max_iters;
  c.seed = seed;
  if (algorithm == Algorithm::tik) c.tik_eps = default_tik_eps();
  if (algorithm == Algorithm::rssa) {
    c.rssa_delta = default_rssa_delta();
    c.rssa_eta = default_rssa_eta();
  }
  return c;
}

OracleSpec AlgorithmConfig::oracle_at(std::uint64_t k) const {
  OracleSpec spec;
  spec.kind = oracle;
  spec.batch = oracle == OracleKind::vr ? batch.at(k) : 1;
  spec.evaluation = batch_evaluation;
  return spec;
}

void AlgorithmConfig::validate() const {
  const std::string who = label.empty() ? std::string(to_string(algorithm)) : label;
  auto fail = [&](const std::string& what) { throw InvalidParameter(who + ": " + what); };

  if (!(step.supremum() > 0)) fail("step size must be positive");
  if (tik_eps.has_value() != (algorithm == Algorithm::tik))
    fail(algorithm == Algorithm::tik ? "TIK requires tik_eps" : "tik_eps is only valid for TIK");
  const bool rssa = algorithm == Algorithm::rssa;
  if (rssa_delta.has_value() != rssa || rssa_eta.has_value() != rssa)
    fail(rssa ? "RSSA requires rssa_delta and rssa_eta" : "rssa_delta/rssa_eta are only valid for RSSA");
  for (double s : agent_step_scale)
    if (!(s > 0) || !std::isfinite(s)) fail("agent step scales must be positive");
}

}  // namespace snep
