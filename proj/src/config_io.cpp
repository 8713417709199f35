#include "snep/config_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>

#include "snep/errors.hpp"
#include "snep/games.hpp"

namespace snep {

namespace {

using nlohmann::json;

std::string join(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}

void require_object(const json& j, const std::string& field) {
  if (!j.is_object()) throw ConfigError(field, "expected an object");
}

void reject_unknown(const json& j, const std::string& field, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError(join(field, key), "unknown field");
  }
}

double number_at(const json& j, const std::string& key, const std::string& field) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError(join(field, key), "expected a number");
  return v.get<double>();
}

double number_or(const json& j, const std::string& key, const std::string& field, double fallback) {
  return j.contains(key) ? number_at(j, key, field) : fallback;
}

std::uint64_t count_at(const json& j, const std::string& key, const std::string& field) {
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ConfigError(join(field, key), "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::uint64_t count_or(const json& j, const std::string& key, const std::string& field, std::uint64_t fallback) {
  return j.contains(key) ? count_at(j, key, field) : fallback;
}

std::string string_at(const json& j, const std::string& key, const std::string& field) {
  const auto& v = j.at(key);
  if (!v.is_string()) throw ConfigError(join(field, key), "expected a string");
  return v.get<std::string>();
}

bool bool_or(const json& j, const std::string& key, const std::string& field, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw ConfigError(join(field, key), "expected true or false");
  return j.at(key).get<bool>();
}

std::vector<double> numbers_at(const json& j, const std::string& key, const std::string& field) {
  const auto& v = j.at(key);
  if (!v.is_array()) throw ConfigError(join(field, key), "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw ConfigError(fmt::format("{}[{}]", join(field, key), i), "expected a number");
    out.push_back(v[i].get<double>());
  }
  return out;
}

template <class Fn>
auto rethrow_as_config(const std::string& field, Fn fn) {
  try {
    return fn();
  } catch (const InvalidParameter& e) {
    throw ConfigError(field, e.what());
  } catch (const DimensionMismatch& e) {
    throw ConfigError(field, e.what());
  }
}

NoiseFamily parse_family(const json& j, const std::string& field) {
  if (!j.contains("noise")) return NoiseFamily::normal;
  const auto name = string_at(j, "noise", field);
  if (name == "normal") return NoiseFamily::normal;
  if (name == "uniform") return NoiseFamily::uniform;
  if (name == "degenerate") return NoiseFamily::degenerate;
  throw ConfigError(join(field, "noise"), "expected normal, uniform or degenerate");
}

void apply_constant_overrides(GameSpec& game, const json& params, const std::string& field) {
  if (!params.contains("constants")) return;
  const auto& c = params.at("constants");
  const std::string f = join(field, "constants");
  require_object(c, f);
  reject_unknown(c, f, {"mu", "ell", "beta"});
  if (c.contains("mu")) game.constants.strong_monotonicity = number_at(c, "mu", f);
  if (c.contains("ell")) game.constants.lipschitz = number_at(c, "ell", f);
  if (c.contains("beta")) game.constants.cocoercivity = number_at(c, "beta", f);
  rethrow_as_config(f, [&] {
    game.validate();
    return 0;
  });
}

}  // namespace

StepSchedule parse_step_schedule(const json& j, const std::string& field) {
  require_object(j, field);
  if (!j.contains("kind")) throw ConfigError(join(field, "kind"), "missing (constant or polynomial)");
  const auto kind = string_at(j, "kind", field);
  std::optional<double> cap;
  if (j.contains("cap")) cap = number_at(j, "cap", field);
  if (kind == "constant") {
    reject_unknown(j, field, {"kind", "value", "cap"});
    if (!j.contains("value")) throw ConfigError(join(field, "value"), "missing");
    return rethrow_as_config(field, [&] { return StepSchedule::constant(number_at(j, "value", field), cap); });
  }
  if (kind == "polynomial") {
    reject_unknown(j, field, {"kind", "scale", "offset", "exponent", "cap"});
    for (const char* key : {"offset", "exponent"})
      if (!j.contains(key)) throw ConfigError(join(field, key), "missing");
    return rethrow_as_config(field, [&] {
      return StepSchedule::polynomial(number_or(j, "scale", field, 1.0), number_at(j, "offset", field),
                                      number_at(j, "exponent", field), cap);
    });
  }
  throw ConfigError(join(field, "kind"), "expected constant or polynomial");
}

BatchSchedule parse_batch_schedule(const json& j, const std::string& field) {
  require_object(j, field);
  if (!j.contains("kind")) throw ConfigError(join(field, "kind"), "missing (constant or polynomial)");
  const auto kind = string_at(j, "kind", field);
  if (kind == "constant") {
    reject_unknown(j, field, {"kind", "size"});
    if (!j.contains("size")) throw ConfigError(join(field, "size"), "missing");
    return rethrow_as_config(field, [&] { return BatchSchedule::constant(count_at(j, "size", field)); });
  }
  if (kind == "polynomial") {
    reject_unknown(j, field, {"kind", "scale", "offset", "growth"});
    for (const char* key : {"scale", "offset", "growth"})
      if (!j.contains(key)) throw ConfigError(join(field, key), "missing");
    return rethrow_as_config(field, [&] {
      return BatchSchedule::polynomial(number_at(j, "scale", field), number_at(j, "offset", field),
                                       number_at(j, "growth", field));
    });
  }
  throw ConfigError(join(field, "kind"), "expected constant or polynomial");
}

AlgorithmConfig parse_algorithm_config(const json& j, const std::string& field) {
  require_object(j, field);
  reject_unknown(j, field,
                 {"name", "algorithm", "step", "oracle", "batch", "batch_evaluation", "tik_eps", "rssa_delta",
                  "rssa_eta", "agent_step_scale", "max_iters", "seed"});
  if (!j.contains("algorithm")) throw ConfigError(join(field, "algorithm"), "missing");
  const auto name = string_at(j, "algorithm", field);
  const auto algorithm = parse_algorithm(name);
  if (!algorithm) throw ConfigError(join(field, "algorithm"), "unknown algorithm '" + name + "'");
  if (!j.contains("step")) throw ConfigError(join(field, "step"), "missing");

  AlgorithmConfig c = AlgorithmConfig::make(*algorithm, parse_step_schedule(j.at("step"), join(field, "step")),
                                            count_or(j, "max_iters", field, 1000), count_or(j, "seed", field, 0));
  if (j.contains("name")) c.label = string_at(j, "name", field);

  if (j.contains("oracle")) {
    const auto oracle = string_at(j, "oracle", field);
    if (oracle == "SA" || oracle == "sa") c.oracle = OracleKind::sa;
    else if (oracle == "VR" || oracle == "vr") c.oracle = OracleKind::vr;
    else throw ConfigError(join(field, "oracle"), "expected SA or VR");
  }
  if (j.contains("batch")) {
    if (c.oracle != OracleKind::vr) throw ConfigError(join(field, "batch"), "only valid with the VR oracle");
    c.batch = parse_batch_schedule(j.at("batch"), join(field, "batch"));
  }
  if (j.contains("batch_evaluation")) {
    const auto mode = string_at(j, "batch_evaluation", field);
    if (mode == "automatic") c.batch_evaluation = BatchEvaluation::automatic;
    else if (mode == "per_sample") c.batch_evaluation = BatchEvaluation::per_sample;
    else throw ConfigError(join(field, "batch_evaluation"), "expected automatic or per_sample");
  }

  struct Group {
    const char* key;
    Algorithm owner;
    std::optional<StepSchedule>* slot;
  };
  for (const Group& g : {Group{"tik_eps", Algorithm::tik, &c.tik_eps}, Group{"rssa_delta", Algorithm::rssa, &c.rssa_delta},
                         Group{"rssa_eta", Algorithm::rssa, &c.rssa_eta}}) {
    if (!j.contains(g.key)) continue;
    if (c.algorithm != g.owner)
      throw ConfigError(join(field, g.key), fmt::format("only valid for {}", to_string(g.owner)));
    *g.slot = parse_step_schedule(j.at(g.key), join(field, g.key));
  }
  if (j.contains("agent_step_scale")) c.agent_step_scale = numbers_at(j, "agent_step_scale", field);

  rethrow_as_config(field, [&] {
    c.validate();
    return 0;
  });
  return c;
}

ExperimentConfig parse_experiment_config(const json& j) {
  require_object(j, "");
  reject_unknown(j, "",
                 {"game", "algorithms", "runs", "window", "metric_stride", "base_seed", "output", "initial_point",
                  "workers", "strict", "max_iters"});
  ExperimentConfig c;
  if (!j.contains("game")) throw ConfigError("game", "missing");
  const auto& game = j.at("game");
  if (game.is_string()) {
    c.game_name = game.get<std::string>();
  } else {
    require_object(game, "game");
    if (!game.contains("name")) throw ConfigError("game.name", "missing");
    c.game_name = string_at(game, "name", "game");
    c.game_params = game;
    c.game_params.erase("name");
  }
  make_game(c.game_name, c.game_params);

  if (!j.contains("algorithms") || !j.at("algorithms").is_array())
    throw ConfigError("algorithms", "expected an array of algorithm configs");
  const auto& algs = j.at("algorithms");
  for (std::size_t i = 0; i < algs.size(); ++i) {
    json entry = algs[i];
    if (entry.is_object() && !entry.contains("max_iters") && j.contains("max_iters"))
      entry["max_iters"] = j.at("max_iters");
    c.algorithms.push_back(parse_algorithm_config(entry, fmt::format("algorithms[{}]", i)));
  }

  c.runs = count_or(j, "runs", "", c.runs);
  c.window = count_or(j, "window", "", c.window);
  c.metric_stride = count_or(j, "metric_stride", "", c.metric_stride);
  c.base_seed = count_or(j, "base_seed", "", c.base_seed);
  c.workers = static_cast<std::size_t>(count_or(j, "workers", "", 0));
  c.strict = bool_or(j, "strict", "", false);
  if (j.contains("output")) c.output_dir = string_at(j, "output", "");
  if (j.contains("initial_point")) c.initial_point = numbers_at(j, "initial_point", "");
  c.validate();
  return c;
}

VarianceStudyConfig parse_variance_config(const json& j) {
  require_object(j, "");
  reject_unknown(j, "",
                 {"game", "variances", "thresholds", "runs", "algorithm", "initial_point", "base_seed", "output",
                  "workers"});
  VarianceStudyConfig c;
  if (j.contains("game")) {
    const auto& g = j.at("game");
    require_object(g, "game");
    reject_unknown(g, "game", {"name", "seed", "theta", "constrained"});
    if (g.contains("name") && string_at(g, "name", "game") != "game_b")
      throw ConfigError("game.name", "the variance study runs on game_b");
    c.game_seed = count_or(g, "seed", "game", c.game_seed);
    c.theta = number_or(g, "theta", "game", c.theta);
    c.constrained = bool_or(g, "constrained", "game", c.constrained);
  }
  if (j.contains("variances")) c.variances = numbers_at(j, "variances", "");
  if (j.contains("thresholds")) c.thresholds = numbers_at(j, "thresholds", "");
  c.runs = count_or(j, "runs", "", c.runs);
  if (j.contains("algorithm")) c.algorithm = parse_algorithm_config(j.at("algorithm"), "algorithm");
  if (j.contains("initial_point")) c.initial_point = numbers_at(j, "initial_point", "");
  c.base_seed = count_or(j, "base_seed", "", c.base_seed);
  c.workers = static_cast<std::size_t>(count_or(j, "workers", "", 0));
  if (j.contains("output")) c.output_dir = string_at(j, "output", "");
  c.validate();
  return c;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", path.string() + ": " + e.what());
  }
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  return parse_experiment_config(read_json_file(path));
}

VarianceStudyConfig load_variance_config(const std::filesystem::path& path) {
  return parse_variance_config(read_json_file(path));
}

std::vector<GameInfo> list_games() {
  return {
      {"game_a", "two players, F = [[1, xi1], [xi2, 1000]] x, E[xi] = (1, 1000), box [-1000, 1000]"},
      {"game_a_repaired", "as game_a with E[xi2] = -1 (strongly monotone, mu = 1)"},
      {"game_b", "three players, seeded positive definite matrix, normal noise on the antidiagonal"},
      {"diag", "one player per eigenvalue, M = diag(eigenvalues), additive normal noise on the diagonal"},
  };
}

GameSpec make_game(std::string_view name, const json& params) {
  const std::string field = "game";
  require_object(params, field);
  GameSpec game;
  if (name == "game_a" || name == "game_a_repaired") {
    reject_unknown(params, field, {"xi1_stddev", "xi2_stddev", "theta", "noise", "constants"});
    GameANoise noise;
    noise.xi1_stddev = number_or(params, "xi1_stddev", field, noise.xi1_stddev);
    noise.xi2_stddev = number_or(params, "xi2_stddev", field, noise.xi2_stddev);
    noise.theta = number_or(params, "theta", field, noise.theta);
    noise.family = parse_family(params, field);
    game = rethrow_as_config(field, [&] {
      return (name == "game_a" ? game_a_verbatim(noise) : game_a_repaired(noise)).spec();
    });
  } else if (name == "game_b") {
    reject_unknown(params, field, {"seed", "variance", "constrained", "theta", "constants"});
    const auto seed = count_or(params, "seed", field, 1);
    const double variance = number_or(params, "variance", field, 1.0);
    const bool constrained = bool_or(params, "constrained", field, true);
    const double theta = number_or(params, "theta", field, 10.0);
    game = rethrow_as_config(field, [&] { return game_b(seed, variance, constrained, theta).spec(); });
  } else if (name == "diag") {
    reject_unknown(params, field, {"eigenvalues", "theta", "noise_stddev", "constants"});
    const auto eig = params.contains("eigenvalues") ? numbers_at(params, "eigenvalues", field) : std::vector<double>{1, 2};
    const double theta = number_or(params, "theta", field, 10.0);
    const double stddev = number_or(params, "noise_stddev", field, 0.0);
    game = rethrow_as_config(field, [&] { return diag_game(eig, theta, stddev).spec(); });
  } else {
    throw ConfigError("game.name", "unknown game '" + std::string(name) + "'");
  }
  apply_constant_overrides(game, params, field);
  return game;
}

}  // namespace snep
