#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "snep/compliance.hpp"
#include "snep/config_io.hpp"
#include "snep/errors.hpp"
#include "snep/experiment.hpp"
#include "snep/residual.hpp"

namespace snep::cli {

namespace {

void print(std::ostream& os, const std::string& s) { os << s << '\n'; }

int cmd_run(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto config = load_experiment_config(path);
  const auto result = run_experiment(config, &err);
  for (const auto& alg : config.algorithms) {
    const auto& last = result.aggregate.last(alg.label);
    print(out, fmt::format("{} iteration {} residual {} smoothed {} excluded {}", alg.label, last.iteration,
                           last.mean_residual, last.smooth_residual, last.excluded_runs));
  }
  if (!config.output_dir.empty()) print(out, fmt::format("wrote {}", config.output_dir.string()));
  return ok;
}

int cmd_variance(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto config = load_variance_config(path);
  const auto table = variance_study(config, &err);
  print(out, "variance threshold mean_iterations reached/runs");
  for (const auto& cell : table.cells)
    print(out, fmt::format("{} {} {} {}/{}", cell.variance, cell.threshold, cell.mean_iterations, cell.reached_runs,
                           cell.runs));
  if (!config.output_dir.empty()) {
    write_variance_csv(config.output_dir / "variance.csv", table);
    print(out, fmt::format("wrote {}", (config.output_dir / "variance.csv").string()));
  }
  return ok;
}

int cmd_residual(const std::string& game_name, const std::string& params, const std::vector<double>& x,
                 std::ostream& out) {
  nlohmann::json p = nlohmann::json::object();
  if (!params.empty()) {
    try {
      p = nlohmann::json::parse(params);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("params", e.what());
    }
  }
  const auto game = make_game(game_name, p);
  if (x.size() != game.partition.dimension())
    throw ConfigError("x", fmt::format("expected {} coordinates, got {}", game.partition.dimension(), x.size()));
  const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
  print(out, fmt::format("{}", residual(game, v)));
  return ok;
}

int cmd_validate(const std::string& path, bool strict_flag, std::ostream& out) {
  const auto config = load_experiment_config(path);
  const auto game = make_game(config.game_name, config.game_params);
  const bool strict = strict_flag || config.strict;
  bool all_ok = true;
  for (const auto& alg : config.algorithms) {
    const auto report = check_compliance(alg, game.constants);
    for (const auto& f : report.findings)
      print(out, fmt::format("{} {} {}: {}", report.label, f.check, to_string(f.status), f.message));
    print(out, fmt::format("{} {}", report.label, report.ok() ? "compliant" : "NOT compliant"));
    all_ok = all_ok && report.ok();
  }
  if (!all_ok && strict) return noncompliant;
  return ok;
}

int cmd_list_games(std::ostream& out) {
  for (const auto& g : list_games()) print(out, fmt::format("{:<16} {}", g.name, g.description));
  return ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stochastic forward-backward Nash equilibrium seeking benchmarks", "snep"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run a multi-seed experiment and write raw/aggregate CSV");
  run->add_option("config", config_path, "experiment JSON")->required();

  std::string variance_path;
  auto* variance = app.add_subcommand("variance-study", "Iterations-to-threshold versus noise variance on game_b");
  variance->add_option("config", variance_path, "variance study JSON")->required();

  std::string game_name;
  std::string game_params;
  std::vector<double> point;
  auto* res = app.add_subcommand("residual", "Evaluate the natural residual of a game at a point");
  res->add_option("game", game_name, "registered game name")->required();
  res->add_option("x", point, "decision profile coordinates")->required();
  res->add_option("--params", game_params, "game parameters as a JSON object");

  std::string validate_path;
  bool strict = false;
  auto* validate = app.add_subcommand("validate", "Check step and batch schedules against the game constants");
  validate->add_option("config", validate_path, "experiment JSON")->required();
  validate->add_flag("--strict", strict, "exit nonzero when a configuration is not compliant");

  auto* games = app.add_subcommand("list-games", "List registered games");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return bad_config;
  }

  try {
    if (*run) return cmd_run(config_path, out, err);
    if (*variance) return cmd_variance(variance_path, out, err);
    if (*res) return cmd_residual(game_name, game_params, point, out);
    if (*validate) return cmd_validate(validate_path, strict, out);
    if (*games) return cmd_list_games(out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return bad_config;
  } catch (const ComplianceError& e) {
    err << "not compliant: " << e.what() << '\n';
    return noncompliant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return runtime_failure;
  }
  return runtime_failure;
}

}  // namespace snep::cli
