#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "snep/config.hpp"
#include "snep/experiment.hpp"
#include "snep/game.hpp"
#include "snep/schedule.hpp"

namespace snep {

// All parsers throw ConfigError naming the offending field.
StepSchedule parse_step_schedule(const nlohmann::json& j, const std::string& field);
BatchSchedule parse_batch_schedule(const nlohmann::json& j, const std::string& field);
AlgorithmConfig parse_algorithm_config(const nlohmann::json& j, const std::string& field);
ExperimentConfig parse_experiment_config(const nlohmann::json& j);
VarianceStudyConfig parse_variance_config(const nlohmann::json& j);

/// Reads and parses a JSON file; syntax errors are reported with line and column.
nlohmann::json read_json_file(const std::filesystem::path& path);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
VarianceStudyConfig load_variance_config(const std::filesystem::path& path);

struct GameInfo {
  std::string name;
  std::string description;
};

std::vector<GameInfo> list_games();

/// Builds a registered game by name: game_a, game_a_repaired, game_b, diag.
GameSpec make_game(std::string_view name, const nlohmann::json& params = nlohmann::json::object());

}  // namespace snep
