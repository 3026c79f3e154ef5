#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "dtdd/sweep.hpp"

namespace dtdd {

/// Everything a configuration file can set.
struct RunConfig {
  NetworkConfig network;
  AnalyticOptions analytic;
  SimulationSettings simulation;
  std::optional<SweepSpec> sweep;
};

/// Parses a JSON configuration. Absent keys keep their defaults; unknown
/// keys, duplicate unit variants (e.g. both p_s and p_s_dbm) and invalid
/// values throw ConfigError. Decibel values are converted here.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

}  // namespace dtdd
