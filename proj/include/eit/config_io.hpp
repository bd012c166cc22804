#pragma once

#include <string>

#include "eit/cooling.hpp"
#include "eit/discrim.hpp"
#include "eit/params.hpp"

namespace eit {

// JSON round-trip for the input records.  Keys match the field names
// exactly; unknown keys are errors.  parse_* throw ConfigError.
SystemConfig parse_system_config(const std::string& json_text);
DiscriminationScenario parse_scenario(const std::string& json_text);
CoolingParams parse_cooling_params(const std::string& json_text);

std::string system_config_json(const SystemConfig& cfg);
// Single-line form, used for metadata stamps.
std::string system_config_json_compact(const SystemConfig& cfg);
std::string scenario_json(const DiscriminationScenario& s);
std::string cooling_params_json(const CoolingParams& p);

std::string read_file(const std::string& path);   // throws ConfigError
void write_file(const std::string& path, const std::string& content);

}  // namespace eit
