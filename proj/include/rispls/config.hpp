#pragma once

#include <string>

#include "rispls/presets.hpp"

namespace rispls::config {

// Parses a JSON scenario file into a run plan. The file either names a preset
// (optionally overriding fields) or describes a standalone scenario with an
// optional "sweep" block. Unknown keys are rejected by name. Throws
// std::runtime_error with a message naming the offending key on any problem.
presets::RunPlan parse_config_file(const std::string& path);

// Same, but from JSON text (used by tests and by parse_config_file).
presets::RunPlan parse_config_json(const std::string& text);

// Applies one "key=value" override (CLI --set) to every series of a plan.
// Keys match the config-file schema. Throws std::runtime_error on unknown
// keys or unparseable values.
void apply_override(presets::RunPlan& plan, const std::string& key_value);

// Serializes one scenario back to the flat config-file key set (used by the
// run manifest written next to results).
std::string scenario_to_json(const montecarlo::ScenarioConfig& c);

}
