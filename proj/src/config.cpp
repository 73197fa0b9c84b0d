#include "rispls/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rispls::config {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
    throw std::runtime_error(message);
}

double to_number(const std::string& key, const json& v) {
    if (!v.is_number()) fail(key + " must be a number");
    return v.get<double>();
}

std::int64_t to_integer(const std::string& key, const json& v) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::isfinite(d) && std::floor(d) == d)
            return static_cast<std::int64_t>(d);
    }
    fail(key + " must be an integer");
}

bool to_bool(const std::string& key, const json& v) {
    if (!v.is_boolean()) fail(key + " must be a boolean");
    return v.get<bool>();
}

// Applies one flat scalar key to a scenario. Shared by file parsing and
// --set overrides so both speak the same schema.
void set_scalar(montecarlo::ScenarioConfig& c, const std::string& key,
                const json& v) {
    if (key == "d_tr_m") {
        c.topology.d_tr_m = to_number(key, v);
    } else if (key == "d_te_m") {
        c.topology.d_te_m = to_number(key, v);
    } else if (key == "d_tl_m") {
        c.topology.d_tl_m = to_number(key, v);
    } else if (key == "theta_deg") {
        const double deg = to_number(key, v);
        if (!std::isfinite(deg) || deg < 0.0 || deg >= 90.0)
            fail("theta_deg must lie in [0, 90)");
        c.topology.theta_rad = deg * std::numbers::pi / 180.0;
    } else if (key == "p_tx_dbm") {
        c.budget.p_tx_dbm = to_number(key, v);
    } else if (key == "noise_dbm") {
        c.budget.noise_dbm = to_number(key, v);
    } else if (key == "c0_db") {
        c.budget.c0_db = to_number(key, v);
    } else if (key == "d0_m") {
        c.budget.d0_m = to_number(key, v);
    } else if (key == "alpha") {
        c.budget.alpha = to_number(key, v);
    } else if (key == "blockage_db") {
        c.budget.blockage_db = to_number(key, v);
    } else if (key == "n_elements") {
        c.n_elements = static_cast<int>(to_integer(key, v));
    } else if (key == "quantization_bits") {
        if (v.is_null()) {
            c.quantization_bits.reset();  // continuous phases
        } else {
            const std::int64_t bits = to_integer(key, v);
            if (bits < 1 || bits > 8)
                fail("quantization_bits must be an integer in [1, 8] or null");
            c.quantization_bits = static_cast<int>(bits);
        }
    } else if (key == "include_ris") {
        c.include_ris = to_bool(key, v);
    } else if (key == "include_direct") {
        c.include_direct = to_bool(key, v);
    } else if (key == "r_th_bps_hz") {
        c.r_th_bps_hz = to_number(key, v);
    } else if (key == "trials") {
        const std::int64_t trials = to_integer(key, v);
        if (trials < 1) fail("trials must be >= 1");
        c.trials = trials;
    } else if (key == "seed") {
        if (v.is_number_unsigned()) {
            c.seed = v.get<std::uint64_t>();
        } else {
            const std::int64_t seed = to_integer(key, v);
            if (seed < 0) fail("seed must be >= 0");
            c.seed = static_cast<std::uint64_t>(seed);
        }
    } else {
        fail("unknown config key: " + key);
    }
}

// Rebuilds labels from the final configs and drops series that overrides
// made indistinguishable.
void finalize_labels(presets::RunPlan& plan) {
    for (auto& s : plan.series) s.label = presets::series_label(s.config);
    std::vector<presets::SeriesSpec> kept;
    kept.reserve(plan.series.size());
    for (auto& s : plan.series) {
        const bool seen = std::any_of(kept.begin(), kept.end(), [&](const auto& k) {
            return k.label == s.label;
        });
        if (!seen) kept.push_back(std::move(s));
    }
    plan.series = std::move(kept);
}

void parse_sweep_block(const json& sw, presets::RunPlan& plan) {
    if (!sw.is_object()) fail("sweep must be an object");
    for (const auto& [key, value] : sw.items()) {
        (void)value;
        if (key != "axis" && key != "values")
            fail("unknown config key: sweep." + key);
    }
    if (!sw.contains("axis") || !sw["axis"].is_string())
        fail("sweep.axis must be a string");
    try {
        plan.axis = presets::axis_from_external_name(sw["axis"].get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(std::string("sweep.axis: ") + e.what());
    }
    if (!sw.contains("values") || !sw["values"].is_array() || sw["values"].empty())
        fail("sweep.values must be a non-empty array of numbers");
    plan.axis_values.clear();
    for (const auto& v : sw["values"]) {
        if (!v.is_number()) fail("sweep.values must be a non-empty array of numbers");
        plan.axis_values.push_back(v.get<double>());
    }
    for (std::size_t i = 1; i < plan.axis_values.size(); ++i)
        if (!(plan.axis_values[i] > plan.axis_values[i - 1]))
            fail("sweep.values must be strictly increasing");
}

}

presets::RunPlan parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("config root must be a JSON object");

    presets::RunPlan plan;
    if (j.contains("preset")) {
        if (!j["preset"].is_string()) fail("preset must be a string");
        try {
            plan = presets::expand_preset(j["preset"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    } else {
        plan.name = "custom";
        plan.series.push_back({"", montecarlo::ScenarioConfig{}});
    }

    for (const auto& [key, value] : j.items()) {
        if (key == "preset" || key == "sweep") continue;
        for (auto& s : plan.series) set_scalar(s.config, key, value);
    }

    if (j.contains("sweep")) {
        parse_sweep_block(j["sweep"], plan);
    } else if (!j.contains("preset")) {
        // Degenerate single-point sweep at the scenario's own angle.
        plan.axis = montecarlo::SweepAxis::theta;
        double deg = 0.0;
        if (j.contains("theta_deg")) deg = j["theta_deg"].get<double>();
        plan.axis_values = {deg};
    }

    finalize_labels(plan);
    return plan;
}

presets::RunPlan parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config_json(buf.str());
    } catch (const std::runtime_error& e) {
        fail(path + ": " + e.what());
    }
}

void apply_override(presets::RunPlan& plan, const std::string& key_value) {
    const auto eq = key_value.find('=');
    if (eq == std::string::npos || eq == 0)
        fail("override must look like key=value: " + key_value);
    const std::string key = key_value.substr(0, eq);
    const std::string text = key_value.substr(eq + 1);
    if (key == "preset" || key == "sweep")
        fail(key + " cannot be changed with --set");
    json v;
    try {
        v = json::parse(text);
    } catch (const json::parse_error&) {
        fail("cannot parse value for " + key + ": " + text);
    }
    for (auto& s : plan.series) set_scalar(s.config, key, v);
    finalize_labels(plan);
}

std::string scenario_to_json(const montecarlo::ScenarioConfig& c) {
    json j;
    j["d_tr_m"] = c.topology.d_tr_m;
    j["d_te_m"] = c.topology.d_te_m;
    j["d_tl_m"] = c.topology.d_tl_m;
    j["theta_deg"] = c.topology.theta_rad * 180.0 / std::numbers::pi;
    j["p_tx_dbm"] = c.budget.p_tx_dbm;
    j["noise_dbm"] = c.budget.noise_dbm;
    j["c0_db"] = c.budget.c0_db;
    j["d0_m"] = c.budget.d0_m;
    j["alpha"] = c.budget.alpha;
    j["blockage_db"] = c.budget.blockage_db;
    j["n_elements"] = c.n_elements;
    if (c.quantization_bits)
        j["quantization_bits"] = *c.quantization_bits;
    else
        j["quantization_bits"] = nullptr;
    j["include_ris"] = c.include_ris;
    j["include_direct"] = c.include_direct;
    j["r_th_bps_hz"] = c.r_th_bps_hz;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    return j.dump(2);
}

}
