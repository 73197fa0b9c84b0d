#pragma once

#include <string>
#include <vector>

#include "rispls/montecarlo.hpp"

namespace rispls::presets {

struct SeriesSpec {
    std::string label;
    montecarlo::ScenarioConfig config;
};

enum class PlotMetric { rate, outage };

// One runnable experiment: a sweep axis, its values (external units), and one
// or more series sharing that axis.
struct RunPlan {
    std::string name;  // preset name, or "custom" for config files
    montecarlo::SweepAxis axis = montecarlo::SweepAxis::theta;
    std::vector<double> axis_values;
    std::vector<SeriesSpec> series;
    PlotMetric plot_metric = PlotMetric::rate;
};

const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);

// Expands a named figure panel to its full parameter set.
RunPlan expand_preset(const std::string& name);

// "<mode> a=<alpha> dte=<d_te> <bK|cont>", regenerated from the final config
// so overrides show up in row tags.
std::string series_label(const montecarlo::ScenarioConfig& c);

// External (file/CSV) name of a sweep axis, e.g. theta -> "theta_deg".
std::string axis_external_name(montecarlo::SweepAxis axis);

// Inverse of axis_external_name; throws std::invalid_argument on unknown names.
montecarlo::SweepAxis axis_from_external_name(const std::string& name);

}
