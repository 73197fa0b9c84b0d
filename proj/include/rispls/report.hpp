#pragma once

#include <string>
#include <vector>

#include "rispls/montecarlo.hpp"
#include "rispls/presets.hpp"

namespace rispls::report {

// One CSV row: a single (series, axis value) result.
struct ResultRow {
    std::string series;
    double axis_value = 0.0;
    montecarlo::MonteCarloEstimate rate;
    montecarlo::MonteCarloEstimate outage;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

// Shortest decimal form that round-trips at 9 significant digits.
std::string format_sig9(double v);

// CSV with a one-line comment header carrying tool version, seed and trial
// count, then one row per (series, axis point). LF line endings.
std::string emit_csv(const std::string& axis_name, const std::vector<ResultRow>& rows,
                     std::uint64_t seed, std::int64_t trials);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Standalone SVG line chart: one polyline per series, legend, tick labels,
// axis captions. Every series needs at least two points; throws
// std::runtime_error otherwise. Output is deterministic for fixed input.
std::string emit_svg(const std::vector<Series>& series, const std::string& x_label,
                     const std::string& y_label, const std::string& title);

}
