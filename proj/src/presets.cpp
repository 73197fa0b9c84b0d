#include "rispls/presets.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace rispls::presets {

namespace {

std::string format_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

std::vector<double> grid(double first, double last, double step) {
    std::vector<double> v;
    for (double x = first; x <= last + 0.5 * step; x += step) v.push_back(x);
    return v;
}

void push_series(RunPlan& plan, const montecarlo::ScenarioConfig& c) {
    plan.series.push_back({series_label(c), c});
}

}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"fig5b", "fig5c", "fig5d",
                                                   "fig5e", "fig5f"};
    return names;
}

bool is_preset(const std::string& name) {
    const auto& names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

RunPlan expand_preset(const std::string& name) {
    if (!is_preset(name))
        throw std::invalid_argument("unknown preset: " + name);

    RunPlan plan;
    plan.name = name;
    montecarlo::ScenarioConfig base;  // defaults carry the shared parameter set

    if (name == "fig5b") {
        // Secrecy rate vs surface angle, with and without the direct link.
        base.topology.d_te_m = 50.0;
        base.r_th_bps_hz = 2.5;
        base.trials = 10000;
        plan.axis = montecarlo::SweepAxis::theta;
        plan.axis_values = grid(0.0, 60.0, 10.0);
        plan.plot_metric = PlotMetric::rate;
        for (bool with_ris : {true, false}) {
            for (double alpha : {2.5, 3.0}) {
                montecarlo::ScenarioConfig c = base;
                c.include_ris = with_ris;
                c.budget.alpha = alpha;
                push_series(plan, c);
            }
        }
        return plan;
    }

    if (name == "fig5c" || name == "fig5d") {
        // Rate (c) and outage (d) vs element count, per quantization depth.
        base.topology.d_te_m = 30.0;
        base.topology.theta_rad = deg_to_rad(10.0);
        base.r_th_bps_hz = 2.5;
        base.trials = name == "fig5c" ? 10000 : 100000;
        plan.axis = montecarlo::SweepAxis::n_elements;
        plan.axis_values = grid(10.0, 100.0, 10.0);
        plan.plot_metric = name == "fig5c" ? PlotMetric::rate : PlotMetric::outage;
        for (int bits : {1, 2, 3}) {
            montecarlo::ScenarioConfig c = base;
            c.quantization_bits = bits;
            push_series(plan, c);
        }
        push_series(plan, base);  // continuous phases
        return plan;
    }

    // fig5e / fig5f: rate (e) and outage (f) vs surface angle across
    // path-loss exponents and eavesdropper distances, 3-bit phases.
    base.quantization_bits = 3;
    base.r_th_bps_hz = 3.0;
    base.trials = name == "fig5e" ? 10000 : 100000;
    plan.axis = montecarlo::SweepAxis::theta;
    plan.axis_values = grid(0.0, 60.0, 5.0);
    plan.plot_metric = name == "fig5e" ? PlotMetric::rate : PlotMetric::outage;
    for (double alpha : {2.5, 3.0}) {
        for (double d_te : {30.0, 35.0}) {
            montecarlo::ScenarioConfig c = base;
            c.budget.alpha = alpha;
            c.topology.d_te_m = d_te;
            push_series(plan, c);
        }
    }
    return plan;
}

std::string series_label(const montecarlo::ScenarioConfig& c) {
    const std::string mode = c.include_ris && c.include_direct ? "ris+direct"
                             : c.include_ris                   ? "ris"
                                                               : "direct";
    const std::string quant =
        c.quantization_bits ? "b" + std::to_string(*c.quantization_bits) : "cont";
    return mode + " a=" + format_num(c.budget.alpha) +
           " dte=" + format_num(c.topology.d_te_m) + " " + quant;
}

std::string axis_external_name(montecarlo::SweepAxis axis) {
    switch (axis) {
        case montecarlo::SweepAxis::theta: return "theta_deg";
        case montecarlo::SweepAxis::n_elements: return "n_elements";
        case montecarlo::SweepAxis::alpha: return "alpha";
        case montecarlo::SweepAxis::d_te: return "d_te_m";
        case montecarlo::SweepAxis::quantization_bits: return "quantization_bits";
    }
    throw std::invalid_argument("unknown sweep axis");
}

montecarlo::SweepAxis axis_from_external_name(const std::string& name) {
    if (name == "theta_deg") return montecarlo::SweepAxis::theta;
    if (name == "n_elements") return montecarlo::SweepAxis::n_elements;
    if (name == "alpha") return montecarlo::SweepAxis::alpha;
    if (name == "d_te_m") return montecarlo::SweepAxis::d_te;
    if (name == "quantization_bits") return montecarlo::SweepAxis::quantization_bits;
    throw std::invalid_argument("unknown sweep axis: " + name);
}

}
