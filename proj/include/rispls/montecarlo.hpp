#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rispls/channel.hpp"
#include "rispls/geometry.hpp"

namespace rispls::montecarlo {

struct ScenarioConfig {
    geometry::Topology topology;
    channel::LinkBudget budget;
    int n_elements = 50;
    std::optional<int> quantization_bits;  // nullopt = continuous phases
    bool include_ris = true;
    bool include_direct = true;
    double r_th_bps_hz = 2.5;  // secrecy-rate outage threshold
    std::int64_t trials = 10000;
    std::uint64_t seed = 1;
};

// Throws std::invalid_argument naming the offending field.
void validate(const ScenarioConfig& c);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;   // 95% normal approximation: mean -/+ 1.96*se
    double ci_high = 0.0;
    std::int64_t n_trials = 0;
};

struct ScenarioResult {
    MonteCarloEstimate rate;    // mean clamped secrecy rate, bits/s/Hz
    MonteCarloEstimate outage;  // outage probability at r_th
    double mean_gamma_rx = 0.0;
    double mean_gamma_eve = 0.0;
    // Alternative statistic for sensitivity checks: the secrecy rate
    // evaluated at the mean SNRs instead of the mean of per-trial rates.
    double rate_at_mean_snr = 0.0;
    std::int64_t degenerate_phase_elements = 0;
};

// Runs the trial loop for one configuration. threads = 0 sizes the pool from
// the hardware. Output is bit-identical for every thread count: trial t draws
// only from (seed, t) and the reduction always runs in trial order.
ScenarioResult run_scenario(const ScenarioConfig& c, unsigned threads = 0);

enum class SweepAxis { theta, n_elements, alpha, d_te, quantization_bits };

// Axis values are in external units: degrees for theta, meters for d_te,
// counts for n_elements and quantization_bits.
ScenarioConfig with_axis_value(const ScenarioConfig& base, SweepAxis axis,
                               double value);

struct SweepResult {
    SweepAxis axis = SweepAxis::theta;
    std::vector<double> values;
    std::vector<ScenarioResult> points;  // one per value
};

// Runs run_scenario at every axis value with the shared base seed (common
// random numbers across points; when the axis is n_elements each point simply
// re-samples with the same seed, since the channel dimension changes).
// values must be non-empty and strictly increasing.
SweepResult sweep(const ScenarioConfig& base, SweepAxis axis,
                  const std::vector<double>& values, unsigned threads = 0);

enum class Objective { max_rate, min_outage };

// Axis value attaining the best mean; ties break toward the smaller value.
double argbest(const SweepResult& s, Objective objective);

}
