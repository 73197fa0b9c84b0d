#include "rispls/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "rispls/metrics.hpp"
#include "rispls/ris.hpp"

namespace rispls::montecarlo {

void validate(const ScenarioConfig& c) {
    geometry::validate(c.topology);
    channel::validate(c.budget);
    if (c.n_elements < 0)
        throw std::invalid_argument("n_elements must be >= 0");
    if (c.quantization_bits && (*c.quantization_bits < 1 || *c.quantization_bits > 8))
        throw std::invalid_argument("quantization_bits must lie in [1, 8]");
    if (!c.include_ris && !c.include_direct)
        throw std::invalid_argument("include_ris and include_direct cannot both be false");
    if (!std::isfinite(c.r_th_bps_hz) || c.r_th_bps_hz < 0.0)
        throw std::invalid_argument("r_th_bps_hz must be >= 0 and finite");
    if (c.trials < 1)
        throw std::invalid_argument("trials must be >= 1");
}

namespace {

// Distance-dependent gains and powers, fixed across all trials of a scenario.
struct LinkGains {
    double pl_tx_ris = 0.0;
    double pl_ris_rx = 0.0;
    double pl_ris_eve = 0.0;
    double pl_tx_rx = 0.0;
    double pl_tx_eve = 0.0;
    double p_tx_w = 0.0;
    double noise_w = 0.0;
};

LinkGains link_gains(const ScenarioConfig& c) {
    const geometry::LinkDistances d = geometry::link_distances(c.topology);
    LinkGains g;
    g.pl_tx_ris = channel::path_loss_linear(d.d_tx_ris, c.budget);
    g.pl_ris_rx = channel::path_loss_linear(d.d_ris_rx, c.budget);
    g.pl_ris_eve = channel::path_loss_linear(d.d_ris_eve, c.budget);
    g.pl_tx_rx = channel::path_loss_linear(d.d_tx_rx, c.budget);
    g.pl_tx_eve = channel::path_loss_linear(d.d_tx_eve, c.budget);
    g.p_tx_w = channel::dbm_to_watts(c.budget.p_tx_dbm);
    g.noise_w = channel::dbm_to_watts(c.budget.noise_dbm);
    return g;
}

struct TrialOutput {
    double gamma_rx = 0.0;
    double gamma_eve = 0.0;
    double c_s = 0.0;
    std::int64_t degenerate = 0;
};

TrialOutput run_trial(const ScenarioConfig& c, const LinkGains& g,
                      std::uint64_t trial) {
    // Every coefficient is drawn even in direct-only mode, so series that
    // differ only in link mode share identical fading per (seed, trial).
    const channel::RngStream stream{c.seed, trial};
    const channel::ChannelRealization ch =
        channel::sample_small_scale(stream, static_cast<std::size_t>(c.n_elements));

    channel::cplx h_rx = 0.0;
    channel::cplx h_eve = 0.0;
    std::size_t degenerate = 0;
    if (c.include_ris && c.n_elements > 0) {
        ris::RisPhaseProfile prof = ris::optimal_phases(ch.h, ch.g_rx, &degenerate);
        if (c.quantization_bits)
            prof = ris::quantize_phases(prof, *c.quantization_bits);
        h_rx += channel::cascaded_channel(ch.h, ch.g_rx, prof.phases,
                                          g.pl_tx_ris, g.pl_ris_rx);
        h_eve += channel::cascaded_channel(ch.h, ch.g_eve, prof.phases,
                                           g.pl_tx_ris, g.pl_ris_eve);
    }
    if (c.include_direct) {
        h_rx += channel::direct_channel(ch.f_rx, g.pl_tx_rx, c.budget.blockage_db);
        h_eve += channel::direct_channel(ch.f_eve, g.pl_tx_eve, c.budget.blockage_db);
    }

    TrialOutput out;
    out.gamma_rx = metrics::snr(h_rx, g.p_tx_w, g.noise_w);
    out.gamma_eve = metrics::snr(h_eve, g.p_tx_w, g.noise_w);
    out.c_s = metrics::secrecy_rate(out.gamma_rx, out.gamma_eve);
    out.degenerate = static_cast<std::int64_t>(degenerate);
    return out;
}

// Serial reduction in trial order, so the result is independent of how trials
// were distributed over threads.
MonteCarloEstimate estimate(const std::vector<double>& xs) {
    MonteCarloEstimate e;
    e.n_trials = static_cast<std::int64_t>(xs.size());
    double sum = 0.0;
    for (double x : xs) sum += x;
    e.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) {
            const double d = x - e.mean;
            ss += d * d;
        }
        const double var = ss / static_cast<double>(xs.size() - 1);
        e.std_error = std::sqrt(var / static_cast<double>(xs.size()));
    }
    e.ci_low = e.mean - 1.96 * e.std_error;
    e.ci_high = e.mean + 1.96 * e.std_error;
    return e;
}

}

ScenarioResult run_scenario(const ScenarioConfig& c, unsigned threads) {
    validate(c);
    const LinkGains g = link_gains(c);
    const std::size_t n = static_cast<std::size_t>(c.trials);

    std::vector<double> gamma_rx(n);
    std::vector<double> gamma_eve(n);
    std::vector<double> c_s(n);
    std::vector<std::int64_t> degenerate(n);

    auto worker = [&](std::size_t first, std::size_t last) {
        for (std::size_t t = first; t < last; ++t) {
            const TrialOutput out = run_trial(c, g, static_cast<std::uint64_t>(t));
            gamma_rx[t] = out.gamma_rx;
            gamma_eve[t] = out.gamma_eve;
            c_s[t] = out.c_s;
            degenerate[t] = out.degenerate;
        }
    };

    unsigned pool = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (pool == 0) pool = 1;
    pool = static_cast<unsigned>(std::min<std::size_t>(pool, n));
    if (pool <= 1) {
        worker(0, n);
    } else {
        std::vector<std::thread> team;
        team.reserve(pool);
        for (unsigned k = 0; k < pool; ++k) {
            const std::size_t first = n * k / pool;
            const std::size_t last = n * (k + 1) / pool;
            team.emplace_back(worker, first, last);
        }
        for (std::thread& t : team) t.join();
    }

    ScenarioResult r;
    r.rate = estimate(c_s);
    std::vector<double> outage(n);
    for (std::size_t t = 0; t < n; ++t)
        outage[t] = static_cast<double>(metrics::outage_indicator(c_s[t], c.r_th_bps_hz));
    r.outage = estimate(outage);

    double sum_rx = 0.0;
    double sum_eve = 0.0;
    std::int64_t degenerate_total = 0;
    for (std::size_t t = 0; t < n; ++t) {
        sum_rx += gamma_rx[t];
        sum_eve += gamma_eve[t];
        degenerate_total += degenerate[t];
    }
    r.mean_gamma_rx = sum_rx / static_cast<double>(n);
    r.mean_gamma_eve = sum_eve / static_cast<double>(n);
    r.rate_at_mean_snr = metrics::secrecy_rate(r.mean_gamma_rx, r.mean_gamma_eve);
    r.degenerate_phase_elements = degenerate_total;
    return r;
}

ScenarioConfig with_axis_value(const ScenarioConfig& base, SweepAxis axis,
                               double value) {
    const auto require_integer = [&](const char* what) {
        if (!std::isfinite(value) || std::floor(value) != value)
            throw std::invalid_argument(std::string(what) +
                                        " sweep values must be integers");
        return static_cast<int>(value);
    };
    ScenarioConfig c = base;
    switch (axis) {
        case SweepAxis::theta:
            if (!std::isfinite(value) || value < 0.0 || value >= 90.0)
                throw std::invalid_argument("theta_deg must lie in [0, 90)");
            c.topology.theta_rad = value * std::numbers::pi / 180.0;
            break;
        case SweepAxis::n_elements:
            c.n_elements = require_integer("n_elements");
            break;
        case SweepAxis::alpha:
            c.budget.alpha = value;
            break;
        case SweepAxis::d_te:
            c.topology.d_te_m = value;
            break;
        case SweepAxis::quantization_bits:
            c.quantization_bits = require_integer("quantization_bits");
            break;
    }
    return c;
}

SweepResult sweep(const ScenarioConfig& base, SweepAxis axis,
                  const std::vector<double>& values, unsigned threads) {
    if (values.empty())
        throw std::invalid_argument("sweep values must be non-empty");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw std::invalid_argument("sweep values must be strictly increasing");
    SweepResult s;
    s.axis = axis;
    s.values = values;
    s.points.reserve(values.size());
    for (double v : values)
        s.points.push_back(run_scenario(with_axis_value(base, axis, v), threads));
    return s;
}

double argbest(const SweepResult& s, Objective objective) {
    if (s.points.empty())
        throw std::invalid_argument("argbest needs a non-empty sweep");
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.points.size(); ++i) {
        const double cur = objective == Objective::max_rate
                               ? s.points[i].rate.mean
                               : s.points[i].outage.mean;
        const double ref = objective == Objective::max_rate
                               ? s.points[best].rate.mean
                               : s.points[best].outage.mean;
        const bool better = objective == Objective::max_rate ? cur > ref : cur < ref;
        if (better) best = i;
    }
    return s.values[best];
}

}
