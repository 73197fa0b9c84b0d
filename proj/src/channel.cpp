#include "rispls/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rispls::channel {

namespace {

void require_finite(double v, const char* field) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(field) + " must be finite");
}

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Collapses (seed, trial, domain) into one engine seed. The odd multipliers
// keep distinct trials and domains far apart even for small consecutive
// inputs; splitmix64 then decorrelates the mt19937_64 initial state.
std::uint64_t mix_stream(const RngStream& stream, std::uint64_t domain) {
    const std::uint64_t z = stream.seed +
                            0x9E3779B97F4A7C15ull * (stream.trial_index + 1) +
                            0xD1B54A32D192ED03ull * domain;
    return splitmix64(z);
}

}

void validate(const LinkBudget& b) {
    require_finite(b.p_tx_dbm, "p_tx_dbm");
    require_finite(b.noise_dbm, "noise_dbm");
    require_finite(b.c0_db, "c0_db");
    if (!std::isfinite(b.d0_m) || b.d0_m <= 0.0)
        throw std::invalid_argument("d0_m must be positive and finite");
    if (!std::isfinite(b.alpha) || b.alpha <= 0.0)
        throw std::invalid_argument("alpha must be positive and finite");
    if (!std::isfinite(b.blockage_db) || b.blockage_db < 0.0)
        throw std::invalid_argument("blockage_db must be >= 0 and finite");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double path_loss_linear(double d_m, const LinkBudget& b) {
    if (!std::isfinite(d_m) || d_m <= 0.0)
        throw std::invalid_argument("d_m must be positive and finite");
    return db_to_linear(-b.c0_db) * std::pow(d_m / b.d0_m, -b.alpha);
}

TrialRng::TrialRng(const RngStream& stream, std::uint64_t domain)
    : engine_(mix_stream(stream, domain)) {}

double TrialRng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double TrialRng::uniform01_open0() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::pair<double, double> TrialRng::normal_pair() {
    const double u1 = uniform01_open0();  // open at 0 so the log is finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

cplx TrialRng::complex_normal() {
    const auto [z0, z1] = normal_pair();
    return {z0 / std::numbers::sqrt2, z1 / std::numbers::sqrt2};
}

ChannelRealization sample_small_scale(const RngStream& stream, std::size_t n) {
    TrialRng rng(stream, kChannelDomain);
    ChannelRealization r;
    r.h.resize(n);
    r.g_rx.resize(n);
    r.g_eve.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.h[i] = rng.complex_normal();
    for (std::size_t i = 0; i < n; ++i) r.g_rx[i] = rng.complex_normal();
    for (std::size_t i = 0; i < n; ++i) r.g_eve[i] = rng.complex_normal();
    r.f_rx = rng.complex_normal();
    r.f_eve = rng.complex_normal();
    return r;
}

cplx cascaded_channel(std::span<const cplx> h, std::span<const cplx> g,
                      std::span<const double> phases_rad, double pl_hop1,
                      double pl_hop2) {
    if (h.size() != g.size() || h.size() != phases_rad.size())
        throw std::invalid_argument(
            "cascaded_channel: h, g and phases must have equal length");
    cplx sum = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
        sum += h[i] * std::polar(1.0, phases_rad[i]) * g[i];
    return std::sqrt(pl_hop1 * pl_hop2) * sum;
}

cplx direct_channel(cplx f, double pl, double blockage_db) {
    return f * std::sqrt(pl * db_to_linear(-blockage_db));
}

}
