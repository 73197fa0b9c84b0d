#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace rispls::channel {

using cplx = std::complex<double>;

// Link-budget constants shared by all links.
struct LinkBudget {
    double p_tx_dbm = 20.0;     // transmit power
    double noise_dbm = -100.0;  // noise power sigma^2
    double c0_db = 30.0;        // attenuation at the reference distance d0
    double d0_m = 1.0;
    double alpha = 2.5;         // path-loss exponent
    double blockage_db = 50.0;  // extra loss on the direct links
};

void validate(const LinkBudget& b);

// One draw of every small-scale fading coefficient. All entries are unit
// variance circularly-symmetric complex Gaussian, mutually independent.
struct ChannelRealization {
    std::vector<cplx> h;      // Tx -> RIS elements
    std::vector<cplx> g_rx;   // RIS elements -> Rx
    std::vector<cplx> g_eve;  // RIS elements -> eavesdropper
    cplx f_rx;                // direct Tx -> Rx
    cplx f_eve;               // direct Tx -> eavesdropper
};

// Identifies one reproducible random substream. Identical (seed, trial_index)
// always map to identical draws, independent of execution order or threading.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t trial_index = 0;
};

double db_to_linear(double db);
double dbm_to_watts(double dbm);

// Eq-style distance power law: 10^(-c0_db/10) * (d/d0)^(-alpha).
double path_loss_linear(double d_m, const LinkBudget& b);

// Deterministic generator behind all sampling. The engine is std::mt19937_64
// (bit-exact per the standard) seeded by a splitmix64 mix of (seed,
// trial_index, domain); uniform and normal variates are produced by explicit
// conversions below, so seeded runs reproduce across implementations.
//
// `domain` decorrelates consumers sharing one RngStream: channel sampling
// uses kChannelDomain, random phase profiles kPhaseDomain.
class TrialRng {
  public:
    TrialRng(const RngStream& stream, std::uint64_t domain);

    std::uint64_t next_u64() { return engine_(); }
    double uniform01();        // [0, 1), 53-bit resolution
    double uniform01_open0();  // (0, 1]

    // One Box-Muller pair; consumes exactly two uniforms, returns (z0, z1).
    std::pair<double, double> normal_pair();

    // (z0 + i*z1)/sqrt(2): unit-variance complex Gaussian from one pair.
    cplx complex_normal();

  private:
    std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kChannelDomain = 0;
inline constexpr std::uint64_t kPhaseDomain = 1;

// Draw order is fixed: h[0..n), g_rx[0..n), g_eve[0..n), f_rx, f_eve, each
// coefficient from one Box-Muller pair in that sequence.
ChannelRealization sample_small_scale(const RngStream& stream, std::size_t n);

// sqrt(pl_hop1 * pl_hop2) * sum_i h_i * exp(j*phase_i) * g_i.
cplx cascaded_channel(std::span<const cplx> h, std::span<const cplx> g,
                      std::span<const double> phases_rad, double pl_hop1,
                      double pl_hop2);

// f * sqrt(pl * 10^(-blockage_db/10)).
cplx direct_channel(cplx f, double pl, double blockage_db);

}
