#include "rispls/ris.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rispls::ris {

double wrap_phase(double rad) {
    constexpr double pi = std::numbers::pi;
    double w = std::remainder(rad, 2.0 * pi);
    if (w <= -pi) w = pi;  // remainder can land on -pi; canonical form is +pi
    return w;
}

RisPhaseProfile optimal_phases(std::span<const channel::cplx> h,
                               std::span<const channel::cplx> g_rx,
                               std::size_t* degenerate_count) {
    if (h.size() != g_rx.size())
        throw std::invalid_argument("optimal_phases: h and g_rx must have equal length");
    RisPhaseProfile p;
    p.phases.resize(h.size());
    std::size_t degenerate = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const channel::cplx prod = h[i] * g_rx[i];
        if (prod == channel::cplx(0.0, 0.0)) {
            p.phases[i] = 0.0;  // any phase is optimal for a dead element
            ++degenerate;
            continue;
        }
        p.phases[i] = wrap_phase(-std::arg(prod));
    }
    if (degenerate_count) *degenerate_count = degenerate;
    return p;
}

RisPhaseProfile quantize_phases(const RisPhaseProfile& p, int bits) {
    if (bits < 1 || bits > 8)
        throw std::invalid_argument("quantization bits must lie in [1, 8]");
    const double step = 2.0 * std::numbers::pi / static_cast<double>(1 << bits);
    RisPhaseProfile q;
    q.phases.resize(p.phases.size());
    q.quantization_bits = bits;
    for (std::size_t i = 0; i < p.phases.size(); ++i) {
        const double phi = wrap_phase(p.phases[i]);
        const double k0 = std::floor(phi / step);
        const double d0 = phi - k0 * step;   // distance down to grid point k0
        const double d1 = step - d0;         // distance up to grid point k0+1
        double k;
        if (d0 < d1) {
            k = k0;
        } else if (d1 < d0) {
            k = k0 + 1.0;
        } else {
            // Exact halfway tie: take the neighbour whose representative in
            // (-pi, pi] is smaller.
            const double lo = wrap_phase(k0 * step);
            const double hi = wrap_phase((k0 + 1.0) * step);
            k = lo <= hi ? k0 : k0 + 1.0;
        }
        q.phases[i] = wrap_phase(k * step);
    }
    return q;
}

RisPhaseProfile random_phases(const channel::RngStream& stream, std::size_t n) {
    channel::TrialRng rng(stream, channel::kPhaseDomain);
    RisPhaseProfile p;
    p.phases.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform01_open0();  // (0, 1] maps onto (-pi, pi]
        p.phases[i] = wrap_phase(2.0 * std::numbers::pi * u - std::numbers::pi);
    }
    return p;
}

}
