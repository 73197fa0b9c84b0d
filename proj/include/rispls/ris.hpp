#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rispls/channel.hpp"

namespace rispls::ris {

// Per-element reflection phases, each in (-pi, pi]. quantization_bits is set
// iff every phase lies exactly on the 2^b uniform grid. Reflection amplitude
// is implicitly 1 per element.
struct RisPhaseProfile {
    std::vector<double> phases;
    std::optional<int> quantization_bits;
};

// Maps any angle into (-pi, pi], with +pi as the canonical half turn.
double wrap_phase(double rad);

// phi_i = -arg(h_i * g_rx_i), the Rx-aligned rule. Elements whose product is
// exactly zero get phase 0; their count is added to *degenerate_count when
// the pointer is given, so callers can flag the event in run logs.
RisPhaseProfile optimal_phases(std::span<const channel::cplx> h,
                               std::span<const channel::cplx> g_rx,
                               std::size_t* degenerate_count = nullptr);

// Snaps every phase to the nearest point of {k * 2pi/2^bits} under circular
// distance; an exact halfway tie goes to the grid point with the smaller
// representative value in (-pi, pi]. bits must be in [1, 8].
RisPhaseProfile quantize_phases(const RisPhaseProfile& p, int bits);

// i.i.d. uniform phases on (-pi, pi]; baseline profile for comparison runs.
RisPhaseProfile random_phases(const channel::RngStream& stream, std::size_t n);

}
