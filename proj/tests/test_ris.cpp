#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rispls/channel.hpp"
#include "rispls/ris.hpp"

using namespace rispls;
using channel::cplx;

namespace {

constexpr double kPi = std::numbers::pi;

double circular_distance(double a, double b) {
    return std::fabs(ris::wrap_phase(a - b));
}

double cascade_mag(const std::vector<cplx>& h, const std::vector<cplx>& g,
                   const std::vector<double>& phases) {
    return std::abs(channel::cascaded_channel(h, g, phases, 1.0, 1.0));
}

}

TEST_SUITE("ris") {

TEST_CASE("wrap_phase maps onto (-pi, pi] with +pi canonical") {
    CHECK(ris::wrap_phase(0.0) == 0.0);
    CHECK(ris::wrap_phase(kPi) == kPi);
    CHECK(ris::wrap_phase(-kPi) == kPi);
    CHECK(ris::wrap_phase(3.0 * kPi) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(ris::wrap_phase(-3.0 * kPi) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(ris::wrap_phase(2.0 * kPi) == doctest::Approx(0.0));
    CHECK(ris::wrap_phase(5.0 * kPi / 2.0) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(ris::wrap_phase(kPi / 4.0) == kPi / 4.0);  // in-range values untouched
    CHECK(ris::wrap_phase(-2.9) == -2.9);
    for (double x = -20.0; x <= 20.0; x += 0.137) {
        const double w = ris::wrap_phase(x);
        CHECK(w > -kPi);
        CHECK(w <= kPi);
        CHECK(std::fabs(std::sin(w) - std::sin(x)) < 1e-12);
        CHECK(std::fabs(std::cos(w) - std::cos(x)) < 1e-12);
    }
}

TEST_CASE("optimal phases cancel the cascade argument") {
    const std::vector<cplx> h{std::polar(1.0, kPi / 3.0), cplx(1.0, 1.0), cplx(0.0, 1.0)};
    const std::vector<cplx> g{cplx(1.0, 0.0), cplx(1.0, -1.0), cplx(0.0, 1.0)};
    const ris::RisPhaseProfile p = ris::optimal_phases(h, g);
    REQUIRE(p.phases.size() == 3);
    CHECK_FALSE(p.quantization_bits.has_value());
    CHECK(p.phases[0] == doctest::Approx(-kPi / 3.0).epsilon(1e-12));
    CHECK(p.phases[1] == doctest::Approx(0.0));  // (1+i)(1-i) = 2, already real
    CHECK(p.phases[2] == doctest::Approx(kPi).epsilon(1e-12));  // i*i = -1
}

TEST_CASE("optimal phases make every term real non-negative") {
    const channel::ChannelRealization r =
        channel::sample_small_scale(channel::RngStream{11, 2}, 50);
    const ris::RisPhaseProfile p = ris::optimal_phases(r.h, r.g_rx);
    cplx sum = 0.0;
    double abs_sum = 0.0;
    for (int i = 0; i < 50; ++i) {
        sum += r.h[i] * std::polar(1.0, p.phases[i]) * r.g_rx[i];
        abs_sum += std::abs(r.h[i] * r.g_rx[i]);
    }
    CHECK(sum.imag() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(sum.real() == doctest::Approx(abs_sum).epsilon(1e-12));
}

TEST_CASE("degenerate elements are counted and phased to zero") {
    const std::vector<cplx> h{cplx(0.0, 0.0), cplx(1.0, 0.0)};
    const std::vector<cplx> g{cplx(1.0, 0.0), cplx(2.0, 0.0)};
    std::size_t degenerate = 99;
    const ris::RisPhaseProfile p = ris::optimal_phases(h, g, &degenerate);
    CHECK(degenerate == 1);
    CHECK(p.phases[0] == 0.0);
    CHECK_THROWS_AS(ris::optimal_phases(h, std::vector<cplx>{cplx(1.0, 0.0)}),
                    std::invalid_argument);
}

TEST_CASE("quantization snaps to the nearest grid point") {
    ris::RisPhaseProfile p;
    p.phases = {kPi / 3.0, 0.4, -0.4, 3.0};
    const ris::RisPhaseProfile q1 = ris::quantize_phases(p, 1);
    CHECK(q1.quantization_bits == 1);
    CHECK(q1.phases[0] == 0.0);          // pi/3 is nearer 0 than pi
    CHECK(q1.phases[1] == 0.0);
    CHECK(q1.phases[2] == 0.0);
    CHECK(q1.phases[3] == kPi);          // 3.0 is nearer pi than 0

    const ris::RisPhaseProfile q3 = ris::quantize_phases(p, 3);
    CHECK(q3.phases[1] == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    CHECK(q3.phases[2] == doctest::Approx(-kPi / 4.0).epsilon(1e-12));

    CHECK_THROWS_AS(ris::quantize_phases(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(ris::quantize_phases(p, 9), std::invalid_argument);
}

TEST_CASE("exact halfway ties pick the smaller representative") {
    ris::RisPhaseProfile p;
    p.phases = {kPi / 4.0, -kPi / 4.0, -7.0 * kPi / 8.0};
    SUBCASE("two bits") {
        const ris::RisPhaseProfile q = ris::quantize_phases(p, 2);
        CHECK(q.phases[0] == 0.0);           // tie between 0 and pi/2
        CHECK(q.phases[1] == -kPi / 2.0);    // tie between -pi/2 and 0
    }
    SUBCASE("three bits, tie across the wrap point") {
        // -7pi/8 ties between -pi (canonically +pi) and -3pi/4
        const ris::RisPhaseProfile q = ris::quantize_phases(p, 3);
        CHECK(q.phases[2] == -3.0 * kPi / 4.0);
    }
}

TEST_CASE("quantized phases land on the grid, near the input") {
    const channel::ChannelRealization r =
        channel::sample_small_scale(channel::RngStream{21, 5}, 64);
    const ris::RisPhaseProfile p = ris::optimal_phases(r.h, r.g_rx);
    for (int bits = 1; bits <= 8; ++bits) {
        const double step = 2.0 * kPi / std::pow(2.0, bits);
        const ris::RisPhaseProfile q = ris::quantize_phases(p, bits);
        REQUIRE(q.quantization_bits == bits);
        for (std::size_t i = 0; i < q.phases.size(); ++i) {
            CHECK(q.phases[i] > -kPi);
            CHECK(q.phases[i] <= kPi);
            const double steps = q.phases[i] / step;
            CHECK(std::fabs(steps - std::round(steps)) < 1e-9);
            CHECK(circular_distance(q.phases[i], p.phases[i]) <= step / 2.0 + 1e-12);
        }
        const ris::RisPhaseProfile qq = ris::quantize_phases(q, bits);
        for (std::size_t i = 0; i < q.phases.size(); ++i)
            CHECK(circular_distance(qq.phases[i], q.phases[i]) < 1e-12);
    }
}

TEST_CASE("continuous optimum beats every profile on a brute-force grid") {
    const channel::ChannelRealization r =
        channel::sample_small_scale(channel::RngStream{31, 9}, 3);
    const std::vector<cplx> h(r.h.begin(), r.h.end());
    const std::vector<cplx> g(r.g_rx.begin(), r.g_rx.end());
    const ris::RisPhaseProfile opt = ris::optimal_phases(h, g);
    const double best_cont = cascade_mag(h, g, opt.phases);

    const int grid = 64;
    double best_grid = 0.0;
    std::vector<double> phases(3);
    for (int a = 0; a < grid; ++a) {
        phases[0] = -kPi + 2.0 * kPi * (a + 1) / grid;
        for (int b = 0; b < grid; ++b) {
            phases[1] = -kPi + 2.0 * kPi * (b + 1) / grid;
            for (int c = 0; c < grid; ++c) {
                phases[2] = -kPi + 2.0 * kPi * (c + 1) / grid;
                best_grid = std::max(best_grid, cascade_mag(h, g, phases));
            }
        }
    }
    CHECK(best_cont >= best_grid * (1.0 - 1e-12));
}

TEST_CASE("per-element rounding is near the best 3-bit assignment") {
    const channel::ChannelRealization r =
        channel::sample_small_scale(channel::RngStream{41, 4}, 3);
    const std::vector<cplx> h(r.h.begin(), r.h.end());
    const std::vector<cplx> g(r.g_rx.begin(), r.g_rx.end());
    const ris::RisPhaseProfile q =
        ris::quantize_phases(ris::optimal_phases(h, g), 3);
    const double ours = cascade_mag(h, g, q.phases);

    double best = 0.0;
    std::vector<double> phases(3);
    for (int a = 0; a < 8; ++a) {
        phases[0] = ris::wrap_phase(a * kPi / 4.0);
        for (int b = 0; b < 8; ++b) {
            phases[1] = ris::wrap_phase(b * kPi / 4.0);
            for (int c = 0; c < 8; ++c) {
                phases[2] = ris::wrap_phase(c * kPi / 4.0);
                best = std::max(best, cascade_mag(h, g, phases));
            }
        }
    }
    CHECK(ours <= best * (1.0 + 1e-12));  // rounding stays inside the grid
    // each rounded term is within step/2 of aligned, so the real part alone
    // already reaches cos(pi/8) of the absolute ceiling
    CHECK(ours >= best * std::cos(kPi / 8.0) * (1.0 - 1e-12));
}

TEST_CASE("random phase profiles are reproducible and in range") {
    const channel::RngStream s{99, 17};
    const ris::RisPhaseProfile a = ris::random_phases(s, 1000);
    const ris::RisPhaseProfile b = ris::random_phases(s, 1000);
    CHECK(a.phases == b.phases);
    CHECK_FALSE(a.quantization_bits.has_value());
    double mean = 0.0;
    for (double v : a.phases) {
        CHECK(v > -kPi);
        CHECK(v <= kPi);
        mean += v;
    }
    CHECK(std::fabs(mean / 1000.0) < 0.12);  // 2 sigma ~ 0.115 for uniform
    const ris::RisPhaseProfile c = ris::random_phases(channel::RngStream{99, 18}, 1000);
    CHECK(a.phases != c.phases);
}

}
