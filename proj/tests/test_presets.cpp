#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "rispls/presets.hpp"

using namespace rispls;

TEST_SUITE("presets") {

TEST_CASE("the five panels are listed and recognised") {
    const std::vector<std::string> expected{"fig5b", "fig5c", "fig5d", "fig5e",
                                            "fig5f"};
    CHECK(presets::preset_names() == expected);
    for (const std::string& name : expected) CHECK(presets::is_preset(name));
    CHECK_FALSE(presets::is_preset("fig5a"));
    CHECK_FALSE(presets::is_preset(""));
    CHECK_THROWS_WITH_AS(presets::expand_preset("fig9z"), doctest::Contains("fig9z"),
                         std::invalid_argument);
}

// Table-driven expansion checks: every parameter the panels pin down.
TEST_CASE("fig5b: angle sweep comparing link modes and exponents") {
    const presets::RunPlan p = presets::expand_preset("fig5b");
    CHECK(p.name == "fig5b");
    CHECK(p.axis == montecarlo::SweepAxis::theta);
    CHECK(p.axis_values == std::vector<double>{0, 10, 20, 30, 40, 50, 60});
    CHECK(p.plot_metric == presets::PlotMetric::rate);
    REQUIRE(p.series.size() == 4);
    int with_ris = 0, direct_only = 0;
    std::set<double> alphas;
    for (const auto& s : p.series) {
        const auto& c = s.config;
        CHECK(c.topology.d_tr_m == 20.0);
        CHECK(c.topology.d_te_m == 50.0);
        CHECK(c.topology.d_tl_m == 40.0);
        CHECK(c.budget.p_tx_dbm == 20.0);
        CHECK(c.budget.noise_dbm == -100.0);
        CHECK(c.budget.c0_db == 30.0);
        CHECK(c.budget.blockage_db == 50.0);
        CHECK(c.n_elements == 50);
        CHECK_FALSE(c.quantization_bits.has_value());
        CHECK(c.include_direct);
        CHECK(c.r_th_bps_hz == 2.5);
        CHECK(c.trials == 10000);
        alphas.insert(c.budget.alpha);
        (c.include_ris ? with_ris : direct_only) += 1;
    }
    CHECK(with_ris == 2);
    CHECK(direct_only == 2);
    CHECK(alphas == std::set<double>{2.5, 3.0});
}

TEST_CASE("fig5c and fig5d: element sweep per quantization depth") {
    for (const char* name : {"fig5c", "fig5d"}) {
        CAPTURE(name);
        const presets::RunPlan p = presets::expand_preset(name);
        CHECK(p.axis == montecarlo::SweepAxis::n_elements);
        CHECK(p.axis_values ==
              std::vector<double>{10, 20, 30, 40, 50, 60, 70, 80, 90, 100});
        REQUIRE(p.series.size() == 4);
        std::set<int> bit_depths;
        int continuous = 0;
        for (const auto& s : p.series) {
            const auto& c = s.config;
            CHECK(c.topology.d_te_m == 30.0);
            CHECK(c.topology.theta_rad ==
                  doctest::Approx(10.0 * std::numbers::pi / 180.0).epsilon(1e-15));
            CHECK(c.budget.alpha == 2.5);
            CHECK(c.include_ris);
            CHECK(c.include_direct);
            CHECK(c.r_th_bps_hz == 2.5);
            if (c.quantization_bits)
                bit_depths.insert(*c.quantization_bits);
            else
                ++continuous;
        }
        CHECK(bit_depths == std::set<int>{1, 2, 3});
        CHECK(continuous == 1);
    }
    CHECK(presets::expand_preset("fig5c").plot_metric == presets::PlotMetric::rate);
    CHECK(presets::expand_preset("fig5d").plot_metric == presets::PlotMetric::outage);
    CHECK(presets::expand_preset("fig5c").series[0].config.trials == 10000);
    CHECK(presets::expand_preset("fig5d").series[0].config.trials == 100000);
}

TEST_CASE("fig5e and fig5f: fine angle sweep across alpha and d_te") {
    for (const char* name : {"fig5e", "fig5f"}) {
        CAPTURE(name);
        const presets::RunPlan p = presets::expand_preset(name);
        CHECK(p.axis == montecarlo::SweepAxis::theta);
        REQUIRE(p.axis_values.size() == 13);
        CHECK(p.axis_values.front() == 0.0);
        CHECK(p.axis_values[1] == 5.0);
        CHECK(p.axis_values.back() == 60.0);
        REQUIRE(p.series.size() == 4);
        std::set<std::pair<double, double>> combos;
        for (const auto& s : p.series) {
            const auto& c = s.config;
            CHECK(c.quantization_bits == 3);
            CHECK(c.r_th_bps_hz == 3.0);
            CHECK(c.include_ris);
            CHECK(c.include_direct);
            combos.insert({c.budget.alpha, c.topology.d_te_m});
        }
        CHECK(combos == std::set<std::pair<double, double>>{
                            {2.5, 30.0}, {2.5, 35.0}, {3.0, 30.0}, {3.0, 35.0}});
    }
    CHECK(presets::expand_preset("fig5e").plot_metric == presets::PlotMetric::rate);
    CHECK(presets::expand_preset("fig5f").plot_metric == presets::PlotMetric::outage);
    CHECK(presets::expand_preset("fig5e").series[0].config.trials == 10000);
    CHECK(presets::expand_preset("fig5f").series[0].config.trials == 100000);
}

TEST_CASE("series labels name mode, exponent, eavesdropper distance, depth") {
    montecarlo::ScenarioConfig c;
    CHECK(presets::series_label(c) == "ris+direct a=2.5 dte=30 cont");
    c.quantization_bits = 3;
    c.budget.alpha = 3.0;
    c.topology.d_te_m = 35.0;
    CHECK(presets::series_label(c) == "ris+direct a=3 dte=35 b3");
    c.include_ris = false;
    CHECK(presets::series_label(c) == "direct a=3 dte=35 b3");
    c.include_ris = true;
    c.include_direct = false;
    CHECK(presets::series_label(c) == "ris a=3 dte=35 b3");

    std::set<std::string> labels;
    for (const char* name : {"fig5b", "fig5c", "fig5d", "fig5e", "fig5f"})
        for (const auto& s : presets::expand_preset(name).series)
            CHECK(labels.insert(name + (" " + s.label)).second);  // unique per plan
}

TEST_CASE("axis names round-trip") {
    using montecarlo::SweepAxis;
    for (SweepAxis axis : {SweepAxis::theta, SweepAxis::n_elements, SweepAxis::alpha,
                           SweepAxis::d_te, SweepAxis::quantization_bits})
        CHECK(presets::axis_from_external_name(presets::axis_external_name(axis)) ==
              axis);
    CHECK(presets::axis_external_name(SweepAxis::theta) == "theta_deg");
    CHECK(presets::axis_external_name(SweepAxis::d_te) == "d_te_m");
    CHECK_THROWS_WITH_AS(presets::axis_from_external_name("theta"),
                         doctest::Contains("theta"), std::invalid_argument);
}

}
