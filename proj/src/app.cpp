#include "rispls/app.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "rispls/config.hpp"
#include "rispls/montecarlo.hpp"
#include "rispls/presets.hpp"
#include "rispls/report.hpp"
#include "rispls/version.hpp"

namespace rispls::app {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out.good())
        throw std::runtime_error("cannot write " + path.string());
}

std::string axis_caption(montecarlo::SweepAxis axis) {
    switch (axis) {
        case montecarlo::SweepAxis::theta: return "RIS angle theta [deg]";
        case montecarlo::SweepAxis::n_elements: return "RIS elements N";
        case montecarlo::SweepAxis::alpha: return "path-loss exponent alpha";
        case montecarlo::SweepAxis::d_te: return "Tx-eavesdropper distance [m]";
        case montecarlo::SweepAxis::quantization_bits: return "phase quantization bits";
    }
    return "axis";
}

presets::RunPlan resolve_target(const std::string& target) {
    if (presets::is_preset(target)) return presets::expand_preset(target);
    return config::parse_config_file(target);
}

std::string manifest_json(const presets::RunPlan& plan) {
    nlohmann::json j;
    j["name"] = plan.name;
    j["axis"] = presets::axis_external_name(plan.axis);
    j["axis_values"] = plan.axis_values;
    j["plot_metric"] = plan.plot_metric == presets::PlotMetric::rate ? "rate" : "outage";
    j["series"] = nlohmann::json::array();
    for (const auto& s : plan.series) {
        nlohmann::json entry;
        entry["label"] = s.label;
        entry["config"] = nlohmann::json::parse(config::scenario_to_json(s.config));
        j["series"].push_back(entry);
    }
    return j.dump(2) + "\n";
}

std::string summary_text(const presets::RunPlan& plan,
                         const std::vector<montecarlo::SweepResult>& sweeps,
                         bool mean_snr_rate) {
    const std::string axis_name = presets::axis_external_name(plan.axis);
    std::ostringstream out;
    out << "rispls " << kVersion << "\n";
    out << "run: " << plan.name << "\n";
    out << "axis: " << axis_name << " values:";
    for (double v : plan.axis_values) out << " " << report::format_sig9(v);
    out << "\n";
    out << "series: " << plan.series.size() << "\n";
    out << "trials: " << plan.series.front().config.trials << "\n";
    out << "seed: " << plan.series.front().config.seed << "\n";

    for (std::size_t k = 0; k < plan.series.size(); ++k) {
        const montecarlo::SweepResult& sw = sweeps[k];
        out << "\nseries: " << plan.series[k].label << "\n";
        if (plan.axis == montecarlo::SweepAxis::theta) {
            const double best_rate = montecarlo::argbest(sw, montecarlo::Objective::max_rate);
            const double best_outage = montecarlo::argbest(sw, montecarlo::Objective::min_outage);
            out << "  argbest rate: " << axis_name << "="
                << report::format_sig9(best_rate) << "\n";
            out << "  argbest outage: " << axis_name << "="
                << report::format_sig9(best_outage) << "\n";
        }
        std::int64_t degenerate = 0;
        for (const auto& p : sw.points) degenerate += p.degenerate_phase_elements;
        if (degenerate > 0)
            out << "  degenerate phase elements: " << degenerate << "\n";
        if (mean_snr_rate) {
            for (std::size_t i = 0; i < sw.values.size(); ++i)
                out << "  rate_at_mean_snr " << axis_name << "="
                    << report::format_sig9(sw.values[i]) << ": "
                    << report::format_sig9(sw.points[i].rate_at_mean_snr) << "\n";
        }
    }
    return out.str();
}

}

int run(const RunOptions& opts) {
    std::vector<fs::path> written;
    try {
        presets::RunPlan plan = resolve_target(opts.target);
        for (const std::string& kv : opts.overrides)
            config::apply_override(plan, kv);
        for (auto& s : plan.series) {
            if (opts.seed) s.config.seed = *opts.seed;
            if (opts.trials) s.config.trials = *opts.trials;
        }

        // Validate every (series, axis point) before spending compute.
        for (const auto& s : plan.series)
            for (double v : plan.axis_values)
                montecarlo::validate(montecarlo::with_axis_value(s.config, plan.axis, v));

        std::vector<montecarlo::SweepResult> sweeps;
        sweeps.reserve(plan.series.size());
        for (const auto& s : plan.series)
            sweeps.push_back(montecarlo::sweep(s.config, plan.axis,
                                               plan.axis_values, opts.threads));

        std::vector<report::ResultRow> rows;
        std::vector<report::Series> plot;
        for (std::size_t k = 0; k < plan.series.size(); ++k) {
            const auto& cfg = plan.series[k].config;
            report::Series ps;
            ps.label = plan.series[k].label;
            for (std::size_t i = 0; i < sweeps[k].values.size(); ++i) {
                const montecarlo::ScenarioResult& p = sweeps[k].points[i];
                rows.push_back({plan.series[k].label, sweeps[k].values[i], p.rate,
                                p.outage, cfg.trials, cfg.seed});
                ps.x.push_back(sweeps[k].values[i]);
                ps.y.push_back(plan.plot_metric == presets::PlotMetric::rate
                                   ? p.rate.mean
                                   : p.outage.mean);
            }
            plot.push_back(std::move(ps));
        }

        const fs::path out_dir(opts.out_dir);
        fs::create_directories(out_dir);

        const std::string axis_name = presets::axis_external_name(plan.axis);
        const auto& front = plan.series.front().config;

        const fs::path csv_path = out_dir / "results.csv";
        write_file(csv_path, report::emit_csv(axis_name, rows, front.seed, front.trials));
        written.push_back(csv_path);

        const fs::path manifest_path = out_dir / "config.json";
        write_file(manifest_path, manifest_json(plan));
        written.push_back(manifest_path);

        const fs::path summary_path = out_dir / "summary.txt";
        write_file(summary_path, summary_text(plan, sweeps, opts.mean_snr_rate));
        written.push_back(summary_path);

        if (opts.svg) {
            const std::string y_label =
                plan.plot_metric == presets::PlotMetric::rate
                    ? "mean secrecy rate [bits/s/Hz]"
                    : "secrecy outage probability";
            const std::string title = plan.name + " - " +
                                      (plan.plot_metric == presets::PlotMetric::rate
                                           ? "secrecy rate"
                                           : "secrecy outage");
            const fs::path svg_path = out_dir / "plot.svg";
            write_file(svg_path,
                       report::emit_svg(plot, axis_caption(plan.axis), y_label, title));
            written.push_back(svg_path);
        }

        std::cout << "wrote " << (out_dir / "results.csv").string() << " ("
                  << rows.size() << " rows, " << plan.series.size() << " series)\n";
        return 0;
    } catch (const std::exception& e) {
        for (const fs::path& p : written) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int list_presets() {
    for (const std::string& name : presets::preset_names())
        std::cout << name << "\n";
    return 0;
}

int validate_file(const std::string& path) {
    try {
        const presets::RunPlan plan = config::parse_config_file(path);
        for (const auto& s : plan.series)
            for (double v : plan.axis_values)
                montecarlo::validate(montecarlo::with_axis_value(s.config, plan.axis, v));
        std::cout << "ok: " << path << ": " << plan.series.size() << " series, axis "
                  << presets::axis_external_name(plan.axis) << ", "
                  << plan.axis_values.size() << " points\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return 1;
    }
}

}
