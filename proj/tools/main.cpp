#include <string>

#include "CLI11.hpp"
#include "rispls/app.hpp"
#include "rispls/version.hpp"

int main(int argc, char** argv) {
    CLI::App cli{"Monte Carlo simulator for RIS-aided physical-layer security"};
    cli.set_version_flag("--version", rispls::kVersion);
    cli.require_subcommand(1);

    rispls::app::RunOptions opts;
    CLI::App* run = cli.add_subcommand("run", "run a preset or JSON scenario file");
    run->add_option("target", opts.target, "preset name or scenario file path")
        ->required();
    run->add_option("--seed", opts.seed, "base RNG seed (overrides the scenario)");
    run->add_option("--trials", opts.trials, "trial count (overrides the scenario)");
    run->add_option("--set", opts.overrides,
                    "override one scenario key, key=value (repeatable)");
    run->add_flag("--svg", opts.svg, "also write plot.svg");
    run->add_flag("--mean-snr-rate", opts.mean_snr_rate,
                  "add rate-at-mean-SNR lines to summary.txt");
    run->add_option("--out", opts.out_dir, "output directory")
        ->capture_default_str();
    run->add_option("--threads", opts.threads, "worker threads, 0 = hardware default")
        ->capture_default_str();

    CLI::App* list = cli.add_subcommand("list-presets", "print available preset names");

    std::string validate_path;
    CLI::App* validate =
        cli.add_subcommand("validate", "check a scenario file without running it");
    validate->add_option("file", validate_path, "scenario file path")->required();

    CLI11_PARSE(cli, argc, argv);

    if (run->parsed()) return rispls::app::run(opts);
    if (list->parsed()) return rispls::app::list_presets();
    return rispls::app::validate_file(validate_path);
}
