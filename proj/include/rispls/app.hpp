#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rispls::app {

struct RunOptions {
    std::string target;  // preset name or config-file path
    std::vector<std::string> overrides;  // --set key=value
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> trials;
    bool svg = false;
    bool mean_snr_rate = false;  // add rate-at-mean-SNR lines to the summary
    std::string out_dir = "out";
    unsigned threads = 0;  // 0 = hardware default
};

// Executes a run end to end: expand/parse, sweep every series, write
// <out>/<name>.csv, <out>/<name>_summary.txt and optionally <out>/<name>.svg.
// Returns 0 on success; on failure prints a diagnostic naming the offending
// element to stderr, removes partial outputs, and returns nonzero.
int run(const RunOptions& opts);

// Prints one preset name per line.
int list_presets();

// Parses a config file and reports either the expanded plan or the first
// error. Returns 0 only if the file is valid.
int validate_file(const std::string& path);

}
