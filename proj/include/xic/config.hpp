#pragma once

#include <filesystem>

#include "json.hpp"
#include "xic/series.hpp"
#include "xic/zeros.hpp"

namespace xic {

// Global run configuration.  Defaults follow the reference setup
// (c = 0.05, theta = 1, K = 80, shifted nodes).
struct Config {
    double c = 0.05;
    double theta = 1.0;
    int K = 80;
    bool shifted = true;
    ZeroMode mode = ZeroMode::linearized;
    int n_zeros = 1000;
    std::filesystem::path out_dir = "out";
    enum class Format { csv, json } format = Format::csv;
};

inline const char* mode_name(ZeroMode m) {
    return m == ZeroMode::linearized ? "linearized" : "rootsolve";
}

inline nlohmann::json config_json(const Config& cfg) {
    return {{"c", cfg.c},
            {"theta", cfg.theta},
            {"K", cfg.K},
            {"shifted", cfg.shifted},
            {"mode", mode_name(cfg.mode)},
            {"n_zeros", cfg.n_zeros},
            {"format", cfg.format == Config::Format::csv ? "csv" : "json"}};
}

inline SeriesContext make_context(const Config& cfg) {
    return SeriesContext(build_prime_table(cfg.K, cfg.theta, cfg.shifted), cfg.c);
}

}  // namespace xic
