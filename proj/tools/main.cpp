#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xic/analysis.hpp"
#include "xic/baseline.hpp"
#include "xic/config.hpp"
#include "xic/evaluator.hpp"
#include "xic/reference.hpp"
#include "xic/report.hpp"
#include "xic/series.hpp"
#include "xic/zeros.hpp"

namespace {

using namespace xic;

void emit(const Config& cfg, Report& rep, const std::string& base) {
    nlohmann::json merged = config_json(cfg);
    for (auto& [k, v] : rep.config.items()) merged[k] = v;
    rep.config = merged;
    std::filesystem::create_directories(cfg.out_dir);
    if (cfg.format == Config::Format::csv)
        write_csv(rep, cfg.out_dir / (base + ".csv"));
    else
        write_json(rep, cfg.out_dir / (base + ".json"));
}

void emit_json(const Config& cfg, const nlohmann::json& j, const std::string& base) {
    std::filesystem::create_directories(cfg.out_dir);
    nlohmann::json out = j;
    out["config"] = config_json(cfg);
    write_json_object(out, cfg.out_dir / (base + ".json"));
}

// Smallest N with 0.9 * gamma0_N >= t_max (reliability of grid evaluations).
int zeros_needed(double t_max) {
    const double g = t_max / 0.9;
    return static_cast<int>(std::ceil(n_main(std::max(g, 20.0)))) + 1;
}

ZeroSet truncate_zero_set(const ZeroSet& zs, int N) {
    if (N >= zs.N) return zs;
    ZeroSet out{N,
                {zs.gamma0.begin(), zs.gamma0.begin() + N},
                {zs.delta.begin(), zs.delta.begin() + N},
                {zs.gamma.begin(), zs.gamma.begin() + N},
                zs.mode,
                zs.config};
    return out;
}

bool is_reference_config(const Config& cfg) {
    return cfg.c == 0.05 && cfg.theta == 1.0 && cfg.K == 80 && cfg.shifted;
}

nlohmann::json published_table_report(const Config& cfg, const SeriesContext& ctx) {
    // Compare both modes against the published zero table; emitted whenever
    // the reference configuration is active.
    const int n_need = 100;
    const ZeroSet lin = build_zero_set(ctx, n_need, ZeroMode::linearized);
    const ZeroSet rs = build_zero_set(ctx, n_need, ZeroMode::rootsolve);
    nlohmann::json rows = nlohmann::json::array();
    bool lin_all = true, rs_all = true;
    for (const auto& row : baseline::kZeroTable) {
        const std::size_t i = static_cast<std::size_t>(row.n - 1);
        const bool lg = std::abs(lin.gamma[i] - row.gamma) <= baseline::kZeroTableTol;
        const bool ld = std::abs(lin.delta[i] - row.delta) <= baseline::kZeroTableTol;
        const bool rg = std::abs(rs.gamma[i] - row.gamma) <= baseline::kZeroTableTol;
        const bool rd = std::abs(rs.delta[i] - row.delta) <= baseline::kZeroTableTol;
        lin_all = lin_all && lg && ld;
        rs_all = rs_all && rg && rd;
        rows.push_back({{"n", row.n},
                        {"published_gamma", row.gamma},
                        {"published_delta", row.delta},
                        {"linearized_gamma", lin.gamma[i]},
                        {"linearized_delta", lin.delta[i]},
                        {"rootsolve_gamma", rs.gamma[i]},
                        {"rootsolve_delta", rs.delta[i]},
                        {"linearized_matches", lg && ld},
                        {"rootsolve_matches", rg && rd}});
    }
    nlohmann::json out = {{"tolerance", baseline::kZeroTableTol},
                          {"rows", rows},
                          {"linearized_matches_all", lin_all},
                          {"rootsolve_matches_all", rs_all}};
    if (!lin_all && !rs_all)
        out["note"] =
            "discrepancy: neither mode reproduces the published zero table under this "
            "configuration; computed values are internally consistent (see summary checks)";
    (void)cfg;
    return out;
}

int cmd_zeros(const Config& cfg) {
    const SeriesContext ctx = make_context(cfg);
    const ZeroSet zs = build_zero_set(ctx, cfg.n_zeros, cfg.mode);

    std::vector<double> e0(static_cast<std::size_t>(zs.N)), e1(static_cast<std::size_t>(zs.N));
    eval_E_many(ctx, zs.gamma0, e0, ctx.table.K, Exec::openmp);
    eval_E_many(ctx, zs.gamma, e1, ctx.table.K, Exec::openmp);

    Report rep;
    rep.name = "zeros";
    rep.columns = {"n", "gamma0", "delta", "gamma", "E_at_gamma0", "E_at_gamma"};
    double max_shift = 0.0, min_gap = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= zs.N; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        rep.add_row({static_cast<double>(n), zs.gamma0[i], zs.delta[i], zs.gamma[i], e0[i], e1[i]});
        max_shift = std::max(max_shift, std::abs(zs.delta[i]));
        if (n > 1) min_gap = std::min(min_gap, zs.gamma[i] - zs.gamma[i - 1]);
    }
    rep.summary = {{"max_shift", max_shift}, {"min_gap", min_gap}, {"mode", mode_name(cfg.mode)}};
    if (is_reference_config(cfg) && cfg.n_zeros >= 100)
        rep.summary["published_table"] = published_table_report(cfg, ctx);
    emit(cfg, rep, "zeros");

    nlohmann::json summary = rep.summary;
    summary["N"] = zs.N;
    emit_json(cfg, summary, "summary");
    return 0;
}

int cmd_spectral(const Config& cfg, const std::vector<double>& sigmas) {
    if (sigmas.empty()) throw std::invalid_argument("cmd_spectral: no sigmas");
    const SeriesContext ctx = make_context(cfg);
    const double t_lo = 20.0, t_hi = 1420.0;
    const int n_grid = 5000;
    const int n_eval = std::max(cfg.n_zeros, zeros_needed(t_hi));
    const ZeroSet zs = build_zero_set(ctx, n_eval, cfg.mode);

    std::vector<double> grid(n_grid);
    for (int i = 0; i < n_grid; ++i)
        grid[static_cast<std::size_t>(i)] = t_lo + (t_hi - t_lo) * i / (n_grid - 1);

    Report table;
    table.name = "spectral_summary";
    table.columns = {"sigma", "mean", "std", "max_abs", "skipped", "points"};
    nlohmann::json per_sigma = nlohmann::json::object();
    for (double sg : sigmas) {
        Report rep = spectral_residual(zs, sg, grid);
        char tag[32];
        std::snprintf(tag, sizeof(tag), "spectral_sigma_%.2f", sg);
        emit(cfg, rep, tag);
        table.add_row({sg, rep.summary["mean"].get<double>(), rep.summary["std"].get<double>(),
                       rep.summary["max_abs"].get<double>(),
                       static_cast<double>(rep.summary["skipped"].get<int>()),
                       static_cast<double>(rep.summary["points"].get<std::size_t>())});
        per_sigma[format_double(sg)] = rep.summary;
    }
    table.summary = per_sigma;
    emit(cfg, table, "spectral_summary");
    emit_json(cfg, {{"per_sigma", per_sigma}}, "spectral_stats");
    return 0;
}

int cmd_stats(const Config& cfg) {
    const SeriesContext ctx = make_context(cfg);
    const int n_build = std::max(cfg.n_zeros, 5000);
    const ZeroSet zs_full = build_zero_set(ctx, n_build, cfg.mode);
    const ZeroSet zs = truncate_zero_set(zs_full, cfg.n_zeros);

    const std::vector<double> Ls = {5.0, 10.0, 20.0};
    Report stats = zero_statistics(zs, Ls);

    const std::vector<int> Ns = {100, 500, 1000, 5000};
    Report weyl = weyl_mean_square(zs_full, Ns);

    nlohmann::json j;
    j["zero_statistics"] = stats.summary;
    nlohmann::json weyl_rows = nlohmann::json::array();
    for (const auto& row : weyl.rows)
        weyl_rows.push_back({{"N", std::get<double>(row[0])},
                             {"empirical", std::get<double>(row[1])},
                             {"theoretical", std::get<double>(row[2])},
                             {"ratio", std::get<double>(row[3])}});
    j["weyl"] = weyl_rows;
    emit_json(cfg, j, "stats");
    return 0;
}

int cmd_valuedist(const Config& cfg) {
    const SeriesContext ctx = make_context(cfg);
    const double t0 = 20.0, t1 = 300.0, dt = 0.05;
    const int n_eval = std::max(cfg.n_zeros, zeros_needed(t1));
    const ZeroSet zs = build_zero_set(ctx, n_eval, cfg.mode);
    const std::vector<double> sigmas = {1.25, 1.0, 0.75};
    ValueDistResult vd = value_distribution(zs, sigmas, t0, t1, dt);
    emit(cfg, vd.main, "valuedist");
    emit(cfg, vd.rescaled, "valuedist_rescaled");
    emit_json(cfg, vd.main.summary, "rms_summary");
    return 0;
}

int cmd_lincheck(const Config& cfg, int j_max) {
    const SeriesContext ctx = make_context(cfg);
    const ZeroSet zs = build_zero_set(ctx, std::min(cfg.n_zeros, 64), cfg.mode);
    Report rep = lin_check(zs, j_max);
    emit(cfg, rep, "blocks");
    emit_json(cfg, rep.summary, "lincheck_summary");
    return 0;
}

int cmd_euler(const Config& cfg, int n_max) {
    if (n_max > 10'000'000) throw std::invalid_argument("cmd_euler: n_max too large");
    const SeriesContext ctx = make_context(cfg);
    const EulerCoefficients ec = euler_coefficients(ctx, n_max);

    Report rep;
    rep.name = "euler_coeffs";
    rep.columns = {"n", "re_a", "im_a", "abs_a"};
    for (int n = 1; n <= n_max; ++n)
        rep.add_row({static_cast<double>(n), ec[n].real(), ec[n].imag(), std::abs(ec[n])});

    // multiplicativity self-test on a deterministic sample of coprime pairs
    int checked = 0, failed = 0;
    double worst = 0.0;
    for (int m = 2; m * 3 <= n_max && checked < 2000; ++m) {
        for (int n = m + 1; n <= n_max / m && checked < 2000; n += 7) {
            if (std::gcd(m, n) != 1) continue;
            ++checked;
            const Complex lhs = ec[m * n], rhs = ec[m] * ec[n];
            const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
            const double err = std::abs(lhs - rhs) / scale;
            worst = std::max(worst, err);
            if (err > 1e-12) ++failed;
        }
    }
    rep.summary = {{"multiplicativity_checked_pairs", checked},
                   {"multiplicativity_failures", failed},
                   {"multiplicativity_worst_rel_err", worst}};

    // kappa0 = exp(R(2)) with R(s) = log(Xi_c/Xi_0)(s) + c D(s)
    const ZeroSet zs = build_zero_set(ctx, std::max(cfg.n_zeros, 1000), cfg.mode);
    const SeriesValue d2 = eval_D(ctx, Complex(2.0, 0.0), ctx.table.K);
    const SeriesValue lr = log_ratio_hadamard(zs, Complex(2.0, 0.0));
    const Complex R2 = lr.value + ctx.c * d2.value;
    const Complex kappa0 = std::exp(R2);
    rep.summary["R2_re"] = R2.real();
    rep.summary["R2_im"] = R2.imag();
    rep.summary["kappa0_re"] = kappa0.real();
    rep.summary["kappa0_im"] = kappa0.imag();

    emit(cfg, rep, "euler_coeffs");
    emit_json(cfg, rep.summary, "euler_summary");
    return 0;
}

int cmd_align(const Config& cfg, int n_primes, double t_max) {
    const SeriesContext ctx = make_context(cfg);
    Report rep = phase_alignment_search(ctx, n_primes, 1.0, t_max, 0.05);
    emit(cfg, rep, "alignment");
    return 0;
}

struct CheckLine {
    std::string name;
    bool ok;
    std::string detail;
};

int cmd_reproduce(const Config& user_cfg) {
    // Always runs the reference configuration; only output options are taken
    // from the command line.
    Config cfg;
    cfg.out_dir = user_cfg.out_dir;
    cfg.format = user_cfg.format;

    std::vector<CheckLine> lines;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        lines.push_back({name, ok, detail});
        std::printf("[%s] %s: %s\n", ok ? "MATCH " : "DIFFER", name.c_str(), detail.c_str());
    };

    const SeriesContext ctx = make_context(cfg);

    // zeros + published table
    cmd_zeros(cfg);
    {
        const nlohmann::json tbl = published_table_report(cfg, ctx);
        check("zero table (either mode)",
              tbl["linearized_matches_all"].get<bool>() || tbl["rootsolve_matches_all"].get<bool>(),
              "per-row comparison in " + (cfg.out_dir / "summary.json").string());
        const ZeroSet zs = build_zero_set(ctx, 1000, cfg.mode);
        double max_shift = 0.0, min_gap = std::numeric_limits<double>::infinity();
        for (int i = 0; i < zs.N; ++i) {
            max_shift = std::max(max_shift, std::abs(zs.delta[static_cast<std::size_t>(i)]));
            if (i) min_gap = std::min(min_gap, zs.gamma[static_cast<std::size_t>(i)] -
                                                   zs.gamma[static_cast<std::size_t>(i - 1)]);
        }
        char d[128];
        std::snprintf(d, sizeof(d), "max_shift=%.4f (published %.3f), min_gap=%.3f (published 1.67)",
                      max_shift, baseline::kMaxShift, min_gap);
        check("zero aggregates",
              max_shift <= baseline::kMaxShift + baseline::kMaxShiftTol &&
                  min_gap >= baseline::kMinGapLo && min_gap <= baseline::kMinGapHi,
              d);
    }

    // stats: weyl + zero statistics
    cmd_stats(cfg);
    {
        const int n_build = 5000;
        const ZeroSet zs_full = build_zero_set(ctx, n_build, cfg.mode);
        const std::vector<int> Ns = {100, 500, 1000, 5000};
        Report weyl = weyl_mean_square(zs_full, Ns);
        for (std::size_t i = 0; i < weyl.rows.size(); ++i) {
            const double ratio = std::get<double>(weyl.rows[i][3]);
            const auto& pub = baseline::kWeylTable[i];
            char d[96];
            std::snprintf(d, sizeof(d), "N=%d ratio=%.3f (published %.3f +- %.2f)", pub.N, ratio,
                          pub.ratio, baseline::kWeylRatioTol);
            check("weyl mean-square", std::abs(ratio - pub.ratio) <= baseline::kWeylRatioTol, d);
        }
        const ZeroSet zs = truncate_zero_set(zs_full, 1000);
        const std::vector<double> Ls = {5.0, 10.0, 20.0};
        Report st = zero_statistics(zs, Ls);
        const double rms = st.summary["rms_counting_error"].get<double>();
        const double sps = st.summary["spacing_std"].get<double>();
        char d[128];
        std::snprintf(d, sizeof(d), "rms_count=%.4f (published 0.013), spacing_std=%.4f (published 0.020)",
                      rms, sps);
        check("zero statistics",
              rms >= baseline::kRmsCountingLo && rms <= baseline::kRmsCountingHi &&
                  sps >= baseline::kSpacingStdLo && sps <= baseline::kSpacingStdHi,
              d);
    }

    // spectral residual
    cmd_spectral(cfg, {1.5, 1.1, 1.01, 1.0});
    {
        const int n_eval = zeros_needed(1420.0);
        const ZeroSet zs = build_zero_set(ctx, std::max(1000, n_eval), cfg.mode);
        std::vector<double> grid(5000);
        for (int i = 0; i < 5000; ++i)
            grid[static_cast<std::size_t>(i)] = 20.0 + (1420.0 - 20.0) * i / 4999.0;
        for (const auto& pub : baseline::kResidualTable) {
            Report rep = spectral_residual(zs, pub.sigma, grid);
            const double mean = rep.summary["mean"].get<double>();
            const double sd = rep.summary["std"].get<double>();
            const double mx = rep.summary["max_abs"].get<double>();
            const bool ok = std::abs(mean - pub.mean) <= baseline::kResidualRelTol * std::abs(pub.mean) &&
                            std::abs(sd - pub.stddev) <= baseline::kResidualRelTol * pub.stddev &&
                            std::abs(mx - pub.max_abs) <= baseline::kResidualRelTol * pub.max_abs;
            char d[128];
            std::snprintf(d, sizeof(d),
                          "sigma=%.2f mean=%.4f std=%.4f max=%.4f (published %.3f/%.3f/%.3f, +-50%%)",
                          pub.sigma, mean, sd, mx, pub.mean, pub.stddev, pub.max_abs);
            check("spectral residual", ok, d);
        }
    }

    // value distribution
    cmd_valuedist(cfg);
    {
        const ZeroSet zs = build_zero_set(ctx, 1000, cfg.mode);
        const std::vector<double> vd_sigmas = {0.75};
        ValueDistResult vd = value_distribution(zs, vd_sigmas, 20.0, 300.0, 0.05);
        const auto& rms = vd.main.summary["rms"][format_double(0.75)];
        const double rr = rms["rms_ratio"].get<double>();
        const double rz = rms["rms_zeta"].get<double>();
        char d[128];
        std::snprintf(d, sizeof(d), "rms_ratio=%.4f (published ~0.046), rms_zeta=%.3f (published ~0.88)",
                      rr, rz);
        check("value distribution",
              rr >= baseline::kRmsRatioLo && rr <= baseline::kRmsRatioHi &&
                  rz >= baseline::kRmsZetaLo && rz <= baseline::kRmsZetaHi,
              d);
    }

    int matched = 0;
    for (const auto& l : lines) matched += l.ok ? 1 : 0;
    std::printf("reproduce-paper: %d/%zu published values matched; full reports in %s\n", matched,
                lines.size(), cfg.out_dir.string().c_str());
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& l : lines) j["checks"].push_back({{"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
    j["matched"] = matched;
    j["total"] = lines.size();
    emit_json(cfg, j, "reproduce_summary");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for a perturbed Hadamard product and its twisted prime Dirichlet series"};
    app.require_subcommand(1);

    Config cfg;
    std::vector<double> sigmas;
    int j_max = 12;
    int n_max = 10000;
    int n_primes = 4;
    double t_max = 1e6;
    std::string mode_str = "linearized";
    std::string format_str = "csv";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--c", cfg.c, "perturbation amplitude (>= 0)");
        sub->add_option("--theta", cfg.theta, "twist angle in (0, 2*pi)");
        sub->add_option("--K", cfg.K, "number of primes retained");
        sub->add_option("--shifted", cfg.shifted, "use shifted nodes alpha_k = p_k + theta");
        sub->add_option("--mode", mode_str, "zero mode: linearized | rootsolve")
            ->check(CLI::IsMember({"linearized", "rootsolve"}));
        sub->add_option("--n-zeros", cfg.n_zeros, "number of zeros")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--format", format_str, "table format: csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* c_zeros = app.add_subcommand("zeros", "perturbed zero table");
    add_common(c_zeros);
    CLI::App* c_spectral = app.add_subcommand("spectral", "spectral-identity residual");
    add_common(c_spectral);
    c_spectral->add_option("--sigma", sigmas, "sigma values (repeatable)");
    CLI::App* c_stats = app.add_subcommand("stats", "zero statistics and Weyl mean square");
    add_common(c_stats);
    CLI::App* c_valuedist = app.add_subcommand("valuedist", "value-distribution tracks");
    add_common(c_valuedist);
    CLI::App* c_lincheck = app.add_subcommand("lincheck", "dyadic linearization check");
    add_common(c_lincheck);
    c_lincheck->add_option("--j-max", j_max, "largest dyadic block index")->check(CLI::PositiveNumber);
    CLI::App* c_euler = app.add_subcommand("euler", "Euler-product Dirichlet coefficients");
    add_common(c_euler);
    c_euler->add_option("--n-max", n_max, "coefficient range")->check(CLI::PositiveNumber);
    CLI::App* c_align = app.add_subcommand("align", "phase-alignment search");
    add_common(c_align);
    c_align->add_option("--n-primes", n_primes, "number of leading primes (<= 8)");
    c_align->add_option("--t-max", t_max, "search range");
    CLI::App* c_repro = app.add_subcommand("reproduce-paper", "run the reference configuration and diff");
    add_common(c_repro);

    CLI11_PARSE(app, argc, argv);

    cfg.mode = mode_str == "rootsolve" ? ZeroMode::rootsolve : ZeroMode::linearized;
    cfg.format = format_str == "json" ? Config::Format::json : Config::Format::csv;

    try {
        if (app.got_subcommand(c_zeros)) return cmd_zeros(cfg);
        if (app.got_subcommand(c_spectral)) {
            if (sigmas.empty()) sigmas = {1.5, 1.1, 1.01, 1.0};
            return cmd_spectral(cfg, sigmas);
        }
        if (app.got_subcommand(c_stats)) return cmd_stats(cfg);
        if (app.got_subcommand(c_valuedist)) return cmd_valuedist(cfg);
        if (app.got_subcommand(c_lincheck)) return cmd_lincheck(cfg, j_max);
        if (app.got_subcommand(c_euler)) return cmd_euler(cfg, n_max);
        if (app.got_subcommand(c_align)) return cmd_align(cfg, n_primes, t_max);
        if (app.got_subcommand(c_repro)) return cmd_reproduce(cfg);
    } catch (const std::exception& e) {
        std::vector<std::pair<CLI::App*, const char*>> names = {
            {c_zeros, "zeros"},     {c_spectral, "spectral"}, {c_stats, "stats"},
            {c_valuedist, "valuedist"}, {c_lincheck, "lincheck"}, {c_euler, "euler"},
            {c_align, "align"},     {c_repro, "reproduce-paper"}};
        const char* stage = "unknown";
        for (auto& [sub, nm] : names)
            if (app.got_subcommand(sub)) stage = nm;
        std::fprintf(stderr, "xic %s: error: %s\n", stage, e.what());
        return 1;
    }
    return 0;
}
