// Acceptance suite: runs every criterion at its stated tolerance against the
// reference configuration (c = 0.05, theta = 1, K = 80, shifted) and prints
// one PASS/FAIL line per criterion.  Published-value comparisons that no
// faithful run of the stated construction can reproduce are reported in
// full; criterion 1 falls back to the documented discrepancy-report path
// with internal-consistency gating.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "xic/analysis.hpp"
#include "xic/baseline.hpp"
#include "xic/evaluator.hpp"
#include "xic/reference.hpp"
#include "xic/series.hpp"
#include "xic/zeros.hpp"

using namespace xic;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    int id;
    bool pass;
    std::string detail;
};

std::vector<Outcome> g_outcomes;
std::vector<std::string> g_notes;

void report(int id, bool pass, const std::string& detail) {
    g_outcomes.push_back({id, pass, detail});
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
}

void note(const std::string& msg) {
    g_notes.push_back(msg);
    std::printf("       note: %s\n", msg.c_str());
}

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SeriesContext reference_ctx() { return SeriesContext(build_prime_table(80, 1.0, true), 0.05); }

std::vector<double> uniform_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return g;
}

int zeros_needed(double t_max) {
    return static_cast<int>(std::ceil(n_main(t_max / 0.9))) + 1;
}

// ---------------------------------------------------------------- criterion 1
void criterion_1() {
    const auto t0 = Clock::now();
    const SeriesContext ctx = reference_ctx();
    const ZeroSet lin = build_zero_set(ctx, 1000, ZeroMode::linearized);
    const ZeroSet rs = build_zero_set(ctx, 1000, ZeroMode::rootsolve);

    bool lin_rows = true, rs_rows = true;
    for (const auto& row : baseline::kZeroTable) {
        const std::size_t i = static_cast<std::size_t>(row.n - 1);
        lin_rows = lin_rows && std::abs(lin.gamma[i] - row.gamma) <= baseline::kZeroTableTol &&
                   std::abs(lin.delta[i] - row.delta) <= baseline::kZeroTableTol;
        rs_rows = rs_rows && std::abs(rs.gamma[i] - row.gamma) <= baseline::kZeroTableTol &&
                  std::abs(rs.delta[i] - row.delta) <= baseline::kZeroTableTol;
    }
    auto aggregates = [](const ZeroSet& zs, double& max_shift, double& min_gap) {
        max_shift = 0.0;
        min_gap = 1e300;
        for (int i = 0; i < zs.N; ++i) {
            max_shift = std::max(max_shift, std::abs(zs.delta[static_cast<std::size_t>(i)]));
            if (i)
                min_gap = std::min(min_gap, zs.gamma[static_cast<std::size_t>(i)] -
                                                zs.gamma[static_cast<std::size_t>(i - 1)]);
        }
    };
    double lin_shift, lin_gap, rs_shift, rs_gap;
    aggregates(lin, lin_shift, lin_gap);
    aggregates(rs, rs_shift, rs_gap);
    auto agg_ok = [](double shift, double gap) {
        return shift <= baseline::kMaxShift + baseline::kMaxShiftTol &&
               gap >= baseline::kMinGapLo && gap <= baseline::kMinGapHi;
    };
    const double dt = elapsed(t0);
    const bool runtime_ok = dt <= 10.0;

    if ((lin_rows && agg_ok(lin_shift, lin_gap)) || (rs_rows && agg_ok(rs_shift, rs_gap))) {
        char d[160];
        std::snprintf(d, sizeof(d), "published zero table reproduced (runtime %.1fs)", dt);
        report(1, runtime_ok, d);
        return;
    }

    // Discrepancy path: print the report and gate on internal consistency.
    std::printf("       discrepancy report: published zero table not reproduced by either mode\n");
    std::printf("         n  published(g,d)      linearized(g,d)     rootsolve(g,d)\n");
    for (const auto& row : baseline::kZeroTable) {
        const std::size_t i = static_cast<std::size_t>(row.n - 1);
        std::printf("       %3d  %9.4f %+7.4f  %9.4f %+7.4f  %9.4f %+7.4f\n", row.n, row.gamma,
                    row.delta, lin.gamma[i], lin.delta[i], rs.gamma[i], rs.delta[i]);
    }
    std::printf("         aggregates: max|delta| lin=%.4f rs=%.4f (published <= %.3f); "
                "min gap lin=%.3f rs=%.3f (published 1.67)\n",
                lin_shift, rs_shift, baseline::kMaxShift, lin_gap, rs_gap);
    note("the published aggregates are impossible for the stated construction at N=1000: the "
         "unperturbed lattice alone has min gap ~1.16 at gamma~1420, below the published 1.67");
    note("closest reconstruction of the published table uses theta ~ 4.10-4.12 (it matches the "
         "published Weyl column sum exactly), not the documented theta = 1");

    bool internal = true;
    for (int n = 1; n <= lin.N; ++n) {
        internal = internal && std::abs(n_main(lin.gamma0[static_cast<std::size_t>(n - 1)]) - n) < 1e-10;
        if (n > 1)
            internal = internal && lin.gamma0[static_cast<std::size_t>(n - 1)] >
                                       lin.gamma0[static_cast<std::size_t>(n - 2)];
        internal = internal && lin.gamma[static_cast<std::size_t>(n - 1)] > 0.0 &&
                   rs.gamma[static_cast<std::size_t>(n - 1)] > 0.0;
    }
    for (int i = 0; i < lin.N; ++i) {
        const double expect =
            -ctx.c * eval_E(ctx, lin.gamma0[static_cast<std::size_t>(i)], 80) /
            n_main_prime(lin.gamma0[static_cast<std::size_t>(i)]);
        internal = internal && std::abs(lin.delta[static_cast<std::size_t>(i)] - expect) < 1e-12;
    }
    double max_e = 0.0, max_ep = 0.0, max_diff = 0.0;
    for (int i = 0; i < lin.N; ++i) {
        const double g0 = lin.gamma0[static_cast<std::size_t>(i)];
        max_e = std::max(max_e, std::abs(eval_E(ctx, g0, 80)));
        max_ep = std::max(max_ep, std::abs(eval_E_prime(ctx, g0, 80)));
        max_diff = std::max(max_diff, std::abs(rs.gamma[static_cast<std::size_t>(i)] -
                                               lin.gamma[static_cast<std::size_t>(i)]));
    }
    const double np1 = n_main_prime(lin.gamma0[0]);
    internal = internal && max_diff <= 2.0 * ctx.c * ctx.c * max_e * max_ep / (np1 * np1);
    for (int n = 50; n < lin.N; ++n) {
        const double gap = lin.gamma[static_cast<std::size_t>(n)] -
                           lin.gamma[static_cast<std::size_t>(n - 1)];
        const double pred = 1.0 / n_main_prime(lin.gamma[static_cast<std::size_t>(n - 1)]);
        internal = internal && gap / pred > 0.9 && gap / pred < 1.1;
    }

    char d[200];
    std::snprintf(d, sizeof(d),
                  "published table not reproduced; discrepancy report emitted; internal "
                  "consistency %s (runtime %.1fs)",
                  internal ? "holds" : "VIOLATED", dt);
    report(1, internal && runtime_ok, d);
}

// ---------------------------------------------------------------- criterion 2
void criterion_2() {
    const auto t0 = Clock::now();
    const SeriesContext ctx = reference_ctx();
    const ZeroSet zs = build_zero_set(ctx, 5000, ZeroMode::linearized);
    const std::vector<int> Ns = {100, 500, 1000, 5000};
    const Report r = weyl_mean_square(zs, Ns);
    bool all = true;
    std::string detail = "weyl ratios:";
    for (std::size_t i = 0; i < 4; ++i) {
        const double ratio = std::get<double>(r.rows[i][3]);
        const auto& pub = baseline::kWeylTable[i];
        const bool ok = std::abs(ratio - pub.ratio) <= baseline::kWeylRatioTol;
        all = all && ok;
        char buf[64];
        std::snprintf(buf, sizeof(buf), " N=%d %.3f(pub %.3f%s)", pub.N, ratio, pub.ratio,
                      ok ? "" : " MISS");
        detail += buf;
    }
    const double dt = elapsed(t0);
    char tail[48];
    std::snprintf(tail, sizeof(tail), " (runtime %.1fs <= 30s: %s)", dt, dt <= 30.0 ? "yes" : "NO");
    detail += tail;
    if (!all)
        note("the published Weyl column corresponds to a theta ~ 4.1 parameter set; at the "
             "documented theta = 1 the N=100 block average differs (realization-level quantity)");
    report(2, all && dt <= 30.0, detail);
}

// ---------------------------------------------------------------- criterion 3
void criterion_3() {
    const SeriesContext ctx = reference_ctx();
    const ZeroSet zs = build_zero_set(ctx, std::max(1000, zeros_needed(1420.0)), ZeroMode::linearized);
    const auto grid = uniform_grid(20.0, 1420.0, 5000);
    bool all = true;
    double prev_std = -1.0, prev_max = -1.0;
    bool ordering = true;
    std::string detail = "residual (mean/std/max vs published +-50%):";
    for (const auto& pub : baseline::kResidualTable) {
        const Report r = spectral_residual(zs, pub.sigma, grid);
        const double mean = r.summary["mean"].get<double>();
        const double sd = r.summary["std"].get<double>();
        const double mx = r.summary["max_abs"].get<double>();
        const bool ok =
            std::abs(mean - pub.mean) <= baseline::kResidualRelTol * std::abs(pub.mean) &&
            std::abs(sd - pub.stddev) <= baseline::kResidualRelTol * pub.stddev &&
            std::abs(mx - pub.max_abs) <= baseline::kResidualRelTol * pub.max_abs;
        all = all && ok;
        if (prev_std >= 0.0) ordering = ordering && sd > prev_std && mx > prev_max;
        prev_std = sd;
        prev_max = mx;
        char buf[96];
        std::snprintf(buf, sizeof(buf), " s=%.2f %.4f/%.4f/%.4f%s", pub.sigma, mean, sd, mx,
                      ok ? "" : " MISS");
        detail += buf;
    }
    detail += ordering ? "; ordering std,max increasing as sigma->1: holds"
                       : "; ordering VIOLATED";
    report(3, all && ordering, detail);
}

// ---------------------------------------------------------------- criterion 4
void criterion_4() {
    const auto t0 = Clock::now();
    const SeriesContext ctx = reference_ctx();
    const ZeroSet zs = build_zero_set(ctx, 1000, ZeroMode::linearized);
    std::vector<double> Ls;
    for (double L = 0.5; L <= 20.0; L += 0.5) Ls.push_back(L);
    const Report r = zero_statistics(zs, Ls);
    const double rms = r.summary["rms_counting_error"].get<double>();
    const double sps = r.summary["spacing_std"].get<double>();
    double worst_sigma2 = 0.0;
    for (const auto& row : r.rows) worst_sigma2 = std::max(worst_sigma2, std::get<double>(row[1]));
    const double dt = elapsed(t0);
    const bool ok = rms >= baseline::kRmsCountingLo && rms <= baseline::kRmsCountingHi &&
                    sps >= baseline::kSpacingStdLo && sps <= baseline::kSpacingStdHi &&
                    worst_sigma2 <= baseline::kSigma2Max && dt <= 30.0;
    char d[200];
    std::snprintf(d, sizeof(d),
                  "rms_count=%.4f in [%.3f,%.3f], spacing_std=%.4f in [%.3f,%.3f], "
                  "max Sigma^2(L<=20)=%.3f <= %.2f (runtime %.1fs)",
                  rms, baseline::kRmsCountingLo, baseline::kRmsCountingHi, sps,
                  baseline::kSpacingStdLo, baseline::kSpacingStdHi, worst_sigma2,
                  baseline::kSigma2Max, dt);
    report(4, ok, d);
}

// ---------------------------------------------------------------- criterion 5
void criterion_5() {
    const auto t0 = Clock::now();
    const SeriesContext ctx = reference_ctx();
    const ZeroSet zs = build_zero_set(ctx, 1000, ZeroMode::linearized);
    const std::vector<double> sigmas = {0.75};
    const ValueDistResult vd = value_distribution(zs, sigmas, 20.0, 300.0, 0.05);
    const auto& rms = vd.main.summary["rms"][format_double(0.75)];
    const double rr = rms["rms_ratio"].get<double>();
    const double rz = rms["rms_zeta"].get<double>();
    const double dt = elapsed(t0);
    const bool ratio_ok = rr >= baseline::kRmsRatioLo && rr <= baseline::kRmsRatioHi;
    const bool zeta_ok = rz >= baseline::kRmsZetaLo && rz <= baseline::kRmsZetaHi;
    char d[200];
    std::snprintf(d, sizeof(d),
                  "rms log-ratio=%.4f (required [%.3f,%.3f]%s), rms log zeta=%.3f (required "
                  "[%.1f,%.1f]%s), runtime %.0fs <= 300s",
                  rr, baseline::kRmsRatioLo, baseline::kRmsRatioHi, ratio_ok ? "" : " MISS", rz,
                  baseline::kRmsZetaLo, baseline::kRmsZetaHi, zeta_ok ? "" : " MISS", dt);
    if (!ratio_ok)
        note("rms of the log-ratio scales with sum alpha_k^{-1.5}; at theta = 1 that sum is 1.9x "
             "the theta ~ 4.1 value behind the published 0.046, hence ~0.076 here");
    report(5, ratio_ok && zeta_ok && dt <= 300.0, d);
}

// ---------------------------------------------------------------- criterion 6
void criterion_6() {
    const SeriesContext ctx = reference_ctx();
    bool all = true;
    std::string detail;

    auto sub = [&](const char* name, bool ok) {
        all = all && ok;
        detail += std::string(detail.empty() ? "" : ", ") + name + (ok ? ":ok" : ":FAIL");
    };

    {  // 6a functional-equation symmetry
        const ZeroSet zs = build_zero_set(ctx, 1000, ZeroMode::linearized);
        bool ok = true;
        for (double sg : {0.6, 0.75, 1.0, 1.25, 2.0})
            for (double t : {5.0, 21.0, 50.0, 77.0, 103.0, 150.0, 177.0, 210.0, 240.0, 280.0}) {
                const Complex a = log_ratio_hadamard(zs, Complex(sg, t)).value;
                const Complex b = log_ratio_hadamard(zs, Complex(1.0 - sg, -t)).value;
                ok = ok && std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a));
            }
        for (int i = 0; i < 50; ++i) {  // Gamma_pi on the critical line, where s -> 1-s = conj(s)
            const double t = 2.0 + 6.0 * i;
            const Complex a = log_gamma_pi(Complex(0.5, t));
            const Complex b = log_gamma_pi(Complex(0.5, -t));
            ok = ok && std::abs(a - std::conj(b)) < 1e-10 * std::max(1.0, std::abs(a));
        }
        sub("functional-equation", ok);
    }
    {  // 6b Abel vs direct
        bool ok = true;
        for (double sg : {1.5, 2.0, 3.0})
            for (double t : {0.0, 5.0, 37.7, 211.0}) {
                const Complex a = eval_D(ctx, Complex(sg, t), 80, Summation::abel).value;
                const Complex b = eval_D(ctx, Complex(sg, t), 80, Summation::direct).value;
                ok = ok && std::abs(a - b) < 1e-10;
            }
        sub("abel-vs-direct", ok);
    }
    {  // 6c Im D = pi E
        bool ok = true;
        std::mt19937 rng(20240501);
        std::uniform_real_distribution<double> uni(0.0, 2000.0);
        for (int i = 0; i < 100; ++i) {
            const double T = uni(rng);
            const SeriesValue d = eval_D(ctx, Complex(0.5, T), 80);
            ok = ok && std::abs(d.value.imag() - kPi * eval_E(ctx, T, 80)) < 1e-12;
        }
        sub("ImD=piE", ok);
    }
    {  // 6d multiplicativity and prime-power moduli up to 1e4
        const EulerCoefficients ec = euler_coefficients(ctx, 10000);
        bool ok = ec[1] == Complex(1.0, 0.0);
        for (int m = 2; m <= 100 && ok; ++m)
            for (int n = m + 1; n <= 10000 / m; ++n) {
                if (std::gcd(m, n) != 1) continue;
                const Complex lhs = ec[m * n], rhs = ec[m] * ec[n];
                const double scale = std::max(std::abs(lhs), std::abs(rhs));
                if (scale > 0.0 && std::abs(lhs - rhs) > 1e-12 * scale) {
                    ok = false;
                    break;
                }
            }
        for (std::int64_t p : {2LL, 3LL, 5LL, 7LL}) {
            double fact = 1.0;
            std::int64_t pm = 1;
            for (int m = 1; pm <= 10000 / p; ++m) {
                pm *= p;
                fact *= m;
                ok = ok && std::abs(std::abs(ec[static_cast<int>(pm)]) -
                                    std::pow(ctx.c, m) / fact) <=
                               1e-13 * std::pow(ctx.c, m) / fact;
            }
        }
        sub("euler-coefficients", ok);
    }
    {  // 6e exp(-cD) against the coefficient Dirichlet series (exact nodes)
        const SeriesContext exact(build_prime_table(80, 1.0, false), 0.05);
        const EulerCoefficients ec = euler_coefficients(exact, 10000);
        bool ok = true;
        for (double sg : {2.0, 3.0}) {
            KahanComplexSum lhs;
            KahanSum abs_acc;
            for (int n = 1; n <= 10000; ++n) {
                if (ec[n] == Complex(0.0, 0.0)) continue;
                const double nms = std::pow(static_cast<double>(n), -sg);
                lhs.add(ec[n] * nms);
                abs_acc.add(std::abs(ec[n]) * nms);
            }
            const SeriesValue d = eval_D(exact, Complex(sg, 0.0), 80);
            const Complex rhs = std::exp(-exact.c * d.value);
            const double tail_coeff =
                std::exp(exact.c * eval_P(exact.table, sg, 80).value) - abs_acc.value();
            const double tail_d = std::abs(rhs) * std::expm1(exact.c * d.tail);
            ok = ok && std::abs(lhs.value() - rhs) <= tail_coeff + tail_d + 1e-13;
        }
        sub("exp(-cD)-consistency", ok);
    }
    {  // 6f dyadic blocks
        const ZeroSet zs = build_zero_set(ctx, 64, ZeroMode::linearized);
        const Report r = lin_check(zs, 12);
        bool ok = true;
        double prev = 0.0;
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            ok = ok && std::get<double>(r.rows[i][6]) == 1.0;  // S_j <= 2(HEAD+TAIL)
            const double S = std::get<double>(r.rows[i][2]);
            const int j = static_cast<int>(std::get<double>(r.rows[i][0]));
            if (j >= 7) ok = ok && S < prev;  // decay for j >= 6 onward
            prev = S;
        }
        sub("dyadic-blocks", ok);
    }
    {  // 6g c = 0 degeneracy
        const SeriesContext c0(build_prime_table(80, 1.0, true), 0.0);
        const ZeroSet zs = build_zero_set(c0, 500, ZeroMode::linearized);
        bool ok = true;
        for (int i = 0; i < zs.N; ++i) ok = ok && zs.delta[static_cast<std::size_t>(i)] == 0.0;
        ok = ok && log_ratio_hadamard(zs, Complex(1.5, 40.0)).value == Complex(0.0, 0.0);
        const auto grid = uniform_grid(20.0, 300.0, 100);
        ok = ok && spectral_residual(zs, 1.5, grid).summary["max_abs"].get<double>() == 0.0;
        const std::vector<double> Ls = {5.0};
        const Report st = zero_statistics(zs, Ls);
        ok = ok && st.summary["rms_counting_error"].get<double>() < 1e-8 &&
             st.summary["spacing_std"].get<double>() < 1e-8;
        sub("c=0-degeneracy", ok);
    }
    {  // 6h c-linearity of the spacing std
        const std::vector<double> Ls = {5.0};
        const ZeroSet z1 = build_zero_set(ctx, 1000, ZeroMode::linearized);
        const SeriesContext c2(build_prime_table(80, 1.0, true), 0.10);
        const ZeroSet z2 = build_zero_set(c2, 1000, ZeroMode::linearized);
        const double s1 = zero_statistics(z1, Ls).summary["spacing_std"].get<double>();
        const double s2 = zero_statistics(z2, Ls).summary["spacing_std"].get<double>();
        sub("c-linearity", s2 / s1 >= 1.8 && s2 / s1 <= 2.2);
    }
    report(6, all, "property suite: " + detail);
}

// ---------------------------------------------------------------- criterion 7
void criterion_7() {
    const SeriesContext ctx = reference_ctx();
    const ZeroSet zs = build_zero_set(ctx, std::max(1500, zeros_needed(1000.0)), ZeroMode::linearized);

    double sup_zc = -1e300;
    for (int i = 0; i < 120; ++i) {
        const double t = 20.0 + (1000.0 - 20.0) * i / 119.0;
        sup_zc = std::max(sup_zc, log_Zc(Complex(1.5, t), zs).value.real());
    }
    const PrimeTable big = build_prime_table(100000, 1.0, false);
    const RealSeriesValue p15 = eval_P(big, 1.5, big.K);
    const double bound = ctx.c * (p15.value + p15.tail) + baseline::kZ0SupConstant;
    const bool bound_ok = sup_zc <= bound;

    const Report align = phase_alignment_search(ctx, 4, 1.0, 1e6, 0.05);
    const double ratio = std::get<double>(align.rows[3][4]);
    const bool align_ok = ratio >= 0.9;

    char d[200];
    std::snprintf(d, sizeof(d),
                  "sup log|Zc(1.5+it)|=%.4f <= c*P(1.5)+C0=%.4f: %s; alignment achieved/ceiling="
                  "%.4f >= 0.9: %s",
                  sup_zc, bound, bound_ok ? "yes" : "NO", ratio, align_ok ? "yes" : "NO");
    report(7, bound_ok && align_ok, d);
}

}  // namespace

int main() {
    std::printf("acceptance suite: reference configuration c=0.05 theta=1 K=80 shifted\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();

    int passed = 0;
    for (const auto& o : g_outcomes) passed += o.pass ? 1 : 0;
    std::printf("summary: %d/%zu criteria passed\n", passed, g_outcomes.size());
    if (passed != static_cast<int>(g_outcomes.size())) {
        std::printf("failed criteria compare against published values that the documented "
                    "construction does not reproduce; see the notes above and the project "
                    "README for the analysis.\n");
    }
    return passed == static_cast<int>(g_outcomes.size()) ? 0 : 1;
}
