#include "xic/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "xic/exec.hpp"

namespace xic {

namespace {

nlohmann::json context_json(const SeriesContext& ctx) {
    return {{"c", ctx.c},
            {"theta", ctx.table.theta},
            {"K", ctx.table.K},
            {"shifted", ctx.table.shifted}};
}

double population_std(std::span<const double> v, double* mean_out = nullptr) {
    KahanSum m;
    for (double x : v) m.add(x);
    const double mean = m.value() / static_cast<double>(v.size());
    KahanSum q;
    for (double x : v) q.add((x - mean) * (x - mean));
    if (mean_out) *mean_out = mean;
    return std::sqrt(q.value() / static_cast<double>(v.size()));
}

}  // namespace

Report spectral_residual(const ZeroSet& zs, double sigma, std::span<const double> t_grid,
                         Exec exec) {
    if (!(sigma > 0.5)) throw std::domain_error("spectral_residual: requires sigma > 1/2");
    const double t_hi = 0.9 * zs.gamma0.back();
    for (double t : t_grid)
        if (!(t >= 20.0) || !(t <= t_hi))
            throw std::invalid_argument(
                "spectral_residual: t grid leaves the reliable range [20, 0.9*gamma0_N]");

    const SeriesContext& ctx = zs.config;
    const PrimeTable& pt = ctx.table;
    const std::size_t M = t_grid.size();

    // exclusion radius 0.05 around every zero/pole ordinate
    std::vector<char> skip(M, 0);
    for_each_index(static_cast<std::ptrdiff_t>(M), exec, [&](std::size_t i) {
        const double t = t_grid[i];
        auto it = std::lower_bound(zs.gamma0.begin(), zs.gamma0.end(), t);
        const auto idx = static_cast<std::size_t>(it - zs.gamma0.begin());
        const std::size_t lo = idx > 3 ? idx - 3 : 0;
        const std::size_t hi = std::min(zs.gamma0.size(), idx + 3);
        for (std::size_t j = lo; j < hi; ++j)
            if (std::abs(zs.gamma0[j] - t) < 0.05 || std::abs(zs.gamma[j] - t) < 0.05) skip[i] = 1;
    });

    std::vector<double> lhs(M), rhs(M), quad(M);
    for_each_index(static_cast<std::ptrdiff_t>(M), exec, [&](std::size_t i) {
        if (skip[i]) return;
        const Complex s(sigma, t_grid[i]);
        lhs[i] = log_ratio_hadamard(zs, s).value.real();
        KahanSum cosr;
        for (int k = 0; k < pt.K; ++k)
            cosr.add(std::pow(pt.alpha[k], -sigma) *
                     std::cos(t_grid[i] * pt.omega[k] + pt.phi[k]));
        rhs[i] = -ctx.c * cosr.value();
        const Complex w2 = (s - 0.5) * (s - 0.5);
        KahanSum q;
        for (int n = 0; n < zs.N; ++n) {
            const double g0 = zs.gamma0[static_cast<std::size_t>(n)];
            const Complex g2w = g0 * g0 + w2;
            const Complex f2 = 2.0 * (w2 - g0 * g0) / (g2w * g2w) + 2.0 / (g0 * g0);
            const double d = zs.delta[static_cast<std::size_t>(n)];
            q.add(0.5 * d * d * std::abs(f2));
        }
        quad[i] = q.value();
    });

    Report r;
    r.name = "spectral_residual";
    r.columns = {"sigma", "t", "lhs", "rhs", "residual", "quad_term"};
    std::vector<double> res;
    res.reserve(M);
    int skipped = 0;
    for (std::size_t i = 0; i < M; ++i) {
        if (skip[i]) {
            ++skipped;
            continue;
        }
        const double d = lhs[i] - rhs[i];
        res.push_back(d);
        r.add_row({sigma, t_grid[i], lhs[i], rhs[i], d, quad[i]});
    }
    double mean = 0.0;
    const double sd = population_std(res, &mean);
    double mx = 0.0;
    for (double d : res) mx = std::max(mx, std::abs(d));
    r.config = context_json(ctx);
    r.summary = {{"sigma", sigma}, {"mean", mean},       {"std", sd},
                 {"max_abs", mx},  {"skipped", skipped}, {"points", res.size()}};
    return r;
}

Report weyl_mean_square(const ZeroSet& zs, std::span<const int> N_list, Exec exec) {
    int n_max = 0;
    for (int n : N_list) {
        if (n < 1 || n > zs.N)
            throw std::invalid_argument("weyl_mean_square: N_list entries must lie in [1, zs.N]");
        n_max = std::max(n_max, n);
    }
    const SeriesContext& ctx = zs.config;
    std::vector<double> e(static_cast<std::size_t>(n_max));
    eval_E_many(ctx, std::span(zs.gamma0).first(static_cast<std::size_t>(n_max)), e,
                ctx.table.K, exec);

    KahanSum theo;
    for (int k = 0; k < ctx.table.K; ++k) theo.add(1.0 / ctx.table.alpha[k]);
    const double theoretical = theo.value() / (2.0 * kPi * kPi);

    std::vector<int> sorted(N_list.begin(), N_list.end());
    std::sort(sorted.begin(), sorted.end());

    Report r;
    r.name = "weyl_mean_square";
    r.columns = {"N", "empirical", "theoretical", "ratio"};
    KahanSum run;
    int done = 0;
    for (int n : sorted) {
        while (done < n) {
            run.add(e[static_cast<std::size_t>(done)] * e[static_cast<std::size_t>(done)]);
            ++done;
        }
        const double emp = run.value() / n;
        r.add_row({static_cast<double>(n), emp, theoretical, emp / theoretical});
    }
    r.config = context_json(ctx);
    r.summary = {{"theoretical", theoretical}};
    return r;
}

Report lin_check(const ZeroSet& zs, int j_max, Exec exec) {
    if (j_max < 1) throw std::invalid_argument("lin_check: j_max must be >= 1");
    if (j_max > 20)
        throw std::runtime_error(
            "lin_check: capacity error, j_max > 20 needs more primes/zeros than desk scale");
    const SeriesContext& base = zs.config;
    const int K_big = static_cast<int>(std::ceil(std::pow(2.0, 1.1 * j_max)));
    const SeriesContext ctx(build_prime_table(K_big, base.table.theta, base.table.shifted),
                            base.c);
    const PrimeTable& pt = ctx.table;

    const int n_hi = (1 << (j_max + 1)) - 1;  // last n of block j_max
    std::vector<double> g0(static_cast<std::size_t>(n_hi));
    for_each_index(n_hi, exec, [&](std::size_t i) {
        g0[i] = i < zs.gamma0.size() ? zs.gamma0[i] : invert_n_main(static_cast<double>(i + 1));
    });
    std::vector<double> e(static_cast<std::size_t>(n_hi));
    eval_E_many(ctx, g0, e, K_big, exec);

    Report r;
    r.name = "lin_check";
    r.columns = {"j", "K_j", "S_j", "HEAD_j", "TAIL_j", "ratio_prev", "bound_ok"};
    double prev = 0.0;
    KahanSum cumulative;
    bool all_ok = true;
    std::vector<double> log2_S;
    for (int j = 1; j <= j_max; ++j) {
        const int lo = 1 << j, hi = (1 << (j + 1)) - 1;  // n in [2^j, 2^{j+1})
        const int K_j = static_cast<int>(std::ceil(std::pow(2.0, 1.1 * j)));
        KahanSum s_acc, inv2_acc;
        double min_gap = std::numeric_limits<double>::infinity();
        for (int n = lo; n <= hi; ++n) {
            const double en = e[static_cast<std::size_t>(n - 1)];
            s_acc.add(en * en / (static_cast<double>(n) * n));
            inv2_acc.add(1.0 / (static_cast<double>(n) * n));
            if (n > 1)
                min_gap = std::min(min_gap, g0[static_cast<std::size_t>(n - 1)] -
                                                g0[static_cast<std::size_t>(n - 2)]);
        }
        const double S_j = s_acc.value();
        const double lambda_j = pt.omega[static_cast<std::size_t>(K_j - 1)] - pt.omega[0];
        KahanSum inv_alpha;
        for (int k = 0; k < K_j; ++k) inv_alpha.add(1.0 / pt.alpha[k]);
        const double head =
            (kPi / min_gap + lambda_j) * inv_alpha.value() / (kPi * kPi) / std::pow(4.0, j);
        const double t_blk = g0[static_cast<std::size_t>(hi - 1)];
        const double tb = tail_bound_E(pt, K_j, t_blk);
        const double tail = tb * tb * inv2_acc.value();
        const bool ok = S_j <= 2.0 * (head + tail) + 1e-15;
        all_ok = all_ok && ok;
        r.add_row({static_cast<double>(j), static_cast<double>(K_j), S_j, head, tail,
                   j > 1 ? S_j / prev : 0.0, ok ? 1.0 : 0.0});
        cumulative.add(S_j);
        log2_S.push_back(std::log2(S_j));
        prev = S_j;
    }
    // least-squares slope of log2 S_j against j over j >= 4 (decay-rate fit)
    double slope = 0.0;
    if (j_max >= 5) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (int j = 4; j <= j_max; ++j) {
            const double y = log2_S[static_cast<std::size_t>(j - 1)];
            sx += j;
            sy += y;
            sxx += static_cast<double>(j) * j;
            sxy += j * y;
            ++m;
        }
        slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    r.config = context_json(ctx);
    r.summary = {{"j_max", j_max},
                 {"K_big", K_big},
                 {"cumulative_sum", cumulative.value()},
                 {"decay_slope_log2", slope},
                 {"all_blocks_bounded", all_ok}};
    return r;
}

Report zero_statistics(const ZeroSet& zs, std::span<const double> L_list, Exec exec) {
    const int N = zs.N;
    std::vector<double> x(static_cast<std::size_t>(N));
    for_each_index(N, exec,
                   [&](std::size_t i) { x[i] = n_main(zs.gamma[i]); });

    KahanSum cnt;
    for (int n = 1; n <= N; ++n) {
        const double d = x[static_cast<std::size_t>(n - 1)] - n;
        cnt.add(d * d);
    }
    const double rms_count = std::sqrt(cnt.value() / N);

    std::vector<double> sp(static_cast<std::size_t>(N - 1));
    for (int i = 0; i + 1 < N; ++i)
        sp[static_cast<std::size_t>(i)] =
            x[static_cast<std::size_t>(i + 1)] - x[static_cast<std::size_t>(i)];
    double sp_mean = 0.0;
    const double sp_std = population_std(sp, &sp_mean);

    Report r;
    r.name = "zero_statistics";
    r.columns = {"L", "sigma2"};
    nlohmann::json sigma2s = nlohmann::json::object();
    const int n_windows = 2000;
    for (double L : L_list) {
        if (!(L > 0.0) || L >= x.back() - x.front())
            throw std::invalid_argument("zero_statistics: window length out of range");
        std::vector<double> counts(n_windows);
        for_each_index(n_windows, exec, [&](std::size_t i) {
            const double a =
                x.front() + (x.back() - L - x.front()) * static_cast<double>(i) / (n_windows - 1);
            const auto lo = std::lower_bound(x.begin(), x.end(), a);
            const auto hi = std::lower_bound(x.begin(), x.end(), a + L);
            counts[i] = static_cast<double>(hi - lo);
        });
        double cm = 0.0;
        const double cs = population_std(counts, &cm);
        r.add_row({L, cs * cs});
        sigma2s[format_double(L)] = cs * cs;
    }
    r.config = context_json(zs.config);
    r.summary = {{"rms_counting_error", rms_count},
                 {"spacing_std", sp_std},
                 {"spacing_mean", sp_mean},
                 {"sigma2", sigma2s},
                 {"N", N}};
    return r;
}

Report pointwise_E_bound(const ZeroSet& zs, Exec exec) {
    const SeriesContext& ctx = zs.config;
    std::vector<double> e(static_cast<std::size_t>(zs.N));
    eval_E_many(ctx, zs.gamma0, e, ctx.table.K, exec);

    Report r;
    r.name = "pointwise_E_bound";
    r.columns = {"n", "E", "abs_E", "running_max", "sqrt_loglog_n"};
    double run = 0.0;
    int argmax = 1;
    for (int n = 1; n <= zs.N; ++n) {
        const double a = std::abs(e[static_cast<std::size_t>(n - 1)]);
        if (a > run) {
            run = a;
            argmax = n;
        }
        const double cmp = n >= 3 ? std::sqrt(std::log(std::log(static_cast<double>(n)))) : 0.0;
        r.add_row({static_cast<double>(n), e[static_cast<std::size_t>(n - 1)], a, run, cmp});
    }
    r.config = context_json(ctx);
    r.summary = {{"max_abs_E", run}, {"argmax_n", argmax}, {"N", zs.N}};
    return r;
}

Report phase_alignment_search(const SeriesContext& ctx, int n_primes, double sigma, double t_max,
                              double dt, Exec exec) {
    if (n_primes < 1 || n_primes > 8)
        throw std::invalid_argument("phase_alignment_search: n_primes must lie in [1, 8]");
    if (n_primes > ctx.table.K)
        throw std::invalid_argument("phase_alignment_search: n_primes exceeds table size");
    if (!(sigma >= 1.0)) throw std::domain_error("phase_alignment_search: requires sigma >= 1");
    if (!(t_max > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("phase_alignment_search: t_max and dt must be positive");

    const PrimeTable& pt = ctx.table;
    Report r;
    r.name = "phase_alignment_search";
    r.columns = {"n_primes", "best_t", "achieved", "ceiling", "ratio"};

    for (int m = 1; m <= n_primes; ++m) {
        std::vector<double> w(static_cast<std::size_t>(m));
        double ceiling = 0.0;
        for (int k = 0; k < m; ++k) {
            w[static_cast<std::size_t>(k)] = std::pow(pt.alpha[k], -sigma);
            ceiling += w[static_cast<std::size_t>(k)];
        }
        auto A = [&](double t) {
            double s = 0.0;
            for (int k = 0; k < m; ++k)
                s -= w[static_cast<std::size_t>(k)] * std::cos(t * pt.omega[k] + pt.phi[k]);
            return s;
        };

        const auto M = static_cast<std::size_t>(t_max / dt) + 1;
        const std::size_t chunk = 1 << 16;
        const std::size_t n_chunks = (M + chunk - 1) / chunk;
        std::vector<double> best_val(n_chunks, -1e300), best_t(n_chunks, 0.0);
        for_each_index(static_cast<std::ptrdiff_t>(n_chunks), exec, [&](std::size_t ci) {
            const std::size_t lo = ci * chunk, hi = std::min(M, lo + chunk);
            double bv = -1e300, bt = 0.0;
            for (std::size_t i = lo; i < hi; ++i) {
                const double t = static_cast<double>(i) * dt;
                const double v = A(t);
                if (v > bv) {
                    bv = v;
                    bt = t;
                }
            }
            best_val[ci] = bv;
            best_t[ci] = bt;
        });
        double bv = -1e300, bt = 0.0;
        for (std::size_t ci = 0; ci < n_chunks; ++ci)
            if (best_val[ci] > bv) {
                bv = best_val[ci];
                bt = best_t[ci];
            }

        // local ternary refinement around the best grid point
        double a = std::max(0.0, bt - dt), b = std::min(t_max, bt + dt);
        for (int it = 0; it < 200; ++it) {
            const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (A(m1) < A(m2))
                a = m1;
            else
                b = m2;
        }
        const double tr = 0.5 * (a + b);
        if (A(tr) > bv) {
            bv = A(tr);
            bt = tr;
        }
        r.add_row({static_cast<double>(m), bt, bv, ceiling, bv / ceiling});
    }
    r.config = context_json(ctx);
    r.config["sigma"] = sigma;
    r.config["t_max"] = t_max;
    r.config["dt"] = dt;
    r.summary = {{"n_primes", n_primes}};
    if (!r.rows.empty()) {
        r.summary["achieved"] = std::get<double>(r.rows.back()[2]);
        r.summary["ceiling"] = std::get<double>(r.rows.back()[3]);
        r.summary["ratio"] = std::get<double>(r.rows.back()[4]);
    }
    return r;
}

}  // namespace xic
