#include "xic/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "xic/exec.hpp"

namespace xic {

double n_main(double T) {
    if (!(T > 0.0)) throw std::domain_error("n_main: requires T > 0");
    const double x = T / kTwoPi;
    return x * std::log(x) - x + 7.0 / 8.0;
}

double n_main_prime(double T) {
    if (!(T > kTwoPi)) throw std::domain_error("n_main_prime: requires T > 2*pi");
    return std::log(T / kTwoPi) / kTwoPi;
}

double invert_n_main(double n) {
    if (!(n >= 1.0)) throw std::invalid_argument("invert_n_main: requires n >= 1");
    // Bracket: N_main(2*pi*e) = 7/8 < 1 <= n.
    double lo = kTwoPi * std::numbers::e;
    double hi = std::max(20.0, 2.0 * lo);
    while (n_main(hi) < n) hi *= 2.0;

    // Asymptotic seed: x log x - x = n - 7/8 with x = T/2pi.
    const double r = n - 7.0 / 8.0;
    double x = std::max(r / std::log(std::max(r, 3.0)), std::numbers::e * 1.0001);
    for (int i = 0; i < 3; ++i) x = (r + x) / std::log(std::max(x, std::numbers::e * 1.0001));
    double T = std::clamp(kTwoPi * x, lo * 1.000001, hi);

    for (int it = 0; it < 100; ++it) {
        const double f = n_main(T) - n;
        if (std::abs(f) < 1e-11) break;
        if (f > 0.0)
            hi = T;
        else
            lo = T;
        double Tn = T - f / n_main_prime(T);
        if (!(Tn > lo) || !(Tn < hi)) Tn = 0.5 * (lo + hi);  // bisection safeguard
        if (Tn == T) break;
        T = Tn;
    }
    return T;
}

double monotonicity_threshold(const PrimeTable& table, double T0) {
    if (!(T0 > kTwoPi)) throw std::domain_error("monotonicity_threshold: requires T0 > 2*pi");
    KahanSum acc;
    for (int k = 0; k < table.K; ++k)
        acc.add(table.omega[k] / std::sqrt(table.alpha[k]));
    return n_main_prime(T0) / (acc.value() / kPi);
}

namespace {

std::string fmt_T(double T) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", T);
    return buf;
}

// Certify F_K' = N_main' + c E_K' > 0 on [lo, hi] by a grid scan with a
// Lipschitz bound on F_K''; refines where the margin is thin and throws
// MonotonicityError (naming T) where F' <= 0 or positivity cannot be
// certified.
void certify_monotone(const SeriesContext& ctx, double lo, double hi, Exec exec) {
    const PrimeTable& t = ctx.table;
    KahanSum s2;
    for (int k = 0; k < t.K; ++k)
        s2.add(t.omega[k] * t.omega[k] / std::sqrt(t.alpha[k]));
    const double lips = 1.0 / (kTwoPi * lo) + ctx.c * s2.value() / kPi;

    auto fprime = [&](double T) { return n_main_prime(T) + ctx.c * eval_E_prime(ctx, T, t.K); };

    const double h0 = 0.02;
    const auto M = static_cast<std::size_t>((hi - lo) / h0) + 2;
    std::vector<double> vals(M);
    for_each_index(static_cast<std::ptrdiff_t>(M), exec, [&](std::size_t i) {
        vals[i] = fprime(std::min(lo + static_cast<double>(i) * h0, hi));
    });

    struct Seg {
        double a, b;
        int depth;
    };
    std::vector<Seg> pending;
    for (std::size_t i = 0; i < M; ++i) {
        const double T = std::min(lo + static_cast<double>(i) * h0, hi);
        if (vals[i] <= 0.0)
            throw MonotonicityError("rootsolve mode: F_K' <= 0 detected at T = " + fmt_T(T), T);
        if (vals[i] <= lips * h0 / 2.0 && i + 1 < M)
            pending.push_back({T, std::min(T + h0, hi), 0});
    }
    while (!pending.empty()) {
        Seg s = pending.back();
        pending.pop_back();
        const double mid = 0.5 * (s.a + s.b);
        const double v = fprime(mid);
        if (v <= 0.0)
            throw MonotonicityError("rootsolve mode: F_K' <= 0 detected at T = " + fmt_T(mid), mid);
        const double q = lips * (s.b - s.a) / 4.0;
        if (v > q && fprime(s.a) > q && fprime(s.b) > q) continue;
        if (s.depth > 48)
            throw MonotonicityError(
                "rootsolve mode: cannot certify F_K' > 0 near T = " + fmt_T(mid), mid);
        pending.push_back({s.a, mid, s.depth + 1});
        pending.push_back({mid, s.b, s.depth + 1});
    }
}

}  // namespace

ZeroSet build_zero_set(const SeriesContext& ctx, int N, ZeroMode mode, Exec exec) {
    if (N < 1) throw std::invalid_argument("build_zero_set: N must be >= 1");
    ZeroSet zs{N, {}, {}, {}, mode, ctx};
    zs.gamma0.resize(static_cast<std::size_t>(N));
    zs.delta.resize(static_cast<std::size_t>(N));
    zs.gamma.resize(static_cast<std::size_t>(N));

    for_each_index(N, exec, [&](std::size_t i) {
        zs.gamma0[i] = invert_n_main(static_cast<double>(i + 1));
    });

    if (mode == ZeroMode::linearized || ctx.c == 0.0) {
        for_each_index(N, exec, [&](std::size_t i) {
            const double e = eval_E(ctx, zs.gamma0[i], ctx.table.K);
            zs.delta[i] = -ctx.c * e / n_main_prime(zs.gamma0[i]);
            zs.gamma[i] = zs.gamma0[i] + zs.delta[i];
        });
        return zs;
    }

    // rootsolve: two-tier monotonicity validation, then per-n safeguarded Newton.
    const double T0 = 0.95 * zs.gamma0.front();
    const double T1 = zs.gamma0.back() + 4.0 / n_main_prime(zs.gamma0.back());
    const double thresh = monotonicity_threshold(ctx.table, T0);
    if (ctx.c >= thresh) certify_monotone(ctx, T0, T1, exec);

    const int K = ctx.table.K;
    for_each_index(N, exec, [&](std::size_t i) {
        const double n = static_cast<double>(i + 1);
        const double g0 = zs.gamma0[i];
        const double spacing = 1.0 / n_main_prime(g0);
        auto F = [&](double T) { return n_main(T) + ctx.c * eval_E(ctx, T, K) - n; };

        double lo = (i == 0) ? std::max(T0, kTwoPi * std::numbers::e) : g0 - 1.2 * spacing;
        double hi = g0 + 1.2 * spacing;
        while (F(lo) > 0.0) lo -= 0.5 * spacing;
        while (F(hi) < 0.0) hi += 0.5 * spacing;

        double T = g0;
        for (int it = 0; it < 60; ++it) {
            const double f = F(T);
            if (std::abs(f) < 1e-11) break;
            if (f > 0.0)
                hi = T;
            else
                lo = T;
            const double fp = n_main_prime(T) + ctx.c * eval_E_prime(ctx, T, K);
            double Tn = (fp > 0.0) ? T - f / fp : 0.5 * (lo + hi);
            if (!(Tn > lo) || !(Tn < hi)) Tn = 0.5 * (lo + hi);
            if (Tn == T) break;
            T = Tn;
        }
        zs.gamma[i] = T;
        zs.delta[i] = T - g0;
    });
    return zs;
}

}  // namespace xic
