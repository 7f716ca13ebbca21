#include "xic/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "xic/exec.hpp"

namespace xic {

namespace {

void check_K(const PrimeTable& t, int K_used, const char* who) {
    if (K_used < 1 || K_used > t.K)
        throw std::invalid_argument(std::string(who) + ": K_used must lie in [1, table.K]");
}

}  // namespace

SeriesContext::SeriesContext(PrimeTable t, double c_) : table(std::move(t)), c(c_) {
    if (c < 0.0) throw std::invalid_argument("SeriesContext: c must be >= 0");
}

SeriesValue eval_D(const SeriesContext& ctx, Complex s, int K_used, Summation method) {
    const PrimeTable& t = ctx.table;
    check_K(t, K_used, "eval_D");
    const double sigma = s.real();
    const double tim = s.imag();
    if (!(sigma > 0.0)) throw std::domain_error("eval_D: requires Re(s) > 0");

    if (method == Summation::automatic)
        method = (sigma > 1.0) ? Summation::direct : Summation::abel;

    KahanComplexSum acc;
    if (method == Summation::direct) {
        for (int k = 0; k < K_used; ++k) {
            const double r = std::exp(-sigma * t.omega[k]);
            const double arg = tim * t.omega[k] + t.phi[k];
            acc.add({r * std::cos(arg), -r * std::sin(arg)});
        }
    } else {
        // Summation by parts: sum c_k a_k = G_K a_K + sum_J G_J (a_J - a_{J+1}),
        // with G_J = sum_{k<=J} e^{-ik theta} in closed form.
        const Complex q = std::polar(1.0, -t.theta);
        const Complex geom_den = 1.0 - q;
        auto G = [&](int J) {
            return q * (1.0 - std::polar(1.0, -t.theta * J)) / geom_den;
        };
        auto a = [&](int k) {  // alpha_k^{-s}, 0-based k
            const double r = std::exp(-sigma * t.omega[k]);
            const double arg = tim * t.omega[k];
            return Complex{r * std::cos(arg), -r * std::sin(arg)};
        };
        Complex ak = a(0);
        for (int k = 0; k < K_used - 1; ++k) {
            Complex anext = a(k + 1);
            acc.add(G(k + 1) * (ak - anext));
            ak = anext;
        }
        acc.add(G(K_used) * ak);
    }

    const double aK = t.alpha[K_used - 1];
    double tail;
    if (sigma > 1.0) {
        // integral comparison against prime density du / log u
        tail = std::pow(aK, 1.0 - sigma) / ((sigma - 1.0) * std::log(aK));
    } else {
        tail = abel_constant(t.theta) * std::pow(aK, -sigma) * (1.0 + std::abs(s) / sigma);
    }
    return {acc.value(), tail};
}

RealSeriesValue eval_P(const PrimeTable& table, double sigma, int K_used) {
    check_K(table, K_used, "eval_P");
    if (!(sigma > 1.0)) throw std::domain_error("eval_P: requires sigma > 1 (divergent otherwise)");
    KahanSum acc;
    for (int k = 0; k < K_used; ++k)
        acc.add(std::pow(static_cast<double>(table.p[k]), -sigma));
    const double pK = static_cast<double>(table.p[K_used - 1]);
    const double tail = std::pow(pK, 1.0 - sigma) / ((sigma - 1.0) * std::log(pK));
    return {acc.value(), tail};
}

double eval_E(const SeriesContext& ctx, double T, int K_used) {
    const PrimeTable& t = ctx.table;
    check_K(t, K_used, "eval_E");
    KahanSum acc;
    for (int k = 0; k < K_used; ++k)
        acc.add(std::sin(T * t.omega[k] + t.phi[k]) / std::sqrt(t.alpha[k]));
    return -acc.value() / kPi;
}

double eval_E(const SeriesContext& ctx, double T) { return eval_E(ctx, T, ctx.table.K); }

double eval_E_prime(const SeriesContext& ctx, double T, int K_used) {
    const PrimeTable& t = ctx.table;
    check_K(t, K_used, "eval_E_prime");
    KahanSum acc;
    for (int k = 0; k < K_used; ++k)
        acc.add(t.omega[k] * std::cos(T * t.omega[k] + t.phi[k]) / std::sqrt(t.alpha[k]));
    return -acc.value() / kPi;
}

void eval_E_many(const SeriesContext& ctx, std::span<const double> T, std::span<double> out,
                 int K_used, Exec exec) {
    check_K(ctx.table, K_used, "eval_E_many");
    if (T.size() != out.size()) throw std::invalid_argument("eval_E_many: size mismatch");
    for_each_index(static_cast<std::ptrdiff_t>(T.size()), exec,
                   [&](std::size_t i) { out[i] = eval_E(ctx, T[i], K_used); });
}

double tail_bound_E(const PrimeTable& table, int K_used, double T_abs) {
    check_K(table, K_used, "tail_bound_E");
    const double c_theta = abel_constant(table.theta);
    const double var = 2.0 + 2.0 * std::sqrt(2.0) * std::abs(T_abs);
    return (2.0 * c_theta / kPi) * var / std::sqrt(table.alpha[K_used - 1]);
}

Report b2_norm_check(const SeriesContext& ctx, double sigma, double T_max, double dt, Exec exec) {
    if (!(sigma > 0.5)) throw std::domain_error("b2_norm_check: requires sigma > 1/2");
    if (!(dt > 0.0) || !(T_max > 0.0))
        throw std::invalid_argument("b2_norm_check: T_max and dt must be positive");
    const PrimeTable& t = ctx.table;
    const int K = t.K;

    const auto M = static_cast<std::size_t>(T_max / dt) + 1;
    std::vector<double> sq(M);
    for_each_index(static_cast<std::ptrdiff_t>(M), exec, [&](std::size_t i) {
        const double tt = static_cast<double>(i) * dt;
        KahanSum re, im;
        for (int k = 0; k < K; ++k) {
            const double r = std::exp(-sigma * t.omega[k]);
            const double arg = tt * t.omega[k] + t.phi[k];
            re.add(r * std::cos(arg));
            im.add(-r * std::sin(arg));
        }
        const double x = re.value(), y = im.value();
        sq[i] = x * x + y * y;
    });
    KahanSum mean_acc;
    for (double v : sq) mean_acc.add(v);
    const double empirical = mean_acc.value() / static_cast<double>(M);

    KahanSum theo_acc;
    for (int k = 0; k < K; ++k) theo_acc.add(std::pow(t.alpha[k], -2.0 * sigma));
    const double theoretical = theo_acc.value();

    Report r;
    r.name = "b2_norm_check";
    r.columns = {"sigma", "T_max", "dt", "empirical_mean_sq", "theoretical", "ratio"};
    r.add_row({sigma, T_max, dt, empirical, theoretical, empirical / theoretical});
    r.summary = {{"sigma", sigma},
                 {"empirical_mean_sq", empirical},
                 {"theoretical", theoretical},
                 {"ratio", empirical / theoretical}};
    return r;
}

}  // namespace xic
