#include "xic/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "xic/evaluator.hpp"
#include "xic/exec.hpp"

namespace xic {

namespace {

Complex cpow_neg(double base, Complex s) {  // base^{-s}, base > 0
    const double lb = std::log(base);
    const double r = std::exp(-s.real() * lb);
    const double arg = s.imag() * lb;
    return {r * std::cos(arg), -r * std::sin(arg)};
}

// Euler-Maclaurin tail of sum_{m>=M} (m+q)^{-s} about x = M+q, without the
// x^{1-s}/(s-1) term (handled by the callers); Bernoulli corrections
// through B8.
Complex em_tail_regular(Complex s, double q, int M) {
    const double x = static_cast<double>(M) + q;
    const Complex xms = cpow_neg(x, s);  // x^{-s}
    Complex out = xms / 2.0;
    Complex rising = s;  // s (s+1) ... accumulated
    out += rising * xms / (12.0 * x);
    rising *= (s + 1.0) * (s + 2.0);
    out -= rising * xms / (720.0 * x * x * x);
    rising *= (s + 3.0) * (s + 4.0);
    out += rising * xms / (30240.0 * std::pow(x, 5.0));
    rising *= (s + 5.0) * (s + 6.0);
    out -= rising * xms / (1209600.0 * std::pow(x, 7.0));
    return out;
}

// (x1^{1-s} - x2^{1-s}) / (s - 1), stable through the removable point s = 1.
Complex pole_pair(Complex s, double x1, double x2) {
    const Complex u = 1.0 - s;
    const double l1 = std::log(x1), l2 = std::log(x2);
    if (std::abs(u) < 1e-4) {
        // -(L1-L2) - u (L1^2-L2^2)/2 - u^2 (L1^3-L2^3)/6 - u^3 (L1^4-L2^4)/24
        Complex out = -(l1 - l2);
        out -= u * (l1 * l1 - l2 * l2) / 2.0;
        out -= u * u * (l1 * l1 * l1 - l2 * l2 * l2) / 6.0;
        out -= u * u * u * (l1 * l1 * l1 * l1 - l2 * l2 * l2 * l2) / 24.0;
        return out;
    }
    return (std::exp(u * l1) - std::exp(u * l2)) / (s - 1.0);
}

}  // namespace

Complex zeta_em(Complex s, int terms) {
    if (terms < 2) throw std::invalid_argument("zeta_em: terms must be >= 2");
    if (!(s.real() > 0.0)) throw std::domain_error("zeta_em: requires Re(s) > 0");
    if (std::abs(s - 1.0) < 1e-12) throw std::domain_error("zeta_em: pole at s = 1");
    KahanComplexSum acc;
    for (int n = 1; n < terms; ++n) acc.add(cpow_neg(static_cast<double>(n), s));
    const double N = static_cast<double>(terms);
    const Complex pole = cpow_neg(N, s) * N / (s - 1.0);  // N^{1-s}/(s-1)
    return acc.value() + pole + em_tail_regular(s, 0.0, terms);
}

Complex l_chi4_em(Complex s, int terms) {
    if (terms < 2) throw std::invalid_argument("l_chi4_em: terms must be >= 2");
    if (!(s.real() > 0.0)) throw std::domain_error("l_chi4_em: requires Re(s) > 0");
    KahanComplexSum acc;
    for (int m = 0; m < terms; ++m) {
        acc.add(cpow_neg(4.0 * m + 1.0, s));
        acc.add(-cpow_neg(4.0 * m + 3.0, s));
    }
    const Complex four = cpow_neg(4.0, s);  // 4^{-s}
    const double M = static_cast<double>(terms);
    const Complex tails = pole_pair(s, M + 0.25, M + 0.75) + em_tail_regular(s, 0.25, terms) -
                          em_tail_regular(s, 0.75, terms);
    return acc.value() + four * tails;
}

namespace {

// 2*pi-jump removal along a t sweep; `valid` marks usable points.
void unwrap_inplace(std::vector<Complex>& v, const std::vector<char>& valid) {
    double offset = 0.0;
    double prev = 0.0;
    bool have_prev = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!valid[i]) continue;
        double im = v[i].imag() + offset;
        if (have_prev) {
            const double jump = std::round((im - prev) / kTwoPi);
            if (jump != 0.0) {
                offset -= jump * kTwoPi;
                im -= jump * kTwoPi;
            }
        }
        v[i] = {v[i].real(), im};
        prev = im;
        have_prev = true;
    }
}

struct TrackStats {
    double rms, rms_re, rms_im;
};

TrackStats stats_of(const std::vector<Complex>& v, const std::vector<char>& valid) {
    KahanSum s2, sr, si;
    std::size_t n = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!valid[i]) continue;
        s2.add(std::norm(v[i]));
        sr.add(v[i].real() * v[i].real());
        si.add(v[i].imag() * v[i].imag());
        ++n;
    }
    const double dn = static_cast<double>(std::max<std::size_t>(n, 1));
    return {std::sqrt(s2.value() / dn), std::sqrt(sr.value() / dn), std::sqrt(si.value() / dn)};
}

}  // namespace

ValueDistResult value_distribution(const ZeroSet& zs, std::span<const double> sigmas, double t0,
                                   double t1, double dt, Exec exec) {
    if (!(dt > 0.0) || !(t1 > t0)) throw std::invalid_argument("value_distribution: bad t range");
    const double t_hi = 0.9 * zs.gamma0.back();
    if (!(t1 <= t_hi))
        throw std::invalid_argument("value_distribution: t range leaves zero-set reliability");

    const auto M = static_cast<std::size_t>((t1 - t0) / dt) + 1;
    std::vector<double> ts(M);
    for (std::size_t i = 0; i < M; ++i) ts[i] = t0 + static_cast<double>(i) * dt;

    ValueDistResult out;
    out.main.name = "value_distribution";
    out.main.columns = {"sigma", "t", "which", "re_log", "im_log"};
    out.rescaled.name = "value_distribution_rescaled";
    out.rescaled.columns = out.main.columns;

    nlohmann::json rms_summary = nlohmann::json::object();
    int skipped_total = 0;

    for (double sigma : sigmas) {
        std::vector<Complex> ratio(M), zeta(M), lchi(M);
        std::vector<double> tails(M);
        std::vector<char> valid(M, 1);
        std::vector<Complex> svec(M);
        for (std::size_t i = 0; i < M; ++i) svec[i] = Complex(sigma, ts[i]);
        log_ratio_hadamard_many(zs, svec, ratio, tails, exec);

        for_each_index(static_cast<std::ptrdiff_t>(M), exec, [&](std::size_t i) {
            const int terms = std::max(50, static_cast<int>(std::ceil(2.0 * std::abs(ts[i]))));
            const Complex z = zeta_em(svec[i], terms);
            if (std::abs(z) < 1e-8) {
                valid[i] = 0;
                return;
            }
            zeta[i] = std::log(z);
            lchi[i] = std::log(l_chi4_em(svec[i], terms));
        });
        unwrap_inplace(zeta, valid);
        unwrap_inplace(lchi, valid);

        const TrackStats sr = stats_of(ratio, valid);
        const TrackStats sz = stats_of(zeta, valid);
        const TrackStats sl = stats_of(lchi, valid);
        const double rescale = sr.rms > 0.0 ? sz.rms / sr.rms : 0.0;

        for (std::size_t i = 0; i < M; ++i) {
            if (!valid[i]) {
                ++skipped_total;
                continue;
            }
            out.main.add_row({sigma, ts[i], std::string("ratio"), ratio[i].real(), ratio[i].imag()});
            out.main.add_row({sigma, ts[i], std::string("zeta"), zeta[i].real(), zeta[i].imag()});
            out.main.add_row({sigma, ts[i], std::string("L_chi4"), lchi[i].real(), lchi[i].imag()});
            out.rescaled.add_row({sigma, ts[i], std::string("ratio_rescaled"),
                                  rescale * ratio[i].real(), rescale * ratio[i].imag()});
        }
        const std::string key = format_double(sigma);
        rms_summary[key] = {{"rms_ratio", sr.rms},     {"rms_ratio_re", sr.rms_re},
                            {"rms_ratio_im", sr.rms_im}, {"rms_zeta", sz.rms},
                            {"rms_L_chi4", sl.rms},      {"rescale_factor", rescale}};
    }

    nlohmann::json cfg = {{"c", zs.config.c},
                          {"theta", zs.config.table.theta},
                          {"K", zs.config.table.K},
                          {"shifted", zs.config.table.shifted},
                          {"t0", t0},
                          {"t1", t1},
                          {"dt", dt}};
    out.main.config = cfg;
    out.rescaled.config = cfg;
    out.main.summary = {{"rms", rms_summary}, {"skipped", skipped_total}};
    out.rescaled.summary = out.main.summary;
    return out;
}

}  // namespace xic
