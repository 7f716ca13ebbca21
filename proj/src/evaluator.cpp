#include "xic/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "xic/exec.hpp"

namespace xic {

namespace {

// Stirling-series log Gamma with a recurrence shift into Re(z) >= 12:
//   log Gamma(z) = (z - 1/2) log z - z + (1/2) log 2pi
//                  + sum_n B_{2n} / (2n (2n-1) z^{2n-1}),
// Bernoulli terms through B_14; the first dropped term is < 1e-15 relative
// once Re(z) >= 12.
constexpr double kStirling[] = {
    1.0 / 12.0,            // B2/(2*1)
    -1.0 / 360.0,          // B4/(4*3)
    1.0 / 1260.0,          // B6/(6*5)
    -1.0 / 1680.0,         // B8/(8*7)
    1.0 / 1188.0,          // B10/(10*9)
    -691.0 / 360360.0,     // B12/(12*11)
    7.0 / 1092.0,          // B14/(14*13)
};

Complex log_gamma_right(Complex z) {
    Complex shift{0.0, 0.0};
    while (z.real() < 12.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series{0.0, 0.0};
    Complex zpow = inv;
    for (double coeff : kStirling) {
        series += coeff * zpow;
        zpow *= inv2;
    }
    return shift + (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi) + series;
}

// Adaptive Simpson quadrature for complex integrands; returns the value and
// accumulates an error estimate.
template <class F>
Complex adaptive_simpson(F&& f, double a, double b, double tol, int depth, Complex fa, Complex fm,
                         Complex fb, double* err_acc) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Complex flm = f(lm), frm = f(rm);
    const Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const Complex delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        if (err_acc) *err_acc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, tol / 2.0, depth - 1, fa, flm, fm, err_acc) +
           adaptive_simpson(f, m, b, tol / 2.0, depth - 1, fm, frm, fb, err_acc);
}

template <class F>
Complex integrate(F&& f, double a, double b, double rel_tol, double scale_hint, double* err_acc) {
    const Complex fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double tol = rel_tol * std::max(scale_hint, 1.0);
    return adaptive_simpson(f, a, b, tol, 48, fa, fm, fb, err_acc);
}

double sup_E_bound(const PrimeTable& t) {
    KahanSum acc;
    for (int k = 0; k < t.K; ++k) acc.add(1.0 / std::sqrt(t.alpha[k]));
    return acc.value() / kPi;
}

}  // namespace

Complex log_gamma(Complex z) {
    if (z.real() > 0.0) return log_gamma_right(z);
    // Re(z) <= 0: reflection.  Not reached by the strip this library works
    // in, but kept total.  Overflow-safe via
    //   sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})   (Im z > 0).
    if (z.imag() == 0.0) {
        if (z.real() == std::floor(z.real()))
            throw std::domain_error("log_gamma: pole at non-positive integer");
        return std::log(Complex(kPi / std::sin(kPi * z.real()), 0.0)) -
               log_gamma(Complex(1.0 - z.real(), 0.0));
    }
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    const Complex q = std::exp(Complex(0.0, kTwoPi) * z);
    const Complex logsin = Complex(-std::log(2.0), kPi / 2.0) - Complex(0.0, kPi) * z + clog1p(-q);
    return std::log(kPi) - logsin - log_gamma(1.0 - z);
}

Complex log_gamma_pi(Complex s) {
    if (std::abs(s) < 1e-10 || std::abs(s - 1.0) < 1e-10)
        throw std::domain_error("log_gamma_pi: singular at s in {0, 1}");
    const Complex half = s / 2.0;
    if (half.real() <= 0.0 && std::abs(half.imag()) < 1e-10 &&
        std::abs(half.real() - std::round(half.real())) < 1e-10)
        throw std::domain_error("log_gamma_pi: Gamma pole at s/2 non-positive integer");
    return std::log(0.5) + std::log(s) + std::log(s - 1.0) - half * std::log(kPi) +
           log_gamma(half);
}

namespace {

void check_proximity(const ZeroSet& zs, Complex s) {
    if (std::abs(s.real() - 0.5) >= 1e-8) return;
    const double t = std::abs(s.imag());
    // gamma0 is sorted; gamma stays within max|delta| of it, so a small index
    // window around the gamma0 insertion point covers both sequences.
    auto it = std::lower_bound(zs.gamma0.begin(), zs.gamma0.end(), t);
    const auto idx = static_cast<std::size_t>(it - zs.gamma0.begin());
    const std::size_t lo = idx > 4 ? idx - 4 : 0;
    const std::size_t hi = std::min(zs.gamma0.size(), idx + 4);
    for (std::size_t j = lo; j < hi; ++j) {
        if (std::abs(zs.gamma0[j] - t) < 1e-8 || std::abs(zs.gamma[j] - t) < 1e-8)
            throw std::domain_error(
                "log_ratio_hadamard: within 1e-8 of a zero/pole on the critical line");
    }
}

Complex ratio_sum(const ZeroSet& zs, Complex s) {
    const Complex w2 = (s - 0.5) * (s - 0.5);
    KahanComplexSum acc;
    for (int i = 0; i < zs.N; ++i) {
        const double g0 = zs.gamma0[static_cast<std::size_t>(i)];
        const double g = zs.gamma[static_cast<std::size_t>(i)];
        const double d = zs.delta[static_cast<std::size_t>(i)];
        const Complex num = -w2 * d * (g0 + g);
        const Complex den = (g * g) * (g0 * g0 + w2);
        acc.add(clog1p(num / den));
    }
    return acc.value();
}

double ratio_tail(const ZeroSet& zs, Complex s) {
    const double gN = zs.gamma0.back();
    const double w2 = std::norm(s - 0.5);
    return zs.config.c * sup_E_bound(zs.config.table) * w2 / (gN * gN);
}

}  // namespace

SeriesValue log_ratio_hadamard(const ZeroSet& zs, Complex s) {
    check_proximity(zs, s);
    return {ratio_sum(zs, s), ratio_tail(zs, s)};
}

void log_ratio_hadamard_many(const ZeroSet& zs, std::span<const Complex> s,
                             std::span<Complex> out, std::span<double> tails, Exec exec) {
    if (s.size() != out.size() || s.size() != tails.size())
        throw std::invalid_argument("log_ratio_hadamard_many: size mismatch");
    for_each_index(static_cast<std::ptrdiff_t>(s.size()), exec, [&](std::size_t i) {
        check_proximity(zs, s[i]);
        out[i] = ratio_sum(zs, s[i]);
        tails[i] = ratio_tail(zs, s[i]);
    });
}

SeriesValue log_Z0(Complex s, const ZeroSet& zs) {
    if (!(s.real() >= 1.0)) throw std::domain_error("log_Z0: requires Re(s) >= 1");
    if (!(std::abs(s.imag()) >= 2.0)) throw std::domain_error("log_Z0: requires |Im(s)| >= 2");

    const Complex w2 = (s - 0.5) * (s - 0.5);
    KahanComplexSum acc;
    for (int i = 0; i < zs.N; ++i) {
        const double g0 = zs.gamma0[static_cast<std::size_t>(i)];
        acc.add(clog1p(w2 / (g0 * g0)));
    }

    // Euler-Maclaurin continuation of the sum over n > N:
    //   integral of log(1 + w^2/u^2) N'(u) du from gamma_N, minus g(N)/2,
    //   minus g'(N)/12.
    const double gN = zs.gamma0.back();
    const double U = 1e4 * (1.0 + std::abs(s.imag()));
    auto integrand = [&](double u) { return clog1p(w2 / (u * u)) * n_main_prime(u); };
    double quad_err = 0.0;
    const double scale = std::abs(w2) / gN * n_main_prime(gN);  // crude magnitude hint
    const Complex integral = integrate(integrand, gN, U, 1e-9, scale, &quad_err);

    const double lu = std::log(U / kTwoPi);
    const Complex w4 = w2 * w2;
    const Complex asym = (w2 / kTwoPi) * (lu + 1.0) / U - (w4 / (2.0 * kTwoPi)) * (lu / 3.0 + 1.0 / 9.0) / (U * U * U);
    const Complex gn = clog1p(w2 / (gN * gN));
    const Complex gp = (-2.0 * w2 / (gN * (gN * gN + w2))) / n_main_prime(gN);

    const Complex log_xi0 = acc.value() + integral + asym - gn / 2.0 - gp / 12.0;
    // dropped asymptote order ~ |w|^6 / U^5
    const double asym_err = std::pow(std::abs(s - 0.5), 6.0) / std::pow(U, 5.0) * (lu + 1.0);
    return {log_xi0 - log_gamma_pi(s), quad_err + asym_err};
}

SeriesValue log_Zc(Complex s, const ZeroSet& zs) {
    const SeriesValue z0 = log_Z0(s, zs);
    const SeriesValue lr = log_ratio_hadamard(zs, s);
    return {z0.value + lr.value, z0.tail + lr.tail};
}

EulerCoefficients euler_coefficients(const SeriesContext& ctx, int n_max) {
    if (n_max < 1) throw std::invalid_argument("euler_coefficients: n_max must be >= 1");
    EulerCoefficients ec;
    ec.n_max = n_max;
    ec.a.assign(static_cast<std::size_t>(n_max) + 1, Complex(0.0, 0.0));
    ec.a[1] = 1.0;

    const PrimeTable& t = ctx.table;
    for (int k = 0; k < t.K; ++k) {
        const auto pk = t.p[static_cast<std::size_t>(k)];
        if (pk > n_max) break;
        const Complex base = -ctx.c * std::polar(1.0, -t.phi[static_cast<std::size_t>(k)]);
        // snapshot holds the series over previous primes only, so every j with
        // snapshot[j] != 0 is coprime to pk
        const std::vector<Complex> snapshot = ec.a;
        Complex bpm = 1.0;  // base^m / m!
        std::int64_t pm = 1;
        for (int m = 1;; ++m) {
            if (pm > n_max / pk) break;
            pm *= pk;
            bpm *= base / static_cast<double>(m);
            for (std::int64_t j = 1; j * pm <= n_max; ++j) {
                const auto sj = snapshot[static_cast<std::size_t>(j)];
                if (sj != Complex(0.0, 0.0))
                    ec.a[static_cast<std::size_t>(j * pm)] += sj * bpm;
            }
        }
    }
    return ec;
}

}  // namespace xic
