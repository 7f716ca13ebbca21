#pragma once

#include <span>

#include "xic/common.hpp"
#include "xic/series.hpp"
#include "xic/zeros.hpp"

namespace xic {

// Principal-branch complex log-gamma, accurate to ~1e-13 relative for
// Re(z) > 0 (Stirling series through B_14 after a recurrence shift into
// Re(z) >= 12).  Analytic in the right half-plane, so values are continuous
// along vertical sweeps without explicit unwrapping.
Complex log_gamma(Complex z);

// log Gamma_pi(s) where Gamma_pi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2).
// Rejects the polynomial zeros s in {0, 1} and the Gamma poles.
Complex log_gamma_pi(Complex s);

// log(Xi_c/Xi_0)(s) = sum_n [log(1 + w^2/gamma_n^2) - log(1 + w^2/gamma0_n^2)],
// w = s - 1/2, summed as per-zero factor differences (never as a quotient of
// the two products).  Tail channel: c * A_K * |w|^2 / gamma_N^2 with
// A_K = (1/pi) sum alpha_k^{-1/2}, from |delta_n| <= c A_K / N_main' and
// integral comparison of the difference series.
// Throws std::domain_error within 1e-8 of a zero/pole on the critical line.
SeriesValue log_ratio_hadamard(const ZeroSet& zs, Complex s);

// Grid kernel; out/tails indexed like s.
void log_ratio_hadamard_many(const ZeroSet& zs, std::span<const Complex> s,
                             std::span<Complex> out, std::span<double> tails,
                             Exec exec);

// log Z_0(s) = log Xi_0(s) - log Gamma_pi(s), with
// log Xi_0 = sum_{n<=N} log(1 + w^2/gamma0_n^2) + Euler-Maclaurin
// continuation against N_main'(u) du from gamma0_N (adaptive quadrature to
// u = 1e4 (1+|t|), then the analytic asymptote).  Requires Re(s) >= 1,
// |Im(s)| >= 2.
SeriesValue log_Z0(Complex s, const ZeroSet& zs);

// log Z_c = log Z_0 + log(Xi_c/Xi_0).
SeriesValue log_Zc(Complex s, const ZeroSet& zs);

// Dirichlet coefficients of prod_{k<=K} exp(-c e^{-ik theta} p_k^{-s}),
// indexed by ordinary integers n (prime powers use the raw primes p_k:
// shifted nodes are not integer-indexed).  a_{p_k^m} = (-c e^{-ik theta})^m / m!,
// extended multiplicatively.
struct EulerCoefficients {
    int n_max = 0;
    std::vector<Complex> a;  // a[n] for n in [1, n_max]; a[0] unused

    const Complex& operator[](int n) const { return a[static_cast<std::size_t>(n)]; }
};

EulerCoefficients euler_coefficients(const SeriesContext& ctx, int n_max);

}  // namespace xic
