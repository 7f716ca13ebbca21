#pragma once

#include <span>

#include "xic/common.hpp"
#include "xic/primes.hpp"
#include "xic/report.hpp"

namespace xic {

// Prime table plus perturbation amplitude c.  c = 0 is the unperturbed
// degenerate configuration and is allowed; negative c is rejected.
struct SeriesContext {
    PrimeTable table;
    double c = 0.0;

    SeriesContext(PrimeTable t, double c_);
};

enum class Summation {
    automatic,  // direct for Re(s) > 1, Abel otherwise
    direct,
    abel,
};

// D(s) = sum_{k<=K_used} e^{-i k theta} alpha_k^{-s}.  Requires Re(s) > 0.
// Direct summation in the absolute-convergence region; summation by parts
// against the closed-form geometric sums G_J in the conditional strip
// 0 < Re(s) <= 1.  The tail channel holds an integral-comparison estimate
// (Re(s) > 1) or the Abel bound C_theta * alpha_K^{-sigma} * (1 + |s|/sigma).
SeriesValue eval_D(const SeriesContext& ctx, Complex s, int K_used,
                   Summation method = Summation::automatic);

// Prime zeta partial sum P_K(sigma) = sum_{k<=K_used} p_k^{-sigma} with an
// integral-comparison tail estimate.  Requires sigma > 1.  Uses the raw
// primes p_k, not the shifted nodes.
RealSeriesValue eval_P(const PrimeTable& table, double sigma, int K_used);

// E_K(T) = -(1/pi) sum_{k<=K_used} sin(T omega_k + phi_k) / sqrt(alpha_k).
// Equals (1/pi) Im D(1/2 + iT) at matched truncation.
double eval_E(const SeriesContext& ctx, double T, int K_used);
double eval_E(const SeriesContext& ctx, double T);

// dE/dT; used by the monotonicity certification of the rootsolve mode.
double eval_E_prime(const SeriesContext& ctx, double T, int K_used);

// Grid kernel: out[i] = E_{K_used}(T[i]).
void eval_E_many(const SeriesContext& ctx, std::span<const double> T,
                 std::span<double> out, int K_used, Exec exec);

// Rigorous Abel bound for |E - E_K| at height |T| <= T_abs:
//   (2 C_theta / pi) * (2 + 2 sqrt(2) |T|) * alpha_K^{-1/2}.
// The 2 sqrt(2) |T| term is the total variation of the oscillating
// amplitudes (Riemann-sum estimate of the frequency increments); the
// constant term covers the amplitude telescoping and the boundary.  Also
// dominates every partial tail |E_{K'} - E_K|, K' > K.
double tail_bound_E(const PrimeTable& table, int K_used, double T_abs);

// Empirical mean of |D(sigma+it)|^2 over t in [0, T_max] (step dt) against
// the theoretical Fourier energy sum_{k<=K} alpha_k^{-2 sigma}.
// Requires sigma > 1/2.
Report b2_norm_check(const SeriesContext& ctx, double sigma, double T_max,
                     double dt, Exec exec = Exec::openmp);

}  // namespace xic
