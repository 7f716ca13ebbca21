#pragma once

#include <span>

#include "xic/evaluator.hpp"
#include "xic/report.hpp"
#include "xic/series.hpp"
#include "xic/zeros.hpp"

namespace xic {

// Re log(Xi_c/Xi_0)(sigma+it) against the finite cosine sum
// -c sum_k alpha_k^{-sigma} cos(omega_k t + phi_k) over a t grid.
// Grid points within 0.05 of any gamma_n or gamma0_n are skipped and
// counted.  The quad_term column is the directly computable quadratic
// Taylor diagnostic sum_n (delta_n^2/2) |f''(gamma0_n)|.
// Requires sigma > 1/2 and the grid inside [20, 0.9 * gamma0_N].
Report spectral_residual(const ZeroSet& zs, double sigma, std::span<const double> t_grid,
                         Exec exec = Exec::openmp);

// Empirical (1/N) sum_{n<=N} E_K(gamma0_n)^2 against the equidistribution
// prediction (1/(2 pi^2)) sum_{k<=K} alpha_k^{-1}, for each N in N_list.
Report weyl_mean_square(const ZeroSet& zs, std::span<const int> N_list,
                        Exec exec = Exec::openmp);

// Dyadic verification of sum_n E(gamma0_n)^2/n^2 < infinity: per block
// I_j = [2^j, 2^{j+1}) computes S_j exactly (E truncated at K_{j_max} =
// ceil(2^{1.1 j_max})), the large-sieve HEAD bound and the Abel TAIL bound,
// and checks S_j <= 2 (HEAD_j + TAIL_j).  Prime table and regular zeros are
// extended on demand; j_max > 20 is rejected as a capacity error.
Report lin_check(const ZeroSet& zs, int j_max, Exec exec = Exec::openmp);

// Unfolded zero statistics: RMS of the counting error N_main(gamma_n) - n,
// std of unfolded spacings, and number variance Sigma^2(L) over 2000
// uniformly spaced (overlapping) windows per L.
Report zero_statistics(const ZeroSet& zs, std::span<const double> L_list,
                       Exec exec = Exec::openmp);

// max_n |E_K(gamma0_n)| with the running-max curve and the sqrt(log log n)
// comparison column.
Report pointwise_E_bound(const ZeroSet& zs, Exec exec = Exec::openmp);

// Grid search (step dt, local ternary refinement) for
// argmax_t sum_{k<=m} alpha_k^{-sigma} (-cos(omega_k t + phi_k)),
// tabulated for m = 1..n_primes against the ideal ceiling
// sum_{k<=m} alpha_k^{-sigma}.  Requires n_primes <= 8 and sigma >= 1.
Report phase_alignment_search(const SeriesContext& ctx, int n_primes, double sigma,
                              double t_max, double dt, Exec exec = Exec::openmp);

}  // namespace xic
