#pragma once

#include <span>

#include "xic/common.hpp"
#include "xic/report.hpp"
#include "xic/zeros.hpp"

namespace xic {

// zeta(s) by Euler-Maclaurin: sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 +
// Bernoulli corrections through B8, N = terms.  Requires Re(s) > 0, s != 1.
// Accurate to ~1e-9 relative on the strip sigma in [0.5, 2.5], |t| <= 400
// with terms >= max(50, 2|t|).
Complex zeta_em(Complex s, int terms);

// L(s, chi_4) for the nontrivial character mod 4 (pattern 1, 0, -1, 0):
// the two progressions 4m+1, 4m+3 summed with the same Euler-Maclaurin
// machinery.  Entire; requires Re(s) > 0 for the scheme used.
Complex l_chi4_em(Complex s, int terms);

// Aligned value-distribution tracks of log(Xi_c/Xi_0), log zeta and
// log L(., chi_4) on a common t grid for each sigma, with per-track RMS
// summaries.  `main` holds the three canonical tracks; `rescaled` holds the
// ratio track scaled by RMS(log zeta)/RMS(log ratio) per sigma.
// Im parts of the zeta/L tracks are unwrapped along t (grid step <= 0.05
// keeps 2*pi jumps detectable); points where |zeta| < 1e-8 are skipped and
// counted.
struct ValueDistResult {
    Report main;
    Report rescaled;
};

ValueDistResult value_distribution(const ZeroSet& zs, std::span<const double> sigmas, double t0,
                                   double t1, double dt, Exec exec = Exec::openmp);

}  // namespace xic
