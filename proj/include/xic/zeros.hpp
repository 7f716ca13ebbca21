#pragma once

#include <stdexcept>
#include <string>

#include "xic/common.hpp"
#include "xic/series.hpp"

namespace xic {

// Smooth counting function N_main(T) = (T/2pi) log(T/2pi) - T/2pi + 7/8.
// Requires T > 0.
double n_main(double T);

// N_main'(T) = log(T/2pi) / 2pi.  Requires T > 2pi (zero/negative below,
// and it is used as a divisor).
double n_main_prime(double T);

// The regular zero gamma_n^(0): the unique T > 2pi*e with N_main(T) = n.
// Safeguarded Newton; |N_main(result) - n| < 1e-10.  Accepts real n >= 1.
double invert_n_main(double n);

// Sup-norm bound on the admissible perturbation amplitude: F_K = N_main +
// c E_K is strictly increasing on [T0, inf) whenever
//   c < N_main'(T0) / ((1/pi) sum_{k<=K} omega_k alpha_k^{-1/2}).
// Requires T0 > 2pi.
double monotonicity_threshold(const PrimeTable& table, double T0);

enum class ZeroMode { linearized, rootsolve };

// Thrown when rootsolve mode detects (or cannot exclude) F_K' <= 0.
class MonotonicityError : public std::runtime_error {
  public:
    MonotonicityError(const std::string& msg, double T) : std::runtime_error(msg), T_(T) {}
    double offending_T() const { return T_; }

  private:
    double T_;
};

struct ZeroSet {
    int N = 0;
    std::vector<double> gamma0;  // N_main(gamma0[n-1]) = n
    std::vector<double> delta;
    std::vector<double> gamma;   // gamma0 + delta
    ZeroMode mode = ZeroMode::linearized;
    SeriesContext config;
};

// Linearized mode: delta_n = -c E_K(gamma0_n) / N_main'(gamma0_n).
// Rootsolve mode: gamma_n solves N_main(gamma) + c E_K(gamma) = n by
// safeguarded Newton (tolerance 1e-10, <= 60 iterations); the run is
// preceded by a monotonicity certification of F_K' on the covered range
// (sup-norm threshold first, direct derivative scan with a Lipschitz
// certificate if the threshold is exceeded).
ZeroSet build_zero_set(const SeriesContext& ctx, int N, ZeroMode mode,
                       Exec exec = Exec::openmp);

}  // namespace xic
