#pragma once

#include <cstdint>
#include <vector>

namespace xic {

// Primes p_1 < ... < p_K with the derived node/frequency/phase data used by
// every series in this library.  Immutable after construction.
//
// Nodes: alpha_k = p_k (exact mode) or alpha_k = p_k + theta (shifted mode).
// Frequencies: omega_k = log(alpha_k).  Phases: phi_k = k*theta.
struct PrimeTable {
    int K = 0;
    std::vector<std::int64_t> p;
    std::vector<double> alpha;
    std::vector<double> omega;
    std::vector<double> phi;
    double theta = 0.0;
    bool shifted = false;
};

// Deterministic sieve of Eratosthenes; throws std::invalid_argument for
// K < 1 or theta outside the open interval (0, 2*pi).
PrimeTable build_prime_table(int K, double theta, bool shifted);

// C_theta = 2/|1 - e^{-i theta}| = 1/sin(theta/2); bounds every partial sum
// of the coefficient sequence e^{-ik theta}.  Diverges at theta in {0, 2*pi}
// (rejected).
double abel_constant(double theta);

}  // namespace xic
