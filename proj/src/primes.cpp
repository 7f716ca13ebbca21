#include "xic/primes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "xic/common.hpp"

namespace xic {

namespace {

std::vector<std::int64_t> first_primes(int count) {
    // Over-allocated bound for the count-th prime: n (log n + log log n) + margin.
    double dc = static_cast<double>(count);
    std::size_t bound = 32;
    if (count > 5) {
        double ln = std::log(dc);
        bound = static_cast<std::size_t>(dc * (ln + std::log(ln)) * 1.1) + 64;
    }
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::int64_t> primes;
    primes.reserve(static_cast<std::size_t>(count));
    for (std::size_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::int64_t>(i));
        if (primes.size() == static_cast<std::size_t>(count)) break;
        for (std::size_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    if (primes.size() < static_cast<std::size_t>(count))
        throw std::logic_error("prime sieve bound too small");
    return primes;
}

}  // namespace

PrimeTable build_prime_table(int K, double theta, bool shifted) {
    if (K < 1) throw std::invalid_argument("build_prime_table: K must be >= 1");
    if (!(theta > 0.0) || !(theta < kTwoPi))
        throw std::invalid_argument("build_prime_table: theta must lie in (0, 2*pi)");

    PrimeTable t;
    t.K = K;
    t.theta = theta;
    t.shifted = shifted;
    t.p = first_primes(K);
    t.alpha.resize(static_cast<std::size_t>(K));
    t.omega.resize(static_cast<std::size_t>(K));
    t.phi.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        double a = static_cast<double>(t.p[static_cast<std::size_t>(k)]) + (shifted ? theta : 0.0);
        t.alpha[static_cast<std::size_t>(k)] = a;
        t.omega[static_cast<std::size_t>(k)] = std::log(a);
        // k+1 because phases are 1-based: phi_k = k*theta.
        t.phi[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * theta;
    }
    return t;
}

double abel_constant(double theta) {
    if (!(theta > 0.0) || !(theta < kTwoPi))
        throw std::invalid_argument("abel_constant: theta must lie in (0, 2*pi)");
    return 1.0 / std::sin(theta / 2.0);
}

}  // namespace xic
