#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace xic {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Value of a truncated series together with a bound (or estimate) for the
// dropped tail.  Every series evaluation in this library reports its
// truncation error through this channel.
struct SeriesValue {
    Complex value;
    double tail = 0.0;
};

struct RealSeriesValue {
    double value = 0.0;
    double tail = 0.0;
};

// Execution policy for grid kernels.  The serial path is the reference
// implementation; the OpenMP path must produce bit-identical results
// (kernels map into per-index slots, reductions are done serially).
enum class Exec { serial, openmp };

// Compensated (Kahan) accumulator.
class KahanSum {
  public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanComplexSum {
  public:
    void add(Complex z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    Complex value() const { return {re_.value(), im_.value()}; }

  private:
    KahanSum re_, im_;
};

// log(1+z) without cancellation for small |z|.
inline Complex clog1p(Complex z) {
    Complex u = 1.0 + z;
    if (u == Complex(1.0, 0.0)) return z;
    if (std::abs(z) < 0.5) return std::log(u) * (z / (u - 1.0));
    return std::log(u);
}

}  // namespace xic
