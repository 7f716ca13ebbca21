// Timing comparison of the OpenMP kernels against their serial reference
// paths.  Results must agree bit-exactly; the suite checks that, this tool
// reports the speedups.

#include <chrono>
#include <cstdio>
#include <vector>

#include "xic/analysis.hpp"
#include "xic/evaluator.hpp"
#include "xic/series.hpp"
#include "xic/zeros.hpp"

using namespace xic;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double time_once(F&& f) {
    const auto a = Clock::now();
    f();
    return seconds(a, Clock::now());
}

void row(const char* name, double serial, double openmp) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, openmp, serial / openmp);
}

}  // namespace

int main() {
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

    const SeriesContext ctx(build_prime_table(80, 1.0, true), 0.05);

    {
        const SeriesContext big(build_prime_table(9411, 1.0, true), 0.05);
        std::vector<double> T(4096);
        for (std::size_t i = 0; i < T.size(); ++i) T[i] = 20.0 + 0.3 * static_cast<double>(i);
        std::vector<double> a(T.size()), b(T.size());
        const double ts = time_once([&] { eval_E_many(big, T, a, big.table.K, Exec::serial); });
        const double tp = time_once([&] { eval_E_many(big, T, b, big.table.K, Exec::openmp); });
        row("eval_E_many (K=9411)", ts, tp);
    }

    ZeroSet zs_serial{0, {}, {}, {}, ZeroMode::linearized, ctx};
    {
        const double ts =
            time_once([&] { zs_serial = build_zero_set(ctx, 2000, ZeroMode::linearized, Exec::serial); });
        ZeroSet zp{0, {}, {}, {}, ZeroMode::linearized, ctx};
        const double tp =
            time_once([&] { zp = build_zero_set(ctx, 2000, ZeroMode::linearized, Exec::openmp); });
        row("build_zero_set (N=2000)", ts, tp);
    }

    {
        std::vector<Complex> s(1500), o1(s.size()), o2(s.size());
        std::vector<double> tl(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            s[i] = Complex(1.5, 20.0 + static_cast<double>(i) * 0.8);
        const double ts =
            time_once([&] { log_ratio_hadamard_many(zs_serial, s, o1, tl, Exec::serial); });
        const double tp =
            time_once([&] { log_ratio_hadamard_many(zs_serial, s, o2, tl, Exec::openmp); });
        row("log_ratio grid (1500 pts)", ts, tp);
    }

    {
        const double ts = time_once([&] { b2_norm_check(ctx, 0.75, 500.0, 0.01, Exec::serial); });
        const double tp = time_once([&] { b2_norm_check(ctx, 0.75, 500.0, 0.01, Exec::openmp); });
        row("b2_norm_check (50k pts)", ts, tp);
    }

    {
        const double ts =
            time_once([&] { phase_alignment_search(ctx, 4, 1.0, 2e5, 0.05, Exec::serial); });
        const double tp =
            time_once([&] { phase_alignment_search(ctx, 4, 1.0, 2e5, 0.05, Exec::openmp); });
        row("alignment search (4e6 pts)", ts, tp);
    }

    return 0;
}
