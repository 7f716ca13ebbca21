#pragma once

#include <cstddef>

#include "xic/common.hpp"

namespace xic {

// Runs f(i) for i in [0, n).  With Exec::openmp the iterations are
// distributed statically over threads; f must only write to state owned by
// index i so both policies give identical results.
template <class F>
void for_each_index(std::ptrdiff_t n, Exec exec, F&& f) {
    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) f(static_cast<std::size_t>(i));
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) f(static_cast<std::size_t>(i));
    }
}

}  // namespace xic
