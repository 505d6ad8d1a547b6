#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace equibundle {

// Batch kernels run either through the serial reference path or the OpenMP
// path; tests compare the two, the bench tool times them.
enum class ExecMode { Serial, Parallel };

template <typename Fn>
void parallel_for(std::size_t n, ExecMode mode, Fn&& fn) {
    if (mode == ExecMode::Serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace equibundle
