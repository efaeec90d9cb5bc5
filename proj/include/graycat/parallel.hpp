#pragma once

#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graycat {

// Data-parallel loop over [0, n). fn must be safe to call concurrently.
inline void parallel_for(long long n, const std::function<void(long long)>& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) fn(i);
#else
    for (long long i = 0; i < n; ++i) fn(i);
#endif
}

// Serial reference implementation, kept for testing and benchmarking against
// the parallel kernel.
inline void serial_for(long long n, const std::function<void(long long)>& fn) {
    for (long long i = 0; i < n; ++i) fn(i);
}

inline bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace graycat
