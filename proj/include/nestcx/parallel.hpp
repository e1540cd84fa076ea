#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nestcx {

/// Execution policy for the verification kernels. Both policies produce
/// identical results; par distributes independent iterations over OpenMP
/// threads and merges deterministically.
enum class Exec { seq, par };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs f(i) for i in [0, count). Iterations must be independent; callers
/// write into preallocated per-index slots so the merged result does not
/// depend on scheduling.
template <typename F>
void parallel_for(Exec exec, std::int64_t count, F&& f) {
#ifdef _OPENMP
  if (exec == Exec::par && count > 1) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; i++) f(i);
    return;
  }
#endif
  (void)exec;
  for (std::int64_t i = 0; i < count; i++) f(i);
}

}  // namespace nestcx
