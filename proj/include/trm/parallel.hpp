#pragma once

#include <cstddef>

#ifdef TRM_HAVE_OPENMP
#include <omp.h>
#endif

namespace trm {

/// Execution policy for the batch kernels. `serial` is the reference path;
/// both paths evaluate the same per-item function and write into indexed
/// slots, so their outputs are identical.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef TRM_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Calls `body(i)` for every i in [0, n). Iterations must be independent.
template <typename Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
#ifdef TRM_HAVE_OPENMP
  if (exec == Exec::parallel && n > 1) {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < count; ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < n; ++i) {
    body(i);
  }
}

}  // namespace trm
