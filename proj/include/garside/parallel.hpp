#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace garside {

inline int worker_count() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs body(i) for i in [0, count). Under parallel execution the first
/// exception thrown by any iteration is rethrown after the loop.
template <typename Body>
void parallel_for(std::size_t count, bool parallel, Body&& body) {
#if defined(_OPENMP)
  if (parallel && count > 1) {
    std::exception_ptr error;
    std::mutex error_mutex;
    const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < total; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace garside
