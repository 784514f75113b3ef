#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace powser {

// Serial is the reference schedule; Parallel distributes iterations over
// OpenMP threads. Kernels write to disjoint slots, so both schedules
// produce identical results (exact arithmetic, no reduction order issues).
enum class ExecMode { Serial, Parallel };

template <typename Fn>
void parallel_for(std::size_t count, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace powser
