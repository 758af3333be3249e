#pragma once

// OpenMP shims.  Index loops are deterministic: each index writes its own
// slot, so thread count never changes results.

#ifdef _OPENMP
#include <omp.h>
#endif

namespace squeezetrap {

inline int resolve_threads(int requested) {
#ifdef _OPENMP
  if (requested > 0) return requested;
  return omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

template <typename Fn>
void parallel_index(int n, int threads, Fn&& fn) {
  const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (int i = 0; i < n; ++i) fn(i);
#else
  (void)nt;
  for (int i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace squeezetrap
