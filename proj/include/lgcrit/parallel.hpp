#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lgcrit {

/// Threads available to parallel kernels when the caller passes 0 ("auto").
inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int resolve_threads(int requested) {
  if (requested <= 0) return hardware_threads();
  return requested;
}

/// Run body(i) for i in [0, n). With threads > 1 and OpenMP available the
/// iterations run in parallel; otherwise this is the serial reference loop.
/// Every kernel built on this must write only to slot i so both paths produce
/// identical results. Bodies must not throw (collect per-slot status instead).
template <class F>
inline void parallel_for(int n, int threads, F&& body) {
#ifdef _OPENMP
  if (threads > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)threads;
#endif
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace lgcrit
