#pragma once

// Thread budget shared by every OpenMP kernel. ENTROCONE_THREADS caps
// parallelism; unset or 0 means "whatever OpenMP picks".

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace entrocone {

inline int thread_budget() {
#ifdef _OPENMP
    if (const char* env = std::getenv("ENTROCONE_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace entrocone
