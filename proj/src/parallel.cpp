#include "fsurg/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsurg {

int effective_thread_count() noexcept {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("FAREY_SURGERY_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n)
            n = cap;
    }
    return n;
#else
    return 1;
#endif
}

}  // namespace fsurg
