#include "qhal/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhal {

namespace {
std::atomic<int> g_cap{0};
}

int max_threads() {
    int cap = g_cap.load(std::memory_order_relaxed);
    if (cap > 0) return cap;
    if (const char* env = std::getenv("QHA_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_thread_cap(int cap) { g_cap.store(cap > 0 ? cap : 0, std::memory_order_relaxed); }

}  // namespace qhal
