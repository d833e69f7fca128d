#include "hdrv/runtime.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hdrv {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() { return g_max_threads.load(); }

int effective_threads() {
    int cap = g_max_threads.load();
#ifdef _OPENMP
    int avail = omp_get_max_threads();
    if (cap <= 0 || cap > avail) return avail;
    return cap;
#else
    (void)cap;
    return 1;
#endif
}

} // namespace hdrv
