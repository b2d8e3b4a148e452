#include "conecorr/parallel.hpp"

#include <atomic>

namespace conecorr::par {

namespace {
std::atomic<bool> g_enabled{true};
}

bool openmp_available() {
#ifdef CONECORR_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

bool enabled() { return openmp_available() && g_enabled.load(std::memory_order_relaxed); }

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

int thread_count() {
#ifdef CONECORR_HAVE_OPENMP
  return enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

}  // namespace conecorr::par
