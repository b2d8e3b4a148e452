#pragma once

#include <cstddef>
#include <limits>
#include <utility>

#ifdef CONECORR_HAVE_OPENMP
#include <omp.h>
#endif

// Grid sweeps reduce with max over an index range. The reduction keys on the
// pair (value desc, index asc), so ties break to the smallest index and the
// OpenMP path returns the same result as the serial reference regardless of
// thread count or scheduling. The serial versions are kept as the reference
// the tests and the benchmark compare against.

namespace conecorr::par {

struct MaxResult {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = 0;
};

bool openmp_available();
bool enabled();
void set_enabled(bool on);
int thread_count();

namespace detail {

inline bool better(double value, std::size_t index, const MaxResult& than) {
  return value > than.value || (value == than.value && index < than.index);
}

}  // namespace detail

template <class F>
MaxResult max_index_serial(std::size_t n, F&& f) {
  MaxResult best{-std::numeric_limits<double>::infinity(), n};
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f(i);
    if (detail::better(v, i, best)) best = MaxResult{v, i};
  }
  return best;
}

template <class F>
MaxResult max_index(std::size_t n, F&& f) {
#ifdef CONECORR_HAVE_OPENMP
  if (enabled() && n >= 2) {
    MaxResult best{-std::numeric_limits<double>::infinity(), n};
#pragma omp parallel
    {
      MaxResult local{-std::numeric_limits<double>::infinity(), n};
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const double v = f(static_cast<std::size_t>(i));
        if (detail::better(v, static_cast<std::size_t>(i), local))
          local = MaxResult{v, static_cast<std::size_t>(i)};
      }
#pragma omp critical(conecorr_max_index)
      {
        if (local.index < n && detail::better(local.value, local.index, best)) best = local;
      }
    }
    return best;
  }
#endif
  return max_index_serial(n, std::forward<F>(f));
}

template <class F>
void for_index_serial(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i) f(i);
}

// Independent per-index work writing results into caller-owned slots.
template <class F>
void for_index(std::size_t n, F&& f) {
#ifdef CONECORR_HAVE_OPENMP
  if (enabled() && n >= 2) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) f(static_cast<std::size_t>(i));
    return;
  }
#endif
  for_index_serial(n, std::forward<F>(f));
}

}  // namespace conecorr::par
