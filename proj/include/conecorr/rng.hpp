#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "conecorr/types.hpp"

namespace conecorr {

// Deterministic generator for randomized suites. The uniform mapping is
// hand-rolled from the raw 64-bit stream so the same seed produces the same
// samples on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // integer in [0, n)
  std::size_t index(std::size_t n) {
    return n <= 1 ? 0 : static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
  }

  Point point_in_box(int dim, double lo, double hi) {
    Point p(dim);
    for (int i = 0; i < dim; ++i) p[i] = uniform(lo, hi);
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace conecorr
