// Independent brute-force oracles for the randomized suites. These stay
// deliberately naive (exhaustive simplices, dense weight grids) and share no
// code with the solvers they check.
#pragma once

#include <functional>
#include <vector>

#include "conecorr/types.hpp"

namespace oracles {

using conecorr::CompactSet;
using conecorr::NormSpec;
using conecorr::Point;

// all weight vectors w >= 0, sum w = 1, on a grid with `steps` intervals
inline void weight_grid(int parts, int steps,
                        const std::function<void(const std::vector<double>&)>& visit) {
  std::vector<int> counts(static_cast<std::size_t>(parts), 0);
  std::vector<double> w(static_cast<std::size_t>(parts), 0.0);
  const std::function<void(int, int)> rec = [&](int part, int remaining) {
    if (part == parts - 1) {
      counts[static_cast<std::size_t>(part)] = remaining;
      for (int i = 0; i < parts; ++i)
        w[static_cast<std::size_t>(i)] =
            static_cast<double>(counts[static_cast<std::size_t>(i)]) / steps;
      visit(w);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      counts[static_cast<std::size_t>(part)] = k;
      rec(part + 1, remaining - k);
    }
  };
  rec(0, steps);
}

inline Point combine(const std::vector<Point>& pts, const std::vector<double>& w) {
  Point x = Point::Zero(pts.front().size());
  for (std::size_t i = 0; i < pts.size(); ++i) x += w[i] * pts[i];
  return x;
}

// p in conv(pts)? Caratheodory: some affinely solved subset of size <= d+1
// reproduces p with nonnegative weights.
bool in_hull(const Point& p, const std::vector<Point>& pts, double tol = 1e-7);

// dense-grid approximation of sup_{a in A} inf_{b in B} |a - b|
double excess_by_sampling(const CompactSet& a, const CompactSet& b, const NormSpec& norm,
                          int steps);

// dense-grid approximation of sup over the hull of the norm
double set_norm_by_sampling(const CompactSet& a, const NormSpec& norm, int steps);

// dense-grid approximation of inf over the hull of |x - p|
double distance_by_sampling(const Point& p, const CompactSet& b, const NormSpec& norm, int steps);

}  // namespace oracles
