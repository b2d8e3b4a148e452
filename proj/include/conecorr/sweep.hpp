#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "conecorr/types.hpp"

namespace conecorr {

// Result of a grid supremum: the refined maximum, the maximizing simplex
// weights, and a gap estimate (observed variation across the maximizer's
// grid cell plus the improvement found by refinement). The gap is the
// reported optimization tolerance of the sweep.
struct SupResult {
  double value = 0.0;
  std::vector<double> maximizer;
  double grid_gap = 0.0;
};

// Deterministic grid on the weight simplex {w >= 0, sum w = 1}: all integer
// compositions of (resolution - 1) into n parts, scaled, first coordinate
// decreasing. resolution is the number of grid values along an edge, so
// n = 1 collapses to the single weight {1} and resolution = 2 gives the
// corners only.
std::size_t simplex_grid_size(int n, int resolution);
std::vector<std::vector<double>> simplex_grid(int n, int resolution);

using SimplexObjective = std::function<double(const std::vector<double>&)>;

// sup of `objective` over the weight simplex: full grid sweep (parallel when
// enabled and allowed) followed by one refinement pass that hill-climbs
// along coordinate-pair transfers, halving the step 20 times starting from
// the grid spacing.
SupResult sup_over_simplex(int n, int resolution, const SimplexObjective& objective,
                           bool allow_parallel = true);

}  // namespace conecorr
