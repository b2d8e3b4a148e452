#pragma once

#include "conecorr/types.hpp"

namespace conecorr::detail {

// Wolfe's nearest-point algorithm: the point of conv(pts) closest to the
// origin in the euclidean norm. Finitely convergent on these small, dense
// instances; eps is the relative duality-gap cutoff.
Point min_norm_point(const std::vector<Point>& pts, double eps = 1e-13);

// min c.z subject to A z = b, z >= 0 (dense two-phase simplex, Bland's
// rule). Throws Error on infeasible or unbounded problems.
double solve_lp(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::VectorXd c);

// Distance from p to conv(pts) in the coord-1 or coord-inf norm, posed as a
// linear program over convex weights.
double lp_distance_to_hull(const Point& p, const std::vector<Point>& pts, bool inf_norm);

}  // namespace conecorr::detail
