#pragma once

#include "conecorr/cone.hpp"
#include "conecorr/sweep.hpp"

namespace conecorr {

// Norm on n-by-n matrices induced by a cone basis and an ambient norm:
//   |A| = sup { |sum_i (sum_j w_j a_ij) e_i| : sum_j w_j e_j in C, unit norm }.
// Reduced to the weight simplex by positive homogeneity and computed by the
// shared grid sweep with one refinement pass.
SupResult matrix_cone_norm(const Eigen::MatrixXd& a, const Cone& cone, const NormSpec& ambient,
                           int resolution, bool allow_parallel = true);

namespace detail {
double cone_induced_norm_value(const NormSpec& spec, const Point& v);
}

}  // namespace conecorr
