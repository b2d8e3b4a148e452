#include "conecorr/matrix_norm.hpp"

#include <cmath>

namespace conecorr {

SupResult matrix_cone_norm(const Eigen::MatrixXd& a, const Cone& cone, const NormSpec& ambient,
                           int resolution, bool allow_parallel) {
  const int n = cone.n();
  if (a.rows() != n || a.cols() != n) throw Error("matrix_cone_norm: matrix size != cone basis size");
  if (resolution < 2) throw Error("matrix_cone_norm: resolution must be >= 2");
  if (ambient.kind == NormSpec::Kind::cone_induced)
    throw Error("matrix_cone_norm: ambient norm may not be cone_induced");

  const Eigen::MatrixXd& basis = cone.basis_matrix();
  const auto objective = [&](const std::vector<double>& w) {
    const Eigen::Map<const Eigen::VectorXd> lambdas(w.data(), n);
    const Point x = basis * lambdas;
    const Point image = basis * (a * lambdas);
    return norm_value(ambient, image) / norm_value(ambient, x);
  };
  return sup_over_simplex(n, resolution, objective, allow_parallel);
}

namespace detail {

double cone_induced_norm_value(const NormSpec& spec, const Point& v) {
  const Cone& cone = *spec.cone;
  const int n = cone.n();
  if (v.size() != static_cast<Eigen::Index>(n) * n)
    throw Error("cone-induced norm: vector length must be n*n");
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = v[i * n + j];
  // nested sweeps stay serial; callers parallelize the outer loop
  return matrix_cone_norm(a, cone, *spec.ambient, spec.resolution, false).value;
}

}  // namespace detail

}  // namespace conecorr
