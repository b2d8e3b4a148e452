#include "conecorr/cone.hpp"

#include <cmath>

#include "conecorr/sweep.hpp"

namespace conecorr {

Cone::Cone(std::vector<Point> basis) {
  if (basis.empty()) throw Error("cone: empty basis");
  const int m = static_cast<int>(basis.front().size());
  const int n = static_cast<int>(basis.size());
  for (const Point& e : basis) {
    check_finite(e);
    if (e.size() != m) throw Error("cone: basis dimension mismatch");
  }
  if (m > max_dim) throw Error("cone: ambient dimension above " + std::to_string(max_dim));
  if (n > m) throw Error("cone: more basis vectors than ambient dimension");

  basis_.resize(m, n);
  for (int j = 0; j < n; ++j) basis_.col(j) = basis[static_cast<std::size_t>(j)];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis_);
  sigma_min_ = svd.singularValues().minCoeff();
  if (sigma_min_ <= tol_geom) throw Error("cone: basis is linearly dependent");

  qr_.compute(basis_);
  basis_points_ = std::move(basis);
}

ConeCoords Cone::coords(const Point& x, CoordMode mode) const {
  check_finite(x);
  if (x.size() != ambient_dim()) throw Error("coords: dimension mismatch");
  ConeCoords lambdas = qr_.solve(x);
  const double residual = (basis_ * lambdas - x).norm();
  if (residual > tol_geom * (1.0 + x.norm())) throw Error("coords: point outside span of basis");
  if (mode == CoordMode::membership) {
    for (int i = 0; i < lambdas.size(); ++i) {
      if (lambdas[i] < -tol_geom) throw Error("coords: point outside cone");
      if (lambdas[i] < 0.0) lambdas[i] = 0.0;
    }
  }
  return lambdas;
}

Point Cone::from_coords(const ConeCoords& lambdas) const {
  if (lambdas.size() != n()) throw Error("from_coords: weight count mismatch");
  return basis_ * lambdas;
}

bool Cone::contains(const Point& x, double tol) const {
  if (x.size() != ambient_dim()) return false;
  if (!x.allFinite()) return false;
  const ConeCoords lambdas = qr_.solve(x);
  if ((basis_ * lambdas - x).norm() > tol * (1.0 + x.norm())) return false;
  for (int i = 0; i < lambdas.size(); ++i)
    if (lambdas[i] < -tol) return false;
  return true;
}

std::vector<Point> Cone::unit_sphere_sample(const NormSpec& norm, int resolution) const {
  if (resolution < 2) throw Error("unit_sphere_sample: resolution must be >= 2");
  const auto grid = simplex_grid(n(), resolution);
  std::vector<Point> samples;
  samples.reserve(grid.size());
  for (const auto& w : grid) {
    Point x = basis_ * Eigen::Map<const Eigen::VectorXd>(w.data(), n());
    const double len = norm_value(norm, x);
    if (!(len > 0.0)) throw Error("unit_sphere_sample: degenerate sample");
    samples.push_back(x / len);
  }
  return samples;
}

Cone make_cone(std::vector<Point> basis) { return Cone(std::move(basis)); }

ConePtr make_cone_ptr(std::vector<Point> basis) {
  return std::make_shared<const Cone>(std::move(basis));
}

ConePtr standard_cone(int n) {
  std::vector<Point> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Point e = Point::Zero(n);
    e[j] = 1.0;
    basis.push_back(std::move(e));
  }
  return make_cone_ptr(std::move(basis));
}

}  // namespace conecorr
