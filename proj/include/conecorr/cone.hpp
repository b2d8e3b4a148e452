#pragma once

#include "conecorr/types.hpp"

namespace conecorr {

using ConeCoords = Eigen::VectorXd;

// Coordinate solves either enforce cone membership (weights >= -tol_geom,
// clamped to zero) or accept any point of span(basis) = C - C, which the
// embedding construction needs for differences of cone points.
enum class CoordMode { membership, span_only };

// Finitely generated convex cone: all nonnegative combinations of a linearly
// independent basis e_1..e_n in R^m, m >= n. Owns the factored linear system
// behind the coordinate isomorphism. Immutable after construction.
class Cone {
 public:
  explicit Cone(std::vector<Point> basis);

  int n() const { return static_cast<int>(basis_.cols()); }
  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  const std::vector<Point>& basis() const { return basis_points_; }
  const Eigen::MatrixXd& basis_matrix() const { return basis_; }
  double smallest_singular_value() const { return sigma_min_; }

  // the unique weights with x = sum_j lambda_j e_j
  ConeCoords coords(const Point& x, CoordMode mode = CoordMode::membership) const;
  Point from_coords(const ConeCoords& lambdas) const;
  bool contains(const Point& x, double tol = tol_geom) const;

  // Simplex grid over the weights, each point rescaled to unit ambient norm;
  // includes all normalized basis directions.
  std::vector<Point> unit_sphere_sample(const NormSpec& norm, int resolution) const;

 private:
  Eigen::MatrixXd basis_;  // m x n, columns are the basis
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
  double sigma_min_ = 0.0;
  std::vector<Point> basis_points_;
};

using ConePtr = std::shared_ptr<const Cone>;

Cone make_cone(std::vector<Point> basis);
ConePtr make_cone_ptr(std::vector<Point> basis);
ConePtr standard_cone(int n);  // nonnegative orthant of R^n

}  // namespace conecorr
