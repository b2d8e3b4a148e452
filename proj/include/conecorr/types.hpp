#pragma once

#include <Eigen/Dense>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace conecorr {

using Point = Eigen::VectorXd;

// Absolute tolerance for exact-at-tolerance geometry: hull reduction,
// membership tests and set equality all use this. Optimization error of
// grid sweeps is reported separately (SupResult::grid_gap).
inline constexpr double tol_geom = 1e-9;

// Ambient dimensions are small by design; the convex-hull and
// distance-to-polytope procedures reject anything larger.
inline constexpr int max_dim = 6;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class Cone;

// A compact set in R^m as a finite point list. convex=true means "the set
// is the convex hull of points"; such sets are stored hull-reduced (no
// listed point is a convex combination of the others) and in lexicographic
// order, so equal sets have equal representations.
struct CompactSet {
  std::vector<Point> points;
  bool convex = false;

  int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
  std::size_t size() const { return points.size(); }
};

// Validating constructors. make_set hull-reduces when convex=true and
// dedupes otherwise; both reject empty input, mixed dimensions and
// non-finite coordinates.
CompactSet make_set(std::vector<Point> points, bool convex);
CompactSet singleton(const Point& p);
CompactSet origin_set(int dim);

// Pluggable ambient norm. cone_induced reads a length n*n vector as a
// row-major n-by-n matrix and measures it with the norm the referenced
// cone induces on matrices (matrix_norm.hpp); its own ambient norm may not
// be cone_induced again.
struct NormSpec {
  enum class Kind { euclidean, coord1, coord_inf, cone_induced };

  Kind kind = Kind::euclidean;
  std::shared_ptr<const Cone> cone;         // cone_induced only
  std::shared_ptr<const NormSpec> ambient;  // cone_induced only
  int resolution = 64;                      // grid for the induced sup

  static NormSpec euclidean() { return NormSpec{}; }
  static NormSpec coord1() { return NormSpec{Kind::coord1, nullptr, nullptr, 0}; }
  static NormSpec coord_inf() { return NormSpec{Kind::coord_inf, nullptr, nullptr, 0}; }
  static NormSpec cone_induced(std::shared_ptr<const Cone> cone, const NormSpec& ambient,
                               int resolution = 64);

  std::string name() const;
};

double norm_value(const NormSpec& norm, const Point& v);

void check_finite(const Point& p);
void check_same_dim(const CompactSet& a, const CompactSet& b);

}  // namespace conecorr
