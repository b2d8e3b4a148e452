#include "conecorr/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "conecorr/matrix_norm.hpp"
#include "conecorr/minnorm.hpp"
#include "conecorr/sweep.hpp"

namespace conecorr {

void check_finite(const Point& p) {
  if (p.size() < 1) throw Error("point: dimension must be >= 1");
  if (!p.allFinite()) throw Error("point: non-finite coordinate");
}

void check_same_dim(const CompactSet& a, const CompactSet& b) {
  if (a.dim() != b.dim()) throw Error("compact sets: dimension mismatch");
}

namespace detail {

bool lex_less(const Point& a, const Point& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

std::vector<Point> dedupe_points(std::vector<Point> pts, double tol) {
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Point> kept;
  kept.reserve(pts.size());
  for (const Point& p : pts) {
    bool dup = false;
    for (const Point& q : kept) {
      if ((p - q).norm() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(p);
  }
  return kept;
}

}  // namespace detail

namespace {

void validate_points(const std::vector<Point>& points) {
  if (points.empty()) throw Error("compact set: empty point list");
  const auto dim = points.front().size();
  for (const Point& p : points) {
    check_finite(p);
    if (p.size() != dim) throw Error("compact set: mixed dimensions");
  }
}

}  // namespace

CompactSet convex_hull(const std::vector<Point>& points) {
  validate_points(points);
  const int dim = static_cast<int>(points.front().size());
  if (dim > max_dim) throw Error("convex_hull: ambient dimension above " + std::to_string(max_dim));

  std::vector<Point> pts = detail::dedupe_points(points, tol_geom);
  if (pts.size() <= 1) return CompactSet{std::move(pts), true};

  std::vector<Point> extreme;
  extreme.reserve(pts.size());
  std::vector<Point> shifted;
  shifted.reserve(pts.size() - 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    shifted.clear();
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) shifted.push_back(pts[j] - pts[i]);
    if (detail::min_norm_point(shifted).norm() > tol_geom) extreme.push_back(pts[i]);
  }
  if (extreme.empty()) extreme.push_back(pts.front());  // fully degenerate cluster
  return CompactSet{std::move(extreme), true};
}

CompactSet make_set(std::vector<Point> points, bool convex) {
  validate_points(points);
  if (convex) return convex_hull(points);
  return CompactSet{detail::dedupe_points(std::move(points), tol_geom), false};
}

CompactSet singleton(const Point& p) {
  check_finite(p);
  return CompactSet{{p}, true};
}

CompactSet origin_set(int dim) { return singleton(Point::Zero(dim)); }

CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b) {
  check_same_dim(a, b);
  std::vector<Point> sums;
  sums.reserve(a.size() * b.size());
  for (const Point& pa : a.points)
    for (const Point& pb : b.points) sums.push_back(pa + pb);
  return make_set(std::move(sums), a.convex || b.convex);
}

CompactSet scale(double lambda, const CompactSet& a) {
  if (a.points.empty()) throw Error("scale: empty set");
  if (lambda == 0.0) {
    CompactSet zero = origin_set(a.dim());
    zero.convex = a.convex;
    return zero;
  }
  // extreme points are invariant under nonzero scaling, so a reduced set
  // stays reduced; only the lexicographic order needs restoring
  std::vector<Point> pts;
  pts.reserve(a.size());
  for (const Point& p : a.points) pts.push_back(lambda * p);
  std::sort(pts.begin(), pts.end(), detail::lex_less);
  return CompactSet{std::move(pts), a.convex};
}

namespace {

double min_over_points(const Point& p, const CompactSet& b, const NormSpec& norm) {
  double best = norm_value(norm, p - b.points.front());
  for (std::size_t i = 1; i < b.size(); ++i)
    best = std::min(best, norm_value(norm, p - b.points[i]));
  return best;
}

// distance to a hull under a norm with no dedicated solver: minimize over
// convex weights with the shared sweep machinery (small vertex counts only).
double grid_distance_to_hull(const Point& p, const CompactSet& b, const NormSpec& norm) {
  const int k = static_cast<int>(b.size());
  if (k > max_dim + 1)
    throw Error("distance_point_to_set: hull too large for this norm kind");
  const auto objective = [&](const std::vector<double>& w) {
    Point y = Point::Zero(p.size());
    for (int i = 0; i < k; ++i) y += w[i] * b.points[i];
    return -norm_value(norm, y - p);
  };
  return -sup_over_simplex(k, 17, objective, false).value;
}

}  // namespace

double distance_point_to_set(const Point& p, const CompactSet& b, const NormSpec& norm) {
  check_finite(p);
  if (b.points.empty()) throw Error("distance_point_to_set: empty set");
  if (p.size() != b.dim()) throw Error("distance_point_to_set: dimension mismatch");
  if (!b.convex || b.size() == 1) return min_over_points(p, b, norm);

  switch (norm.kind) {
    case NormSpec::Kind::euclidean: {
      std::vector<Point> shifted;
      shifted.reserve(b.size());
      for (const Point& v : b.points) shifted.push_back(v - p);
      return detail::min_norm_point(shifted).norm();
    }
    case NormSpec::Kind::coord1:
      return detail::lp_distance_to_hull(p, b.points, false);
    case NormSpec::Kind::coord_inf:
      return detail::lp_distance_to_hull(p, b.points, true);
    case NormSpec::Kind::cone_induced:
      return grid_distance_to_hull(p, b, norm);
  }
  throw Error("distance_point_to_set: unknown norm kind");
}

double directed_excess(const CompactSet& a, const CompactSet& b, const NormSpec& norm) {
  check_same_dim(a, b);
  double worst = 0.0;
  for (const Point& p : a.points) worst = std::max(worst, distance_point_to_set(p, b, norm));
  return worst;
}

double hausdorff(const CompactSet& a, const CompactSet& b, const NormSpec& norm) {
  return std::max(directed_excess(a, b, norm), directed_excess(b, a, norm));
}

double set_norm(const CompactSet& a, const NormSpec& norm) {
  if (a.points.empty()) throw Error("set_norm: empty set");
  double worst = 0.0;
  for (const Point& p : a.points) worst = std::max(worst, norm_value(norm, p));
  return worst;
}

bool sets_equal(const CompactSet& a, const CompactSet& b, const NormSpec& norm, double tol) {
  return std::max(directed_excess(a, b, norm), directed_excess(b, a, norm)) <= tol;
}

NormSpec NormSpec::cone_induced(std::shared_ptr<const Cone> cone, const NormSpec& ambient,
                                int resolution) {
  if (!cone) throw Error("cone_induced norm: null cone");
  if (ambient.kind == Kind::cone_induced)
    throw Error("cone_induced norm: ambient norm may not be cone_induced");
  if (resolution < 2) throw Error("cone_induced norm: resolution must be >= 2");
  NormSpec spec;
  spec.kind = Kind::cone_induced;
  spec.cone = std::move(cone);
  spec.ambient = std::make_shared<NormSpec>(ambient);
  spec.resolution = resolution;
  return spec;
}

std::string NormSpec::name() const {
  switch (kind) {
    case Kind::euclidean: return "euclidean";
    case Kind::coord1: return "coord-1";
    case Kind::coord_inf: return "coord-inf";
    case Kind::cone_induced: return "cone-induced";
  }
  return "?";
}

double norm_value(const NormSpec& norm, const Point& v) {
  switch (norm.kind) {
    case NormSpec::Kind::euclidean:
      return v.norm();
    case NormSpec::Kind::coord1:
      return v.lpNorm<1>();
    case NormSpec::Kind::coord_inf:
      return v.lpNorm<Eigen::Infinity>();
    case NormSpec::Kind::cone_induced:
      return detail::cone_induced_norm_value(norm, v);
  }
  throw Error("norm_value: unknown norm kind");
}

}  // namespace conecorr
