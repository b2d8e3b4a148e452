#include "conecorr/random_sets.hpp"

namespace conecorr {

CompactSet random_compact_set(Rng& rng, int dim, int max_vertices, double lo, double hi,
                              bool convex) {
  const int count = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(max_vertices)));
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) pts.push_back(rng.point_in_box(dim, lo, hi));
  return make_set(std::move(pts), convex);
}

ConePtr random_cone(Rng& rng, int n, double skew) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Point> basis;
    basis.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      Point e = Point::Zero(n);
      e[j] = 1.0;
      for (int i = 0; i < n; ++i) e[i] += rng.uniform(-skew, skew);
      basis.push_back(std::move(e));
    }
    try {
      ConePtr cone = make_cone_ptr(std::move(basis));
      if (cone->smallest_singular_value() >= 0.2) return cone;
    } catch (const Error&) {
      // dependent draw, retry
    }
  }
  throw Error("random_cone: failed to draw a well-conditioned basis");
}

Point random_cone_point(Rng& rng, const Cone& cone, double max_weight) {
  ConeCoords w(cone.n());
  for (int i = 0; i < cone.n(); ++i) w[i] = rng.uniform(0.0, max_weight);
  return cone.from_coords(w);
}

LinearCorrespondence random_linear_endo(Rng& rng, const ConePtr& cone, int max_vertices,
                                        bool convex, double max_coord) {
  const int n = cone->n();
  std::vector<CompactSet> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int count = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(max_vertices)));
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      ConeCoords w(n);
      for (int k = 0; k < n; ++k) w[k] = rng.uniform(0.0, max_coord);
      pts.push_back(cone->from_coords(w));
    }
    images.push_back(make_set(std::move(pts), convex));
  }
  return make_linear(cone, std::move(images));
}

}  // namespace conecorr
