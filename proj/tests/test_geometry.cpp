#include <doctest.h>

#include <cmath>

#include "conecorr/geometry.hpp"
#include "conecorr/matrix_norm.hpp"
#include "conecorr/random_sets.hpp"
#include "oracles.hpp"

using namespace conecorr;

namespace {

Point pt(std::initializer_list<double> coords) {
  Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) p[i++] = c;
  return p;
}

Point pt1(double x) { return pt({x}); }

const NormSpec euclid = NormSpec::euclidean();

bool contains_point(const CompactSet& s, const Point& p, double tol = tol_geom) {
  for (const Point& q : s.points)
    if ((q - p).norm() <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("convex_hull removes interior points and keeps extreme ones") {
  const CompactSet hull =
      convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({0.25, 0.25})});
  REQUIRE(hull.convex);
  REQUIRE(hull.size() == 3);
  CHECK(contains_point(hull, pt({0, 0})));
  CHECK(contains_point(hull, pt({1, 0})));
  CHECK(contains_point(hull, pt({0, 1})));
}

TEST_CASE("convex_hull of a singleton") {
  const CompactSet hull = convex_hull({pt({0, 0})});
  CHECK(hull.size() == 1);
  CHECK(hull.convex);
}

TEST_CASE("convex_hull rejects bad input") {
  CHECK_THROWS_AS(convex_hull({}), Error);
  CHECK_THROWS_AS(convex_hull({pt({0, 0}), pt({1, 1, 1})}), Error);
  Point bad = pt({0, 0});
  bad[0] = std::nan("");
  CHECK_THROWS_AS(convex_hull({bad}), Error);
}

TEST_CASE("convex_hull matches the caratheodory membership oracle") {
  Rng rng(11);
  std::vector<Point> pts;
  for (int i = 0; i < 100; ++i) pts.push_back(rng.point_in_box(2, 0.0, 1.0));
  pts.push_back(pt({0, 0}));
  pts.push_back(pt({1, 0}));
  pts.push_back(pt({0, 1}));
  pts.push_back(pt({1, 1}));

  const CompactSet hull = convex_hull(pts);
  for (const Point& p : pts) {
    std::vector<Point> others;
    for (const Point& q : pts)
      if (&q != &p) others.push_back(q);
    const bool oracle_extreme = !oracles::in_hull(p, others);
    CHECK(contains_point(hull, p) == oracle_extreme);
  }
}

TEST_CASE("convex_hull in 3-D keeps exactly the cube corners") {
  std::vector<Point> pts;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c) pts.push_back(pt({double(a), double(b), double(c)}));
  pts.push_back(pt({0.5, 0.5, 0.5}));
  pts.push_back(pt({0.5, 0.5, 0.0}));  // face point
  const CompactSet hull = convex_hull(pts);
  CHECK(hull.size() == 8);
}

TEST_CASE("minkowski_sum of unit squares") {
  const CompactSet square =
      make_set({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}, true);
  const CompactSet sum = minkowski_sum(square, square);
  REQUIRE(sum.convex);
  REQUIRE(sum.size() == 4);
  CHECK(contains_point(sum, pt({0, 0})));
  CHECK(contains_point(sum, pt({2, 0})));
  CHECK(contains_point(sum, pt({0, 2})));
  CHECK(contains_point(sum, pt({2, 2})));
}

TEST_CASE("minkowski_sum with a singleton translates") {
  const CompactSet b = make_set({pt({0, 0}), pt({1, 2})}, true);
  const CompactSet shifted = minkowski_sum(singleton(pt({3, -1})), b);
  CHECK(contains_point(shifted, pt({3, -1})));
  CHECK(contains_point(shifted, pt({4, 1})));
  CHECK(shifted.size() == 2);
}

TEST_CASE("minkowski_sum of 1-D point lists stays a point list") {
  const CompactSet s = make_set({pt1(0), pt1(2)}, false);
  const CompactSet sum = minkowski_sum(s, s);
  CHECK_FALSE(sum.convex);
  REQUIRE(sum.size() == 3);
  CHECK(contains_point(sum, pt1(0)));
  CHECK(contains_point(sum, pt1(2)));
  CHECK(contains_point(sum, pt1(4)));
}

TEST_CASE("minkowski_sum rejects dimension mismatch") {
  CHECK_THROWS_AS(minkowski_sum(singleton(pt({1, 2})), singleton(pt1(1))), Error);
}

TEST_CASE("minkowski_sum is commutative and associative up to hull equality") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const CompactSet a = random_compact_set(rng, 2, 4, -1, 1, true);
    const CompactSet b = random_compact_set(rng, 2, 4, -1, 1, true);
    const CompactSet c = random_compact_set(rng, 2, 4, -1, 1, true);
    CHECK(sets_equal(minkowski_sum(a, b), minkowski_sum(b, a), euclid));
    CHECK(sets_equal(minkowski_sum(minkowski_sum(a, b), c),
                     minkowski_sum(a, minkowski_sum(b, c)), euclid));
  }
}

TEST_CASE("scale examples") {
  CHECK(contains_point(scale(2.0, singleton(pt({1, 1}))), pt({2, 2})));

  const CompactSet zero = scale(0.0, make_set({pt({3, 4}), pt({-1, 2})}, true));
  CHECK(zero.size() == 1);
  CHECK(contains_point(zero, pt({0, 0})));

  const CompactSet reflected = scale(-1.0, make_set({pt({0, 0}), pt({1, 0})}, true));
  CHECK(contains_point(reflected, pt({0, 0})));
  CHECK(contains_point(reflected, pt({-1, 0})));
}

TEST_CASE("scale distributes over minkowski_sum") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const CompactSet a = random_compact_set(rng, 2, 4, -1, 1, true);
    const CompactSet b = random_compact_set(rng, 2, 4, -1, 1, true);
    const double lambda = rng.uniform(-2.0, 2.0);
    CHECK(sets_equal(scale(lambda, minkowski_sum(a, b)),
                     minkowski_sum(scale(lambda, a), scale(lambda, b)), euclid));
  }
}

TEST_CASE("distance to a singleton and membership") {
  CHECK(distance_point_to_set(pt({3, 4}), singleton(pt({0, 0})), euclid) == doctest::Approx(5.0));

  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const CompactSet hull = random_compact_set(rng, 2, 5, -1, 1, true);
    // a convex combination of the stored points lies in the set
    Point inside = Point::Zero(2);
    double total = 0;
    for (const Point& v : hull.points) {
      const double w = rng.uniform(0.1, 1.0);
      inside += w * v;
      total += w;
    }
    inside /= total;
    CHECK(distance_point_to_set(inside, hull, euclid) <= 1e-7);
  }
}

TEST_CASE("distance to a segment, frozen and sampled") {
  const CompactSet segment = make_set({pt({0, -1}), pt({0, 1})}, true);
  const double d = distance_point_to_set(pt({2, 0}), segment, euclid);
  CHECK(d == doctest::Approx(2.0).epsilon(1e-12));
  const double oracle = oracles::distance_by_sampling(pt({2, 0}), segment, euclid, 400);
  CHECK(std::abs(d - oracle) <= 1e-4);
}

TEST_CASE("coord-1 and coord-inf hull distances match dense sampling") {
  Rng rng(47);
  for (const NormSpec& norm : {NormSpec::coord1(), NormSpec::coord_inf()}) {
    for (int trial = 0; trial < 12; ++trial) {
      const CompactSet hull = random_compact_set(rng, 2, 3, -1, 1, true);
      const Point p = rng.point_in_box(2, -2, 2);
      const double d = distance_point_to_set(p, hull, norm);
      const double oracle = oracles::distance_by_sampling(p, hull, norm, 600);
      CHECK(d <= oracle + 1e-9);  // the LP may only be closer
      CHECK(oracle - d <= 2e-2);  // and not by more than the grid error
    }
  }
}

TEST_CASE("coord norm distances, frozen values") {
  const CompactSet segment = make_set({pt({0, -1}), pt({0, 1})}, true);
  CHECK(distance_point_to_set(pt({2, 0}), segment, NormSpec::coord_inf()) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(distance_point_to_set(pt({2, 0}), segment, NormSpec::coord1()) ==
        doctest::Approx(2.0).epsilon(1e-12));
  const CompactSet square = make_set({pt({1, 1}), pt({3, 1}), pt({1, 3}), pt({3, 3})}, true);
  CHECK(distance_point_to_set(pt({0, 0}), square, NormSpec::coord1()) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(distance_point_to_set(pt({0, 0}), square, NormSpec::coord_inf()) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("directed excess basics") {
  const CompactSet seg = make_set({pt1(0), pt1(1)}, true);
  CHECK(directed_excess(seg, seg, euclid) == doctest::Approx(0.0));
  CHECK(directed_excess(seg, singleton(pt1(0)), euclid) == doctest::Approx(1.0));
}

TEST_CASE("directed excess of square over inscribed diamond") {
  const CompactSet square =
      make_set({pt({-1, -1}), pt({1, -1}), pt({-1, 1}), pt({1, 1})}, true);
  const CompactSet diamond =
      make_set({pt({1, 0}), pt({0, 1}), pt({-1, 0}), pt({0, -1})}, true);
  const double e = directed_excess(square, diamond, euclid);
  CHECK(e == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  const double oracle = oracles::excess_by_sampling(square, diamond, euclid, 60);
  CHECK(std::abs(e - oracle) <= 2e-2);
}

TEST_CASE("directed excess from stored vertices matches interior sampling") {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const CompactSet a = random_compact_set(rng, 2, 3, -1, 1, true);
    const CompactSet b = random_compact_set(rng, 2, 3, -1, 1, true);
    const double fast = directed_excess(a, b, euclid);
    // the grid oracle samples A's sup from below and B's inf from above,
    // so agreement is only up to the grid spacing
    const double slow = oracles::excess_by_sampling(a, b, euclid, 50);
    CHECK(std::abs(fast - slow) <= 5e-2);
  }
}

TEST_CASE("hausdorff identity, symmetry, frozen distance") {
  const CompactSet a = make_set({pt1(0), pt1(1)}, true);
  const CompactSet b = singleton(pt1(5));
  CHECK(hausdorff(a, a, euclid) == doctest::Approx(0.0));
  CHECK(hausdorff(a, b, euclid) == doctest::Approx(hausdorff(b, a, euclid)));
  CHECK(hausdorff(singleton(pt1(0)), b, euclid) == doctest::Approx(5.0));
}

TEST_CASE("hausdorff triangle inequality on random convex triples") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const CompactSet a = random_compact_set(rng, 2, 4, -1, 1, true);
    const CompactSet b = random_compact_set(rng, 2, 4, -1, 1, true);
    const CompactSet c = random_compact_set(rng, 2, 4, -1, 1, true);
    const double ab = hausdorff(a, b, euclid);
    const double bc = hausdorff(b, c, euclid);
    const double ac = hausdorff(a, c, euclid);
    CHECK(ac <= ab + bc + 10 * tol_geom);
  }
}

TEST_CASE("set_norm basics and sampling oracle") {
  CHECK(set_norm(singleton(pt({0, 0})), euclid) == doctest::Approx(0.0));
  CHECK(set_norm(make_set({pt({-1, 0}), pt({0, 2})}, true), euclid) == doctest::Approx(2.0));

  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const CompactSet a = random_compact_set(rng, 2, 4, -1, 1, true);
    const double fast = set_norm(a, euclid);
    const double slow = oracles::set_norm_by_sampling(a, euclid, 60);
    CHECK(fast >= slow - 1e-9);
    CHECK(fast - slow <= 5e-2);
  }
}

TEST_CASE("matrix_cone_norm of the identity is 1") {
  Rng rng(83);
  for (int n : {1, 2, 3}) {
    const ConePtr cone = random_cone(rng, n);
    for (const NormSpec& norm :
         {NormSpec::euclidean(), NormSpec::coord1(), NormSpec::coord_inf()}) {
      const SupResult r = matrix_cone_norm(Eigen::MatrixXd::Identity(n, n), *cone, norm, 40);
      CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("matrix_cone_norm 1-D scalar and 2-D diagonal") {
  const ConePtr ray = standard_cone(1);
  Eigen::MatrixXd c(1, 1);
  c << -2.5;
  CHECK(matrix_cone_norm(c, *ray, euclid, 2).value == doctest::Approx(2.5));

  const ConePtr quadrant = standard_cone(2);
  Eigen::MatrixXd diag(2, 2);
  diag << 2, 0, 0, 3;
  const SupResult r = matrix_cone_norm(diag, *quadrant, euclid, 200);
  CHECK(r.value == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("matrix_cone_norm matches a dense sweep") {
  Rng rng(89);
  const ConePtr cone = random_cone(rng, 2);
  Eigen::MatrixXd a(2, 2);
  a << 1.3, -0.2, 0.4, 0.7;
  const SupResult fast = matrix_cone_norm(a, *cone, euclid, 100);

  double dense = 0.0;
  const Eigen::MatrixXd& basis = cone->basis_matrix();
  for (int k = 0; k <= 20000; ++k) {
    const double w = static_cast<double>(k) / 20000.0;
    Eigen::Vector2d lam(w, 1.0 - w);
    dense = std::max(dense, (basis * (a * lam)).norm() / (basis * lam).norm());
  }
  CHECK(std::abs(fast.value - dense) <= 1e-6);
}

TEST_CASE("matrix_cone_norm norm axioms within reported gap") {
  Rng rng(97);
  const ConePtr cone = random_cone(rng, 2);
  for (int trial = 0; trial < 8; ++trial) {
    Eigen::MatrixXd a(2, 2), b(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        a(i, j) = rng.uniform(-1.5, 1.5);
        b(i, j) = rng.uniform(-1.5, 1.5);
      }
    const double c = rng.uniform(-2.0, 2.0);
    const SupResult na = matrix_cone_norm(a, *cone, euclid, 120);
    const SupResult nb = matrix_cone_norm(b, *cone, euclid, 120);
    const SupResult nca = matrix_cone_norm(c * a, *cone, euclid, 120);
    const SupResult nab = matrix_cone_norm(a + b, *cone, euclid, 120);
    const double slack = 2e-6 + na.grid_gap + nb.grid_gap + nca.grid_gap + nab.grid_gap;
    CHECK(std::abs(nca.value - std::abs(c) * na.value) <= slack);
    CHECK(nab.value <= na.value + nb.value + slack);
  }
}

TEST_CASE("matrix_cone_norm input validation") {
  const ConePtr cone = standard_cone(2);
  CHECK_THROWS_AS(matrix_cone_norm(Eigen::MatrixXd::Identity(3, 3), *cone, euclid, 10), Error);
  CHECK_THROWS_AS(matrix_cone_norm(Eigen::MatrixXd::Identity(2, 2), *cone, euclid, 1), Error);
}

TEST_CASE("cone-induced norm measures flattened matrices") {
  const ConePtr ray = standard_cone(1);
  const NormSpec induced = NormSpec::cone_induced(ray, euclid, 8);
  CHECK(norm_value(induced, pt1(-3.0)) == doctest::Approx(3.0));
  CHECK_THROWS_AS(NormSpec::cone_induced(ray, induced, 8), Error);
}
