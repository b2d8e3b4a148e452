#include <doctest.h>

#include "conecorr/cone.hpp"
#include "conecorr/rng.hpp"

using namespace conecorr;

namespace {

Point pt(std::initializer_list<double> coords) {
  Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) p[i++] = c;
  return p;
}

}  // namespace

TEST_CASE("make_cone accepts independent bases and rejects dependent ones") {
  CHECK_NOTHROW(make_cone({pt({1, 0}), pt({0, 1})}));
  CHECK_NOTHROW(make_cone({pt({1, 0}), pt({1, 1})}));
  CHECK_THROWS_AS(make_cone({pt({1, 0}), pt({2, 0})}), Error);
  CHECK_THROWS_AS(make_cone({}), Error);
  CHECK_THROWS_AS(make_cone({pt({1, 0}), pt({0, 1, 0})}), Error);
}

TEST_CASE("cone basis may live in a larger ambient space") {
  const Cone cone = make_cone({pt({1, 0, 0}), pt({0, 1, 0})});
  CHECK(cone.n() == 2);
  CHECK(cone.ambient_dim() == 3);
  CHECK_THROWS_WITH_AS(cone.coords(pt({0, 0, 1})), "coords: point outside span of basis", Error);
}

TEST_CASE("coords of basis vectors and their sum") {
  const Cone cone = make_cone({pt({1, 0}), pt({0, 1})});
  const ConeCoords e2 = cone.coords(pt({0, 1}));
  CHECK(e2[0] == doctest::Approx(0.0));
  CHECK(e2[1] == doctest::Approx(1.0));
  const ConeCoords ones = cone.coords(pt({1, 1}));
  CHECK(ones[0] == doctest::Approx(1.0));
  CHECK(ones[1] == doctest::Approx(1.0));
}

TEST_CASE("coords on an oblique basis reconstructs the input") {
  const Cone cone = make_cone({pt({1, 0}), pt({1, 1})});
  const ConeCoords lam = cone.coords(pt({2, 1}));
  CHECK(lam[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lam[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((cone.from_coords(lam) - pt({2, 1})).norm() <= tol_geom);
}

TEST_CASE("membership mode rejects points outside the cone, span mode keeps them") {
  const Cone cone = make_cone({pt({1, 0}), pt({1, 1})});
  const Point outside = pt({1, -1});  // = 2 e1 - e2
  CHECK_THROWS_WITH_AS(cone.coords(outside), "coords: point outside cone", Error);
  const ConeCoords lam = cone.coords(outside, CoordMode::span_only);
  CHECK(lam[0] == doctest::Approx(2.0));
  CHECK(lam[1] == doctest::Approx(-1.0));
  CHECK_FALSE(cone.contains(outside));
  CHECK(cone.contains(pt({2, 1})));
}

TEST_CASE("small negative weights are clamped to zero") {
  const Cone cone = make_cone({pt({1, 0}), pt({0, 1})});
  const ConeCoords lam = cone.coords(pt({1.0, -0.5 * tol_geom}));
  CHECK(lam[1] == 0.0);
}

TEST_CASE("from_coords round-trips with coords on random nonnegative weights") {
  Rng rng(5);
  const Cone cone = make_cone({pt({1, 0, 0}), pt({1, 1, 0}), pt({0, 1, 2})});
  for (int trial = 0; trial < 50; ++trial) {
    ConeCoords lam(3);
    for (int i = 0; i < 3; ++i) lam[i] = rng.uniform(0.0, 3.0);
    const ConeCoords back = cone.coords(cone.from_coords(lam));
    CHECK((back - lam).norm() <= tol_geom * (1.0 + lam.norm()));
  }
  // lambda = 0 maps to the origin
  CHECK(cone.from_coords(ConeCoords::Zero(3)).norm() == doctest::Approx(0.0));
  // unit weight j returns e_j
  ConeCoords unit = ConeCoords::Zero(3);
  unit[1] = 1.0;
  CHECK((cone.from_coords(unit) - pt({1, 1, 0})).norm() <= tol_geom);
}

TEST_CASE("standard-basis cone coords are the identity map") {
  Rng rng(9);
  const ConePtr cone = standard_cone(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Point x = rng.point_in_box(3, 0.0, 2.0);
    CHECK((cone->coords(x) - x).norm() <= tol_geom);
  }
}

TEST_CASE("unit_sphere_sample contents") {
  const Cone ray = make_cone({pt({3})});
  const auto single = ray.unit_sphere_sample(NormSpec::euclidean(), 5);
  REQUIRE(single.size() == 1);
  CHECK(single[0][0] == doctest::Approx(1.0));

  const Cone quadrant = make_cone({pt({1, 0}), pt({0, 1})});
  const auto three = quadrant.unit_sphere_sample(NormSpec::euclidean(), 3);
  REQUIRE(three.size() == 3);
  bool has_e1 = false, has_e2 = false;
  for (const Point& x : three) {
    if ((x - pt({1, 0})).norm() <= tol_geom) has_e1 = true;
    if ((x - pt({0, 1})).norm() <= tol_geom) has_e2 = true;
  }
  CHECK(has_e1);
  CHECK(has_e2);
}

TEST_CASE("unit_sphere_sample points are unit members of the cone") {
  Rng rng(13);
  for (const NormSpec& norm :
       {NormSpec::euclidean(), NormSpec::coord1(), NormSpec::coord_inf()}) {
    const Cone cone = make_cone({pt({1, 0.2}), pt({-0.1, 1})});
    for (const Point& x : cone.unit_sphere_sample(norm, 17)) {
      CHECK(std::abs(norm_value(norm, x) - 1.0) <= tol_geom);
      CHECK(cone.contains(x));
    }
  }
  CHECK_THROWS_AS(make_cone({pt({1.0})}).unit_sphere_sample(NormSpec::euclidean(), 1), Error);
}
