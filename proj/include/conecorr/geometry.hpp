#pragma once

#include "conecorr/types.hpp"

namespace conecorr {

// Extreme points of the convex hull of `points`, deduped and pruned at
// tol_geom, in lexicographic order. Works in any ambient dimension up to
// max_dim without facet enumeration: a point is kept iff its distance to
// the hull of the others exceeds tol_geom.
CompactSet convex_hull(const std::vector<Point>& points);

// Pointwise sums of the generating points. If either input is convex the
// result is the (hull-reduced) convex sum; otherwise the plain deduped
// point list.
CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b);

CompactSet scale(double lambda, const CompactSet& a);

// Distance from p to the set. Point lists take the minimum over listed
// points; convex sets take the minimum over the whole hull (nearest-point
// search for the euclidean norm, a small linear program for coord norms).
double distance_point_to_set(const Point& p, const CompactSet& b, const NormSpec& norm);

// sup_{a in A} d(a, B); attained at the stored points (extreme points when
// convex, since d(., B) is convex).
double directed_excess(const CompactSet& a, const CompactSet& b, const NormSpec& norm);

double hausdorff(const CompactSet& a, const CompactSet& b, const NormSpec& norm);

// sup of the norm over the set; attained at stored points.
double set_norm(const CompactSet& a, const NormSpec& norm);

// Mutual directed excess within tol: equality of the represented sets.
bool sets_equal(const CompactSet& a, const CompactSet& b, const NormSpec& norm,
                double tol = tol_geom);

namespace detail {
bool lex_less(const Point& a, const Point& b);
std::vector<Point> dedupe_points(std::vector<Point> pts, double tol);
}  // namespace detail

}  // namespace conecorr
