#pragma once

#include "conecorr/correspondence.hpp"
#include "conecorr/rng.hpp"

namespace conecorr {

// Deterministic instance generators shared by the randomized suites.

CompactSet random_compact_set(Rng& rng, int dim, int max_vertices, double lo, double hi,
                              bool convex);

// Identity basis perturbed until well conditioned (smallest singular value
// at least 0.2).
ConePtr random_cone(Rng& rng, int n, double skew = 0.35);

Point random_cone_point(Rng& rng, const Cone& cone, double max_weight = 2.0);

// Endomorphic linear correspondence: every image point is a nonnegative
// combination of the basis.
LinearCorrespondence random_linear_endo(Rng& rng, const ConePtr& cone, int max_vertices,
                                        bool convex, double max_coord = 2.0);

}  // namespace conecorr
