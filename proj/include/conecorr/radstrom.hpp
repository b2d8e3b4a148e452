#pragma once

#include "conecorr/geometry.hpp"

namespace conecorr {

struct LinearCorrespondence;

// Representative pair [A,B] of the equivalence (A,B) ~ (C,D) iff A+D = B+C
// on convex compact sets. Pairs are never canonicalized; equality is decided
// by the defining relation.
struct RadstromClass {
  CompactSet rep_a;
  CompactSet rep_b;
  bool hulled_input = false;  // a non-convex input was hulled on construction
};

RadstromClass make_class(CompactSet a, CompactSet b);
RadstromClass zero_class(int dim);

// A + D = B + C up to tol under the given norm.
bool classes_equal(const RadstromClass& p, const RadstromClass& q, const NormSpec& norm,
                   double tol = tol_geom);

// [A,B] + [C,D] = [A+C, B+D]
RadstromClass class_add(const RadstromClass& p, const RadstromClass& q);

// [lambda A, lambda B] for lambda >= 0, [-lambda B, -lambda A] otherwise.
RadstromClass class_scale(double lambda, const RadstromClass& p);

// |[A,B]| = hausdorff(A, B); invariant under the equivalence.
double class_norm(const RadstromClass& p, const NormSpec& norm);

// f(x) = [phi(x), {0}] for convex-valued linear phi.
RadstromClass embed(const LinearCorrespondence& phi, const Point& x);

}  // namespace conecorr
