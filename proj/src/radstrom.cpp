#include "conecorr/radstrom.hpp"

#include "conecorr/correspondence.hpp"

namespace conecorr {

RadstromClass make_class(CompactSet a, CompactSet b) {
  check_same_dim(a, b);
  RadstromClass cls;
  cls.hulled_input = !a.convex || !b.convex;
  cls.rep_a = a.convex ? std::move(a) : convex_hull(a.points);
  cls.rep_b = b.convex ? std::move(b) : convex_hull(b.points);
  return cls;
}

RadstromClass zero_class(int dim) { return make_class(origin_set(dim), origin_set(dim)); }

bool classes_equal(const RadstromClass& p, const RadstromClass& q, const NormSpec& norm,
                   double tol) {
  return hausdorff(minkowski_sum(p.rep_a, q.rep_b), minkowski_sum(p.rep_b, q.rep_a), norm) <= tol;
}

RadstromClass class_add(const RadstromClass& p, const RadstromClass& q) {
  RadstromClass sum;
  sum.rep_a = minkowski_sum(p.rep_a, q.rep_a);
  sum.rep_b = minkowski_sum(p.rep_b, q.rep_b);
  return sum;
}

RadstromClass class_scale(double lambda, const RadstromClass& p) {
  RadstromClass scaled;
  if (lambda >= 0.0) {
    scaled.rep_a = scale(lambda, p.rep_a);
    scaled.rep_b = scale(lambda, p.rep_b);
  } else {
    scaled.rep_a = scale(-lambda, p.rep_b);
    scaled.rep_b = scale(-lambda, p.rep_a);
  }
  return scaled;
}

double class_norm(const RadstromClass& p, const NormSpec& norm) {
  return hausdorff(p.rep_a, p.rep_b, norm);
}

RadstromClass embed(const LinearCorrespondence& phi, const Point& x) {
  for (const CompactSet& image : phi.basis_images)
    if (!image.convex) throw Error("embed: correspondence must be convex-valued");
  const CompactSet value = eval_linear(phi, x);
  return make_class(value, origin_set(value.dim()));
}

}  // namespace conecorr
