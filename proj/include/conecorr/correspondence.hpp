#pragma once

#include <functional>
#include <optional>
#include <string>

#include "conecorr/cone.hpp"
#include "conecorr/geometry.hpp"
#include "conecorr/sweep.hpp"

namespace conecorr {

// Additive, positively homogeneous set-valued map on a cone, determined by
// the images of the basis: phi(sum lambda_j e_j) = sum lambda_j phi(e_j).
// endomorphism means the target is the same cone (every image point lies in
// C), which the multimatrix representation requires.
struct LinearCorrespondence {
  ConePtr cone;
  int target_dim = 0;
  std::vector<CompactSet> basis_images;
  bool endomorphism = false;
};

LinearCorrespondence make_linear(ConePtr cone, std::vector<CompactSet> basis_images);
LinearCorrespondence identity_correspondence(const ConePtr& cone);

// Positively homogeneous map with phi(x+y) contained in phi(x)+phi(y),
// carried by an executable rule (basis images alone do not determine values
// off the basis). Rules must be pure.
struct SublinearCorrespondence {
  ConePtr cone;
  std::string rule_name;
  std::function<CompactSet(const Point&)> rule;
  std::vector<CompactSet> basis_images;
  int target_dim = 0;
  bool endomorphism = false;
};

SublinearCorrespondence wrap_linear(LinearCorrespondence phi);
// values {t x : lo <= t <= hi}; endomorphic for lo >= 0
SublinearCorrespondence interval_scalar(ConePtr cone, double lo, double hi);
// the quadrant counterexample: collapses points off the first axis to the
// origin and maps axis points to the segment from the origin
SublinearCorrespondence paper_example(ConePtr cone);
// piecewise rule from tabulated simplex directions: the value at x is
// |coords(x)|_1 times the table entry of the nearest direction
SublinearCorrespondence table_rule(ConePtr cone, std::vector<std::vector<double>> directions,
                                   std::vector<CompactSet> values);
SublinearCorrespondence custom_rule(ConePtr cone, std::string name,
                                    std::function<CompactSet(const Point&)> rule);

CompactSet eval_linear(const LinearCorrespondence& phi, const Point& x);
CompactSet eval_sublinear(const SublinearCorrespondence& phi, const Point& x);

// Cartesian product of the basis-image coordinate sets; column j of a
// selection matrix is one point of coord_sets[j].
struct Multimatrix {
  std::vector<CompactSet> coord_sets;
  int n() const { return static_cast<int>(coord_sets.size()); }
};

struct SelectionMatrix {
  Eigen::MatrixXd entries;
  std::vector<int> provenance;  // chosen vertex index per column
};

inline constexpr std::size_t selection_cap = 1'000'000;

Multimatrix multimatrix(const LinearCorrespondence& phi);
std::size_t selection_count(const Multimatrix& m);  // throws past selection_cap
SelectionMatrix selection_at(const Multimatrix& m, std::size_t index);

CompactSet eval_via_multimatrix(const Multimatrix& m, const Cone& cone, const Point& x,
                                bool convex);

// Linear extension of a sublinear map: basis images replaced by their
// convex hulls. Contains the original pointwise.
LinearCorrespondence hat_extension(const SublinearCorrespondence& phi);

LinearCorrespondence compose(const LinearCorrespondence& outer, const LinearCorrespondence& inner);

// Least bound M with |phi(x)| <= M |x| over the cone, computed as the sup of
// |phi(x)| over unit-sphere samples with refinement. Throws when values blow
// past the overflow guard.
SupResult corr_norm(const LinearCorrespondence& phi, const NormSpec& norm, int resolution);
SupResult corr_norm(const SublinearCorrespondence& phi, const NormSpec& norm, int resolution);

// sup over the unit sphere of the Hausdorff distance between phi(x) and {x}.
SupResult dist_to_identity(const LinearCorrespondence& phi, const NormSpec& norm, int resolution);
SupResult dist_to_identity(const SublinearCorrespondence& phi, const NormSpec& norm,
                           int resolution);

// Hausdorff distance (in the cone-induced matrix norm) from the multimatrix
// to the identity: with the target a singleton and the norm convex over the
// product of convex coordinate sets, the sup is attained at vertex
// selections.
SupResult multimatrix_h1_to_identity(const Multimatrix& m, const Cone& cone,
                                     const NormSpec& ambient, int resolution);

struct Corollary1Result {
  double lhs = 0.0;  // multimatrix distance to identity of the hat extension
  double rhs = 0.0;  // pointwise distance to identity of the original map
  double tol = 0.0;
  bool holds = false;
};
Corollary1Result corollary1_check(const SublinearCorrespondence& phi, const NormSpec& ambient,
                                  int resolution, double tol);

enum class InvertStatus { certified, invertible_at_sample, singular };
const char* to_string(InvertStatus s);

struct InvertRecord {
  bool is_vertex = false;
  std::vector<int> provenance;  // vertex index per column, -1 for sampled
  double det = 0.0;
  double cond = 0.0;
  double op_dist_to_identity = 0.0;
  InvertStatus status = InvertStatus::singular;
};

struct InvertReport {
  std::vector<InvertRecord> records;
  bool all_invertible = true;
};

// Per-selection determinant, conditioning and the spectral-norm certificate
// |A - I|_2 < 1 => invertible; interior matrices (the centroid plus seeded
// convex combinations of each coordinate set) are checked the same way.
InvertReport invertibility_certificate(const Multimatrix& m, const Cone& cone,
                                       int interior_samples = 16, unsigned seed = 0);

struct ProbeParams {
  double delta0 = 1.0;      // ladder start; rungs are delta0 / 2^k, k = 0..ladder-1
  int ladder = 21;
  int pattern_resolution = 3;  // weight-box grid points per axis
  int norm_resolution = 200;   // for the constructive delta at x = 0
  NormSpec norm = NormSpec::euclidean();
};

struct ProbeResult {
  bool accepted = false;
  double delta = 0.0;
  Point witness;
  double witness_excess = 0.0;
};

// Sampled epsilon-delta search for upper semicontinuity at x: accepts the
// first ladder delta whose sampled z near x all satisfy
// excess(phi(z), phi(x)) <= eps. At x = 0 the constructive delta
// eps / |phi| is tried first.
ProbeResult usc_probe(const SublinearCorrespondence& phi, const Point& x, double eps,
                      const ProbeParams& params = {});
ProbeResult usc_probe(const LinearCorrespondence& phi, const Point& x, double eps,
                      const ProbeParams& params = {});

// Same search with the reversed excess(phi(x), phi(z)) <= eps.
ProbeResult lsc_probe(const SublinearCorrespondence& phi, const Point& x, double eps,
                      const ProbeParams& params = {});
ProbeResult lsc_probe(const LinearCorrespondence& phi, const Point& x, double eps,
                      const ProbeParams& params = {});

struct SublinearityViolation {
  std::string kind;  // "subadditivity" or "homogeneity"
  Point x, y;
  double lambda = 0.0;
  double excess = 0.0;
};

struct SublinearityReport {
  int samples = 0;
  std::vector<SublinearityViolation> violations;
  bool ok() const { return violations.empty(); }
};

SublinearityReport check_sublinearity(const SublinearCorrespondence& phi, int samples,
                                      unsigned seed = 0, double tol = tol_geom);

namespace detail {

// Uniform view over both correspondence kinds for the shared sweeps.
struct CorrView {
  const Cone* cone = nullptr;
  int target_dim = 0;
  bool endomorphism = false;
  std::function<CompactSet(const Point&)> eval;
};

CorrView view(const LinearCorrespondence& phi);
CorrView view(const SublinearCorrespondence& phi);
SupResult corr_norm_impl(const CorrView& v, const NormSpec& norm, int resolution);
SupResult dist_to_identity_impl(const CorrView& v, const NormSpec& norm, int resolution);
ProbeResult probe_impl(const CorrView& v, const Point& x, double eps, const ProbeParams& params,
                       bool upper);

}  // namespace detail

}  // namespace conecorr
