#pragma once

#include "conecorr/correspondence.hpp"

namespace conecorr {

// A map t -> correspondence with a declared composition rule. Real-valued t
// is supported only for closed-form families; discrete_power accepts
// nonnegative integers. All members must be pure; phi^0 is the identity.
class SemigroupFamily {
 public:
  // phi^t(x) = {c x : e^{a t} <= c <= e^{b t}}, 0 < a <= b
  static SemigroupFamily interval_scalar(ConePtr cone, double a, double b);
  // phi^n = psi composed n times at nonnegative integer t
  static SemigroupFamily discrete_power(LinearCorrespondence psi);
  // hull-extended members of another family
  static SemigroupFamily hat_of(SemigroupFamily base);
  // closed form for psi with psi(psi) = psi: identity at t = 0, psi after
  static SemigroupFamily idempotent(SublinearCorrespondence psi);
  // arbitrary member rule, for tests and negative controls
  static SemigroupFamily custom(ConePtr cone, std::string name,
                                std::function<SublinearCorrespondence(double)> member);

  SublinearCorrespondence member(double t) const;
  CompactSet eval(double t, const Point& x) const;
  const ConePtr& cone() const { return cone_; }
  const std::string& name() const { return name_; }
  bool real_time() const { return real_time_; }

 private:
  SemigroupFamily() = default;
  ConePtr cone_;
  std::string name_;
  bool real_time_ = true;
  std::function<SublinearCorrespondence(double)> member_;
};

// phi^{t}(phi^{s}(x)) realized pointwise: the union of phi^t over the stored
// points of phi^s(x), hulled when the parts are convex.
CompactSet compose_eval(const SemigroupFamily& f, double t, double s, const Point& x);

struct DefectResult {
  double defect = 0.0;
  double s = 0.0, t = 0.0;
  Point x;
};

// max over the grid and samples of hausdorff(phi^{t+s}(x), phi^t(phi^s(x))).
DefectResult semigroup_defect(const SemigroupFamily& f, const std::vector<double>& t_grid,
                              const std::vector<Point>& x_samples,
                              const NormSpec& norm = NormSpec::euclidean());

struct GrowthFit {
  double beta0 = 1.0;
  double gamma = 0.0;
  std::vector<double> ts;
  std::vector<double> norms;
  std::vector<double> residuals;  // log|phi^t| - (log beta0 + gamma t), all <= 0
};

// Least-squares line on log-norms, shifted up to an upper envelope
// |phi^t| <= beta0 e^{gamma t} over the grid.
GrowthFit growth_fit(const SemigroupFamily& f, const std::vector<double>& t_grid,
                     const NormSpec& norm, int resolution);

// Per-delta sampled sup of hausdorff(hat phi^s(x), hat phi^w(x)) over
// |s - w| <= delta, s >= 0.
std::vector<std::pair<double, double>> continuity_modulus(const SemigroupFamily& f, double w,
                                                          const Point& x,
                                                          const std::vector<double>& delta_grid,
                                                          int samples_per_delta = 8,
                                                          const NormSpec& norm = NormSpec::euclidean());

struct Lemma32Result {
  double lhs = 0.0;       // hausdorff(hat phi^{w+s}(x), hat phi^w(x))
  double rhs = 0.0;       // m_est * |hat phi^w| * |hat phi^s - phi^0| * |x|
  double m_est = 1.0;
  double norm_w = 0.0;
  double deviation_s = 0.0;
  double tol = 0.0;
  bool holds = false;
};

Lemma32Result lemma32_check(const SemigroupFamily& f, double w, double s, const Point& x,
                            const NormSpec& norm, int resolution, double tol = 1e-7,
                            int m_est_pairs = 64);

struct LinUniEstimate {
  double m_est = 1.0;         // clamped below at 1
  double ratio_unclamped = 0.0;
  Point x_star, y_star;       // maximizing pair
};

// Smallest M with hausdorff(phi(x), phi(y)) <= M |phi| |x - y| over sampled
// cone pairs.
LinUniEstimate lemma_linuni_constant(const LinearCorrespondence& phi, int sample_pairs,
                                     const NormSpec& norm, int resolution, unsigned seed = 0);

// sup over the unit sphere of hausdorff(phi^s(x), {x}) for the hat-extended
// member: the deviation-from-identity norm used by the growth machinery.
double deviation_from_identity(const SemigroupFamily& f, double s, const NormSpec& norm,
                               int resolution);

}  // namespace conecorr
