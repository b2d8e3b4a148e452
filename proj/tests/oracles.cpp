#include "oracles.hpp"

#include <algorithm>
#include <limits>

namespace oracles {

namespace {

// barycentric solve on a fixed subset: p = sum w_i q_i, sum w = 1
bool subset_reproduces(const Point& p, const std::vector<Point>& q, double tol) {
  const int k = static_cast<int>(q.size());
  const int d = static_cast<int>(p.size());
  Eigen::MatrixXd sys(d + 1, k);
  Eigen::VectorXd rhs(d + 1);
  for (int i = 0; i < k; ++i) {
    sys.col(i).head(d) = q[static_cast<std::size_t>(i)];
    sys(d, i) = 1.0;
  }
  rhs.head(d) = p;
  rhs[d] = 1.0;
  const Eigen::VectorXd w = sys.fullPivHouseholderQr().solve(rhs);
  if ((sys * w - rhs).norm() > tol) return false;
  return w.minCoeff() >= -tol;
}

void subsets(std::size_t n, int size, std::vector<std::size_t>& pick,
             const std::function<bool(const std::vector<std::size_t>&)>& visit, std::size_t from,
             bool& stop) {
  if (stop) return;
  if (static_cast<int>(pick.size()) == size) {
    stop = visit(pick);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    pick.push_back(i);
    subsets(n, size, pick, visit, i + 1, stop);
    pick.pop_back();
    if (stop) return;
  }
}

std::vector<Point> dense_samples(const CompactSet& s, int steps) {
  if (!s.convex || s.size() == 1) return s.points;
  std::vector<Point> samples;
  weight_grid(static_cast<int>(s.size()), steps,
              [&](const std::vector<double>& w) { samples.push_back(combine(s.points, w)); });
  return samples;
}

}  // namespace

bool in_hull(const Point& p, const std::vector<Point>& pts, double tol) {
  const int d = static_cast<int>(p.size());
  for (int size = 1; size <= d + 1 && size <= static_cast<int>(pts.size()); ++size) {
    bool stop = false;
    std::vector<std::size_t> pick;
    subsets(pts.size(), size, pick,
            [&](const std::vector<std::size_t>& idx) {
              std::vector<Point> q;
              q.reserve(idx.size());
              for (std::size_t i : idx) q.push_back(pts[i]);
              return subset_reproduces(p, q, tol);
            },
            0, stop);
    if (stop) return true;
  }
  return false;
}

double excess_by_sampling(const CompactSet& a, const CompactSet& b, const NormSpec& norm,
                          int steps) {
  const std::vector<Point> sources = dense_samples(a, steps);
  const std::vector<Point> targets = dense_samples(b, steps);
  double worst = 0.0;
  for (const Point& from : sources) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& to : targets)
      best = std::min(best, conecorr::norm_value(norm, from - to));
    worst = std::max(worst, best);
  }
  return worst;
}

double set_norm_by_sampling(const CompactSet& a, const NormSpec& norm, int steps) {
  double worst = 0.0;
  for (const Point& p : dense_samples(a, steps))
    worst = std::max(worst, conecorr::norm_value(norm, p));
  return worst;
}

double distance_by_sampling(const Point& p, const CompactSet& b, const NormSpec& norm,
                            int steps) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& q : dense_samples(b, steps))
    best = std::min(best, conecorr::norm_value(norm, p - q));
  return best;
}

}  // namespace oracles
