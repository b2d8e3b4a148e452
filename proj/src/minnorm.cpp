#include "conecorr/minnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace conecorr::detail {

namespace {

constexpr double weight_floor = 1e-12;

Point combination(const std::vector<Point>& pts, const std::vector<int>& support,
                  const std::vector<double>& w) {
  Point x = Point::Zero(pts[0].size());
  for (std::size_t i = 0; i < support.size(); ++i) x += w[i] * pts[support[i]];
  return x;
}

// Affine minimizer over the support: minimize |P u|^2 subject to sum u = 1.
// KKT system [G 1; 1' 0] [u; mu] = [0; 1].
bool affine_minimizer(const std::vector<Point>& pts, const std::vector<int>& support,
                      std::vector<double>& u) {
  const int m = static_cast<int>(support.size());
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(m + 1, m + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sys(i, j) = pts[support[i]].dot(pts[support[j]]);
  for (int i = 0; i < m; ++i) {
    sys(i, m) = 1.0;
    sys(m, i) = 1.0;
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  rhs[m] = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
  if (!lu.isInvertible()) return false;
  const Eigen::VectorXd sol = lu.solve(rhs);
  u.assign(sol.data(), sol.data() + m);
  return true;
}

}  // namespace

Point min_norm_point(const std::vector<Point>& pts, double eps) {
  if (pts.empty()) throw Error("min_norm_point: empty point set");
  const int k = static_cast<int>(pts.size());

  int start = 0;
  double best = pts[0].squaredNorm();
  for (int j = 1; j < k; ++j) {
    const double s = pts[j].squaredNorm();
    if (s < best) {
      best = s;
      start = j;
    }
  }

  std::vector<int> support{start};
  std::vector<double> w{1.0};
  Point x = pts[start];

  const int max_major = 16 * k + 64;
  for (int major = 0; major < max_major; ++major) {
    const double xx = x.squaredNorm();
    if (xx < 1e-30) return x;

    int entering = 0;
    double mindot = x.dot(pts[0]);
    for (int j = 1; j < k; ++j) {
      const double dot = x.dot(pts[j]);
      if (dot < mindot) {
        mindot = dot;
        entering = j;
      }
    }
    if (xx - mindot <= eps * std::max(1.0, xx)) return x;
    if (std::find(support.begin(), support.end(), entering) != support.end()) return x;

    support.push_back(entering);
    w.push_back(0.0);

    for (int minor = 0; minor < 16 * k + 64; ++minor) {
      std::vector<double> u;
      if (!affine_minimizer(pts, support, u)) {
        // degenerate support: drop the smallest weight and retry
        const std::size_t drop =
            std::min_element(w.begin(), w.end()) - w.begin();
        support.erase(support.begin() + static_cast<std::ptrdiff_t>(drop));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(drop));
        if (support.empty()) return x;
        continue;
      }

      bool interior = true;
      for (double ui : u)
        if (ui <= weight_floor) interior = false;
      if (interior) {
        w = u;
        x = combination(pts, support, w);
        break;
      }

      double theta = 1.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] <= weight_floor) {
          const double denom = w[i] - u[i];
          if (denom > 1e-18) theta = std::min(theta, w[i] / denom);
        }
      }
      theta = std::clamp(theta, 0.0, 1.0);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = (1.0 - theta) * w[i] + theta * u[i];

      for (std::size_t i = support.size(); i-- > 0;) {
        if (w[i] <= weight_floor) {
          support.erase(support.begin() + static_cast<std::ptrdiff_t>(i));
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      if (support.empty()) return x;
      x = combination(pts, support, w);
    }
  }
  return x;
}

namespace {

constexpr double lp_tol = 1e-11;

struct Tableau {
  Eigen::MatrixXd t;        // m x (n + 1), last column rhs
  Eigen::VectorXd cost;     // reduced-cost row, length n + 1
  std::vector<int> basis;   // basic variable per row
};

// Bland's rule primal simplex on a canonical tableau. Returns false when
// the problem is unbounded.
bool run_simplex(Tableau& tab, int ncols) {
  const int m = static_cast<int>(tab.t.rows());
  for (int iter = 0; iter < 20000; ++iter) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j) {
      if (tab.cost[j] < -lp_tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      const double a = tab.t(r, enter);
      if (a > lp_tol) {
        const double ratio = tab.t(r, ncols) / a;
        if (ratio < best_ratio - lp_tol ||
            (ratio < best_ratio + lp_tol && leave >= 0 && tab.basis[r] < tab.basis[leave])) {
          best_ratio = ratio;
          leave = r;
        }
      }
    }
    if (leave < 0) return false;

    const double pivot = tab.t(leave, enter);
    tab.t.row(leave) /= pivot;
    for (int r = 0; r < m; ++r) {
      if (r == leave) continue;
      const double f = tab.t(r, enter);
      if (f != 0.0) tab.t.row(r) -= f * tab.t.row(leave);
    }
    const double cf = tab.cost[enter];
    if (cf != 0.0) tab.cost -= cf * tab.t.row(leave).transpose();
    tab.basis[leave] = enter;
  }
  throw Error("solve_lp: iteration limit reached");
}

}  // namespace

double solve_lp(Eigen::MatrixXd a, Eigen::VectorXd b, Eigen::VectorXd c) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  for (int r = 0; r < m; ++r) {
    if (b[r] < 0) {
      a.row(r) *= -1.0;
      b[r] *= -1.0;
    }
  }

  // Phase 1 with artificial basis.
  const int total = n + m;
  Tableau tab;
  tab.t = Eigen::MatrixXd::Zero(m, total + 1);
  tab.t.block(0, 0, m, n) = a;
  tab.t.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);
  tab.t.col(total) = b;
  tab.basis.resize(m);
  for (int r = 0; r < m; ++r) tab.basis[r] = n + r;
  tab.cost = Eigen::VectorXd::Zero(total + 1);
  for (int j = 0; j < total + 1; ++j) {
    double cj = (j >= n && j < total) ? 1.0 : 0.0;
    for (int r = 0; r < m; ++r) cj -= tab.t(r, j);  // basic costs are all 1
    if (j < total) tab.cost[j] = cj;
  }
  tab.cost[total] = -b.sum();

  if (!run_simplex(tab, total)) throw Error("solve_lp: phase 1 unbounded");
  if (-tab.cost[total] > 1e-7) throw Error("solve_lp: infeasible");

  // Drive leftover artificials out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < n) continue;
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (std::abs(tab.t(r, j)) > 1e-9) {
        enter = j;
        break;
      }
    }
    if (enter < 0) continue;  // redundant row, harmless
    const double pivot = tab.t(r, enter);
    tab.t.row(r) /= pivot;
    for (int rr = 0; rr < m; ++rr) {
      if (rr == r) continue;
      const double f = tab.t(rr, enter);
      if (f != 0.0) tab.t.row(rr) -= f * tab.t.row(r);
    }
    tab.basis[r] = enter;
  }

  // Phase 2: original costs, artificial columns frozen out.
  tab.cost = Eigen::VectorXd::Zero(total + 1);
  for (int j = 0; j < n; ++j) tab.cost[j] = c[j];
  for (int r = 0; r < m; ++r) {
    const int bv = tab.basis[r];
    const double cb = bv < n ? c[bv] : 0.0;
    if (cb != 0.0) tab.cost -= cb * tab.t.row(r).transpose();
  }
  for (int j = n; j < total; ++j) tab.cost[j] = 1e30;  // keep artificials out

  if (!run_simplex(tab, total)) throw Error("solve_lp: unbounded");
  return -tab.cost[total];
}

double lp_distance_to_hull(const Point& p, const std::vector<Point>& pts, bool inf_norm) {
  const int d = static_cast<int>(p.size());
  const int k = static_cast<int>(pts.size());
  const int nt = inf_norm ? 1 : d;           // bound variables
  const int n = k + nt + 2 * d;              // weights, bounds, slacks
  const int m = 2 * d + 1;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);

  for (int r = 0; r < d; ++r) {
    for (int i = 0; i < k; ++i) {
      a(r, i) = pts[i][r];
      a(d + r, i) = -pts[i][r];
    }
    const int t_col = k + (inf_norm ? 0 : r);
    a(r, t_col) = -1.0;
    a(d + r, t_col) = -1.0;
    a(r, k + nt + r) = 1.0;          // slack for V w - p <= t
    a(d + r, k + nt + d + r) = 1.0;  // slack for p - V w <= t
    b[r] = p[r];
    b[d + r] = -p[r];
  }
  for (int i = 0; i < k; ++i) a(2 * d, i) = 1.0;
  b[2 * d] = 1.0;
  for (int j = 0; j < nt; ++j) c[k + j] = 1.0;

  return std::max(0.0, solve_lp(std::move(a), std::move(b), std::move(c)));
}

}  // namespace conecorr::detail
