#include "lcggm/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "lcggm/errors.hpp"

namespace lcggm {

namespace {

constexpr double kEps = 1e-9;

struct Tableau {
  Eigen::MatrixXd t;        // m rows of constraints, last column = rhs
  Eigen::RowVectorXd cost;  // reduced-cost row, last entry = -objective
  std::vector<int> basis;   // basic variable per row
  int m = 0;
  int n = 0;  // structural + slack (+ artificial) columns

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      const double f = t(r, col);
      if (f != 0.0) t.row(r) -= f * t.row(row);
    }
    const double f = cost(col);
    if (f != 0.0) cost -= f * t.row(row);
    basis[static_cast<size_t>(row)] = col;
  }

  // Returns false at optimality, throws on unboundedness.
  bool step(bool bland, int allowed_cols) {
    int enter = -1;
    if (bland) {
      for (int j = 0; j < allowed_cols; ++j) {
        if (cost(j) < -kEps) {
          enter = j;
          break;
        }
      }
    } else {
      double best = -kEps;
      for (int j = 0; j < allowed_cols; ++j) {
        if (cost(j) < best) {
          best = cost(j);
          enter = j;
        }
      }
    }
    if (enter < 0) return false;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      const double a = t(r, enter);
      if (a > kEps) {
        const double ratio = t(r, n) / a;
        if (ratio < best_ratio - kEps ||
            (ratio < best_ratio + kEps && leave >= 0 &&
             basis[static_cast<size_t>(r)] < basis[static_cast<size_t>(leave)])) {
          best_ratio = ratio;
          leave = r;
        }
      }
    }
    if (leave < 0) throw numerical_error("simplex: problem is unbounded");
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpResult solve_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  int max_pivots) {
  const int m = static_cast<int>(a.rows());
  const int nx = static_cast<int>(a.cols());
  if (b.size() != m || c.size() != nx) throw config_error("solve_lp: dimension mismatch");

  std::vector<int> art_rows;
  for (int r = 0; r < m; ++r)
    if (b(r) < 0) art_rows.push_back(r);
  const int na = static_cast<int>(art_rows.size());
  const int n = nx + m + na;

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t = Eigen::MatrixXd::Zero(m, n + 1);
  tab.basis.resize(static_cast<size_t>(m));

  // x columns, slack columns, artificial columns, rhs. Rows with negative
  // rhs are negated so every basis entry starts at a nonnegative value.
  int art = 0;
  for (int r = 0; r < m; ++r) {
    const bool flip = b(r) < 0;
    const double sgn = flip ? -1.0 : 1.0;
    tab.t.block(r, 0, 1, nx) = sgn * a.row(r);
    tab.t(r, nx + r) = sgn;  // slack
    tab.t(r, n) = sgn * b(r);
    if (flip) {
      tab.t(r, nx + m + art) = 1.0;
      tab.basis[static_cast<size_t>(r)] = nx + m + art;
      ++art;
    } else {
      tab.basis[static_cast<size_t>(r)] = nx + r;
    }
  }

  LpResult out;
  int pivots = 0;
  auto run = [&](int allowed_cols) {
    double last_obj = std::numeric_limits<double>::infinity();
    int stall = 0;
    bool bland = false;
    while (true) {
      if (pivots >= max_pivots) throw numerical_error("simplex: pivot limit exceeded");
      if (!tab.step(bland, allowed_cols)) break;
      ++pivots;
      const double obj = -tab.cost(n);
      if (obj < last_obj - 1e-12) {
        last_obj = obj;
        stall = 0;
        bland = false;
      } else if (++stall > 2 * (tab.m + allowed_cols)) {
        bland = true;  // anti-cycling
      }
    }
  };

  if (na > 0) {
    // Phase 1: minimize the sum of artificials.
    tab.cost = Eigen::RowVectorXd::Zero(n + 1);
    for (int j = nx + m; j < n; ++j) tab.cost(j) = 1.0;
    for (int r = 0; r < m; ++r)
      if (tab.basis[static_cast<size_t>(r)] >= nx + m) tab.cost -= tab.t.row(r);
    run(n);
    if (-tab.cost(n) > 1e-7) {
      out.feasible = false;
      out.pivots = pivots;
      return out;
    }
    // Drive any artificial still basic at zero out of the basis.
    for (int r = 0; r < m; ++r) {
      if (tab.basis[static_cast<size_t>(r)] >= nx + m) {
        int col = -1;
        for (int j = 0; j < nx + m; ++j) {
          if (std::abs(tab.t(r, j)) > kEps) {
            col = j;
            break;
          }
        }
        if (col >= 0) tab.pivot(r, col);
        // else: redundant row, harmless to leave in place
      }
    }
  }

  // Phase 2 with the original costs; artificial columns are barred from
  // entering by restricting pricing to the first nx + m columns.
  tab.cost = Eigen::RowVectorXd::Zero(n + 1);
  tab.cost.head(nx) = c.transpose();
  for (int r = 0; r < m; ++r) {
    const int bv = tab.basis[static_cast<size_t>(r)];
    const double cb = bv < nx ? c(bv) : 0.0;
    if (cb != 0.0) tab.cost -= cb * tab.t.row(r);
  }
  run(nx + m);

  out.feasible = true;
  out.optimal = true;
  out.pivots = pivots;
  out.x = Eigen::VectorXd::Zero(nx);
  for (int r = 0; r < m; ++r) {
    const int bv = tab.basis[static_cast<size_t>(r)];
    if (bv < nx) out.x(bv) = tab.t(r, n);
  }
  out.objective = c.dot(out.x);
  return out;
}

}  // namespace lcggm
