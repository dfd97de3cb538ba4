#pragma once

#include <Eigen/Core>

namespace lcggm {

struct LpResult {
  Eigen::VectorXd x;
  double objective = 0;
  bool feasible = false;
  bool optimal = false;
  int pivots = 0;
};

// Dense two-phase primal simplex for
//   minimize c^T x  subject to  A x <= b,  x >= 0.
// Dantzig pricing with a Bland's-rule fallback after stalling, so the method
// terminates on degenerate instances. Intended for the small dense programs
// produced by column-wise l1 estimation (hundreds of variables).
LpResult solve_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  int max_pivots = 50000);

}  // namespace lcggm
