#pragma once

#include <Eigen/Core>
#include <vector>

#include "lcggm/types.hpp"

namespace lcggm {

struct GlassoConfig {
  double lambda = 0.1;            // l1 penalty
  bool penalize_diagonal = true;  // objective counts all entries by default
  double rho = 1.0;               // splitting penalty
  bool adapt_rho = false;         // residual-balancing update
  double tol_abs = 1e-7;
  double tol_rel = 1e-7;
  int max_iter = 2000;
  double zero_threshold = 1e-6;  // |omega_ij| above this counts as an edge
};

struct PrecisionEstimate {
  SymmetricMatrix omega;
  double objective = 0;
  int iterations = 0;
  bool converged = false;
  double primal_residual = 0;
  double dual_residual = 0;
  double kkt_residual = 0;
  std::vector<double> objective_history;  // objective at the PD iterate, per iteration
};

// Warm-start state threaded through path solves.
struct GlassoWarmStart {
  Eigen::MatrixXd z;
  Eigen::MatrixXd u;
};

// Minimize Tr(Omega Sigma) - log det(Omega) + lambda ||Omega||_1 over PD
// matrices by operator splitting: a closed-form log-det proximal step
// (eigendecomposition) alternating with element-wise soft-thresholding.
// sigma only needs to be symmetric; indefinite inputs from PC-correction are
// handled by the log-det barrier. With lambda = 0 the input must be PD or
// the problem is unbounded.
PrecisionEstimate glasso(const SymmetricMatrix& sigma, const GlassoConfig& config,
                         const GlassoWarmStart* warm = nullptr,
                         GlassoWarmStart* warm_out = nullptr);

// Solves along a strictly descending lambda grid, warm-starting each solve
// from the previous solution.
std::vector<PrecisionEstimate> glasso_path(const SymmetricMatrix& sigma,
                                           const std::vector<double>& lambdas,
                                           const GlassoConfig& config);

// Smallest lambda for which the glasso solution is diagonal (when the
// diagonal is unpenalized): the largest off-diagonal |sigma_ij|.
double lambda_upper_bound(const SymmetricMatrix& sigma);

// Element-wise soft threshold, shared by the solvers.
Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& m, const Eigen::MatrixXd& level);

}  // namespace lcggm
