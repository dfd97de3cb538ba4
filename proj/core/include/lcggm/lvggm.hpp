#pragma once

#include <Eigen/Core>
#include <vector>

#include "lcggm/types.hpp"

namespace lcggm {

struct LvggmConfig {
  double lambda = 0.1;  // l1 penalty on the sparse part
  double gamma = 0.1;   // nuclear penalty on the low-rank part
  // Unlike glasso, the diagonal defaults to unpenalized: with a penalized
  // diagonal the low-rank block absorbs diagonal mass.
  bool penalize_diagonal = false;
  double rho = 1.0;
  bool adapt_rho = false;
  double tol_abs = 1e-7;
  double tol_rel = 1e-7;
  int max_iter = 3000;
  double zero_threshold = 1e-6;
  double rank_threshold = 1e-6;  // eigenvalues above rank_threshold * lambda_1(L) count
};

struct SparseLowRankEstimate {
  SymmetricMatrix omega;
  SymmetricMatrix l_omega;
  int rank_l = 0;
  double objective = 0;
  int iterations = 0;
  bool converged = false;
  double primal_residual = 0;
  double dual_residual = 0;
  double l_inf_norm = 0;  // spikiness diagnostic, reported only
};

struct LvggmWarmStart {
  Eigen::MatrixXd omega;
  Eigen::MatrixXd l;
  Eigen::MatrixXd u;
};

// Minimize -l(Omega - L; Sigma) + lambda ||Omega||_1 + gamma ||L||_* subject
// to L >= 0 and Omega - L > 0, where l(R; Sigma) = log det R - Tr(R Sigma).
// Three proximal blocks on the consensus constraint R = Omega - L: log-det
// prox for R, soft-thresholding for Omega, PSD-constrained eigenvalue
// soft-thresholding for L. The PD constraint is enforced by the log-det
// barrier; a final audit downgrades infeasible outputs to converged=false.
SparseLowRankEstimate lvggm(const SymmetricMatrix& sigma, const LvggmConfig& config,
                            const LvggmWarmStart* warm = nullptr,
                            LvggmWarmStart* warm_out = nullptr);

// Descending lambda grid at fixed gamma, warm-started; rank_l per entry
// records the rank-stability behavior along the path.
std::vector<SparseLowRankEstimate> lvggm_path(const SymmetricMatrix& sigma,
                                              const std::vector<double>& lambdas,
                                              const LvggmConfig& config);

// A gamma large enough that the low-rank block is identically zero and the
// solve coincides with glasso at the same lambda.
double gamma_kill(const SymmetricMatrix& sigma);

}  // namespace lcggm
