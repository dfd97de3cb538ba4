#pragma once

#include <Eigen/Core>

#include "lcggm/glasso.hpp"
#include "lcggm/types.hpp"

namespace lcggm {

enum class ClimeMethod { lp_exact, splitting };

struct ClimeConfig {
  // lp_exact solves the split linear program with the in-repo simplex and is
  // the reference up to p = 200; splitting is a first-order scheme for
  // larger problems, validated against lp_exact.
  ClimeMethod method = ClimeMethod::lp_exact;
  double tol = 1e-8;      // splitting stopping tolerance
  int max_iter = 200000;  // splitting iteration cap
  double zero_threshold = 1e-6;
  int threads = 1;  // columns are independent and may solve concurrently
};

// One column of the constrained l1 estimator:
//   minimize ||beta||_1  subject to  ||sigma_hat beta - e_i||_inf <= lambda_n.
Eigen::VectorXd clime_column(const SymmetricMatrix& sigma_hat, int column, double lambda_n,
                             const ClimeConfig& config = {});

// Column-wise solve followed by the smaller-magnitude symmetrization
//   omega_ij = omega1_ij if |omega1_ij| <= |omega1_ji| else omega1_ji.
// In the returned estimate, kkt_residual holds the constraint residual
// ||sigma_hat omega1 - I||_inf of the pre-symmetrization estimate and
// objective holds its element-wise l1 norm.
PrecisionEstimate clime(const SymmetricMatrix& sigma_hat, double lambda_n,
                        const ClimeConfig& config = {});

}  // namespace lcggm
