#pragma once

#include <Eigen/Core>

#include "lcggm/types.hpp"

namespace lcggm {

// Sample covariance with divisor n (the estimator used throughout; the
// mean-zero model makes 1/n the natural choice). `center` subtracts column
// means first; `bessel` switches the divisor to n-1 for externally centered
// data ingested from CSV.
SymmetricMatrix sample_covariance(const DataMatrix& data, bool center, bool bessel = false);

// Full symmetric eigendecomposition, eigenvalues descending, deterministic
// sign convention (largest-magnitude entry of each eigenvector positive).
EigenDecomposition sym_eigen(const SymmetricMatrix& m);

// Reassemble sum_i lambda_i v_i v_i^T.
SymmetricMatrix from_eigen(const EigenDecomposition& ed);

MatrixNorms norms(const SymmetricMatrix& m);

// Tr(M)/lambda_1(M), in [1, p] for PSD M. Throws if lambda_1 <= 0.
double effective_dimension(const SymmetricMatrix& m);

// Evaluates both sides of the rank-one inverse-update identity
//   (Omega^{-1} + sigma2 v v^T)^{-1}  ==  Omega - (lk^2 / (lk + 1/sigma2)) v v^T
// where v must be a unit eigenvector of Omega with eigenvalue lk, and
// returns the inf-norm of the difference. Small residuals double as a
// health check of the eigen/inversion stack.
double sherman_morrison_check(const SymmetricMatrix& omega, const Eigen::VectorXd& v, double sigma2);

// Inverse of a positive definite matrix via eigendecomposition. Throws
// numerical_error naming the offending eigenvalue when lambda_min <= 0.
SymmetricMatrix psd_inverse(const SymmetricMatrix& m);

// log det via eigenvalues; throws if not PD.
double logdet_pd(const SymmetricMatrix& m);

// Smallest eigenvalue.
double min_eigenvalue(const SymmetricMatrix& m);

// Pearson correlation matrix of the columns. Throws config_error naming the
// first zero-variance column.
SymmetricMatrix correlation_matrix(const DataMatrix& data);

}  // namespace lcggm
