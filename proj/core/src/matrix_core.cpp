#include "lcggm/matrix_core.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <sstream>

namespace lcggm {

SymmetricMatrix sample_covariance(const DataMatrix& data, bool center, bool bessel) {
  const Eigen::MatrixXd& x = data.values();
  const double n = static_cast<double>(x.rows());
  Eigen::MatrixXd centered = x;
  if (center) centered.rowwise() -= x.colwise().mean();
  const double divisor = bessel ? n - 1.0 : n;
  Eigen::MatrixXd cov = (centered.transpose() * centered) / divisor;
  return SymmetricMatrix(std::move(cov), Definiteness::psd);
}

EigenDecomposition sym_eigen(const SymmetricMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.values());
  if (solver.info() != Eigen::Success)
    throw numerical_error("symmetric eigendecomposition failed to converge after " +
                          std::to_string(solver.getMaxIterations()) + " sweeps");

  const Eigen::Index p = m.dim();
  EigenDecomposition ed;
  ed.eigenvalues = solver.eigenvalues().reverse();
  ed.eigenvectors = solver.eigenvectors().rowwise().reverse();

  // Sign convention: largest-magnitude entry positive, ties to lowest index.
  for (Eigen::Index j = 0; j < p; ++j) {
    Eigen::Index arg = 0;
    double best = std::abs(ed.eigenvectors(0, j));
    for (Eigen::Index i = 1; i < p; ++i) {
      double a = std::abs(ed.eigenvectors(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (ed.eigenvectors(arg, j) < 0) ed.eigenvectors.col(j) = -ed.eigenvectors.col(j);
  }
  return ed;
}

SymmetricMatrix from_eigen(const EigenDecomposition& ed) {
  Eigen::MatrixXd m =
      ed.eigenvectors * ed.eigenvalues.asDiagonal() * ed.eigenvectors.transpose();
  return SymmetricMatrix(std::move(m));
}

MatrixNorms norms(const SymmetricMatrix& m) {
  MatrixNorms out;
  const Eigen::MatrixXd& v = m.values();
  out.inf_norm = v.cwiseAbs().maxCoeff();
  out.l1_elementwise = v.cwiseAbs().sum();
  out.l1_operator = v.cwiseAbs().colwise().sum().maxCoeff();
  out.frobenius = v.norm();
  EigenDecomposition ed = sym_eigen(m);
  out.spectral = ed.eigenvalues.cwiseAbs().maxCoeff();
  out.nuclear = ed.eigenvalues.cwiseAbs().sum();
  return out;
}

double effective_dimension(const SymmetricMatrix& m) {
  EigenDecomposition ed = sym_eigen(m);
  const double lambda1 = ed.eigenvalues(0);
  if (lambda1 <= 0)
    throw numerical_error("effective dimension undefined: largest eigenvalue " +
                          std::to_string(lambda1) + " is not positive");
  return m.values().trace() / lambda1;
}

double sherman_morrison_check(const SymmetricMatrix& omega, const Eigen::VectorXd& v,
                              double sigma2) {
  if (v.size() != omega.dim()) throw config_error("eigenvector dimension mismatch");
  if (std::abs(v.norm() - 1.0) > 1e-10) throw config_error("v must have unit norm");
  if (sigma2 <= 0) throw config_error("sigma2 must be positive");

  // v is an eigenvector of omega, so its eigenvalue is the Rayleigh quotient.
  const double lambda_k = v.dot(omega.values() * v);

  SymmetricMatrix omega_inv = psd_inverse(omega);
  Eigen::MatrixXd lhs_inner = omega_inv.values() + sigma2 * v * v.transpose();
  SymmetricMatrix lhs = psd_inverse(SymmetricMatrix(std::move(lhs_inner), Definiteness::pd));

  const double coeff = lambda_k * lambda_k / (lambda_k + 1.0 / sigma2);
  Eigen::MatrixXd rhs = omega.values() - coeff * v * v.transpose();

  return (lhs.values() - rhs).cwiseAbs().maxCoeff();
}

SymmetricMatrix psd_inverse(const SymmetricMatrix& m) {
  EigenDecomposition ed = sym_eigen(m);
  const double lambda_min = ed.eigenvalues(m.dim() - 1);
  if (lambda_min <= 0) {
    std::ostringstream msg;
    msg << "matrix is not positive definite: smallest eigenvalue " << lambda_min;
    throw numerical_error(msg.str());
  }
  Eigen::MatrixXd inv = ed.eigenvectors * ed.eigenvalues.cwiseInverse().asDiagonal() *
                        ed.eigenvectors.transpose();
  return SymmetricMatrix(std::move(inv), Definiteness::pd);
}

double logdet_pd(const SymmetricMatrix& m) {
  EigenDecomposition ed = sym_eigen(m);
  const double lambda_min = ed.eigenvalues(m.dim() - 1);
  if (lambda_min <= 0)
    throw numerical_error("log det undefined: smallest eigenvalue " + std::to_string(lambda_min));
  return ed.eigenvalues.array().log().sum();
}

double min_eigenvalue(const SymmetricMatrix& m) {
  EigenDecomposition ed = sym_eigen(m);
  return ed.eigenvalues(m.dim() - 1);
}

SymmetricMatrix correlation_matrix(const DataMatrix& data) {
  const Eigen::MatrixXd& x = data.values();
  Eigen::MatrixXd centered = x.rowwise() - x.colwise().mean();
  Eigen::VectorXd sd = (centered.array().square().colwise().sum() / x.rows()).sqrt();
  for (Eigen::Index j = 0; j < sd.size(); ++j) {
    if (sd(j) <= 0)
      throw config_error("zero-variance column " + std::to_string(j) +
                         " has no correlation structure");
  }
  Eigen::MatrixXd corr =
      sd.cwiseInverse().asDiagonal() * (centered.transpose() * centered / x.rows()) *
      sd.cwiseInverse().asDiagonal();
  return SymmetricMatrix(std::move(corr), Definiteness::psd);
}

}  // namespace lcggm
