#include "lcggm/glasso.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "lcggm/errors.hpp"
#include "lcggm/matrix_core.hpp"

namespace lcggm {

namespace {

void validate(const GlassoConfig& c) {
  if (c.lambda < 0) throw config_error("glasso: lambda must be >= 0");
  if (c.rho <= 0) throw config_error("glasso: rho must be > 0");
  if (c.tol_abs <= 0 || c.tol_rel <= 0) throw config_error("glasso: tolerances must be > 0");
  if (c.max_iter < 1) throw config_error("glasso: max_iter must be >= 1");
}

Eigen::MatrixXd penalty_matrix(Eigen::Index p, double lambda, bool penalize_diagonal) {
  Eigen::MatrixXd lam = Eigen::MatrixXd::Constant(p, p, lambda);
  if (!penalize_diagonal) lam.diagonal().setZero();
  return lam;
}

// argmin_X  Tr(X Sigma) - log det X + (rho/2) ||X - A||_F^2  has the closed
// form Q diag(w) Q^T where QDQ^T = A - Sigma/rho and
// w_i = (d_i + sqrt(d_i^2 + 4/rho)) / 2. Returns log det X as a byproduct.
Eigen::MatrixXd logdet_prox(const Eigen::MatrixXd& a_minus_sigma_over_rho, double rho,
                            double* logdet) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a_minus_sigma_over_rho);
  if (es.info() != Eigen::Success)
    throw numerical_error("glasso: eigendecomposition failed in log-det proximal step");
  Eigen::VectorXd d = es.eigenvalues();
  Eigen::VectorXd w(d.size());
  double ld = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    w(i) = 0.5 * (d(i) + std::sqrt(d(i) * d(i) + 4.0 / rho));
    ld += std::log(w(i));
  }
  if (logdet) *logdet = ld;
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& m, const Eigen::MatrixXd& level) {
  return (m.cwiseAbs() - level).cwiseMax(0.0).cwiseProduct(
      m.unaryExpr([](double x) { return x < 0 ? -1.0 : (x > 0 ? 1.0 : 0.0); }));
}

double lambda_upper_bound(const SymmetricMatrix& sigma) {
  const Eigen::MatrixXd& s = sigma.values();
  double best = 0;
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = i + 1; j < s.cols(); ++j) best = std::max(best, std::abs(s(i, j)));
  return best;
}

PrecisionEstimate glasso(const SymmetricMatrix& sigma, const GlassoConfig& config,
                         const GlassoWarmStart* warm, GlassoWarmStart* warm_out) {
  validate(config);
  const Eigen::Index p = sigma.dim();
  const Eigen::MatrixXd& s = sigma.values();
  const Eigen::MatrixXd lam = penalty_matrix(p, config.lambda, config.penalize_diagonal);

  double rho = config.rho;
  Eigen::MatrixXd z, u;
  if (warm && warm->z.rows() == p) {
    z = warm->z;
    u = warm->u;
  } else {
    // Diagonal start keeps the first prox step well scaled.
    Eigen::VectorXd d = (s.diagonal().array() + config.lambda).cwiseMax(1e-8).cwiseInverse();
    z = d.asDiagonal();
    u = Eigen::MatrixXd::Zero(p, p);
  }

  PrecisionEstimate out;
  out.objective_history.reserve(static_cast<size_t>(std::min(config.max_iter, 1024)));

  Eigen::MatrixXd omega;
  double primal = std::numeric_limits<double>::infinity();
  double dual = std::numeric_limits<double>::infinity();
  int iter = 0;
  for (; iter < config.max_iter; ++iter) {
    double logdet_omega = 0;
    omega = logdet_prox(z - u - s / rho, rho, &logdet_omega);

    Eigen::MatrixXd z_prev = std::move(z);
    z = soft_threshold(omega + u, lam / rho);
    u += omega - z;

    primal = (omega - z).norm();
    dual = rho * (z - z_prev).norm();

    out.objective_history.push_back((omega.cwiseProduct(s)).sum() - logdet_omega +
                                    lam.cwiseProduct(omega.cwiseAbs()).sum());

    const double eps_primal =
        config.tol_abs * p + config.tol_rel * std::max(omega.norm(), z.norm());
    const double eps_dual = config.tol_abs * p + config.tol_rel * rho * u.norm();
    if (primal <= eps_primal && dual <= eps_dual) {
      ++iter;
      break;
    }

    if (config.adapt_rho && iter % 10 == 9) {
      if (primal > 10 * dual) {
        rho *= 2;
        u *= 0.5;
      } else if (dual > 10 * primal) {
        rho *= 0.5;
        u *= 2;
      }
    }
  }

  out.iterations = iter;
  out.converged = primal <= config.tol_abs * p + config.tol_rel * std::max(omega.norm(), z.norm()) &&
                  dual <= config.tol_abs * p + config.tol_rel * rho * u.norm();
  out.primal_residual = primal;
  out.dual_residual = dual;

  if (warm_out) {
    warm_out->z = z;
    warm_out->u = u;
  }

  // The soft-threshold iterate carries the exact sparsity pattern; audit its
  // definiteness and compute objective and KKT residual at it.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(z);
  if (es.info() != Eigen::Success) throw numerical_error("glasso: final eigendecomposition failed");
  const double min_eig = es.eigenvalues().minCoeff();
  const bool pd = min_eig > 0;

  out.omega = SymmetricMatrix(z, pd ? Definiteness::pd : Definiteness::indefinite);
  if (pd) {
    const double logdet_z = es.eigenvalues().array().log().sum();
    out.objective =
        z.cwiseProduct(s).sum() - logdet_z + lam.cwiseProduct(z.cwiseAbs()).sum();
    Eigen::MatrixXd z_inv = es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
                            es.eigenvectors().transpose();
    Eigen::MatrixXd r = s - z_inv;
    double kkt = 0;
    for (Eigen::Index i = 0; i < p; ++i) {
      for (Eigen::Index j = 0; j < p; ++j) {
        const double zij = z(i, j);
        double res;
        if (std::abs(zij) > config.zero_threshold)
          res = std::abs(r(i, j) + lam(i, j) * (zij > 0 ? 1.0 : -1.0));
        else
          res = std::max(0.0, std::abs(r(i, j)) - lam(i, j));
        kkt = std::max(kkt, res);
      }
    }
    out.kkt_residual = kkt;
  } else {
    out.objective = std::numeric_limits<double>::infinity();
    out.kkt_residual = std::numeric_limits<double>::infinity();
    out.converged = false;
  }
  return out;
}

std::vector<PrecisionEstimate> glasso_path(const SymmetricMatrix& sigma,
                                           const std::vector<double>& lambdas,
                                           const GlassoConfig& config) {
  if (lambdas.empty()) throw config_error("glasso_path: empty lambda grid");
  for (size_t i = 1; i < lambdas.size(); ++i)
    if (!(lambdas[i] < lambdas[i - 1]))
      throw config_error("glasso_path: lambda grid must be strictly descending");

  std::vector<PrecisionEstimate> path;
  path.reserve(lambdas.size());
  GlassoWarmStart warm;
  bool have_warm = false;
  for (double lam : lambdas) {
    GlassoConfig c = config;
    c.lambda = lam;
    GlassoWarmStart next;
    path.push_back(glasso(sigma, c, have_warm ? &warm : nullptr, &next));
    warm = std::move(next);
    have_warm = true;
  }
  return path;
}

}  // namespace lcggm
