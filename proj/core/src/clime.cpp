#include "lcggm/clime.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "lcggm/errors.hpp"
#include "lcggm/matrix_core.hpp"
#include "lcggm/parallel.hpp"
#include "lcggm/simplex.hpp"

namespace lcggm {

namespace {

Eigen::VectorXd clime_column_lp(const Eigen::MatrixXd& s, int i, double lambda_n) {
  const int p = static_cast<int>(s.rows());
  // Split beta = bp - bm, bp/bm >= 0:
  //   min 1^T (bp + bm)  s.t.  -lam <= S(bp - bm) - e_i <= lam.
  Eigen::MatrixXd a(2 * p, 2 * p);
  a.topLeftCorner(p, p) = s;
  a.topRightCorner(p, p) = -s;
  a.bottomLeftCorner(p, p) = -s;
  a.bottomRightCorner(p, p) = s;
  Eigen::VectorXd b(2 * p);
  b.setConstant(lambda_n);
  b(i) += 1.0;
  b(p + i) -= 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Ones(2 * p);

  LpResult lp = solve_lp(a, b, c);
  if (!lp.feasible)
    throw numerical_error("clime: column " + std::to_string(i) +
                          " linear program is infeasible at lambda_n = " +
                          std::to_string(lambda_n));
  return lp.x.head(p) - lp.x.tail(p);
}

// Linearized splitting on
//   min ||beta||_1 + indicator(||z||_inf <= lambda_n)  s.t.  S beta - e_i = z.
// The beta update is a proximal-gradient step on the augmented term, with
// step bound mu >= rho * ||S||_2^2.
Eigen::VectorXd clime_column_splitting(const Eigen::MatrixXd& s, int i, double lambda_n,
                                       double spectral_sq, const ClimeConfig& config,
                                       int* iterations) {
  const int p = static_cast<int>(s.rows());
  const double rho = 1.0;
  const double mu = 1.01 * rho * std::max(spectral_sq, 1e-12);

  Eigen::VectorXd e = Eigen::VectorXd::Zero(p);
  e(i) = 1.0;
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd z = (-e).cwiseMax(-lambda_n).cwiseMin(lambda_n);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(p);

  int iter = 0;
  for (; iter < config.max_iter; ++iter) {
    Eigen::VectorXd resid = s * beta - e - z + u;
    Eigen::VectorXd target = beta - (rho / mu) * (s * resid);
    Eigen::VectorXd beta_next =
        (target.cwiseAbs().array() - 1.0 / mu).cwiseMax(0.0).matrix().cwiseProduct(
            target.unaryExpr([](double x) { return x < 0 ? -1.0 : (x > 0 ? 1.0 : 0.0); }));

    Eigen::VectorXd sb = s * beta_next;
    Eigen::VectorXd z_next = (sb - e + u).cwiseMax(-lambda_n).cwiseMin(lambda_n);
    u += sb - e - z_next;

    const double primal = (sb - e - z_next).lpNorm<Eigen::Infinity>();
    const double change = std::max((beta_next - beta).lpNorm<Eigen::Infinity>(),
                                   (z_next - z).lpNorm<Eigen::Infinity>());
    beta = std::move(beta_next);
    z = std::move(z_next);
    if (primal <= config.tol && change <= config.tol) {
      ++iter;
      break;
    }
  }
  if (iterations) *iterations = iter;
  return beta;
}

}  // namespace

Eigen::VectorXd clime_column(const SymmetricMatrix& sigma_hat, int column, double lambda_n,
                             const ClimeConfig& config) {
  if (lambda_n < 0) throw config_error("clime: lambda_n must be >= 0");
  if (column < 0 || column >= sigma_hat.dim()) throw config_error("clime: column out of range");
  if (config.method == ClimeMethod::lp_exact)
    return clime_column_lp(sigma_hat.values(), column, lambda_n);
  EigenDecomposition ed = sym_eigen(sigma_hat);
  const double spec = ed.eigenvalues.cwiseAbs().maxCoeff();
  return clime_column_splitting(sigma_hat.values(), column, lambda_n, spec * spec, config,
                                nullptr);
}

PrecisionEstimate clime(const SymmetricMatrix& sigma_hat, double lambda_n,
                        const ClimeConfig& config) {
  if (lambda_n < 0) throw config_error("clime: lambda_n must be >= 0");
  const Eigen::Index p = sigma_hat.dim();
  const Eigen::MatrixXd& s = sigma_hat.values();

  double spectral_sq = 0;
  if (config.method == ClimeMethod::splitting) {
    EigenDecomposition ed = sym_eigen(sigma_hat);
    const double spec = ed.eigenvalues.cwiseAbs().maxCoeff();
    spectral_sq = spec * spec;
  }

  Eigen::MatrixXd omega1(p, p);
  std::vector<int> iters(static_cast<size_t>(p), 0);
  parallel_for(static_cast<size_t>(p), config.threads, [&](size_t j) {
    const int col = static_cast<int>(j);
    if (config.method == ClimeMethod::lp_exact)
      omega1.col(col) = clime_column_lp(s, col, lambda_n);
    else
      omega1.col(col) = clime_column_splitting(s, col, lambda_n, spectral_sq, config,
                                               &iters[j]);
  });

  PrecisionEstimate out;
  out.kkt_residual =
      (s * omega1 - Eigen::MatrixXd::Identity(p, p)).cwiseAbs().maxCoeff();
  out.objective = omega1.cwiseAbs().sum();
  out.iterations = *std::max_element(iters.begin(), iters.end());
  out.converged = true;

  // Smaller-magnitude symmetrization.
  Eigen::MatrixXd omega(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double a = omega1(i, j), b = omega1(j, i);
      const double v = std::abs(a) <= std::abs(b) ? a : b;
      omega(i, j) = v;
      omega(j, i) = v;
    }
  }
  SymmetricMatrix sym(std::move(omega));
  sym.set_definiteness(min_eigenvalue(sym) > 0 ? Definiteness::pd : Definiteness::indefinite);
  out.omega = std::move(sym);
  return out;
}

}  // namespace lcggm
