#include "lcggm/lvggm.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "lcggm/errors.hpp"
#include "lcggm/glasso.hpp"
#include "lcggm/matrix_core.hpp"

namespace lcggm {

namespace {

void validate(const LvggmConfig& c) {
  if (c.lambda < 0) throw config_error("lvggm: lambda must be >= 0");
  if (c.gamma < 0) throw config_error("lvggm: gamma must be >= 0");
  if (c.rho <= 0) throw config_error("lvggm: rho must be > 0");
  if (c.tol_abs <= 0 || c.tol_rel <= 0) throw config_error("lvggm: tolerances must be > 0");
  if (c.max_iter < 1) throw config_error("lvggm: max_iter must be >= 1");
}

Eigen::MatrixXd logdet_prox(const Eigen::MatrixXd& arg, double rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(arg);
  if (es.info() != Eigen::Success)
    throw numerical_error("lvggm: eigendecomposition failed in log-det proximal step");
  Eigen::VectorXd d = es.eigenvalues();
  Eigen::VectorXd w(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i)
    w(i) = 0.5 * (d(i) + std::sqrt(d(i) * d(i) + 4.0 / rho));
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

// prox of gamma ||.||_* restricted to the PSD cone: soft-threshold the
// eigenvalues and clamp negatives to zero in one step.
Eigen::MatrixXd psd_nuclear_prox(const Eigen::MatrixXd& arg, double level,
                                 Eigen::VectorXd* eigenvalues_out) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(arg);
  if (es.info() != Eigen::Success)
    throw numerical_error("lvggm: eigendecomposition failed in nuclear proximal step");
  Eigen::VectorXd w = (es.eigenvalues().array() - level).cwiseMax(0.0);
  if (eigenvalues_out) *eigenvalues_out = w;
  if ((w.array() == 0.0).all()) return Eigen::MatrixXd::Zero(arg.rows(), arg.cols());
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

int rank_from_eigenvalues(const Eigen::VectorXd& w, double rel_threshold) {
  const double top = w.maxCoeff();
  if (top <= 0) return 0;
  return static_cast<int>((w.array() > rel_threshold * top).count());
}

}  // namespace

double gamma_kill(const SymmetricMatrix& sigma) {
  EigenDecomposition ed = sym_eigen(sigma);
  return 10.0 * std::max(1.0, ed.eigenvalues.cwiseAbs().maxCoeff());
}

SparseLowRankEstimate lvggm(const SymmetricMatrix& sigma, const LvggmConfig& config,
                            const LvggmWarmStart* warm, LvggmWarmStart* warm_out) {
  validate(config);
  const Eigen::Index p = sigma.dim();
  const Eigen::MatrixXd& s = sigma.values();

  Eigen::MatrixXd lam = Eigen::MatrixXd::Constant(p, p, config.lambda);
  if (!config.penalize_diagonal) lam.diagonal().setZero();

  double rho = config.rho;
  Eigen::MatrixXd omega, l, u;
  if (warm && warm->omega.rows() == p) {
    omega = warm->omega;
    l = warm->l;
    u = warm->u;
  } else {
    Eigen::VectorXd d = (s.diagonal().array() + config.lambda).cwiseMax(1e-8).cwiseInverse();
    omega = d.asDiagonal();
    l = Eigen::MatrixXd::Zero(p, p);
    u = Eigen::MatrixXd::Zero(p, p);
  }

  Eigen::MatrixXd r;
  Eigen::VectorXd l_eigs = Eigen::VectorXd::Zero(p);
  double primal = std::numeric_limits<double>::infinity();
  double dual = std::numeric_limits<double>::infinity();
  int iter = 0;
  for (; iter < config.max_iter; ++iter) {
    r = logdet_prox(omega - l - u - s / rho, rho);

    Eigen::MatrixXd split_prev = omega - l;
    omega = soft_threshold(r + l + u, lam / rho);
    l = psd_nuclear_prox(omega - r - u, config.gamma / rho, &l_eigs);

    u += r - omega + l;

    primal = (r - omega + l).norm();
    dual = rho * ((omega - l) - split_prev).norm();

    const double eps_primal =
        config.tol_abs * p + config.tol_rel * std::max(r.norm(), (omega - l).norm());
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

  SparseLowRankEstimate out;
  out.iterations = iter;
  const double eps_primal =
      config.tol_abs * p + config.tol_rel * std::max(r.norm(), (omega - l).norm());
  const double eps_dual = config.tol_abs * p + config.tol_rel * rho * u.norm();
  out.converged = primal <= eps_primal && dual <= eps_dual;
  out.primal_residual = primal;
  out.dual_residual = dual;

  if (warm_out) {
    warm_out->omega = omega;
    warm_out->l = l;
    warm_out->u = u;
  }

  out.rank_l = rank_from_eigenvalues(l_eigs, config.rank_threshold);
  out.l_inf_norm = l.cwiseAbs().maxCoeff();
  out.l_omega = SymmetricMatrix(l, Definiteness::psd);

  // Feasibility audit: Omega - L must be PD for the estimate to make sense.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(omega - l);
  if (es.info() != Eigen::Success) throw numerical_error("lvggm: final eigendecomposition failed");
  const bool feasible = es.eigenvalues().minCoeff() > 0;
  out.omega = SymmetricMatrix(omega, feasible ? Definiteness::pd : Definiteness::unknown);
  if (feasible) {
    const double logdet_split = es.eigenvalues().array().log().sum();
    out.objective = (omega - l).cwiseProduct(s).sum() - logdet_split +
                    lam.cwiseProduct(omega.cwiseAbs()).sum() + config.gamma * l.trace();
  } else {
    out.objective = std::numeric_limits<double>::infinity();
    out.converged = false;
  }
  return out;
}

std::vector<SparseLowRankEstimate> lvggm_path(const SymmetricMatrix& sigma,
                                              const std::vector<double>& lambdas,
                                              const LvggmConfig& config) {
  if (lambdas.empty()) throw config_error("lvggm_path: empty lambda grid");
  for (size_t i = 1; i < lambdas.size(); ++i)
    if (!(lambdas[i] < lambdas[i - 1]))
      throw config_error("lvggm_path: lambda grid must be strictly descending");

  std::vector<SparseLowRankEstimate> path;
  path.reserve(lambdas.size());
  LvggmWarmStart warm;
  bool have_warm = false;
  for (double lam : lambdas) {
    LvggmConfig c = config;
    c.lambda = lam;
    LvggmWarmStart next;
    path.push_back(lvggm(sigma, c, have_warm ? &warm : nullptr, &next));
    warm = std::move(next);
    have_warm = true;
  }
  return path;
}

}  // namespace lcggm
