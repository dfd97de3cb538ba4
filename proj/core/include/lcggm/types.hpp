#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "lcggm/errors.hpp"

namespace lcggm {

enum class Definiteness { unknown, indefinite, psd, pd };

// n x p observations, rows are samples. Requires n >= 2, p >= 2, all finite.
class DataMatrix {
 public:
  DataMatrix() = default;
  explicit DataMatrix(Eigen::MatrixXd values, std::vector<std::string> column_names = {});

  const Eigen::MatrixXd& values() const { return values_; }
  Eigen::Index n() const { return values_.rows(); }
  Eigen::Index p() const { return values_.cols(); }
  const std::vector<std::string>& column_names() const { return column_names_; }

 private:
  Eigen::MatrixXd values_;
  std::vector<std::string> column_names_;
};

// p x p real symmetric matrix. Symmetrized as (M + M^T)/2 on construction,
// which makes values(i,j) == values(j,i) exact in floating point. The
// definiteness tag is advisory; callers revalidate where it matters.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(Eigen::MatrixXd values, Definiteness tag = Definiteness::unknown);

  static SymmetricMatrix identity(Eigen::Index p);
  static SymmetricMatrix zero(Eigen::Index p);

  const Eigen::MatrixXd& values() const { return values_; }
  Eigen::Index dim() const { return values_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return values_(i, j); }

  Definiteness definiteness() const { return definiteness_; }
  void set_definiteness(Definiteness tag) { definiteness_ = tag; }

 private:
  Eigen::MatrixXd values_;
  Definiteness definiteness_ = Definiteness::unknown;
};

// Eigenvalues descending, eigenvectors as orthonormal columns in matching
// order. Sign convention: the largest-magnitude entry of each eigenvector is
// positive (ties broken by lowest index).
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

struct MatrixNorms {
  double inf_norm = 0;        // max |M_ij|
  double l1_elementwise = 0;  // sum |M_ij|
  double l1_operator = 0;     // max column absolute sum
  double frobenius = 0;
  double spectral = 0;  // largest |eigenvalue|
  double nuclear = 0;   // sum of singular values
};

struct SpectralDiagnostics {
  double eigengap_nu = 0;          // lambda_1 - lambda_2
  double effective_dimension = 0;  // Tr(M) / lambda_1
  double eigenvalue_bound_M = 0;   // max(lambda_1, 1/lambda_p); inf if lambda_p <= 0
  bool bound_finite = true;
};

}  // namespace lcggm
