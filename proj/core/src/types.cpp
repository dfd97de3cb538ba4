#include "lcggm/types.hpp"

namespace lcggm {

DataMatrix::DataMatrix(Eigen::MatrixXd values, std::vector<std::string> column_names)
    : values_(std::move(values)), column_names_(std::move(column_names)) {
  if (values_.rows() < 2 || values_.cols() < 2)
    throw config_error("DataMatrix requires n >= 2 and p >= 2, got " +
                       std::to_string(values_.rows()) + " x " + std::to_string(values_.cols()));
  if (!values_.allFinite()) throw config_error("DataMatrix contains non-finite entries");
  if (!column_names_.empty() && static_cast<Eigen::Index>(column_names_.size()) != values_.cols())
    throw config_error("column_names size does not match column count");
}

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd values, Definiteness tag) : definiteness_(tag) {
  if (values.rows() != values.cols())
    throw config_error("SymmetricMatrix requires a square matrix, got " +
                       std::to_string(values.rows()) + " x " + std::to_string(values.cols()));
  if (!values.allFinite()) throw config_error("SymmetricMatrix contains non-finite entries");
  values_ = 0.5 * (values + values.transpose());
}

SymmetricMatrix SymmetricMatrix::identity(Eigen::Index p) {
  return SymmetricMatrix(Eigen::MatrixXd::Identity(p, p), Definiteness::pd);
}

SymmetricMatrix SymmetricMatrix::zero(Eigen::Index p) {
  return SymmetricMatrix(Eigen::MatrixXd::Zero(p, p), Definiteness::psd);
}

}  // namespace lcggm
