#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "lcggm/types.hpp"

namespace lcggm {

struct PcCorrection {
  int r = 0;
  SymmetricMatrix l_sigma_hat;      // sum of the top r eigencomponents
  SymmetricMatrix sigma_corrected;  // input minus l_sigma_hat
  Eigen::VectorXd removed_eigenvalues;
};

// Removes the leading r eigencomponents of sigma_obs. The full component is
// removed, including whatever share of the signal sits in that direction;
// that bias is the price of the correction and shrinks with the eigengap.
PcCorrection pc_correct(const SymmetricMatrix& sigma_obs, int r);

struct ParallelAnalysisConfig {
  int n_permutations = 50;
  double quantile = 0.95;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct ParallelAnalysisReport {
  int rank = 0;
  Eigen::VectorXd observed_eigenvalues;  // of the sample correlation matrix
  Eigen::VectorXd null_quantiles;        // per index, from column permutations
};

// Horn-style parallel analysis on the sample correlation matrix: each
// permutation replicate independently shuffles every column, and the
// estimated rank is the number of leading observed eigenvalues exceeding
// their per-index null quantile, stopping at the first non-exceedance.
ParallelAnalysisReport parallel_analysis_report(const DataMatrix& data,
                                                const ParallelAnalysisConfig& config = {});
int parallel_analysis(const DataMatrix& data, const ParallelAnalysisConfig& config = {});

struct RankSelection {
  int total_rank_k = 0;
  int r_p = 0;
  int r_l = 0;
  Eigen::VectorXd null_quantiles;
  Eigen::VectorXd observed_eigenvalues;
};

// Splits a total confounder rank k between PC-correction (r_p) and the
// low-rank solver (r_l = k - r_p) at the largest relative eigengap
// (lambda_m - lambda_{m+1}) / lambda_{m+1} within the first k eigenvalues,
// ties to the smallest m. k <= 1 maps to (k, 0).
RankSelection split_rank(const Eigen::VectorXd& eigenvalues_desc, int total_rank_k);

// Parallel analysis for the total rank plus the eigengap split of the
// observed covariance spectrum, in one report.
RankSelection select_ranks(const DataMatrix& data, const ParallelAnalysisConfig& config = {});

// Eigengap nu, effective dimension, and the eigenvalue bound
// M = max(lambda_1, 1/lambda_p) (flagged non-finite when lambda_p <= 0).
SpectralDiagnostics spectral_diagnostics(const SymmetricMatrix& sigma_obs);

}  // namespace lcggm
