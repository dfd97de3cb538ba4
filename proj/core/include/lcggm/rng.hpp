#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace lcggm {

using Rng = std::mt19937_64;

// splitmix64 finalizer; decorrelates nearby seeds.
inline std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic per-stream seed derivation. Streams with the same root but
// different ids are independent for all practical purposes, so replicates
// can run concurrently without sharing generator state.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  return mix_seed(mix_seed(root) ^ mix_seed(stream * 0x9e3779b97f4a7c15ULL + 1));
}

inline Rng make_rng(std::uint64_t root, std::uint64_t stream = 0) {
  return Rng(derive_seed(root, stream));
}

inline Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  return m;
}

inline Eigen::VectorXd gaussian_vector(Eigen::Index size, Rng& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = normal(rng);
  return v;
}

}  // namespace lcggm
