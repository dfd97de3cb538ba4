#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lcggm/types.hpp"

namespace lcggm {

// Plain numeric CSV, row-major, optional header row (detected when the first
// line contains a non-numeric token). Values are written with 17 significant
// digits so a write/read round trip is exact.
Eigen::MatrixXd read_csv_matrix(const std::filesystem::path& path,
                                std::vector<std::string>* header = nullptr);
void write_csv_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m,
                      const std::vector<std::string>& header = {});

DataMatrix read_csv_data(const std::filesystem::path& path);

// Edge list CSV: one "i,j" pair per line, zero-based, i < j.
void write_edge_list(const std::filesystem::path& path,
                     const std::vector<std::pair<int, int>>& edges);
std::vector<std::pair<int, int>> read_edge_list(const std::filesystem::path& path);

// Writes to <path>.tmp then renames, so readers never observe partial files.
void atomic_write_text(const std::filesystem::path& path, const std::string& content);

std::string format_double(double v);

}  // namespace lcggm
