#include "lcggm/matrix_io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "lcggm/errors.hpp"

namespace lcggm {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    size_t a = field.find_first_not_of(" \t\r");
    size_t b = field.find_last_not_of(" \t\r");
    fields.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size();
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Eigen::MatrixXd read_csv_matrix(const std::filesystem::path& path,
                                std::vector<std::string>* header) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path.string());

  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  size_t cols = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = split_csv_line(line);
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (size_t j = 0; j < fields.size(); ++j) {
      if (!parse_double(fields[j], row[j])) {
        numeric = false;
        break;
      }
    }
    if (first) {
      first = false;
      if (!numeric) {
        if (header) *header = fields;
        cols = fields.size();
        continue;  // header row
      }
    }
    if (!numeric)
      throw io_error("non-numeric value in " + path.string() + " at data row " +
                     std::to_string(rows.size() + 1));
    if (cols == 0) cols = row.size();
    if (row.size() != cols)
      throw io_error("ragged CSV in " + path.string() + ": expected " + std::to_string(cols) +
                     " fields, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw io_error("no numeric rows in " + path.string());

  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

void write_csv_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m,
                      const std::vector<std::string>& header) {
  std::ostringstream out;
  if (!header.empty()) {
    if (static_cast<Eigen::Index>(header.size()) != m.cols())
      throw io_error("header size does not match column count");
    for (size_t j = 0; j < header.size(); ++j) {
      if (j) out << ',';
      out << header[j];
    }
    out << '\n';
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  atomic_write_text(path, out.str());
}

DataMatrix read_csv_data(const std::filesystem::path& path) {
  std::vector<std::string> header;
  Eigen::MatrixXd m = read_csv_matrix(path, &header);
  return DataMatrix(std::move(m), std::move(header));
}

void write_edge_list(const std::filesystem::path& path,
                     const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream out;
  out << "i,j\n";
  for (const auto& [i, j] : edges) out << i << ',' << j << '\n';
  atomic_write_text(path, out.str());
}

std::vector<std::pair<int, int>> read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path.string());
  std::vector<std::pair<int, int>> edges;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 2)
      throw io_error("edge list row must have two fields in " + path.string());
    double a, b;
    if (!parse_double(fields[0], a) || !parse_double(fields[1], b)) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw io_error("non-numeric edge in " + path.string());
    }
    first = false;
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return edges;
}

void atomic_write_text(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw io_error("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw io_error("rename " + tmp.string() + " -> " + path.string() + ": " + ec.message());
}

}  // namespace lcggm
