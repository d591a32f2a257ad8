#include "magnitude/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <vector>

namespace magnitude {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_cell(std::string_view cell, std::size_t row, std::size_t col) {
  cell = trim(cell);
  double v = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (cell.empty() || ec != std::errc() || ptr != end)
    throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(col) +
                     ": '" + std::string(cell) + "' is not a number");
  return v;
}

// Rows of numbers; `row` numbers count data rows only.
std::vector<std::vector<double>> parse_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::vector<double> row;
    std::size_t start = 0;
    for (;;) {
      const auto comma = body.find(',', start);
      const auto cell = body.substr(start, comma == std::string_view::npos ? body.size() - start
                                                                            : comma - start);
      row.push_back(parse_cell(cell, rows.size() + 1, row.size() + 1));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

Eigen::MatrixXd parse_distance_matrix_csv(std::istream& in) {
  const auto rows = parse_rows(in);
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("distance matrix is empty");
  Eigen::MatrixXd d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " columns, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) d(i, j) = rows[i][j];
  }
  return d;
}

Eigen::MatrixXd read_distance_matrix_csv(const std::string& path) {
  auto in = open(path);
  return parse_distance_matrix_csv(in);
}

Eigen::MatrixXd parse_point_cloud_csv(std::istream& in) {
  const auto rows = parse_rows(in);
  if (rows.empty()) throw ParseError("point cloud is empty");
  const std::size_t dim = rows.front().size();
  Eigen::MatrixXd p(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim)
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " coordinates, expected " + std::to_string(dim));
    for (std::size_t j = 0; j < dim; ++j) p(i, j) = rows[i][j];
  }
  return p;
}

Eigen::MatrixXd read_point_cloud_csv(const std::string& path) {
  auto in = open(path);
  return parse_point_cloud_csv(in);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const CsvRow& row) {
  out << row.space << ',' << row.param_name << ',' << format_number(row.param_value) << ','
      << row.method << ',' << format_number(row.magnitude) << ','
      << format_number(row.error_estimate) << '\n';
}

}  // namespace magnitude
