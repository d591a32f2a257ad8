#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "magnitude/metric_core.hpp"

namespace magnitude {

/// Square numeric CSV, one row per line. Blank lines and lines starting with
/// '#' are skipped. Errors name the offending row and column (1-based).
Eigen::MatrixXd parse_distance_matrix_csv(std::istream& in);
Eigen::MatrixXd read_distance_matrix_csv(const std::string& path);

/// One point per line, coordinates comma-separated; all rows same width.
Eigen::MatrixXd parse_point_cloud_csv(std::istream& in);
Eigen::MatrixXd read_point_cloud_csv(const std::string& path);

/// Round-trip formatting: 17 significant digits.
std::string format_number(double v);

inline constexpr std::string_view kCsvHeader =
    "space,param_name,param_value,method,magnitude,error_estimate";

struct CsvRow {
  std::string space;
  std::string param_name;
  double param_value{};
  std::string method;
  double magnitude{};
  double error_estimate{};
};

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const CsvRow& row);

}  // namespace magnitude
