#pragma once

// Parameter sweeps over one space family, written as CSV.
//
// Spec files are flat `key=value` text, one pair per line, '#' comments:
//
//   space=sphere-intrinsic     # finite-file | interval | cantor | circle
//                              # | sphere-intrinsic | sphere-subspace
//   param=radius               # optional; must match the space kind
//   start=0.5
//   stop=10
//   points=20
//   spacing=geometric          # linear | geometric
//   method=closed              # closed | quadrature | finite-N
//   dim=3                      # spheres only
//   matrix=distances.csv       # finite-file only
//   tol=1e-12                  # optional

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "magnitude/io.hpp"

namespace magnitude {

enum class SpaceKind { finite_file, interval, cantor, circle, sphere_intrinsic, sphere_subspace };
enum class Spacing { linear, geometric };
enum class SweepMethod { closed, quadrature, finite };

struct SweepSpec {
  SpaceKind kind = SpaceKind::interval;
  std::string param_name;  ///< filled from the kind when absent
  double start{};
  double stop{};
  int points{};
  Spacing spacing = Spacing::linear;
  SweepMethod method = SweepMethod::closed;
  int finite_points{};  ///< N of finite-N (cantor: endpoint level)
  int dimension = 2;
  std::string matrix_path;
  std::optional<double> tol;

  void validate() const;
  std::vector<double> grid() const;
};

std::string to_string(SpaceKind kind);
std::string method_label(const SweepSpec& spec);
/// Parameter name each space kind sweeps over.
std::string natural_param(SpaceKind kind);

SweepSpec parse_sweep_spec(std::istream& in);
SweepSpec read_sweep_spec(const std::string& path);

/// Magnitude and error estimate for one grid value.
CsvRow evaluate_sweep_point(const SweepSpec& spec, double value, double default_tol);

/// Grid points are evaluated concurrently; row order follows the grid.
std::vector<CsvRow> run_sweep(const SweepSpec& spec, double default_tol);

}  // namespace magnitude
