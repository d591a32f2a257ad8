#include "magnitude/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <thread>

#include "evaluate.hpp"
#include "magnitude/asymptotics.hpp"

namespace magnitude {

namespace {

const std::map<std::string, SpaceKind>& kinds() {
  static const std::map<std::string, SpaceKind> m{
      {"finite-file", SpaceKind::finite_file},
      {"interval", SpaceKind::interval},
      {"cantor", SpaceKind::cantor},
      {"circle", SpaceKind::circle},
      {"sphere-intrinsic", SpaceKind::sphere_intrinsic},
      {"sphere-subspace", SpaceKind::sphere_subspace},
  };
  return m;
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw ParseError("sweep spec: '" + key + "' expects a number, got '" + v + "'");
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const int i = std::stoi(v, &used);
    if (used == v.size()) return i;
  } catch (const std::exception&) {
  }
  throw ParseError("sweep spec: '" + key + "' expects an integer, got '" + v + "'");
}

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string to_string(SpaceKind kind) {
  for (const auto& [name, k] : kinds())
    if (k == kind) return name;
  return "unknown";
}

std::string natural_param(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::finite_file: return "scale";
    case SpaceKind::interval:
    case SpaceKind::cantor: return "length";
    case SpaceKind::circle: return "circumference";
    case SpaceKind::sphere_intrinsic:
    case SpaceKind::sphere_subspace: return "radius";
  }
  return "value";
}

std::string method_label(const SweepSpec& spec) {
  switch (spec.method) {
    case SweepMethod::closed: return "closed";
    case SweepMethod::quadrature: return "quadrature";
    case SweepMethod::finite:
      return spec.kind == SpaceKind::finite_file ? "finite"
                                                 : "finite-" + std::to_string(spec.finite_points);
  }
  return "unknown";
}

void SweepSpec::validate() const {
  if (param_name != natural_param(kind))
    throw ParseError("sweep spec: space " + to_string(kind) + " sweeps '" + natural_param(kind) +
                     "', not '" + param_name + "'");
  if (!(start < stop)) throw ParseError("sweep spec: need start < stop");
  if (points < 2) throw ParseError("sweep spec: need points >= 2");
  if (spacing == Spacing::geometric && !(start > 0.0))
    throw ParseError("sweep spec: geometric spacing needs start > 0");
  if (!(start > 0.0)) throw ParseError("sweep spec: parameter values must be positive");
  if (tol && !(*tol > 0.0)) throw ParseError("sweep spec: tol must be positive");

  bool ok = false;
  switch (kind) {
    case SpaceKind::finite_file:
      ok = method == SweepMethod::finite;
      if (matrix_path.empty()) throw ParseError("sweep spec: finite-file needs matrix=PATH");
      break;
    case SpaceKind::interval:
    case SpaceKind::cantor: ok = method != SweepMethod::quadrature; break;
    case SpaceKind::circle: ok = true; break;
    case SpaceKind::sphere_intrinsic: ok = method != SweepMethod::finite; break;
    case SpaceKind::sphere_subspace:
      ok = method == SweepMethod::quadrature || (method == SweepMethod::closed && dimension == 2);
      break;
  }
  if (!ok)
    throw ParseError("sweep spec: method " + method_label(*this) + " is not available for " +
                     to_string(kind) + (kind == SpaceKind::sphere_subspace ? " (dim " +
                         std::to_string(dimension) + ")" : ""));
  if (method == SweepMethod::finite && kind != SpaceKind::finite_file) {
    const int min = kind == SpaceKind::cantor ? 0 : 2;
    if (finite_points < min) throw ParseError("sweep spec: finite-N needs a valid N");
  }
  if ((kind == SpaceKind::sphere_intrinsic || kind == SpaceKind::sphere_subspace) && dimension < 1)
    throw ParseError("sweep spec: dim must be >= 1");
}

std::vector<double> SweepSpec::grid() const {
  if (spacing == Spacing::geometric) return geometric_grid(start, stop, points);
  std::vector<double> g(points);
  for (int j = 0; j < points; ++j) g[j] = start + (stop - start) * j / (points - 1);
  g.back() = stop;
  return g;
}

SweepSpec parse_sweep_spec(std::istream& in) {
  SweepSpec spec;
  bool have_space = false, have_start = false, have_stop = false, have_points = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("sweep spec line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key == "space") {
      const auto it = kinds().find(value);
      if (it == kinds().end()) throw ParseError("sweep spec: unknown space '" + value + "'");
      spec.kind = it->second;
      have_space = true;
    } else if (key == "param") {
      spec.param_name = value;
    } else if (key == "start") {
      spec.start = parse_double(key, value);
      have_start = true;
    } else if (key == "stop") {
      spec.stop = parse_double(key, value);
      have_stop = true;
    } else if (key == "points") {
      spec.points = parse_int(key, value);
      have_points = true;
    } else if (key == "spacing") {
      if (value == "linear") spec.spacing = Spacing::linear;
      else if (value == "geometric") spec.spacing = Spacing::geometric;
      else throw ParseError("sweep spec: spacing must be linear or geometric");
    } else if (key == "method") {
      if (value == "closed") spec.method = SweepMethod::closed;
      else if (value == "quadrature") spec.method = SweepMethod::quadrature;
      else if (value == "finite") spec.method = SweepMethod::finite;
      else if (value.rfind("finite-", 0) == 0) {
        spec.method = SweepMethod::finite;
        spec.finite_points = parse_int(key, value.substr(7));
      } else {
        throw ParseError("sweep spec: unknown method '" + value + "'");
      }
    } else if (key == "finite_points") {
      spec.finite_points = parse_int(key, value);
    } else if (key == "dim") {
      spec.dimension = parse_int(key, value);
    } else if (key == "matrix") {
      spec.matrix_path = value;
    } else if (key == "tol") {
      spec.tol = parse_double(key, value);
    } else {
      throw ParseError("sweep spec: unknown key '" + key + "'");
    }
  }
  if (!have_space || !have_start || !have_stop || !have_points)
    throw ParseError("sweep spec: space, start, stop and points are required");
  if (spec.param_name.empty()) spec.param_name = natural_param(spec.kind);
  spec.validate();
  return spec;
}

SweepSpec read_sweep_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sweep spec '" + path + "'");
  return parse_sweep_spec(in);
}

CsvRow evaluate_sweep_point(const SweepSpec& spec, double value, double default_tol) {
  using namespace detail;
  const double tol = spec.tol.value_or(default_tol);
  Estimate e;
  switch (spec.kind) {
    case SpaceKind::finite_file: {
      const MetricSpace base(read_distance_matrix_csv(spec.matrix_path));
      e = finite_weighting(scale(base, value), tol);
      break;
    }
    case SpaceKind::interval:
      if (spec.method == SweepMethod::closed) {
        const auto space = interval_weight_measure(value);
        e = {measure_total_mass(space.measure), max_weight_equation_residual(space)};
      } else {
        e = finite_weighting(finite_approx_line(LineSubset({{0.0, value}}), spec.finite_points),
                             tol);
      }
      break;
    case SpaceKind::cantor:
      if (spec.method == SweepMethod::closed) {
        const SeriesValue s = cantor_magnitude_series_detail(value, tol);
        e = {s.value, s.error_bound};
      } else {
        e = finite_weighting(cantor_endpoints(value, spec.finite_points), tol);
      }
      break;
    case SpaceKind::circle:
      if (spec.method == SweepMethod::closed) {
        e = {circle_magnitude_closed(value), 0.0};
      } else if (spec.method == SweepMethod::quadrature) {
        e = circle_quadrature(value, tol);
      } else {
        const MetricSpace X = circle_points(value, static_cast<Eigen::Index>(spec.finite_points));
        e = {magnitude_homogeneous_finite(X, tol), 0.0};
      }
      break;
    case SpaceKind::sphere_intrinsic:
      e = spec.method == SweepMethod::closed
              ? Estimate{sphere_magnitude_closed(spec.dimension, value), 0.0}
              : sphere_intrinsic_quadrature(spec.dimension, value, tol);
      break;
    case SpaceKind::sphere_subspace:
      e = spec.method == SweepMethod::closed
              ? sphere_subspace_closed(spec.dimension, value)
              : sphere_subspace_quadrature(spec.dimension, value, tol);
      break;
  }
  return {to_string(spec.kind), spec.param_name, value, method_label(spec), e.value, e.error};
}

std::vector<CsvRow> run_sweep(const SweepSpec& spec, double default_tol) {
  spec.validate();
  const std::vector<double> grid = spec.grid();
  std::vector<CsvRow> rows(grid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, grid.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t j = w; j < grid.size(); j += workers)
        rows[j] = evaluate_sweep_point(spec, grid[j], default_tol);
    }));
  for (auto& job : jobs) job.get();
  return rows;
}

}  // namespace magnitude
