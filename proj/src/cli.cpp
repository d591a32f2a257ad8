#include "magnitude/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "evaluate.hpp"
#include "magnitude/asymptotics.hpp"
#include "magnitude/io.hpp"
#include "magnitude/sweep.hpp"

namespace magnitude::cli {

namespace {

struct Options {
  // finite
  std::string matrix_file, points_file;
  double scale_by = 1.0;
  bool skip_triangle = false;
  // interval / cantor / circle
  double length = 0.0;
  int approx = 0;
  bool series = false, iterative = false;
  int depth = 0;
  int circle_points = 0;
  // spheres and asymptotics
  int dim = 2;
  double radius = 0.0;
  std::string metric = "intrinsic";
  std::string method = "closed";
  int orders = 2;
  double tmin = 0.0, tmax = 80.0;
  double epsilon = 0.0;
  // sweep
  std::string spec_file, out_file;
  // shared
  double tol = 0.0;
};

double tol_or(const CLI::App* sub, const Options& o, double builtin) {
  return sub->count("--tol") > 0 ? o.tol : default_tolerance(builtin);
}

void emit(std::ostream& out, const std::vector<CsvRow>& rows) {
  write_csv_header(out);
  for (const auto& r : rows) write_csv_row(out, r);
}

std::vector<CsvRow> run_finite(const CLI::App* sub, const Options& o) {
  const double tol = tol_or(sub, o, kDefaultTolerance);
  const TriangleCheck check = o.skip_triangle ? TriangleCheck::disabled : TriangleCheck::enabled;
  Eigen::MatrixXd d = o.matrix_file.empty() ? euclidean_distances<double>(read_point_cloud_csv(o.points_file))
                                            : read_distance_matrix_csv(o.matrix_file);
  MetricSpace X(std::move(d), check);
  if (sub->count("--scale") > 0) X = scale(X, o.scale_by);
  const Weighting<double> w = weighting(X, tol);
  std::vector<CsvRow> rows{{"finite", "rcond", w.rcond, "weighting", w.sum(), w.residual_norm}};
  if (is_homogeneous_rows(X, tol)) {
    const double h = magnitude_homogeneous_finite(X, tol);
    rows.push_back({"finite", "rcond", w.rcond, "homogeneous", h, std::abs(h - w.sum())});
  }
  return rows;
}

std::vector<CsvRow> run_interval(const CLI::App* sub, const Options& o) {
  const auto space = interval_weight_measure(o.length);
  std::vector<CsvRow> rows{{"interval", "length", o.length, "closed",
                            measure_total_mass(space.measure), max_weight_equation_residual(space)}};
  if (sub->count("--approx") > 0) {
    const double tol = tol_or(sub, o, kDefaultTolerance);
    const auto e = detail::finite_weighting(finite_approx_line(space.carrier, o.approx), tol);
    rows.push_back({"interval", "length", o.length, "finite-" + std::to_string(o.approx), e.value,
                    e.error});
  }
  return rows;
}

std::vector<CsvRow> run_cantor(const CLI::App* sub, const Options& o) {
  if (o.iterative) {
    return {{"cantor", "length", o.length, "iterative-" + std::to_string(o.depth),
             cantor_magnitude_iterative(o.length, o.depth),
             cantor_iterative_error_bound(o.length, o.depth)}};
  }
  const SeriesValue s = cantor_magnitude_series_detail(o.length, tol_or(sub, o, kDefaultTolerance));
  return {{"cantor", "length", o.length, "series", s.value, s.error_bound}};
}

std::vector<CsvRow> run_circle(const CLI::App* sub, const Options& o) {
  std::vector<CsvRow> rows{
      {"circle", "circumference", o.length, "closed", circle_magnitude_closed(o.length), 0.0}};
  if (sub->count("--points") > 0) {
    const double tol = tol_or(sub, o, kDefaultTolerance);
    const MetricSpace X = circle_points(o.length, static_cast<Eigen::Index>(o.circle_points));
    const double h = magnitude_homogeneous_finite(X, tol);
    const double solved = magnitude_finite(X, tol);
    rows.push_back({"circle", "circumference", o.length,
                    "finite-" + std::to_string(o.circle_points), h, std::abs(h - solved)});
  }
  return rows;
}

std::vector<CsvRow> run_sphere(const CLI::App* sub, const Options& o) {
  const bool intrinsic = o.metric == "intrinsic";
  const bool closed = o.method == "closed";
  const double tol = tol_or(sub, o, QuadratureConfig{}.rel_tol);
  detail::Estimate e;
  if (intrinsic)
    e = closed ? detail::Estimate{sphere_magnitude_closed(o.dim, o.radius), 0.0}
               : detail::sphere_intrinsic_quadrature(o.dim, o.radius, tol);
  else
    e = closed ? detail::sphere_subspace_closed(o.dim, o.radius)
               : detail::sphere_subspace_quadrature(o.dim, o.radius, tol);
  return {{intrinsic ? "sphere-intrinsic" : "sphere-subspace", "radius", o.radius, o.method,
           e.value, e.error}};
}

std::vector<CsvRow> run_asymptotics(const CLI::App* sub, const Options& o) {
  if (o.dim < 2) throw DomainError("asymptotics needs --dim >= 2");
  if (o.orders < 1) throw DomainError("--orders must be at least 1");
  const bool intrinsic = o.metric == "intrinsic";
  const double tmin = sub->count("--tmin") > 0 ? o.tmin : (intrinsic ? 10.0 : 20.0);
  const std::vector<double> grid = geometric_grid(tmin, o.tmax, o.orders + 2);
  const int n = o.dim;
  std::vector<CsvRow> rows;

  if (intrinsic) {
    const ScalarFunction f = [n](double t) { return sphere_magnitude_closed(n, t); };
    const AsymptoticExpansion even = extract_coefficients(f, n, 2, o.orders, grid);
    const double lead = even.terms.front().coefficient;
    const AsymptoticExpansion odd = extract_coefficients(
        [&](double t) { return f(t) - lead * std::pow(t, n); }, n - 1, 1, 1, grid);

    std::vector<ExpansionTerm> extracted = even.terms;
    extracted.insert(extracted.begin() + 1, odd.terms.front());
    for (const auto& term : extracted)
      rows.push_back({"sphere-intrinsic", "power", double(term.power), "extracted",
                      term.coefficient, term.error_estimate});

    const AsymptoticExpansion predicted = predicted_expansion_intrinsic_sphere(n);
    for (const auto& term : predicted.terms)
      rows.push_back({"sphere-intrinsic", "power", double(term.power), "predicted",
                      term.coefficient, 0.0});
    const SpherePolynomial p = P_polynomial(n);
    for (const auto& term : even.terms)
      if (term.power < n - 2)
        rows.push_back({"sphere-intrinsic", "power", double(term.power), "predicted-numerator",
                        p.coefficient(term.power), 0.0});
    return rows;
  }

  const double tol = tol_or(sub, o, QuadratureConfig{}.rel_tol);
  const auto cfg = detail::quadrature_with_tol(tol);
  const double lead = sigma(n) / (factorial(n) * omega(n));
  const ScalarFunction relative = [&](double t) {
    return subspace_sphere_magnitude_quadrature(n, t, cfg) / (lead * std::pow(t, n)) - 1.0;
  };
  const AsymptoticExpansion e = extract_coefficients(relative, -2, 2, o.orders, grid);
  for (const auto& term : e.terms)
    rows.push_back({"sphere-subspace", "relative_power", double(term.power), "extracted",
                    term.coefficient, term.error_estimate});
  rows.push_back({"sphere-subspace", "relative_power", -2.0, "predicted",
                  predicted_relative_correction_subspace(n), 0.0});
  return rows;
}

std::vector<CsvRow> run_tube(const Options& o) {
  const TubeVolumes v = tube_volume_check(o.dim, o.radius, o.epsilon);
  const double rel = std::abs(v.direct - v.formula) / std::abs(v.direct);
  return {{"tube", "epsilon", o.epsilon, "direct", v.direct, 0.0},
          {"tube", "epsilon", o.epsilon, "formula", v.formula, rel}};
}

int run_sweep_command(const Options& o, std::ostream& out) {
  const SweepSpec spec = read_sweep_spec(o.spec_file);
  const double builtin =
      spec.method == SweepMethod::quadrature ? QuadratureConfig{}.rel_tol : kDefaultTolerance;
  const std::vector<CsvRow> rows = run_sweep(spec, default_tolerance(builtin));
  if (o.out_file.empty()) {
    emit(out, rows);
    return kExitOk;
  }
  std::ofstream file(o.out_file);
  if (!file) throw ParseError("cannot write '" + o.out_file + "'");
  emit(file, rows);
  return kExitOk;
}

}  // namespace

double default_tolerance(double builtin) {
  const char* env = std::getenv("MAGNITUDE_DEFAULT_TOL");
  if (env == nullptr || *env == '\0') return builtin;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0))
    throw ParseError(std::string("MAGNITUDE_DEFAULT_TOL is not a positive number: '") + env + "'");
  return v;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magnitude of metric spaces: finite spaces, line subsets, circles and spheres."};
  app.name("magnitude");
  app.require_subcommand(1);
  Options o;

  auto* finite = app.add_subcommand("finite", "Magnitude of a finite metric space from a CSV file");
  auto* matrix_opt = finite->add_option("--matrix", o.matrix_file, "Square distance-matrix CSV")
                         ->check(CLI::ExistingFile);
  auto* points_opt =
      finite->add_option("--points", o.points_file, "Point-cloud CSV (Euclidean metric)")
          ->check(CLI::ExistingFile);
  matrix_opt->excludes(points_opt);
  finite->add_option("--tol", o.tol, "Solver tolerance (default 1e-10)")->check(CLI::PositiveNumber);
  finite->add_option("--scale", o.scale_by, "Multiply all distances by this factor")
      ->check(CLI::PositiveNumber);
  finite->add_flag("--no-triangle-check", o.skip_triangle, "Skip the O(n^3) triangle check");

  auto* interval = app.add_subcommand("interval", "Closed interval [0, L]");
  interval->add_option("--length", o.length, "Interval length L")->required()->check(CLI::PositiveNumber);
  interval->add_option("--approx", o.approx, "Also solve a finite grid of N points")
      ->check(CLI::Range(2, 1 << 14));
  interval->add_option("--tol", o.tol, "Solver tolerance for --approx")->check(CLI::PositiveNumber);

  auto* cantor = app.add_subcommand("cantor", "Middle-thirds Cantor set of length L");
  cantor->add_option("--length", o.length, "Length L")->required()->check(CLI::PositiveNumber);
  auto* series_flag = cantor->add_flag("--series", o.series, "Truncated series (default)");
  auto* iter_flag = cantor->add_flag("--iterative", o.iterative, "Stage-by-stage hole removal");
  series_flag->excludes(iter_flag);
  auto* tol_opt = cantor->add_option("--tol", o.tol, "Series truncation tolerance")
                      ->check(CLI::PositiveNumber);
  auto* depth_opt = cantor->add_option("--depth", o.depth, "Number of stages for --iterative")
                        ->check(CLI::NonNegativeNumber);
  depth_opt->needs(iter_flag);
  iter_flag->needs(depth_opt);
  tol_opt->excludes(iter_flag);

  auto* circle = app.add_subcommand("circle", "Circle of circumference L, arc-length metric");
  circle->add_option("--circumference", o.length, "Circumference L")->required()->check(CLI::PositiveNumber);
  circle->add_option("--points", o.circle_points, "Also evaluate N evenly spaced points")
      ->check(CLI::Range(1, 1 << 14));
  circle->add_option("--tol", o.tol, "Solver tolerance for --points")->check(CLI::PositiveNumber);

  auto* sphere = app.add_subcommand("sphere", "n-sphere of radius R");
  sphere->add_option("--dim", o.dim, "Sphere dimension n")->required()->check(CLI::Range(0, 150));
  sphere->add_option("--radius", o.radius, "Radius R")->required()->check(CLI::PositiveNumber);
  sphere->add_option("--metric", o.metric, "intrinsic | subspace")
      ->check(CLI::IsMember({"intrinsic", "subspace"}));
  sphere->add_option("--method", o.method, "closed | quadrature")
      ->check(CLI::IsMember({"closed", "quadrature"}));
  sphere->add_option("--tol", o.tol, "Quadrature relative tolerance (default 1e-12)")
      ->check(CLI::PositiveNumber);

  auto* asym = app.add_subcommand("asymptotics", "Extracted vs predicted large-radius coefficients");
  asym->add_option("--dim", o.dim, "Sphere dimension n >= 2")->required()->check(CLI::Range(2, 60));
  asym->add_option("--metric", o.metric, "intrinsic | subspace")
      ->check(CLI::IsMember({"intrinsic", "subspace"}));
  asym->add_option("--orders", o.orders, "Number of coefficients to extract (default 2)")
      ->check(CLI::Range(1, 8));
  asym->add_option("--tmin", o.tmin, "Smallest scale (default 10 intrinsic, 20 subspace)")
      ->check(CLI::PositiveNumber);
  asym->add_option("--tmax", o.tmax, "Largest scale (default 80)")->check(CLI::PositiveNumber);
  asym->add_option("--tol", o.tol, "Quadrature relative tolerance (subspace)")
      ->check(CLI::PositiveNumber);

  auto* tube = app.add_subcommand("tube-check", "Tube volume around S^n_R: direct vs intrinsic volumes");
  tube->add_option("--dim", o.dim, "Sphere dimension n >= 1")->required()->check(CLI::Range(1, 150));
  tube->add_option("--radius", o.radius, "Radius R")->required()->check(CLI::PositiveNumber);
  tube->add_option("--epsilon", o.epsilon, "Tube radius, 0 < epsilon < R")->required();

  auto* sweep = app.add_subcommand("sweep", "Run a key=value sweep spec and write CSV");
  sweep->add_option("--spec", o.spec_file, "Sweep spec file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", o.out_file, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*finite) {
      if (o.matrix_file.empty() && o.points_file.empty())
        throw ParseError("finite needs --matrix FILE or --points FILE");
      emit(out, run_finite(finite, o));
    } else if (*interval) {
      emit(out, run_interval(interval, o));
    } else if (*cantor) {
      emit(out, run_cantor(cantor, o));
    } else if (*circle) {
      emit(out, run_circle(circle, o));
    } else if (*sphere) {
      emit(out, run_sphere(sphere, o));
    } else if (*asym) {
      emit(out, run_asymptotics(asym, o));
    } else if (*tube) {
      emit(out, run_tube(o));
    } else if (*sweep) {
      return run_sweep_command(o, out);
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalError;
  }
}

}  // namespace magnitude::cli
