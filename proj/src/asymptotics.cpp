#include "magnitude/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "magnitude/sphere_forms.hpp"

namespace magnitude {

std::optional<double> AsymptoticExpansion::coefficient(int power) const {
  for (const auto& term : terms)
    if (term.power == power) return term.coefficient;
  return std::nullopt;
}

double AsymptoticExpansion::operator()(double t) const {
  double v = 0.0;
  for (const auto& term : terms) v += term.coefficient * std::pow(t, term.power);
  return v;
}

double GermExpansion::operator()(double r) const {
  double v = 0.0;
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) v = v * r + *it;
  return v;
}

double watson_partial_sum(const GermExpansion& germ, double t) {
  if (!(t > 0.0)) throw DomainError("Watson partial sum needs t > 0");
  double total = 0.0;
  double fact = 1.0;        // i!
  double inv_pow = 1.0 / t; // t^{-(i+1)}
  for (std::size_t i = 0; i < germ.alpha.size(); ++i) {
    if (i > 0) {
      fact *= static_cast<double>(i);
      inv_pow /= t;
    }
    total += fact * germ.alpha[i] * inv_pow;
  }
  return total;
}

IntegralResult laplace_integral(const GermExpansion& germ, double t, const QuadratureConfig& cfg) {
  if (!(germ.cutoff > 0.0)) throw DomainError("germ cutoff must be positive");
  return integrate_concentrated([&](double r) { return std::exp(-t * r) * germ(r); }, 0.0,
                                germ.cutoff, t, cfg);
}

AsymptoticExpansion predicted_expansion_intrinsic_sphere(int n) {
  if (n < 2) throw DomainError("intrinsic expansion needs n >= 2");
  const double lead = intrinsic_volume_sphere(n, n, 1.0) / (factorial(n) * omega(n));
  const double sub = (n + 1.0) * intrinsic_volume_sphere(n - 2, n, 1.0) /
                     (3.0 * factorial(n - 1) * omega(n - 2));
  return {{{n, lead, 0.0}, {n - 1, 0.0, 0.0}, {n - 2, sub, 0.0}}, n - 4};
}

double predicted_relative_correction_subspace(int n) {
  if (n < 2) throw DomainError("subspace correction needs n >= 2");
  return (n + 1.0) * n * (n - 2.0) / 8.0;
}

double predicted_relative_correction_intrinsic(int n) {
  if (n < 2) throw DomainError("intrinsic correction needs n >= 2");
  return (n + 1.0) * n * (n - 1.0) / 6.0;
}

namespace {

// Neville's table at x = t^{-step}, x -> 0. After processing column `span`,
// p[i] holds the extrapolant through samples i..i+span.
template <typename T>
std::pair<T, T> neville_at_zero(std::span<const double> t_grid, std::vector<T> p, int step) {
  const std::size_t m = t_grid.size();
  std::vector<T> x(m);
  for (std::size_t j = 0; j < m; ++j) x[j] = std::pow(static_cast<T>(t_grid[j]), -step);
  T next_best = p[m - 1];
  for (std::size_t span = 1; span < m; ++span) {
    for (std::size_t i = 0; i + span < m; ++i) {
      const std::size_t j = i + span;
      p[i] = (x[i] * p[i + 1] - x[j] * p[i]) / (x[i] - x[j]);
    }
    if (span == m - 2) next_best = p[1];
  }
  return {p[0], next_best};
}

// Sum of |Lagrange weights| at x = 0: how much the extrapolant can amplify
// rounding in the samples.
double extrapolation_lebesgue(std::span<const double> t_grid, int step) {
  const std::size_t m = t_grid.size();
  double total = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double w = 1.0;
    const double xj = std::pow(t_grid[j], -step);
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) {
        const double xk = std::pow(t_grid[k], -step);
        w *= xk / (xk - xj);
      }
    total += std::abs(w);
  }
  return total;
}

}  // namespace

ExtrapolationResult richardson_extrapolate(std::span<const double> t_grid,
                                           std::span<const double> values, int step) {
  const std::size_t m = t_grid.size();
  if (m < 2 || values.size() != m) throw DomainError("Richardson needs >= 2 matching samples");
  if (step < 1) throw DomainError("Richardson step must be positive");
  const auto [best, next] =
      neville_at_zero<double>(t_grid, std::vector<double>(values.begin(), values.end()), step);
  return {best, std::abs(best - next)};
}

AsymptoticExpansion extract_coefficients(const ScalarFunction& f, const ExtractionRequest& req,
                                         std::span<const double> t_grid) {
  if (req.count < 1) throw DomainError("need at least one coefficient");
  if (req.parity_step < 1) throw DomainError("parity step must be positive");
  if (static_cast<int>(t_grid.size()) < req.count + 2)
    throw DomainError("t grid needs at least count + 2 points");
  for (std::size_t j = 0; j < t_grid.size(); ++j) {
    if (!(t_grid[j] > 0.0)) throw DomainError("t grid must be positive");
    if (j > 0 && !(t_grid[j] > t_grid[j - 1])) throw DomainError("t grid must be increasing");
  }

  std::vector<double> samples(t_grid.size());
  for (std::size_t j = 0; j < t_grid.size(); ++j) {
    samples[j] = f(t_grid[j]);
    if (!std::isfinite(samples[j])) throw DomainError("function is not finite on the grid");
  }

  // Stripping multiplies the error of every known coefficient by t^power, so
  // the table and the known coefficients are carried in extended precision.
  AsymptoticExpansion out;
  const double lebesgue = extrapolation_lebesgue(t_grid, req.parity_step);
  std::vector<long double> known;
  std::vector<long double> scaled(t_grid.size());
  for (int c = 0; c < req.count; ++c) {
    const int power = req.leading_power - c * req.parity_step;
    for (std::size_t j = 0; j < t_grid.size(); ++j) {
      const long double t = t_grid[j];
      long double rest = samples[j];
      for (std::size_t k = 0; k < known.size(); ++k)
        rest -= known[k] * std::pow(t, out.terms[k].power);
      scaled[j] = rest / std::pow(t, power);
    }
    const auto [best, next] = neville_at_zero<long double>(t_grid, scaled, req.parity_step);
    // The samples themselves are doubles; never report less than their
    // rounding, scaled to this power and pushed through the extrapolation.
    double rounding = 0.0;
    for (std::size_t j = 0; j < t_grid.size(); ++j)
      rounding = std::max(rounding, std::abs(samples[j]) / std::pow(t_grid[j], power));
    rounding *= std::numeric_limits<double>::epsilon() * lebesgue;
    const double spread = std::max(static_cast<double>(std::abs(best - next)), rounding);
    if (spread > req.coefficient_tol) {
      std::ostringstream os;
      os << "coefficient of t^" << power << " has extrapolation spread " << spread
         << " above " << req.coefficient_tol;
      throw IllConditionedFit(os.str());
    }
    known.push_back(best);
    out.terms.push_back({power, static_cast<double>(best), spread});
  }
  out.error_order = req.leading_power - req.count * req.parity_step;
  return out;
}

AsymptoticExpansion extract_coefficients(const ScalarFunction& f, int leading_power,
                                         int parity_step, int count,
                                         std::span<const double> t_grid) {
  return extract_coefficients(f, ExtractionRequest{leading_power, parity_step, count}, t_grid);
}

IntrinsicExpansionCheck check_intrinsic_expansion(int n, std::span<const double> t_grid) {
  IntrinsicExpansionCheck out;
  out.dimension = n;
  out.predicted = predicted_expansion_intrinsic_sphere(n);
  const ScalarFunction f = [n](double t) { return sphere_magnitude_closed(n, t); };

  // Even powers first, using the known parity gap.
  const AsymptoticExpansion even = extract_coefficients(f, n, 2, 2, t_grid);
  const double lead = even.terms[0].coefficient;

  // Odd power t^{n-1}: strip the leading term and fit with no parity assumption.
  const ScalarFunction stripped = [&](double t) { return f(t) - lead * std::pow(t, n); };
  const AsymptoticExpansion odd = extract_coefficients(stripped, n - 1, 1, 1, t_grid);

  out.extracted.terms = {even.terms[0], odd.terms[0], even.terms[1]};
  out.extracted.error_order = n - 3;
  return out;
}

ExtrapolationResult extract_relative_correction(const ScalarFunction& f, double lead, int n,
                                                std::span<const double> t_grid) {
  const ScalarFunction relative = [&](double t) { return f(t) / (lead * std::pow(t, n)) - 1.0; };
  const AsymptoticExpansion e = extract_coefficients(relative, -2, 2, 1, t_grid);
  return {e.terms[0].coefficient, e.terms[0].error_estimate};
}

double surface_asymptotics_residual(double R) {
  return sphere_magnitude_closed(2, R) - (2.0 * R * R + 2.0);
}

std::vector<double> geometric_grid(double a, double b, int points) {
  if (points < 2) throw DomainError("grid needs at least two points");
  if (!(a > 0.0) || !(b > a)) throw DomainError("geometric grid needs 0 < a < b");
  std::vector<double> g(points);
  const double ratio = std::log(b / a) / (points - 1);
  for (int j = 0; j < points; ++j) g[j] = a * std::exp(ratio * j);
  g.front() = a;
  g.back() = b;
  return g;
}

}  // namespace magnitude
