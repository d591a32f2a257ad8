#pragma once

// Large-scale asymptotics of magnitude: Watson's lemma partial sums, the
// predicted expansions for spheres, and numerical coefficient extraction by
// Richardson extrapolation.

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "magnitude/quadrature.hpp"

namespace magnitude {

struct ExpansionTerm {
  int power{};
  double coefficient{};
  double error_estimate{};  ///< zero for predicted terms
};

/// sum_k c_k t^k over decreasing powers, plus O(t^error_order).
struct AsymptoticExpansion {
  std::vector<ExpansionTerm> terms;
  int error_order{};

  /// Coefficient of t^power, or nullopt if that power is not listed.
  std::optional<double> coefficient(int power) const;
  double operator()(double t) const;
};

/// Germ g(r) = sum_i alpha_i r^i on [0, cutoff].
struct GermExpansion {
  std::vector<double> alpha;
  double cutoff = 1.0;

  double operator()(double r) const;
};

/// sum_{i=0}^{N} i! alpha_i / t^{i+1}.
double watson_partial_sum(const GermExpansion& germ, double t);

/// int_0^c exp(-t r) g(r) dr by quadrature, for comparison with the partial sum.
IntegralResult laplace_integral(const GermExpansion& germ, double t, const QuadratureConfig& cfg = {});

/// Predicted |t S^n_1| = mu_n/(n! omega_n) t^n + 0 t^{n-1}
///                      + (n+1) mu_{n-2}/(3 (n-1)! omega_{n-2}) t^{n-2} + O(t^{n-4}).
AsymptoticExpansion predicted_expansion_intrinsic_sphere(int n);

/// Relative R^{-2} correction to Vol(S^n_R)/(n! omega_n): (n+1)n(n-2)/8.
double predicted_relative_correction_subspace(int n);
/// Geodesic-metric analogue: (n+1)n(n-1)/6.
double predicted_relative_correction_intrinsic(int n);

struct ExtrapolationResult {
  double value{};
  double spread{};  ///< |best extrapolant - next best|
};

/// Extrapolates samples T(t_j) to t -> infinity assuming
/// T(t) = c + a_1 t^{-step} + a_2 t^{-2 step} + ... (Neville in x = t^{-step}).
ExtrapolationResult richardson_extrapolate(std::span<const double> t_grid,
                                           std::span<const double> values, int step);

using ScalarFunction = std::function<double(double)>;

struct ExtractionRequest {
  int leading_power{};
  int parity_step = 2;
  int count = 1;
  /// IllConditionedFit is raised when a coefficient's spread exceeds this.
  double coefficient_tol = std::numeric_limits<double>::infinity();
};

/// Sequential stripping: for k = leading, leading - step, ..., the coefficient
/// c_k is the Richardson limit of (f(t) - known terms) / t^k over t_grid.
AsymptoticExpansion extract_coefficients(const ScalarFunction& f, const ExtractionRequest& request,
                                         std::span<const double> t_grid);

AsymptoticExpansion extract_coefficients(const ScalarFunction& f, int leading_power,
                                         int parity_step, int count,
                                         std::span<const double> t_grid);

/// Extracted vs predicted coefficients of t^n, t^{n-1}, t^{n-2} for the
/// closed-form geodesic-metric sphere magnitude.
struct IntrinsicExpansionCheck {
  int dimension{};
  AsymptoticExpansion extracted;  ///< powers n, n-1, n-2
  AsymptoticExpansion predicted;
};

IntrinsicExpansionCheck check_intrinsic_expansion(int n, std::span<const double> t_grid);

/// Extracted relative R^{-2} coefficient a in
/// f(R) = lead R^n (1 + a R^{-2} + O(R^{-4})).
ExtrapolationResult extract_relative_correction(const ScalarFunction& f, double lead, int n,
                                                std::span<const double> t_grid);

/// |S^n_R| (closed form) - (2R^2 + 2) for n = 2: the surface remainder.
double surface_asymptotics_residual(double R);

/// `points` values from a to b in geometric progression.
std::vector<double> geometric_grid(double a, double b, int points);

}  // namespace magnitude
