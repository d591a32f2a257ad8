#pragma once

// Value-plus-error evaluations shared by the CLI subcommands and sweeps.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "magnitude/errors.hpp"
#include "magnitude/homogeneous.hpp"
#include "magnitude/line_spaces.hpp"
#include "magnitude/metric_core.hpp"
#include "magnitude/sphere_forms.hpp"

namespace magnitude::detail {

struct Estimate {
  double value{};
  double error{};
};

inline QuadratureConfig quadrature_with_tol(double tol) {
  QuadratureConfig cfg;
  cfg.rel_tol = tol;
  return cfg;
}

inline Estimate quotient(const IntegralResult& num, const IntegralResult& den, double scale) {
  const double v = scale * num.value / den.value;
  // never report less than rounding of the quotient itself
  const double rel = std::max(num.error_estimate / std::abs(num.value) +
                                  den.error_estimate / std::abs(den.value),
                              std::numeric_limits<double>::epsilon());
  return {v, std::abs(v) * rel};
}

inline Estimate sphere_intrinsic_quadrature(int n, double R, double tol) {
  const auto cfg = quadrature_with_tol(tol);
  return quotient(K_integral_detail(n, cfg), I_integral_detail(n, R, cfg), 1.0);
}

inline Estimate sphere_subspace_quadrature(int n, double R, double tol) {
  const auto cfg = quadrature_with_tol(tol);
  const IntegralResult J = subspace_similarity_integral(n, R, cfg);
  const double v = sigma(n) / (sigma(n - 1) * J.value);
  return {v, v * std::max(J.error_estimate / std::abs(J.value),
                          std::numeric_limits<double>::epsilon())};
}

inline Estimate sphere_subspace_closed(int n, double R) {
  if (n != 2)
    throw DomainError("the chordal-metric closed form exists only for dim 2; use quadrature");
  return {subspace_sphere2_closed(R), 0.0};
}

inline Estimate circle_quadrature(double length, double tol) {
  const auto cfg = quadrature_with_tol(tol);
  const IntegralResult r =
      integrate_adaptive([](double s) { return std::exp(-s); }, 0.0, length / 2.0, cfg);
  const double v = length / (2.0 * r.value);
  return {v, v * std::max(r.error_estimate / r.value, std::numeric_limits<double>::epsilon())};
}

/// Weighting solve; the error is the weight-equation residual.
inline Estimate finite_weighting(const MetricSpace& X, double tol) {
  const Weighting<double> w = weighting(X, tol);
  return {w.sum(), w.residual_norm};
}

inline MetricSpace cantor_endpoints(double length, int level) {
  return finite_approx_line(cantor_stage(length, level).carrier, 2);
}

}  // namespace magnitude::detail
