#pragma once

// Composite Gauss-Legendre quadrature with uniform panel bisection.
//
// Refinement k uses 2^k equal panels of a fixed-order rule. The error of the
// coarser sum is estimated by its distance to the finer one; the finer sum is
// returned once that estimate is within tolerance. For the analytic
// integrands used in this library the per-panel rule converges spectrally,
// so the estimate is conservative.

#include <cmath>
#include <algorithm>
#include <sstream>
#include <vector>

#include "magnitude/errors.hpp"

namespace magnitude {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int panel_order = 15;
  int max_refinements = 20;

  void validate() const;
};

struct IntegralResult {
  double value{};
  double error_estimate{};
  int refinements_used{};
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached per order; safe to call concurrently.
const GaussLegendreRule& gauss_legendre(int order);

namespace detail {

template <typename F>
double composite_sum(const F& f, double a, double b, long panels, const GaussLegendreRule& rule) {
  const double h = (b - a) / static_cast<double>(panels);
  const double half = 0.5 * h;
  const std::size_t m = rule.nodes.size();
  double total = 0.0;
  for (long p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * h;
    double panel = 0.0;
    for (std::size_t i = 0; i < m; ++i) panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    total += panel;
  }
  return total * half;
}

}  // namespace detail

template <typename F>
IntegralResult integrate_adaptive(const F& f, double a, double b, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (!(a <= b)) throw DomainError("integration bounds must satisfy a <= b");
  if (a == b) return {0.0, 0.0, 0};

  const auto& rule = gauss_legendre(cfg.panel_order);
  double previous = detail::composite_sum(f, a, b, 1, rule);
  double error = 0.0;
  for (int k = 1; k <= cfg.max_refinements; ++k) {
    const double current = detail::composite_sum(f, a, b, 1L << k, rule);
    if (!std::isfinite(current)) throw NoConvergence("integrand is not finite on the interval");
    error = std::abs(current - previous);
    if (error <= std::max(cfg.rel_tol * std::abs(current), cfg.abs_tol))
      return {current, error, k};
    previous = current;
  }
  std::ostringstream os;
  os << "error estimate " << error << " above tolerance after " << cfg.max_refinements
     << " refinements on [" << a << ", " << b << "]";
  throw NoConvergence(os.str());
}

/// Integrates f on [a, b] where f carries a factor like exp(-rate (x - a)).
/// For rate >= 50 the interval is split at a + min(b - a, 30 / rate) so the
/// boundary layer gets its own panels.
template <typename F>
IntegralResult integrate_concentrated(const F& f, double a, double b, double rate,
                                      const QuadratureConfig& cfg = {}) {
  if (rate < 50.0) return integrate_adaptive(f, a, b, cfg);
  const double cut = a + std::min(b - a, 30.0 / rate);
  const IntegralResult head = integrate_adaptive(f, a, cut, cfg);
  const IntegralResult tail = integrate_adaptive(f, cut, b, cfg);
  return {head.value + tail.value, head.error_estimate + tail.error_estimate,
          std::max(head.refinements_used, tail.refinements_used)};
}

}  // namespace magnitude
