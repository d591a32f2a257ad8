#include "magnitude/homogeneous.hpp"

#include <cmath>
#include <numbers>

#include "magnitude/sphere_forms.hpp"

namespace magnitude {

namespace {

constexpr double kPi = std::numbers::pi;

void require(int n, double R) {
  if (n < 1) throw DomainError("sphere dimension must be at least 1");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("radius must be positive and finite");
}

double int_pow(double x, int k) {
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= x;
  return p;
}

// 1 - exp(-x)(1 + x) without cancellation for small x.
double one_minus_exp_times_linear(double x) {
  if (x < 0.5) {
    // sum_{k>=2} (-1)^k (k - 1) x^k / k!
    double term = x;  // x^k / k! at k = 1
    double sum = 0.0;
    for (int k = 2; k < 40; ++k) {
      term *= x / k;
      const double t = (k - 1) * term;
      sum += (k % 2 == 0) ? t : -t;
      if (t < 1e-18 * sum) break;
    }
    return sum;
  }
  return -std::expm1(-x) - x * std::exp(-x);
}

}  // namespace

IntegralResult K_integral_detail(int n, const QuadratureConfig& cfg) {
  require(n, 1.0);
  return integrate_adaptive([n](double r) { return int_pow(std::sin(r), n - 1); }, 0.0, kPi, cfg);
}

double K_integral(int n, const QuadratureConfig& cfg) { return K_integral_detail(n, cfg).value; }

IntegralResult I_integral_detail(int n, double R, const QuadratureConfig& cfg) {
  require(n, R);
  return integrate_concentrated(
      [n, R](double r) { return std::exp(-r * R) * int_pow(std::sin(r), n - 1); }, 0.0, kPi, R,
      cfg);
}

double I_integral(int n, double R, const QuadratureConfig& cfg) {
  return I_integral_detail(n, R, cfg).value;
}

double sphere_magnitude_quadrature(int n, double R, const QuadratureConfig& cfg) {
  return K_integral(n, cfg) / I_integral(n, R, cfg);
}

std::pair<double, double> recurrence_residuals(int n, double R, const QuadratureConfig& cfg) {
  require(n, R);
  const double q = R / (n + 1);
  const double k = (n + 1) * K_integral(n + 2, cfg) - n * K_integral(n, cfg);
  const double i = (n + 1) * (q * q + 1.0) * I_integral(n + 2, R, cfg) - n * I_integral(n, R, cfg);
  return {k, i};
}

double circle_magnitude_closed(double length) {
  if (!(length > 0.0)) throw NonpositiveLength("circumference must be positive");
  return x_over_one_minus_exp(length / 2.0);
}

double circle_magnitude_quadrature(double length, const QuadratureConfig& cfg) {
  if (!(length > 0.0)) throw NonpositiveLength("circumference must be positive");
  const double half = length / 2.0;
  const IntegralResult r =
      integrate_concentrated([](double s) { return std::exp(-s); }, 0.0, half, 1.0, cfg);
  return length / (2.0 * r.value);
}

double subspace_sphere2_closed(double R) {
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("radius must be positive and finite");
  return 2.0 * R * R / one_minus_exp_times_linear(2.0 * R);
}

IntegralResult subspace_similarity_integral(int n, double R, const QuadratureConfig& cfg) {
  require(n, R);
  return integrate_concentrated(
      [n, R](double t) {
        return std::exp(-2.0 * R * std::sin(t / 2.0)) * int_pow(std::sin(t), n - 1);
      },
      0.0, kPi, R, cfg);
}

double subspace_sphere_magnitude_quadrature(int n, double R, const QuadratureConfig& cfg) {
  const double J = subspace_similarity_integral(n, R, cfg).value;
  return sigma(n) / (sigma(n - 1) * J);
}

}  // namespace magnitude
