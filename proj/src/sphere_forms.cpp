#include "magnitude/sphere_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "magnitude/errors.hpp"

namespace magnitude {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(int n, int min, const char* what) {
  if (n < min)
    throw DomainError(std::string(what) + " requires dimension >= " + std::to_string(min));
}

void require_radius(double R) {
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("radius must be positive and finite");
}

// Coefficients in u = R^2 of prod_j (u / j^2 + 1) over j = first, first + 2, ..., <= last.
std::vector<double> expand_factors(int first, int last) {
  std::vector<double> poly{1.0};
  for (int j = first; j <= last; j += 2) {
    const double inv = 1.0 / (static_cast<double>(j) * j);
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 1] += poly[k] * inv;
    }
    poly = std::move(next);
  }
  return poly;
}

double factor_product(int first, int last, double R) {
  double p = 1.0;
  for (int j = first; j <= last; j += 2) {
    const double q = R / j;
    p *= q * q + 1.0;
  }
  return p;
}

}  // namespace

BallSphereVolumes::BallSphereVolumes(int max_dim) {
  require_dim(max_dim, 1, "BallSphereVolumes");
  omega_.assign(max_dim + 1, 0.0);
  sigma_.assign(max_dim + 1, 0.0);
  omega_[0] = 1.0;
  omega_[1] = 2.0;
  sigma_[0] = 2.0;
  sigma_[1] = 2.0 * kPi;
  for (int k = 2; k <= max_dim; ++k) {
    omega_[k] = 2.0 * kPi / k * omega_[k - 2];
    sigma_[k] = 2.0 * kPi / (k - 1) * sigma_[k - 2];
  }
}

double BallSphereVolumes::omega(int k) const {
  if (k < 0 || k > max_dim()) throw IndexOutOfRange("omega index " + std::to_string(k));
  return omega_[k];
}

double BallSphereVolumes::sigma(int k) const {
  if (k < 0 || k > max_dim()) throw IndexOutOfRange("sigma index " + std::to_string(k));
  return sigma_[k];
}

const BallSphereVolumes& ball_sphere_volumes() {
  static const BallSphereVolumes table(160);
  return table;
}

double omega(int k) { return ball_sphere_volumes().omega(k); }
double sigma(int k) { return ball_sphere_volumes().sigma(k); }

double factorial(int k) {
  if (k < 0) throw DomainError("factorial of a negative integer");
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return std::round(b);
}

double x_over_one_minus_exp(double x) {
  if (std::abs(x) < 1e-4) return 1.0 + x / 2.0 + x * x / 12.0;
  return x / -std::expm1(-x);
}

double sphere_magnitude_closed(int n, double R) {
  require_dim(n, 0, "sphere magnitude");
  require_radius(R);
  if (n % 2 == 0) return 2.0 * factor_product(1, n - 1, R) / (1.0 + std::exp(-kPi * R));
  return x_over_one_minus_exp(kPi * R) * factor_product(2, n - 1, R);
}

double recurrence_step_check(int n, double R) {
  const double q = R / (n + 1);
  return sphere_magnitude_closed(n + 2, R) - (q * q + 1.0) * sphere_magnitude_closed(n, R);
}

double SpherePolynomial::operator()(double R) const {
  double v = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * R + *it;
  return v;
}

double SpherePolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coefficients.size())) return 0.0;
  return coefficients[power];
}

SpherePolynomial P_polynomial(int n) {
  require_dim(n, 0, "P polynomial");
  const bool even = n % 2 == 0;
  const std::vector<double> u = even ? expand_factors(1, n - 1) : expand_factors(2, n - 1);
  const double front = even ? 2.0 : kPi;
  const int offset = even ? 0 : 1;
  SpherePolynomial p{n, std::vector<double>(n + 1, 0.0)};
  for (std::size_t k = 0; k < u.size(); ++k) p.coefficients[2 * k + offset] = front * u[k];
  return p;
}

std::pair<double, double> leading_and_subleading_check(int n) {
  require_dim(n, 2, "coefficient check");
  const SpherePolynomial p = P_polynomial(n);
  const double lead = sigma(n) / (factorial(n) * omega(n));
  const double sub = (n + 1.0) / (3.0 * (n - 1)) * intrinsic_volume_sphere(n - 2, n, 1.0) /
                     (factorial(n - 2) * omega(n - 2));
  return {p.leading() - lead, p.subleading() - sub};
}

double intrinsic_volume_sphere(int i, int n, double R) {
  require_dim(n, 0, "intrinsic volume");
  require_radius(R);
  if (i < 0 || i > n)
    throw IndexOutOfRange("intrinsic volume index " + std::to_string(i) + " outside [0, " +
                          std::to_string(n) + "]");
  if ((n - i) % 2 != 0) return 0.0;
  return 2.0 * sigma(n) / sigma(n - i) * binomial(n, i) * std::pow(R, i);
}

double euler_characteristic_sphere(int n) {
  require_dim(n, 0, "Euler characteristic");
  return n % 2 == 0 ? 2.0 : 0.0;
}

double sphere_volume(int n, double R) {
  require_dim(n, 0, "sphere volume");
  require_radius(R);
  return sigma(n) * std::pow(R, n);
}

double scalar_curvature_sphere(int n, double R) {
  require_dim(n, 2, "scalar curvature");
  require_radius(R);
  return n * (n - 1.0) / (R * R);
}

double tsc_sphere(int n, double R) { return scalar_curvature_sphere(n, R) * sphere_volume(n, R); }

double penguin_valuation_sphere(int n, double R) {
  double total = 0.0;
  for (int i = 0; i <= n; ++i)
    total += intrinsic_volume_sphere(i, n, R) / (factorial(i) * omega(i));
  return total;
}

TubeVolumes tube_volume_check(int n, double R, double epsilon) {
  require_dim(n, 1, "tube formula");
  require_radius(R);
  if (!(epsilon > 0.0) || !(epsilon < R))
    throw EpsilonTooLarge("tube radius must satisfy 0 < epsilon < R");
  const int N = n + 1;
  TubeVolumes out;
  // a^N - b^N = (a - b) sum_k a^(N-1-k) b^k; every term is positive for eps < R.
  const double a = R + epsilon, b = R - epsilon;
  double geometric = 0.0;
  for (int k = 0; k < N; ++k) geometric += std::pow(a, N - 1 - k) * std::pow(b, k);
  out.direct = omega(N) * 2.0 * epsilon * geometric;
  for (int i = 0; i <= N; ++i) {
    const int j = N - i;
    const double mu = j > n ? 0.0 : intrinsic_volume_sphere(j, n, R);
    out.formula += mu * omega(i) * std::pow(epsilon, i);
  }
  return out;
}

double geodesic_sphere_expansion_check(int n, double R, double r) {
  require_dim(n, 2, "geodesic sphere expansion");
  require_radius(R);
  if (!(r > 0.0) || !(r < kPi * R)) throw DomainError("need 0 < r < pi R");
  const long double x = static_cast<long double>(r) / R;
  const long double sinc = std::sin(x) / x;
  const long double tau = scalar_curvature_sphere(n, R);
  const long double rr = r;
  const long double bracket =
      std::pow(sinc, n - 1) - (1.0L - tau * rr * rr / (6.0L * n));
  return static_cast<double>(static_cast<long double>(sigma(n - 1)) * std::pow(rr, n - 1) *
                             bracket);
}

}  // namespace magnitude
