#pragma once

// Reference values computed independently of the library: Gamma-function
// volumes, hand-solved small systems, Simpson quadrature and antiderivatives.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

inline double ball_volume(int k) { return std::pow(pi, k / 2.0) / std::tgamma(k / 2.0 + 1.0); }
inline double sphere_area(int k) {
  return 2.0 * std::pow(pi, (k + 1) / 2.0) / std::tgamma((k + 1) / 2.0);
}
inline double fact(int k) { return std::tgamma(k + 1.0); }
inline double choose(int n, int k) { return fact(n) / (fact(k) * fact(n - k)); }

// mu_i(S^n_R) via Gamma functions.
inline double intrinsic_volume(int i, int n, double R) {
  if ((n - i) % 2 != 0) return 0.0;
  return 2.0 * sphere_area(n) / sphere_area(n - i) * choose(n, i) * std::pow(R, i);
}

// Two points at distance d.
inline double two_point(double d) { return 2.0 / (1.0 + std::exp(-d)); }

// N-point uniform grid on [0, L]: the Z matrix is Kac-Murdock-Szego with
// q = exp(-h), whose weighting sums to 1 + (N - 1) tanh(h/2).
inline double grid_magnitude(double L, int N) {
  const double h = L / (N - 1);
  return 1.0 + (N - 1) * std::tanh(h / 2.0);
}

// Three-point equilateral set with side d.
inline double equilateral(double d) { return 3.0 / (1.0 + 2.0 * std::exp(-d)); }

// Composite Simpson with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Romberg table on top of the trapezoid rule.
inline double romberg(const std::function<double(double)>& f, double a, double b, int levels = 18) {
  std::vector<std::vector<double>> T(levels, std::vector<double>(levels));
  double h = b - a;
  T[0][0] = 0.5 * h * (f(a) + f(b));
  for (int k = 1; k < levels; ++k) {
    h /= 2;
    double mid = 0.0;
    const long m = 1L << (k - 1);
    for (long i = 0; i < m; ++i) mid += f(a + (2 * i + 1) * h);
    T[k][0] = 0.5 * T[k - 1][0] + h * mid;
    double p = 4.0;
    for (int j = 1; j <= k; ++j, p *= 4.0) T[k][j] = T[k][j - 1] + (T[k][j - 1] - T[k - 1][j - 1]) / (p - 1);
  }
  return T[levels - 1][levels - 1];
}

// int_0^c exp(-t r) r^k dr = k!/t^{k+1} * P(k+1, t c), with the regularized
// lower gamma function summed in closed form for integer k.
inline double laplace_monomial(int k, double t, double c) {
  const double x = t * c;
  double term = 1.0, partial = 1.0;
  for (int j = 1; j <= k; ++j) {
    term *= x / j;
    partial += term;
  }
  return fact(k) / std::pow(t, k + 1) * (1.0 - std::exp(-x) * partial);
}

// |S^n_R| straight from its defining integrals, Simpson on a fine grid.
inline double sphere_magnitude_simpson(int n, double R, int panels = 20000) {
  const double num = simpson([n](double r) { return std::pow(std::sin(r), n - 1); }, 0, pi, panels);
  const double den = simpson([n, R](double r) { return std::exp(-R * r) * std::pow(std::sin(r), n - 1); },
                             0, pi, panels);
  return num / den;
}

}  // namespace oracle
