#pragma once

// Closed forms for round spheres: magnitude, its numerator polynomial,
// intrinsic volumes, scalar curvature, and the classical tube and
// geodesic-sphere volume identities.

#include <utility>
#include <vector>

namespace magnitude {

/// Volumes of unit balls (omega_k) and unit spheres (sigma_k), memoized.
/// omega_0 = 1, omega_1 = 2, omega_k = (2 pi / k) omega_{k-2};
/// sigma_0 = 2, sigma_1 = 2 pi, sigma_k = (2 pi / (k - 1)) sigma_{k-2}.
class BallSphereVolumes {
 public:
  explicit BallSphereVolumes(int max_dim = 64);

  int max_dim() const noexcept { return static_cast<int>(omega_.size()) - 1; }
  double omega(int k) const;
  double sigma(int k) const;

 private:
  std::vector<double> omega_;
  std::vector<double> sigma_;
};

/// Shared read-only table.
const BallSphereVolumes& ball_sphere_volumes();

double omega(int k);
double sigma(int k);

double factorial(int k);
double binomial(int n, int k);

/// x / (1 - exp(-x)), with a series branch near zero.
double x_over_one_minus_exp(double x);

/// Magnitude of the n-sphere of radius R with its geodesic metric; n = 0 is
/// the two-point space at distance pi R.
double sphere_magnitude_closed(int n, double R);

/// |S^{n+2}_R| - ((R/(n+1))^2 + 1) |S^n_R|.
double recurrence_step_check(int n, double R);

/// Numerator polynomial of the sphere magnitude, stored by power of R.
/// Only powers with the parity of n are ever populated.
struct SpherePolynomial {
  int dimension{};
  std::vector<double> coefficients;  ///< coefficients[k] multiplies R^k

  double operator()(double R) const;
  double coefficient(int power) const;
  double leading() const { return coefficient(dimension); }
  double subleading() const { return coefficient(dimension - 2); }
  double constant_term() const { return coefficient(0); }
};

SpherePolynomial P_polynomial(int n);

/// Residuals (leading - Vol(S^n_1)/(n! omega_n),
///            subleading - (n+1)/(3(n-1)) mu_{n-2}(S^n_1)/((n-2)! omega_{n-2})).
std::pair<double, double> leading_and_subleading_check(int n);

/// mu_i of the round n-sphere of radius R in R^{n+1}.
double intrinsic_volume_sphere(int i, int n, double R);

double euler_characteristic_sphere(int n);
double sphere_volume(int n, double R);
double scalar_curvature_sphere(int n, double R);
double tsc_sphere(int n, double R);

/// sum_i mu_i / (i! omega_i).
double penguin_valuation_sphere(int n, double R);

struct TubeVolumes {
  double direct{};   ///< omega_{n+1} ((R + eps)^{n+1} - (R - eps)^{n+1})
  double formula{};  ///< sum_i mu_{n+1-i} omega_i eps^i, with mu_{n+1} = 0
};

TubeVolumes tube_volume_check(int n, double R, double epsilon);

/// sigma_{n-1} (R sin(r/R))^{n-1} - sigma_{n-1} r^{n-1} (1 - tau r^2 / (6n)),
/// evaluated in extended precision; behaves like r^{n+3}.
double geodesic_sphere_expansion_check(int n, double R, double r);

}  // namespace magnitude
