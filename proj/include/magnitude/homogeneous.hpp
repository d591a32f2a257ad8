#pragma once

// Magnitude of homogeneous spaces as (total measure) / (similarity integral),
// evaluated by quadrature for spheres under both metrics and for circles.

#include <utility>

#include "magnitude/quadrature.hpp"

namespace magnitude {

/// K_n = int_0^pi sin^{n-1} r dr.
double K_integral(int n, const QuadratureConfig& cfg = {});
IntegralResult K_integral_detail(int n, const QuadratureConfig& cfg = {});

/// I_n(R) = int_0^pi exp(-r R) sin^{n-1} r dr.
double I_integral(int n, double R, const QuadratureConfig& cfg = {});
IntegralResult I_integral_detail(int n, double R, const QuadratureConfig& cfg = {});

/// |S^n_R| = K_n / I_n(R), geodesic metric.
double sphere_magnitude_quadrature(int n, double R, const QuadratureConfig& cfg = {});

/// ((n+1) K_{n+2} - n K_n,  (n+1)((R/(n+1))^2 + 1) I_{n+2} - n I_n).
std::pair<double, double> recurrence_residuals(int n, double R, const QuadratureConfig& cfg = {});

/// Circle of circumference `length`: length / (2 (1 - exp(-length/2))).
double circle_magnitude_closed(double length);
/// Same quotient with the arc-distance integral done numerically.
double circle_magnitude_quadrature(double length, const QuadratureConfig& cfg = {});

/// 2-sphere of radius R with the chordal metric: 2R^2 / (1 - exp(-2R)(1 + 2R)).
double subspace_sphere2_closed(double R);

/// J_n(R) = int_0^pi exp(-2R sin(theta/2)) sin^{n-1} theta dtheta.
IntegralResult subspace_similarity_integral(int n, double R, const QuadratureConfig& cfg = {});

/// n-sphere of radius R with the chordal metric:
/// Vol(S^n_R) / (sigma_{n-1} R^n J_n(R)) = sigma_n / (sigma_{n-1} J_n(R)).
double subspace_sphere_magnitude_quadrature(int n, double R, const QuadratureConfig& cfg = {});

}  // namespace magnitude
