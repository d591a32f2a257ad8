#include <doctest.h>

#include <random>

#include "magnitude/errors.hpp"
#include "magnitude/sphere_forms.hpp"
#include "oracles.hpp"

using namespace magnitude;
using oracle::pi;

TEST_CASE("ball and sphere volumes") {
  CHECK(omega(0) == 1.0);
  CHECK(omega(1) == 2.0);
  CHECK(sigma(0) == 2.0);
  CHECK(sigma(1) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(omega(2) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(sigma(2) == doctest::Approx(4 * pi).epsilon(1e-15));
  CHECK(omega(3) == doctest::Approx(4 * pi / 3).epsilon(1e-15));
  CHECK(sigma(3) == doctest::Approx(2 * pi * pi).epsilon(1e-15));
  for (int k = 0; k <= 30; ++k) {
    CHECK(omega(k) == doctest::Approx(oracle::ball_volume(k)).epsilon(1e-13));
    CHECK(sigma(k) == doctest::Approx(oracle::sphere_area(k)).epsilon(1e-13));
  }
  for (int k = 1; k <= 12; ++k) CHECK(sigma(k - 1) == doctest::Approx(k * omega(k)).epsilon(1e-14));
  CHECK_THROWS_AS(omega(-1), IndexOutOfRange);
  CHECK_THROWS_AS(sigma(100000), IndexOutOfRange);
}

TEST_CASE("x / (1 - e^-x)") {
  for (double x : {1e-12, 1e-6, 5e-5, 2e-4, 1e-2, 1.0, 30.0}) {
    const long double X = x;
    const long double ref = X / -std::expm1(-X);
    CHECK(x_over_one_minus_exp(x) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-15));
  }
}

TEST_CASE("closed-form sphere magnitude") {
  for (double R : {0.1, 1.0, 3.0})
    CHECK(sphere_magnitude_closed(1, R) == doctest::Approx(pi * R / (1 - std::exp(-pi * R))).epsilon(1e-14));
  CHECK(sphere_magnitude_closed(2, 1.0) == doctest::Approx(4.0 / (1.0 + std::exp(-pi))).epsilon(1e-15));
  CHECK(sphere_magnitude_closed(3, 2.0) == doctest::Approx(4 * pi / (1 - std::exp(-2 * pi))).epsilon(1e-14));
  CHECK(sphere_magnitude_closed(0, 1.5) == doctest::Approx(oracle::two_point(1.5 * pi)).epsilon(1e-15));
  for (int n = 1; n <= 7; ++n)
    for (double R : {0.5, 2.0, 10.0})
      CHECK(sphere_magnitude_closed(n, R) ==
            doctest::Approx(oracle::sphere_magnitude_simpson(n, R)).epsilon(1e-9));
  CHECK_THROWS_AS(sphere_magnitude_closed(-1, 1.0), DomainError);
  CHECK_THROWS_AS(sphere_magnitude_closed(2, 0.0), DomainError);
}

TEST_CASE("induction step") {
  for (int n : {0, 1, 2, 4, 7})
    for (double R : {0.3, 1.0, 10.0})
      CHECK(std::abs(recurrence_step_check(n, R)) < 1e-12 * sphere_magnitude_closed(n + 2, R));
}

TEST_CASE("numerator polynomial") {
  const auto p1 = P_polynomial(1);
  CHECK(p1.coefficient(1) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(p1.coefficient(0) == 0.0);
  const auto p2 = P_polynomial(2);
  CHECK(p2.coefficient(2) == 2.0);
  CHECK(p2.coefficient(0) == 2.0);
  CHECK(p2.coefficient(1) == 0.0);
  const auto p3 = P_polynomial(3);
  CHECK(p3.coefficient(3) == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(p3.coefficient(1) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(P_polynomial(0)(3.0) == 2.0);
  for (int n = 0; n <= 12; ++n) {
    const auto p = P_polynomial(n);
    for (int k = 0; k <= n + 2; ++k)
      if ((n - k) % 2 != 0) CHECK(p.coefficient(k) == 0.0);
    CHECK(p.constant_term() == euler_characteristic_sphere(n));
    CHECK(p.constant_term() == (n % 2 == 0 ? 2.0 : 0.0));
  }
  for (int n = 2; n <= 8; ++n) {
    const auto [lead, sub] = leading_and_subleading_check(n);
    CHECK(std::abs(lead) < 1e-12);
    CHECK(std::abs(sub) < 1e-12);
  }
}

TEST_CASE("intrinsic volumes") {
  CHECK(intrinsic_volume_sphere(2, 2, 1.5) == doctest::Approx(4 * pi * 2.25).epsilon(1e-15));
  CHECK(intrinsic_volume_sphere(1, 2, 1.5) == 0.0);
  CHECK(intrinsic_volume_sphere(0, 2, 1.5) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(intrinsic_volume_sphere(1, 3, 1.0) == doctest::Approx(3 * pi).epsilon(1e-15));
  for (int n = 0; n <= 9; ++n)
    for (int i = 0; i <= n; ++i) {
      CHECK(intrinsic_volume_sphere(i, n, 1.7) == doctest::Approx(oracle::intrinsic_volume(i, n, 1.7)).epsilon(1e-13));
      if ((n - i) % 2) CHECK(intrinsic_volume_sphere(i, n, 1.7) == 0.0);
      // homogeneity of degree i
      CHECK(intrinsic_volume_sphere(i, n, 2.0 * 1.7) ==
            doctest::Approx(std::pow(2.0, i) * intrinsic_volume_sphere(i, n, 1.7)).epsilon(1e-14));
    }
  CHECK_THROWS_AS(intrinsic_volume_sphere(4, 3, 1.0), IndexOutOfRange);
  CHECK_THROWS_AS(intrinsic_volume_sphere(-1, 3, 1.0), IndexOutOfRange);
  CHECK(sphere_volume(3, 2.0) == doctest::Approx(2 * pi * pi * 8).epsilon(1e-15));
}

TEST_CASE("curvature") {
  CHECK(scalar_curvature_sphere(2, 1.0) == 2.0);
  CHECK(tsc_sphere(2, 1.0) == doctest::Approx(8 * pi).epsilon(1e-15));
  CHECK(scalar_curvature_sphere(3, 1.0) == 6.0);
  CHECK(tsc_sphere(3, 1.0) == doctest::Approx(12 * pi * pi).epsilon(1e-15));
  // tau Vol = 4 pi mu_{n-2}
  for (int n = 2; n <= 6; ++n)
    CHECK(tsc_sphere(n, 1.3) == doctest::Approx(4 * pi * intrinsic_volume_sphere(n - 2, n, 1.3)).epsilon(1e-13));
  CHECK(scalar_curvature_sphere(4, 1e6) < 1e-10);
  CHECK_THROWS_AS(scalar_curvature_sphere(1, 1.0), DomainError);
}

TEST_CASE("penguin valuation") {
  for (double R : {0.5, 2.0})
    CHECK(penguin_valuation_sphere(2, R) == doctest::Approx(P_polynomial(2)(R)).epsilon(1e-14));
  CHECK(penguin_valuation_sphere(0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  // same leading term, different subdominant term in dimension 3
  const double R = 5.0;
  const double diff = penguin_valuation_sphere(3, R) - P_polynomial(3)(R);
  CHECK(diff == doctest::Approx((1.5 * pi - pi) * R).epsilon(1e-12));
}

TEST_CASE("tube formula") {
  const double eps = 0.3, R = 1.2;
  auto v1 = tube_volume_check(1, R, eps);
  CHECK(v1.direct == doctest::Approx(4 * pi * R * eps).epsilon(1e-14));
  CHECK(v1.formula == doctest::Approx(4 * pi * R * eps).epsilon(1e-14));
  auto v2 = tube_volume_check(2, R, eps);
  const double shell = 8 * pi * R * R * eps + 8 * pi / 3 * eps * eps * eps;
  CHECK(v2.direct == doctest::Approx(shell).epsilon(1e-14));
  CHECK(v2.formula == doctest::Approx(shell).epsilon(1e-14));
  auto v3 = tube_volume_check(3, 2.0, 0.5);
  CHECK(v3.formula == doctest::Approx(v3.direct).epsilon(1e-10));

  std::mt19937 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 20; ++t) {
      const double r = 0.1 + 10 * u(gen);
      const double e = r * std::max(u(gen), 1e-6);
      const auto v = tube_volume_check(n, r, e);
      const double direct = oracle::ball_volume(n + 1) * (std::pow(r + e, n + 1) - std::pow(r - e, n + 1));
      CHECK(v.formula == doctest::Approx(v.direct).epsilon(1e-10));
      CHECK(v.direct == doctest::Approx(direct).epsilon(1e-9));
    }
  CHECK_THROWS_AS(tube_volume_check(2, 1.0, 1.0), EpsilonTooLarge);
  CHECK_THROWS_AS(tube_volume_check(2, 1.0, 0.0), EpsilonTooLarge);
}

TEST_CASE("geodesic spheres") {
  for (auto [n, R] : {std::pair{2, 1.0}, std::pair{3, 2.0}, std::pair{4, 1.0}}) {
    double prev = 0.0;
    for (double r : {1e-1, 1e-2, 1e-3}) {
      const double scaled = geodesic_sphere_expansion_check(n, R, r) / std::pow(r, n + 3);
      CHECK(std::isfinite(scaled));
      if (prev != 0.0) CHECK(scaled == doctest::Approx(prev).epsilon(2e-2));
      prev = scaled;
    }
    CHECK(std::abs(geodesic_sphere_expansion_check(n, R, 1e-4)) < 1e-14);
  }
  CHECK_THROWS_AS(geodesic_sphere_expansion_check(1, 1.0, 0.1), DomainError);
}
