#include <doctest.h>

#include <random>

#include "magnitude/metric_core.hpp"
#include "oracles.hpp"

using namespace magnitude;

namespace {

MetricSpace two_points(double d) {
  Eigen::MatrixXd m(2, 2);
  m << 0, d, d, 0;
  return MetricSpace(m);
}

MetricSpace equilateral(double d) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(3, 3, d);
  m.diagonal().setZero();
  return MetricSpace(m);
}

// Random points in the plane; distinct with probability one.
MetricSpace random_cloud(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  Eigen::MatrixXd pts(n, 2);
  for (int i = 0; i < n; ++i) pts.row(i) << u(gen), u(gen);
  return MetricSpace(euclidean_distances<double>(pts));
}

}  // namespace

TEST_CASE("similarity matrix of small spaces") {
  Eigen::MatrixXd one = Eigen::MatrixXd::Zero(1, 1);
  CHECK(similarity_matrix(MetricSpace(one))(0, 0) == 1.0);

  const auto Z = similarity_matrix(two_points(std::log(2.0)));
  CHECK(Z(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(Z(1, 1) == 1.0);

  const auto E = similarity_matrix(equilateral(1.0));
  CHECK(E(0, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(E(2, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("weightings solved by hand") {
  Eigen::MatrixXd one = Eigen::MatrixXd::Zero(1, 1);
  const auto w1 = weighting(MetricSpace(one));
  REQUIRE(w1.w.size() == 1);
  CHECK(w1.w(0) == doctest::Approx(1.0).epsilon(1e-15));

  for (double t : {0.1, 1.0, 4.0}) {
    const auto w = weighting(two_points(t));
    const double expect = 1.0 / (1.0 + std::exp(-t));
    CHECK(w.w(0) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(w.w(1) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(w.residual_norm < 1e-14);
    CHECK(w.rcond > 0.0);
  }

  const auto w3 = weighting(equilateral(1.0));
  for (int i = 0; i < 3; ++i)
    CHECK(w3.w(i) == doctest::Approx(1.0 / (1.0 + 2.0 * std::exp(-1.0))).epsilon(1e-14));
}

TEST_CASE("magnitude of small spaces") {
  Eigen::MatrixXd one = Eigen::MatrixXd::Zero(1, 1);
  CHECK(magnitude_finite(MetricSpace(one)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(magnitude_finite(equilateral(1.0)) == doctest::Approx(oracle::equilateral(1.0)).epsilon(1e-14));
  CHECK(oracle::equilateral(1.0) == doctest::Approx(1.727).epsilon(1e-3));
  for (double R : {0.3, 1.0, 2.5}) {
    const double d = oracle::pi * R;
    CHECK(magnitude_finite(two_points(d)) == doctest::Approx(oracle::two_point(d)).epsilon(1e-14));
  }
}

TEST_CASE("constructor rejects non-metrics") {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 2, 0;
  CHECK_THROWS_AS(MetricSpace{m}, InvalidMetric);
  m << 1, 1, 1, 0;
  CHECK_THROWS_AS(MetricSpace{m}, InvalidMetric);
  m << 0, 0, 0, 0;
  CHECK_THROWS_AS(MetricSpace{m}, InvalidMetric);
  m << 0, -1, -1, 0;
  CHECK_THROWS_AS(MetricSpace{m}, InvalidMetric);
  m << 0, NAN, NAN, 0;
  CHECK_THROWS_AS(MetricSpace{m}, InvalidMetric);
  CHECK_THROWS_AS(MetricSpace{Eigen::MatrixXd::Zero(2, 3)}, InvalidMetric);
  CHECK_THROWS_AS(MetricSpace{Eigen::MatrixXd(0, 0)}, InvalidMetric);

  Eigen::MatrixXd bad(3, 3);
  bad << 0, 1, 5, 1, 0, 1, 5, 1, 0;
  CHECK_THROWS_AS(MetricSpace{bad}, InvalidMetric);
  CHECK_NOTHROW(MetricSpace(bad, TriangleCheck::disabled));

  try {
    MetricSpace{bad};
  } catch (const InvalidMetric& e) {
    CHECK(std::string(e.what()).find("row") != std::string::npos);
    CHECK(e.kind() == std::string("InvalidMetric"));
  }

  // collinear points sit exactly on the triangle bound
  Eigen::MatrixXd line(3, 3);
  line << 0, 0.1, 0.3, 0.1, 0, 0.2, 0.3, 0.2, 0;
  CHECK_NOTHROW(MetricSpace{line});
}

TEST_CASE("scale") {
  const auto X = random_cloud(6, 3);
  CHECK(scale(X, 1.0).distances() == X.distances());
  CHECK(scale(two_points(1.0), 3.0)(0, 1) == 3.0);
  CHECK_THROWS_AS(scale(X, 0.0), NonpositiveScale);
  CHECK_THROWS_AS(scale(X, -2.0), NonpositiveScale);
  CHECK_THROWS_AS(scale(X, std::numeric_limits<double>::infinity()), NonpositiveScale);

  // powers of two keep s * t exact
  for (double s : {0.5, 2.0, 8.0})
    for (double t : {0.25, 4.0})
      CHECK(scale(X, s * t).distances() == scale(scale(X, t), s).distances());
}

TEST_CASE("large scale approaches the point count") {
  const auto X = random_cloud(8, 11);
  const double t = 60.0 / X.min_separation();
  CHECK(std::abs(magnitude_finite(scale(X, t)) - 8.0) < 1e-9);
}

TEST_CASE("magnitude is invariant under relabeling") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto X = random_cloud(12, seed);
    const double base = magnitude_finite(X);
    std::mt19937 gen(seed + 100);
    for (int trial = 0; trial < 5; ++trial) {
      Eigen::PermutationMatrix<Eigen::Dynamic> P(12);
      P.setIdentity();
      std::shuffle(P.indices().data(), P.indices().data() + 12, gen);
      const Eigen::MatrixXd d = P * X.distances() * P.transpose();
      CHECK(magnitude_finite(MetricSpace(d)) == doctest::Approx(base).epsilon(10 * kDefaultTolerance));
    }
  }
}

TEST_CASE("weighting does not depend on how the system is solved") {
  const auto X = random_cloud(15, 7);
  const double lu = magnitude_finite(X);
  const Eigen::MatrixXd Z = similarity_matrix(X);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(15);
  CHECK(Z.fullPivLu().solve(ones).sum() == doctest::Approx(lu).epsilon(10 * kDefaultTolerance));
  CHECK(Z.householderQr().solve(ones).sum() == doctest::Approx(lu).epsilon(10 * kDefaultTolerance));
  // row and column reversal
  const Eigen::MatrixXd R = Z.reverse();
  CHECK(R.partialPivLu().solve(ones).sum() == doctest::Approx(lu).epsilon(10 * kDefaultTolerance));
}

TEST_CASE("homogeneous spaces") {
  CHECK(is_homogeneous_rows(equilateral(1.0)));
  Eigen::MatrixXd one = Eigen::MatrixXd::Zero(1, 1);
  CHECK(is_homogeneous_rows(MetricSpace(one)));
  CHECK(magnitude_homogeneous_finite(MetricSpace(one)) == 1.0);

  Eigen::MatrixXd line(3, 3);
  line << 0, 1, 3, 1, 0, 2, 3, 2, 0;
  CHECK_FALSE(is_homogeneous_rows(MetricSpace(line)));
  CHECK_THROWS_AS(magnitude_homogeneous_finite(MetricSpace(line)), NotHomogeneous);

  for (double d : {0.2, 1.0, 7.0})
    CHECK(magnitude_homogeneous_finite(two_points(d)) == doctest::Approx(oracle::two_point(d)).epsilon(1e-15));

  for (int N : {3, 10, 64}) {
    const double L = 5.0;
    const auto C = circle_points(L, N);
    double row = 0.0;
    for (int k = 0; k < N; ++k) row += std::exp(-L / N * std::min(k, N - k));
    CHECK(magnitude_homogeneous_finite(C) == doctest::Approx(N / row).epsilon(1e-13));
    CHECK(magnitude_finite(C) == doctest::Approx(magnitude_homogeneous_finite(C)).epsilon(10 * kDefaultTolerance));
  }
}

TEST_CASE("near-singular systems are reported") {
  // two points 1e-14 apart: Z is numerically rank one
  Eigen::MatrixXd m(2, 2);
  m << 0, 1e-14, 1e-14, 0;
  CHECK_THROWS_AS(weighting(MetricSpace(m)), SingularSystem);
}

TEST_CASE("long double instantiation") {
  using L = long double;
  DenseMatrix<L> d(2, 2);
  d << 0, 1, 1, 0;
  const FiniteMetricSpace<L> X(d);
  CHECK(static_cast<double>(magnitude_finite(X)) == doctest::Approx(oracle::two_point(1.0)).epsilon(1e-15));
}
