#pragma once

// Finite metric spaces and their magnitude via the weight equation
//
//     sum_x exp(-d(x, y)) w_x = 1   for every y,      |X| = sum_x w_x.
//
// Everything is dense and templated on the scalar type; `double` is the
// working precision used by the rest of the library.

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "magnitude/errors.hpp"

namespace magnitude {

/// Default relative tolerance for weight-equation solves.
inline constexpr double kDefaultTolerance = 1e-10;

enum class TriangleCheck { enabled, disabled };

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A finite metric space stored as its full distance matrix. Immutable once
/// constructed; the constructor enforces the metric axioms.
template <typename Scalar = double>
class FiniteMetricSpace {
 public:
  using Matrix = DenseMatrix<Scalar>;

  explicit FiniteMetricSpace(Matrix distances,
                             TriangleCheck check = TriangleCheck::enabled,
                             std::vector<std::string> labels = {})
      : d_(std::move(distances)), labels_(std::move(labels)) {
    validate(check);
  }

  Eigen::Index size() const noexcept { return d_.rows(); }
  const Matrix& distances() const noexcept { return d_; }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return d_(i, j); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Smallest off-diagonal distance; +inf for a single point.
  Scalar min_separation() const {
    Scalar m = std::numeric_limits<Scalar>::infinity();
    for (Eigen::Index j = 0; j < size(); ++j)
      for (Eigen::Index i = 0; i < j; ++i) m = std::min(m, d_(i, j));
    return m;
  }

 private:
  static std::string where(Eigen::Index i, Eigen::Index j) {
    std::ostringstream os;
    os << "row " << i << ", column " << j;
    return os.str();
  }

  void validate(TriangleCheck check) const {
    using std::abs;
    const Eigen::Index n = d_.rows();
    if (n == 0) throw InvalidMetric("empty distance matrix");
    if (d_.cols() != n) throw InvalidMetric("distance matrix is not square");
    if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != n)
      throw InvalidMetric("label count does not match point count");
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar v = d_(i, j);
        if (!std::isfinite(static_cast<double>(v)))
          throw InvalidMetric("non-finite distance at " + where(i, j));
        if (i == j) {
          if (v != Scalar(0)) throw InvalidMetric("nonzero diagonal at " + where(i, j));
        } else {
          if (!(v > Scalar(0)))
            throw InvalidMetric("distinct points at distance <= 0 at " + where(i, j));
          if (v != d_(j, i)) throw InvalidMetric("asymmetric distance at " + where(i, j));
        }
      }
    }
    if (check == TriangleCheck::disabled) return;
    // Slack of a few ulps so that e.g. collinear points survive rounding.
    const Scalar slack = Scalar(64) * std::numeric_limits<Scalar>::epsilon();
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) {
          const Scalar bound = d_(i, j) + d_(j, k);
          if (d_(i, k) > bound * (Scalar(1) + slack))
            throw InvalidMetric("triangle inequality fails at " + where(i, k) +
                                " via point " + std::to_string(j));
        }
  }

  Matrix d_;
  std::vector<std::string> labels_;
};

/// A solution of the weight equation together with its quality indicators.
template <typename Scalar = double>
struct Weighting {
  DenseVector<Scalar> w;
  Scalar residual_norm{};  ///< max-norm of Z w - 1
  Scalar rcond{};          ///< reciprocal condition estimate of Z (1-norm)
  Scalar tolerance{};

  Scalar sum() const { return w.sum(); }
};

/// Z(i, j) = exp(-d(i, j)).
template <typename Scalar>
DenseMatrix<Scalar> similarity_matrix(const FiniteMetricSpace<Scalar>& X) {
  return (-X.distances().array()).exp().matrix();
}

/// Solves Z w = 1 with partial-pivoting LU. Z need not be positive definite
/// for a general finite metric, so Cholesky-type solvers are not used.
template <typename Scalar>
Weighting<Scalar> weighting(const FiniteMetricSpace<Scalar>& X,
                            Scalar tol = Scalar(kDefaultTolerance)) {
  const DenseMatrix<Scalar> Z = similarity_matrix(X);
  const DenseVector<Scalar> ones = DenseVector<Scalar>::Ones(X.size());

  Eigen::PartialPivLU<DenseMatrix<Scalar>> lu(Z);
  Weighting<Scalar> out;
  out.tolerance = tol;
  out.rcond = lu.rcond();
  if (!(out.rcond >= tol)) {
    std::ostringstream os;
    os << "reciprocal condition estimate " << out.rcond << " below tolerance " << tol;
    throw SingularSystem(os.str());
  }
  out.w = lu.solve(ones);
  DenseVector<Scalar> r = ones - Z * out.w;
  out.residual_norm = r.template lpNorm<Eigen::Infinity>();
  // A couple of refinement sweeps recover the digits lost to pivot growth.
  for (int sweep = 0; sweep < 2 && out.residual_norm > tol; ++sweep) {
    out.w += lu.solve(r);
    r = ones - Z * out.w;
    out.residual_norm = r.template lpNorm<Eigen::Infinity>();
  }
  if (!(out.residual_norm <= tol)) {
    std::ostringstream os;
    os << "weight-equation residual " << out.residual_norm << " exceeds tolerance " << tol;
    throw SingularSystem(os.str());
  }
  return out;
}

template <typename Scalar>
Scalar magnitude_finite(const FiniteMetricSpace<Scalar>& X,
                        Scalar tol = Scalar(kDefaultTolerance)) {
  return weighting(X, tol).sum();
}

/// tX: every distance multiplied by t > 0.
template <typename Scalar>
FiniteMetricSpace<Scalar> scale(const FiniteMetricSpace<Scalar>& X, Scalar t) {
  if (!(t > Scalar(0)) || !std::isfinite(static_cast<double>(t)))
    throw NonpositiveScale("scale factor must be positive and finite");
  // Scaling preserves the metric axioms; re-running the O(n^3) check is waste.
  return FiniteMetricSpace<Scalar>((t * X.distances()).eval(), TriangleCheck::disabled,
                                   X.labels());
}

/// Necessary condition for homogeneity: every row of Z has the same sum.
template <typename Scalar>
bool is_homogeneous_rows(const FiniteMetricSpace<Scalar>& X,
                         Scalar tol = Scalar(kDefaultTolerance)) {
  const DenseVector<Scalar> rows = similarity_matrix(X).rowwise().sum();
  return rows.maxCoeff() - rows.minCoeff() <= tol;
}

/// Homogeneous shortcut: the uniform weighting 1 / (row sum of Z).
template <typename Scalar>
Scalar magnitude_homogeneous_finite(const FiniteMetricSpace<Scalar>& X,
                                    Scalar tol = Scalar(kDefaultTolerance)) {
  if (!is_homogeneous_rows(X, tol))
    throw NotHomogeneous("similarity row sums differ by more than the tolerance");
  const Scalar row = (-X.distances().row(0).array()).exp().sum();
  return Scalar(X.size()) / row;
}

/// Distance matrix of points in R^d (one point per row) under the Euclidean metric.
template <typename Scalar>
DenseMatrix<Scalar> euclidean_distances(const DenseMatrix<Scalar>& points) {
  const Eigen::Index n = points.rows();
  DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < j; ++i) {
      const Scalar v = (points.row(i) - points.row(j)).norm();
      d(i, j) = v;
      d(j, i) = v;
    }
  return d;
}

/// N evenly spaced points on a circle of circumference `length`, arc metric.
template <typename Scalar>
FiniteMetricSpace<Scalar> circle_points(Scalar length, Eigen::Index count) {
  if (!(length > Scalar(0))) throw NonpositiveLength("circumference must be positive");
  if (count < 1) throw TooFewPoints("need at least one point on the circle");
  DenseMatrix<Scalar> d(count, count);
  const Scalar step = length / Scalar(count);
  for (Eigen::Index j = 0; j < count; ++j)
    for (Eigen::Index i = 0; i < count; ++i) {
      const Eigen::Index k = std::abs(i - j);
      d(i, j) = step * Scalar(std::min(k, count - k));
    }
  return FiniteMetricSpace<Scalar>(std::move(d), TriangleCheck::disabled);
}

using MetricSpace = FiniteMetricSpace<double>;

}  // namespace magnitude
