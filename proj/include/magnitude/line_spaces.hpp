#pragma once

// Weight measures on closed subsets of the real line.
//
// A measure is kept symbolically as point masses plus piecewise-constant
// densities, so every integral against exp(-|x - y|) has a closed form and
// nothing in this module needs quadrature.

#include <cstddef>
#include <vector>

#include "magnitude/metric_core.hpp"

namespace magnitude {

struct Interval {
  double lo{};
  double hi{};

  double length() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals, kept sorted.
class LineSubset {
 public:
  LineSubset() = default;
  explicit LineSubset(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool contains(double x) const noexcept;
  /// Index of the carrier interval containing [a, b], or npos.
  std::size_t component_of(double a, double b) const noexcept;
  double total_length() const noexcept;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const LineSubset&, const LineSubset&) = default;

 private:
  std::vector<Interval> intervals_;
};

struct Atom {
  double location{};
  double mass{};
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct DensitySegment {
  Interval support;
  double density{};  ///< mass per unit length
  friend bool operator==(const DensitySegment&, const DensitySegment&) = default;
};

/// Signed measure: atoms plus constant densities on disjoint segments.
/// Both lists are kept sorted by location, which makes equality canonical.
class LineWeightMeasure {
 public:
  LineWeightMeasure() = default;
  LineWeightMeasure(std::vector<Atom> atoms, std::vector<DensitySegment> densities);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<DensitySegment>& densities() const noexcept { return densities_; }

  /// Integral of exp(-|x - y|) against the measure, in closed form.
  double potential(double y) const noexcept;

  friend bool operator==(const LineWeightMeasure&, const LineWeightMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
  std::vector<DensitySegment> densities_;
};

/// A carrier together with a measure supported on it.
struct WeightedLineSpace {
  LineSubset carrier;
  LineWeightMeasure measure;

  /// Validates that the measure lives inside the carrier.
  static WeightedLineSpace make(LineSubset carrier, LineWeightMeasure measure);

  friend bool operator==(const WeightedLineSpace&, const WeightedLineSpace&) = default;
};

/// [0, length] with the weight measure (delta_0 + delta_length + Lebesgue) / 2.
WeightedLineSpace interval_weight_measure(double length);
/// Same measure on [a, b].
WeightedLineSpace interval_weight_measure(double a, double b);

/// Removes the open interval (a, b) from a space whose measure is exactly
/// half Lebesgue on [a, b], placing tanh((b - a)/2)/2 at each new endpoint.
/// A degenerate hole (a == b) leaves the space unchanged.
WeightedLineSpace remove_open_interval(const WeightedLineSpace& space, double a, double b);

double measure_total_mass(const LineWeightMeasure& measure) noexcept;

/// Integral of exp(-|x - y|) d(measure)(x) minus 1; zero for a weight measure.
double weight_equation_residual(const WeightedLineSpace& space, double y);

/// Largest |residual| over `per_interval` evenly spaced probes in every
/// carrier interval (endpoints included).
double max_weight_equation_residual(const WeightedLineSpace& space, int per_interval = 100);

/// Stage `depth` of the middle-thirds construction on [0, length], built by
/// repeated hole removal.
WeightedLineSpace cantor_stage(double length, int depth);

struct SeriesValue {
  double value{};
  double error_bound{};  ///< rigorous bound on the truncated tail
  int terms{};
};

/// 1 + sum_i 2^(i-1) tanh(length / (2 * 3^i)), truncated when the geometric
/// tail bound drops below tol.
SeriesValue cantor_magnitude_series_detail(double length, double tol);
double cantor_magnitude_series(double length, double tol);

/// Mass of the stage-`depth` weight measure, by summing hole increments.
double cantor_magnitude_iterative(double length, int depth);

/// Bound on |stage mass - Cantor magnitude| after `depth` stages, from
/// 0 <= x - tanh x <= x^3 / 3.
double cantor_iterative_error_bound(double length, int depth);

/// Carrier endpoints plus `count` points spread uniformly along the carrier
/// (by arc length, both extremes included); points within 1e-12 are merged.
MetricSpace finite_approx_line(const LineSubset& space, int count);

}  // namespace magnitude
