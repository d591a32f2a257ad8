#include "magnitude/line_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace magnitude {

namespace {

constexpr double kMergeDistance = 1e-12;

// Integral over [lo, hi] of exp(-|x - y|) dx.
double segment_potential(double lo, double hi, double y) noexcept {
  if (y <= lo) return -std::exp(y - lo) * std::expm1(lo - hi);
  if (y >= hi) return -std::exp(hi - y) * std::expm1(lo - hi);
  return -std::expm1(lo - y) - std::expm1(y - hi);
}

}  // namespace

LineSubset::LineSubset(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi)
      throw DomainError("interval " + std::to_string(i) + " is not a finite closed interval");
    if (i > 0 && !(intervals_[i - 1].hi < iv.lo))
      throw DomainError("intervals " + std::to_string(i - 1) + " and " + std::to_string(i) +
                        " are not sorted and disjoint");
  }
}

bool LineSubset::contains(double x) const noexcept {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [x](const Interval& iv) { return iv.contains(x); });
}

std::size_t LineSubset::component_of(double a, double b) const noexcept {
  for (std::size_t i = 0; i < intervals_.size(); ++i)
    if (intervals_[i].contains(a) && intervals_[i].contains(b)) return i;
  return npos;
}

double LineSubset::total_length() const noexcept {
  double s = 0.0;
  for (const auto& iv : intervals_) s += iv.length();
  return s;
}

LineWeightMeasure::LineWeightMeasure(std::vector<Atom> atoms,
                                     std::vector<DensitySegment> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& l, const Atom& r) { return l.location < r.location; });
  std::sort(densities_.begin(), densities_.end(),
            [](const DensitySegment& l, const DensitySegment& r) {
              return l.support.lo < r.support.lo;
            });
  for (std::size_t i = 0; i < densities_.size(); ++i) {
    const auto& s = densities_[i].support;
    if (!(s.lo <= s.hi)) throw DomainError("density segment with lo > hi");
    if (i > 0 && !(densities_[i - 1].support.hi <= s.lo))
      throw DomainError("density segments overlap");
  }
}

double LineWeightMeasure::potential(double y) const noexcept {
  double total = 0.0;
  for (const auto& a : atoms_) total += a.mass * std::exp(-std::abs(a.location - y));
  for (const auto& s : densities_)
    total += s.density * segment_potential(s.support.lo, s.support.hi, y);
  return total;
}

WeightedLineSpace WeightedLineSpace::make(LineSubset carrier, LineWeightMeasure measure) {
  for (const auto& a : measure.atoms())
    if (!carrier.contains(a.location)) {
      std::ostringstream os;
      os << "atom at " << a.location << " lies outside the carrier";
      throw NotContained(os.str());
    }
  for (const auto& s : measure.densities())
    if (carrier.component_of(s.support.lo, s.support.hi) == LineSubset::npos)
      throw NotContained("density segment is not inside a single carrier interval");
  return {std::move(carrier), std::move(measure)};
}

WeightedLineSpace interval_weight_measure(double length) {
  return interval_weight_measure(0.0, length);
}

WeightedLineSpace interval_weight_measure(double a, double b) {
  if (!(b - a > 0.0) || !std::isfinite(b - a))
    throw NonpositiveLength("interval length must be positive and finite");
  return WeightedLineSpace::make(LineSubset({{a, b}}),
                                 LineWeightMeasure({{a, 0.5}, {b, 0.5}}, {{{a, b}, 0.5}}));
}

WeightedLineSpace remove_open_interval(const WeightedLineSpace& space, double a, double b) {
  if (!(a <= b)) throw DomainError("hole must satisfy a <= b");
  const auto& carrier = space.carrier.intervals();
  const std::size_t c = space.carrier.component_of(a, b);
  if (c == LineSubset::npos) throw NotContained("[a, b] is not inside one carrier interval");
  if (a == b) return space;

  const auto& atoms = space.measure.atoms();
  if (std::any_of(atoms.begin(), atoms.end(),
                  [&](const Atom& at) { return a <= at.location && at.location <= b; }))
    throw HypothesisViolated("the measure has an atom on [a, b]");

  const auto& dens = space.measure.densities();
  const auto seg = std::find_if(dens.begin(), dens.end(), [&](const DensitySegment& s) {
    return s.support.lo <= a && b <= s.support.hi;
  });
  if (seg == dens.end() || seg->density != 0.5)
    throw HypothesisViolated("the measure is not half Lebesgue on [a, b]");

  std::vector<Interval> new_carrier;
  new_carrier.reserve(carrier.size() + 1);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (i != c) {
      new_carrier.push_back(carrier[i]);
      continue;
    }
    new_carrier.push_back({carrier[i].lo, a});
    new_carrier.push_back({b, carrier[i].hi});
  }

  std::vector<DensitySegment> new_dens;
  new_dens.reserve(dens.size() + 1);
  for (auto it = dens.begin(); it != dens.end(); ++it) {
    if (it != seg) {
      new_dens.push_back(*it);
      continue;
    }
    new_dens.push_back({{it->support.lo, a}, it->density});
    new_dens.push_back({{b, it->support.hi}, it->density});
  }

  const double endpoint_mass = 0.5 * std::tanh(0.5 * (b - a));
  std::vector<Atom> new_atoms = atoms;
  new_atoms.push_back({a, endpoint_mass});
  new_atoms.push_back({b, endpoint_mass});

  return {LineSubset(std::move(new_carrier)),
          LineWeightMeasure(std::move(new_atoms), std::move(new_dens))};
}

double measure_total_mass(const LineWeightMeasure& measure) noexcept {
  double atoms = 0.0;
  for (const auto& a : measure.atoms()) atoms += a.mass;
  double spread = 0.0;
  for (const auto& s : measure.densities()) spread += s.density * s.support.length();
  return atoms + spread;
}

double weight_equation_residual(const WeightedLineSpace& space, double y) {
  if (!space.carrier.contains(y)) {
    std::ostringstream os;
    os << "probe point " << y << " is outside the carrier";
    throw PointOutsideCarrier(os.str());
  }
  return space.measure.potential(y) - 1.0;
}

double max_weight_equation_residual(const WeightedLineSpace& space, int per_interval) {
  double worst = 0.0;
  for (const auto& iv : space.carrier.intervals()) {
    const int k = std::max(per_interval, 2);
    for (int j = 0; j < k; ++j) {
      const double y = j + 1 == k ? iv.hi : iv.lo + iv.length() * j / (k - 1);
      worst = std::max(worst, std::abs(weight_equation_residual(space, y)));
    }
  }
  return worst;
}

WeightedLineSpace cantor_stage(double length, int depth) {
  if (depth < 0) throw DomainError("depth must be nonnegative");
  WeightedLineSpace stage = interval_weight_measure(length);
  for (int i = 1; i <= depth; ++i) {
    const std::vector<Interval> pieces = stage.carrier.intervals();
    for (const auto& iv : pieces) {
      const double third = iv.length() / 3.0;
      stage = remove_open_interval(stage, iv.lo + third, iv.hi - third);
    }
  }
  return stage;
}

SeriesValue cantor_magnitude_series_detail(double length, double tol) {
  if (!(length > 0.0)) throw NonpositiveLength("Cantor set length must be positive");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  // term_i <= (length/4)(2/3)^i, so the tail after m is at most 3(length/4)(2/3)^(m+1).
  SeriesValue out{1.0, 0.0, 0};
  double scale = length / 2.0;  // length / (2 * 3^i)
  double count = 0.5;           // 2^(i-1)
  double ratio = 1.0;           // (2/3)^i
  for (int i = 1; i < 4096; ++i) {
    scale /= 3.0;
    count *= 2.0;
    ratio *= 2.0 / 3.0;
    out.value += count * std::tanh(scale);
    out.terms = i;
    out.error_bound = 3.0 * (length / 4.0) * ratio * (2.0 / 3.0);
    if (out.error_bound <= tol) break;
  }
  return out;
}

double cantor_magnitude_series(double length, double tol) {
  return cantor_magnitude_series_detail(length, tol).value;
}

double cantor_magnitude_iterative(double length, int depth) {
  if (!(length > 0.0)) throw NonpositiveLength("Cantor set length must be positive");
  if (depth < 0) throw DomainError("depth must be nonnegative");
  double value = 1.0 + length / 2.0;
  double hole = length;  // length / 3^i
  double count = 0.5;    // 2^(i-1)
  for (int i = 1; i <= depth; ++i) {
    hole /= 3.0;
    count *= 2.0;
    const double half = hole / 2.0;
    value += count * (std::tanh(half) - half);
  }
  return value;
}

double cantor_iterative_error_bound(double length, int depth) {
  if (!(length > 0.0)) throw NonpositiveLength("Cantor set length must be positive");
  if (depth < 0) throw DomainError("depth must be nonnegative");
  // sum_{i > depth} 2^(i-1) (length / (2 3^i))^3 / 3 = (length^3/48) sum_{i > depth} (2/27)^i
  const double r = 2.0 / 27.0;
  return length * length * length / 48.0 * std::pow(r, depth + 1) / (1.0 - r);
}

MetricSpace finite_approx_line(const LineSubset& space, int count) {
  if (count < 2) throw TooFewPoints("need at least two grid points");
  if (space.empty()) throw TooFewPoints("empty carrier");

  std::vector<double> xs;
  const auto& ivs = space.intervals();
  for (const auto& iv : ivs) {
    xs.push_back(iv.lo);
    xs.push_back(iv.hi);
  }
  const double total = space.total_length();
  std::size_t k = 0;
  double passed = 0.0;  // carrier length strictly before ivs[k]
  for (int j = 0; j < count; ++j) {
    const double s = total * j / (count - 1);
    while (k + 1 < ivs.size() && s > passed + ivs[k].length()) {
      passed += ivs[k].length();
      ++k;
    }
    xs.push_back(std::min(ivs[k].lo + (s - passed), ivs[k].hi));
  }
  std::sort(xs.begin(), xs.end());
  std::vector<double> pts;
  for (double x : xs)
    if (pts.empty() || x - pts.back() >= kMergeDistance) pts.push_back(x);

  const auto n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) d(i, j) = std::abs(pts[i] - pts[j]);
  // |x - y| is a metric; skip the cubic triangle check.
  return MetricSpace(std::move(d), TriangleCheck::disabled);
}

}  // namespace magnitude
