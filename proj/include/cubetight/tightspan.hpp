#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubetight/rational.hpp"

namespace cubetight {

/// Finite metric space with exact rational distances.
class FiniteMetric {
 public:
  FiniteMetric() = default;
  /// d is row-major n*n. Throws InputError on a nonzero diagonal, asymmetry,
  /// a zero or negative off-diagonal entry, a triangle violation, or
  /// duplicate point names.
  FiniteMetric(std::vector<std::string> points, std::vector<Rational> d);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& name(std::size_t i) const { return points_.at(i); }
  std::size_t index(std::string_view name) const;
  const Rational& d(std::size_t i, std::size_t j) const { return d_[i * points_.size() + j]; }
  /// Row-major copy in double precision.
  const std::vector<double>& d_double() const { return d_double_; }

 private:
  std::vector<std::string> points_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Rational> d_;
  std::vector<double> d_double_;
};

/// A function on the points, indexed like the metric.
using MetricForm = std::vector<Rational>;

/// f(x) + f(y) >= d(x,y) for all x, y (x = y included, which forces f >= 0).
bool in_delta(const FiniteMetric& M, const MetricForm& f);
/// In Delta and 1-Lipschitz.
bool in_delta1(const FiniteMetric& M, const MetricForm& f);
/// f*(x) = max_y (d(x,y) - f(y)).
MetricForm conjugate(const FiniteMetric& M, const MetricForm& f);
/// f = f*. Throws InputError when f is not in Delta.
bool is_extremal(const FiniteMetric& M, const MetricForm& f);

Rational sup_distance(const MetricForm& f, const MetricForm& g);

/// e(x) = d(x, .).
MetricForm kuratowski(const FiniteMetric& M, std::size_t x);

struct RetractOptions {
  double tol = 1e-9;
  std::size_t max_iterations = 1000000;
};

/// Iterates f <- (f + f*)/2 in double precision until the sup-change drops
/// below tol. Throws InputError when f is not in Delta, ConsistencyError when
/// the iteration cap is hit.
std::vector<double> retract_numeric(const FiniteMetric& M, const MetricForm& f, const RetractOptions& opt = {});

/// Numeric retraction followed by an exact snap onto the tight-equality
/// system. The result is extremal and pointwise <= f; extremal input is
/// returned unchanged.
MetricForm retract(const FiniteMetric& M, const MetricForm& f, const RetractOptions& opt = {});

struct TightSpanReport {
  std::vector<MetricForm> zero_cells;  // sorted
  Rational coarse_gap;                 // max over zero-cells of min_x f(x)
};

inline constexpr std::size_t kMaxCellPoints = 7;

/// Vertices of the tight span, found by enumerating choices of a tight partner
/// for every point whose cycles are all odd. Throws InputError above
/// kMaxCellPoints points.
TightSpanReport tight_span_cells(const FiniteMetric& M);

struct HellyBall {
  std::size_t center = 0;
  Rational radius;
};

struct HellyOutcome {
  std::optional<MetricForm> witness;                           // extremal, f(c_i) <= r_i
  std::optional<std::pair<std::size_t, std::size_t>> violating;  // ball indices with d > r_i + r_j
};

HellyOutcome helly_witness(const FiniteMetric& M, std::span<const HellyBall> balls, const RetractOptions& opt = {});

struct Tripod {
  Rational a, b, c;  // d(x,y) = a + b, d(x,z) = a + c, d(y,z) = b + c
  MetricForm center;
};

/// Throws InputError unless x, y, z are distinct; ConsistencyError if the
/// retracted candidate misses the leg lengths.
Tripod tripod_center(const FiniteMetric& M, std::size_t x, std::size_t y, std::size_t z,
                     const RetractOptions& opt = {});

/// Retraction of the average of the Kuratowski images.
MetricForm center(const FiniteMetric& M, std::span<const std::size_t> pts, const RetractOptions& opt = {});

/// retract((1-t) f + t g) for extremal f, g and t in [0,1].
MetricForm comb(const FiniteMetric& M, const MetricForm& f, const MetricForm& g, const Rational& t,
                const RetractOptions& opt = {});

}  // namespace cubetight
