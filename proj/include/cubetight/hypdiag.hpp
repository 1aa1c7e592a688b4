#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cubetight/cubecomplex.hpp"
#include "cubetight/errors.hpp"
#include "cubetight/rational.hpp"
#include "cubetight/real.hpp"
#include "cubetight/wallsys.hpp"

namespace cubetight {

/// Width of every non-crossing wall pair: the longest chain of walls that cross
/// both. Crossing pairs and the diagonal are marked unusable.
class SeparationTable {
 public:
  explicit SeparationTable(const CubeComplex& X);

  std::size_t wall_count() const { return n_; }
  /// Throws InputError when h == k, the walls cross, or an index is out of range.
  std::size_t width(std::size_t h, std::size_t k) const;
  bool separated(std::size_t h, std::size_t k, std::size_t L) const { return width(h, k) <= L; }
  /// Largest width over all non-crossing pairs (0 when there are none).
  std::size_t max_width() const { return max_width_; }

 private:
  static constexpr std::size_t kCrossing = static_cast<std::size_t>(-1);
  std::size_t n_ = 0;
  std::vector<std::size_t> width_;
  std::size_t max_width_ = 0;
};

bool are_L_separated(const CubeComplex& X, std::size_t h, std::size_t k, std::size_t L);

struct GridWitness {
  Chain chain_a;
  Chain chain_b;
  std::size_t thinness = 0;
};

/// Largest min(|a|, |b|) over grids of hyperplanes, with a maximizing witness.
GridWitness grid_thinness(const CubeComplex& X);

/// 0 if x == y, else 1 + number of walls in C separating x and y.
std::size_t dist_colored(const CubeComplex& X, std::span<const std::size_t> C, Vertex x, Vertex y);

/// 0 if x == y, else 1 + longest chain of separating walls, pairwise L-separated.
std::size_t dist_L(const CubeComplex& X, std::size_t L, Vertex x, Vertex y);
std::size_t dist_L(const CubeComplex& X, const SeparationTable& table, std::size_t L, Vertex x, Vertex y);
/// A chain realizing dist_L (empty when x == y), ordered from x toward y.
Chain dist_L_chain(const CubeComplex& X, const SeparationTable& table, std::size_t L, Vertex x, Vertex y);

/// Value of the curtain-model distance: finite + tail_weight * tail, where the
/// finite part is exact for integer exponents.
struct CurtainValue {
  Rational finite;          // exact partial sum (integer exponent only)
  std::size_t tail_weight;  // dist_L for L >= stable_from
  Real value;
};

/// Dist(x,y) = sum over L >= 1 of dist_L(x,y) / L^p.
class CurtainModel {
 public:
  /// Requires p > 1.
  explicit CurtainModel(const CubeComplex& X, Real exponent = 4);

  const Real& exponent() const { return p_; }
  bool exact_finite_part() const { return integer_exponent_; }
  /// dist_L is constant in L from here on.
  std::size_t stable_from() const { return stable_; }
  /// zeta(p) minus the first stable_from()-1 terms of its series.
  const Real& tail() const { return tail_; }
  const SeparationTable& separation() const { return table_; }

  CurtainValue dist(Vertex x, Vertex y) const;
  /// Direct partial sum over L = 1..L_max, each dist_L evaluated afresh.
  Real truncated(Vertex x, Vertex y, std::size_t L_max) const;

 private:
  const CubeComplex* X_;
  SeparationTable table_;
  Real p_;
  bool integer_exponent_ = false;
  unsigned long p_int_ = 0;
  std::size_t stable_ = 1;
  Real tail_;
};

/// The constant used for the tree closed form: zeta(p).
Real zeta_value(const Real& p);

/// Symmetric matrix over vertices with zero diagonal. Construction validates
/// nonnegativity, symmetry, and the triangle inequality (within slack, which is
/// zero for exact scalars).
template <class T>
class PseudoMetricTable {
 public:
  PseudoMetricTable(std::size_t n, std::vector<T> values, T slack = T(0)) : n_(n), values_(std::move(values)) {
    if (values_.size() != n_ * n_) throw InputError("metric table has wrong size");
    for (std::size_t i = 0; i < n_; ++i) {
      if (at(i, i) != T(0)) throw InputError("nonzero diagonal at " + std::to_string(i));
      for (std::size_t j = 0; j < n_; ++j) {
        if (at(i, j) < T(0)) throw InputError("negative entry");
        if (at(i, j) != at(j, i)) throw InputError("asymmetric entry at " + std::to_string(i) + "," + std::to_string(j));
      }
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (at(i, k) > at(i, j) + at(j, k) + slack)
            throw InputError("triangle inequality fails at " + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k));
  }

  std::size_t size() const { return n_; }
  const T& at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<T> values_;
};

/// Gromov four-point defect: max over quadruples of (S1 - S2) / 2 where
/// S1 >= S2 >= S3 are the three pair sums.
template <class T>
T four_point_delta(const PseudoMetricTable<T>& t) {
  const std::size_t n = t.size();
  T best(0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          T s[3] = {t.at(a, b) + t.at(c, d), t.at(a, c) + t.at(b, d), t.at(a, d) + t.at(b, c)};
          std::sort(s, s + 3);
          T defect = (s[2] - s[1]) / 2;
          if (defect > best) best = defect;
        }
  return best;
}

}  // namespace cubetight
