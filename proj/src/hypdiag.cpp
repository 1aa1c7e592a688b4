#include "cubetight/hypdiag.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include <boost/math/special_functions/zeta.hpp>

#include "cubetight/parallel.hpp"

namespace cubetight {

SeparationTable::SeparationTable(const CubeComplex& X) : n_(X.wall_count()), width_(n_ * n_, kCrossing) {
  const WallSystem& ws = X.walls();
  std::vector<std::size_t> row_max(n_, 0);
  parallel_for(n_, [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> both;
    for (std::size_t h = begin; h < end; ++h)
      for (std::size_t k = h + 1; k < n_; ++k) {
        if (ws.crosses(h, k)) continue;
        both.clear();
        for (std::size_t w = 0; w < n_; ++w)
          if (ws.crosses(w, h) && ws.crosses(w, k)) both.push_back(w);
        const std::size_t w = ws.longest_chain(both).size();
        width_[h * n_ + k] = width_[k * n_ + h] = w;
        row_max[h] = std::max(row_max[h], w);
      }
  });
  for (auto w : row_max) max_width_ = std::max(max_width_, w);
}

std::size_t SeparationTable::width(std::size_t h, std::size_t k) const {
  if (h >= n_ || k >= n_) throw InputError("wall index out of range");
  if (h == k) throw InputError("L-separation needs two distinct walls");
  const std::size_t w = width_[h * n_ + k];
  if (w == kCrossing) throw InputError("walls " + std::to_string(h) + " and " + std::to_string(k) + " cross");
  return w;
}

bool are_L_separated(const CubeComplex& X, std::size_t h, std::size_t k, std::size_t L) {
  const WallSystem& ws = X.walls();
  if (h >= ws.wall_count() || k >= ws.wall_count()) throw InputError("wall index out of range");
  if (h == k) throw InputError("L-separation needs two distinct walls");
  if (ws.crosses(h, k)) throw InputError("walls " + std::to_string(h) + " and " + std::to_string(k) + " cross");
  std::vector<std::size_t> both;
  for (std::size_t w = 0; w < ws.wall_count(); ++w)
    if (ws.crosses(w, h) && ws.crosses(w, k)) both.push_back(w);
  return ws.longest_chain(both).size() <= L;
}

namespace {

// Depth-first search over chains A (as increasing half-space sequences),
// tracking the walls that cross every member of A.
class GridSearch {
 public:
  explicit GridSearch(const WallSystem& ws) : ws_(ws), n_(ws.wall_count()) {
    const std::size_t m = 2 * n_;
    up_.assign(m, {});
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a / 2 != b / 2 && ws.nested_in(hs(a), hs(b))) up_[a].push_back(b);
    // longest ascending path from each half-space (including itself)
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ws.half_space(hs(a)).count() > ws.half_space(hs(b)).count(); });
    height_.assign(m, 1);
    for (auto a : order)
      for (auto b : up_[a]) height_[a] = std::max(height_[a], height_[b] + 1);
  }

  GridWitness run() {
    std::vector<std::size_t> all(n_);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t a = 0; a < 2 * n_; ++a) {
      std::vector<std::size_t> chain{a};
      extend(chain, crossing_subset(all, a / 2));
    }
    return best_;
  }

 private:
  static HalfSpace hs(std::size_t code) { return {code / 2, code % 2 ? Side::plus : Side::minus}; }

  std::vector<std::size_t> crossing_subset(const std::vector<std::size_t>& from, std::size_t wall) const {
    std::vector<std::size_t> out;
    for (auto w : from)
      if (ws_.crosses(w, wall)) out.push_back(w);
    return out;
  }

  void extend(std::vector<std::size_t>& chain, const std::vector<std::size_t>& crossing) {
    if (crossing.empty()) return;
    const std::size_t b = ws_.longest_chain(crossing).size();
    const std::size_t reach = chain.size() - 1 + height_[chain.back()];
    if (std::min(reach, b) <= best_.thinness) return;
    const std::size_t value = std::min(chain.size(), b);
    if (value > best_.thinness) {
      best_.thinness = value;
      best_.chain_a.walls.clear();
      for (auto c : chain) best_.chain_a.walls.push_back(c / 2);
      best_.chain_b = ws_.longest_chain(crossing);
    }
    for (auto next : up_[chain.back()]) {
      chain.push_back(next);
      extend(chain, crossing_subset(crossing, next / 2));
      chain.pop_back();
    }
  }

  const WallSystem& ws_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::size_t> height_;
  GridWitness best_;
};

}  // namespace

GridWitness grid_thinness(const CubeComplex& X) { return GridSearch(X.walls()).run(); }

std::size_t dist_colored(const CubeComplex& X, std::span<const std::size_t> C, Vertex x, Vertex y) {
  X.check_vertex(x);
  X.check_vertex(y);
  for (auto w : C)
    if (w >= X.wall_count()) throw InputError("wall index out of range");
  if (x == y) return 0;
  std::vector<std::size_t> sorted(C.begin(), C.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::size_t count = 0;
  for (auto w : sorted)
    if (X.orientation(x).test(w) != X.orientation(y).test(w)) ++count;
  return 1 + count;
}

Chain dist_L_chain(const CubeComplex& X, const SeparationTable& table, std::size_t L, Vertex x, Vertex y) {
  X.check_vertex(x);
  X.check_vertex(y);
  if (x == y) return {};
  const WallSystem& ws = X.walls();
  std::vector<HalfSpace> sep;  // x-sides, which grow toward y
  for (std::size_t w = 0; w < ws.wall_count(); ++w)
    if (ws.separates(w, x, y)) sep.push_back({w, ws.side_of(w, x)});
  const std::size_t m = sep.size();
  std::vector<std::size_t> sizes(m);
  for (std::size_t i = 0; i < m; ++i) sizes[i] = ws.half_space(sep[i]).count();
  auto edge = [&](std::size_t i, std::size_t j) {
    return sizes[i] < sizes[j] && ws.nested_in(sep[i], sep[j]) && table.width(sep[i].wall, sep[j].wall) <= L;
  };
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
  std::vector<std::size_t> len(m, 1);
  for (std::size_t oi = 0; oi < m; ++oi)
    for (std::size_t oj = 0; oj < oi; ++oj)
      if (edge(order[oi], order[oj])) len[order[oi]] = std::max(len[order[oi]], len[order[oj]] + 1);

  // sep is in wall order, so the first index attaining a length is the
  // lexicographically smallest choice
  const std::size_t best = *std::max_element(len.begin(), len.end());
  std::size_t cur = static_cast<std::size_t>(std::find(len.begin(), len.end(), best) - len.begin());
  Chain chain;
  chain.walls.push_back(sep[cur].wall);
  while (len[cur] > 1) {
    std::size_t j = 0;
    while (!(len[j] + 1 == len[cur] && edge(cur, j))) ++j;
    cur = j;
    chain.walls.push_back(sep[cur].wall);
  }
  return chain;
}

std::size_t dist_L(const CubeComplex& X, const SeparationTable& table, std::size_t L, Vertex x, Vertex y) {
  if (x == y) {
    X.check_vertex(x);
    return 0;
  }
  return 1 + dist_L_chain(X, table, L, x, y).size();
}

std::size_t dist_L(const CubeComplex& X, std::size_t L, Vertex x, Vertex y) {
  return dist_L(X, SeparationTable(X), L, x, y);
}

Real zeta_value(const Real& p) { return boost::math::zeta(p); }

CurtainModel::CurtainModel(const CubeComplex& X, Real exponent) : X_(&X), table_(X), p_(std::move(exponent)) {
  if (!(p_ > 1)) throw InputError("curtain exponent must exceed 1");
  Real rounded = boost::multiprecision::round(p_);
  integer_exponent_ = rounded == p_ && p_ <= 64;
  if (integer_exponent_) p_int_ = rounded.convert_to<unsigned long>();
  // widths are chain lengths among the other walls, so every pair is
  // separated once L reaches the wall count
  stable_ = std::max<std::size_t>(X.wall_count(), 1);
  tail_ = zeta_value(p_);
  for (std::size_t L = 1; L < stable_; ++L) tail_ -= boost::multiprecision::pow(Real(L), -p_);
}

CurtainValue CurtainModel::dist(Vertex x, Vertex y) const {
  CurtainValue v{Rational(0), 0, Real(0)};
  if (x == y) {
    X_->check_vertex(x);
    return v;
  }
  for (std::size_t L = 1; L < stable_; ++L) {
    const std::size_t d = dist_L(*X_, table_, L, x, y);
    if (integer_exponent_) {
      v.finite += Rational(d, boost::multiprecision::pow(BigInt(L), static_cast<unsigned>(p_int_)));
    } else {
      v.value += Real(d) * boost::multiprecision::pow(Real(L), -p_);
    }
  }
  v.tail_weight = dist_L(*X_, table_, stable_, x, y);
  if (integer_exponent_) v.value = Real(v.finite);
  v.value += Real(v.tail_weight) * tail_;
  return v;
}

Real CurtainModel::truncated(Vertex x, Vertex y, std::size_t L_max) const {
  Real sum = 0;
  for (std::size_t L = 1; L <= L_max; ++L)
    sum += Real(dist_L(*X_, table_, L, x, y)) * boost::multiprecision::pow(Real(L), -p_);
  return sum;
}

}  // namespace cubetight
