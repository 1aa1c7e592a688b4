#include "cubetight/families.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cubetight/errors.hpp"

namespace cubetight {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

CubeComplex hypercube(std::size_t n) {
  if (n > 20) throw InputError("hypercube dimension too large");
  std::vector<std::string> labels;
  std::vector<Bitset> orientations;
  for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
    Bitset o(n);
    std::string label;
    for (std::size_t i = 0; i < n; ++i) {
      const bool bit = (v >> (n - 1 - i)) & 1U;
      o.assign(i, bit);
      label.push_back(bit ? '1' : '0');
    }
    labels.push_back(n == 0 ? std::string("root") : label);
    orientations.push_back(std::move(o));
  }
  return CubeComplex(std::move(labels), std::move(orientations), n);
}

CubeComplex grid(const std::vector<std::size_t>& squares) {
  std::size_t walls = 0, count = 1;
  for (auto s : squares) {
    walls += s;
    count *= s + 1;
  }
  if (count > 1000000) throw InputError("grid too large");
  std::vector<std::string> labels;
  std::vector<Bitset> orientations;
  std::vector<std::size_t> coord(squares.size(), 0);
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t rest = v;
    for (std::size_t i = squares.size(); i-- > 0;) {
      coord[i] = rest % (squares[i] + 1);
      rest /= squares[i] + 1;
    }
    Bitset o(walls);
    std::string label;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < squares.size(); ++i) {
      // wall offset+j has the points with coordinate > j on its plus side
      for (std::size_t j = 0; j < coord[i]; ++j) o.set(offset + j);
      offset += squares[i];
      if (i) label.push_back('-');
      label += std::to_string(coord[i]);
    }
    labels.push_back(squares.empty() ? std::string("root") : label);
    orientations.push_back(std::move(o));
  }
  return CubeComplex(std::move(labels), std::move(orientations), walls);
}

CubeComplex path(std::size_t n) {
  if (n == 0) throw InputError("path needs at least one vertex");
  return grid({n - 1});
}

CubeComplex tree(const std::vector<std::size_t>& parent) {
  const std::size_t n = parent.size();
  if (n == 0) throw InputError("tree needs at least one vertex");
  for (std::size_t i = 1; i < n; ++i)
    if (parent[i] >= i) throw InputError("tree parents must precede their children");
  // wall i-1 is the edge (parent[i], i); its plus side is the subtree of i
  std::vector<Bitset> orientations(n, Bitset(n - 1));
  for (std::size_t v = 1; v < n; ++v) {
    orientations[v] = orientations[parent[v]];
    orientations[v].set(v - 1);
  }
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  return CubeComplex(std::move(labels), std::move(orientations), n - 1);
}

std::vector<std::size_t> random_parents(Rng& rng, std::size_t n) {
  std::vector<std::size_t> parent(n, 0);
  for (std::size_t i = 1; i < n; ++i) parent[i] = uniform(rng, 0, i - 1);
  return parent;
}

SimpleGraph staircase_graph(std::size_t n, std::size_t w) {
  if (w == 0) throw InputError("staircase width must be at least 1");
  std::vector<std::string> labels;
  std::vector<std::vector<long>> id(n + 1, std::vector<long>(n + 1, -1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if ((i > j ? i - j : j - i) <= w) {
        id[i][j] = static_cast<long>(labels.size());
        labels.push_back(std::to_string(i) + "-" + std::to_string(j));
      }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      if (id[i][j] < 0) continue;
      if (i + 1 <= n && id[i + 1][j] >= 0) edges.emplace_back(id[i][j], id[i + 1][j]);
      if (j + 1 <= n && id[i][j + 1] >= 0) edges.emplace_back(id[i][j], id[i][j + 1]);
    }
  return SimpleGraph(std::move(labels), edges);
}

CubeComplex staircase(std::size_t n, std::size_t w) { return cubify(staircase_graph(n, w)); }

WallSystem random_wall_system(Rng& rng, std::size_t max_points, std::size_t max_walls) {
  if (max_points < 2) throw InputError("random wall systems need at least two points");
  const std::size_t n = uniform(rng, 2, std::min<std::size_t>(max_points, 20));
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < n; ++i) ground.push_back("p" + std::to_string(i));
  // bipartitions up to complement: 2^(n-1) - 1 of them
  const std::size_t available = (std::size_t{1} << (n - 1)) - 1;
  const std::size_t count = uniform(rng, 0, std::min(max_walls, available));
  std::set<std::uint64_t> used;
  std::vector<Bitset> plus;
  while (plus.size() < count) {
    // canonical code: subsets not containing the last point, nonempty
    const std::uint64_t code = 1 + rng() % available;
    if (!used.insert(code).second) continue;
    Bitset side(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
      if ((code >> i) & 1U) side.set(i);
    plus.push_back(rng() % 2 ? side : side.complement());
  }
  return WallSystem(std::move(ground), std::move(plus));
}

FiniteMetric random_metric(Rng& rng, std::size_t n, std::int64_t max_weight, std::int64_t denominator) {
  if (n == 0) throw InputError("metric needs at least one point");
  if (max_weight < 1 || denominator < 1) throw InputError("bad metric parameters");
  std::vector<std::int64_t> w(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      w[i * n + j] = w[j * n + i] =
          static_cast<std::int64_t>(uniform(rng, static_cast<std::size_t>(denominator),
                                            static_cast<std::size_t>(max_weight * denominator)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i * n + j] = std::min(w[i * n + j], w[i * n + k] + w[k * n + j]);
  std::vector<std::string> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back("x" + std::to_string(i));
  std::vector<Rational> d;
  for (auto v : w) d.emplace_back(v, denominator);
  return FiniteMetric(std::move(points), std::move(d));
}

}  // namespace cubetight
