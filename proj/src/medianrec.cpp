#include "cubetight/medianrec.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <mutex>
#include <unordered_map>

#include "cubetight/kernels.hpp"
#include "cubetight/parallel.hpp"

namespace cubetight {

SimpleGraph::SimpleGraph(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!index.emplace(labels_[i], i).second) throw InputError("duplicate vertex '" + labels_[i] + "'");
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InputError("edge endpoint '" + a + "' is not a vertex");
    if (ib == index.end()) throw InputError("edge endpoint '" + b + "' is not a vertex");
    idx.emplace_back(ia->second, ib->second);
  }
  build(idx);
}

SimpleGraph::SimpleGraph(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : labels_(std::move(labels)) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!index.emplace(labels_[i], i).second) throw InputError("duplicate vertex '" + labels_[i] + "'");
  build(edges);
}

void SimpleGraph::build(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InputError("graph has no vertices");
  adjacency_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loop at '" + labels_[a] + "'");
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw InputError("parallel edge '" + labels_[dup->first] + "'-'" + labels_[dup->second] + "'");
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::connected() const {
  std::vector<bool> seen(vertex_count(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto u : adjacency_[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
  }
  return reached == vertex_count();
}

SimpleGraph skeleton(const CubeComplex& X) { return SimpleGraph(X.labels(), X.edges()); }

std::vector<std::uint32_t> all_pairs_distances(const SimpleGraph& G) {
  const std::size_t n = G.vertex_count();
  constexpr auto unreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> d(n * n, unreached);
  std::atomic<bool> disconnected{false};
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    std::deque<std::size_t> queue;
    for (std::size_t s = begin; s < end; ++s) {
      std::uint32_t* row = d.data() + s * n;
      row[s] = 0;
      queue.assign(1, s);
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto u : G.neighbors(v))
          if (row[u] == unreached) {
            row[u] = row[v] + 1;
            queue.push_back(u);
          }
      }
      if (std::find(row, row + n, unreached) != row + n) disconnected = true;
    }
  });
  if (disconnected) throw InputError("graph is disconnected");
  return d;
}

MedianVerdict is_median(const SimpleGraph& G) {
  const std::size_t n = G.vertex_count();
  const auto d = all_pairs_distances(G);
  // interval bitsets I(x,y) for x < y (and x == y: {x})
  std::vector<Bitset> intervals(n * n);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x)
      for (std::size_t y = x; y < n; ++y) {
        Bitset b(n);
        const auto dxy = d[x * n + y];
        for (std::size_t v = 0; v < n; ++v)
          if (d[x * n + v] + d[v * n + y] == dxy) b.set(v);
        intervals[x * n + y] = std::move(b);
      }
  });
  auto I = [&](std::size_t a, std::size_t b) -> const Bitset& {
    return a <= b ? intervals[a * n + b] : intervals[b * n + a];
  };

  // Smallest failing triple in (x, y, z) lexicographic order, so the witness is
  // deterministic regardless of thread count.
  std::mutex guard;
  std::optional<MedianVerdict> failure;
  std::atomic<std::size_t> failure_x{n};
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end && x < failure_x.load(); ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t z = y + 1; z < n; ++z) {
          const auto count = kernels::and3_popcount(I(x, y).words(), I(y, z).words(), I(x, z).words());
          if (count != 1) {
            std::lock_guard lock(guard);
            MedianVerdict v{false, {x, y, z}, count};
            if (!failure || v.witness < failure->witness) failure = v;
            if (x < failure_x) failure_x = x;
            goto next_x;
          }
        }
    next_x:;
  });
  if (failure) return *failure;
  return {};
}

HyperplaneClasses hyperplane_classes(const SimpleGraph& G, const std::vector<std::uint32_t>& d) {
  const std::size_t n = G.vertex_count();
  HyperplaneClasses out;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  for (auto [a1, a2] : G.edges()) {
    // m(a1,a2,x) = a1 iff a1 lies on a geodesic from a2 to x
    Bitset near_a1(n);
    for (std::size_t x = 0; x < n; ++x)
      if (d[a2 * n + a1] + d[a1 * n + x] == d[a2 * n + x]) near_a1.set(x);
    Bitset plus = near_a1.test(0) ? near_a1.complement() : near_a1;
    auto [it, fresh] = index.emplace(plus, out.plus_sides.size());
    if (fresh) out.plus_sides.push_back(std::move(plus));
    out.edge_class.push_back(it->second);
  }
  return out;
}

CubeComplex cubify(const SimpleGraph& G) {
  auto verdict = is_median(G);
  if (!verdict.is_median) {
    const auto& l = G.labels();
    throw NotMedianError("graph is not median: triple ('" + l[verdict.witness[0]] + "', '" + l[verdict.witness[1]] +
                             "', '" + l[verdict.witness[2]] + "') has " + std::to_string(verdict.median_count) +
                             " medians",
                         verdict, {l[verdict.witness[0]], l[verdict.witness[1]], l[verdict.witness[2]]});
  }
  const auto d = all_pairs_distances(G);
  auto classes = hyperplane_classes(G, d);
  const std::size_t n = G.vertex_count();
  const std::size_t walls = classes.plus_sides.size();
  std::vector<Bitset> orientations(n, Bitset(walls));
  for (std::size_t w = 0; w < walls; ++w)
    for_each_bit(classes.plus_sides[w], [&](std::size_t v) { orientations[v].set(w); });
  CubeComplex X(G.labels(), std::move(orientations), walls);
  if (X.edges() != G.edges()) throw ConsistencyError("cubify: 1-skeleton of the result differs from the input graph");
  return X;
}

}  // namespace cubetight
