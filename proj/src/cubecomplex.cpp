#include "cubetight/cubecomplex.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "cubetight/errors.hpp"

namespace cubetight {

namespace {

VertexSet normalized(std::span<const Vertex> A) {
  VertexSet out(A.begin(), A.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet to_set(const Bitset& b) {
  VertexSet out;
  for_each_bit(b, [&](std::size_t v) { out.push_back(v); });
  return out;
}

void max_clique(const std::vector<Bitset>& adj, Bitset r, Bitset p, Bitset x, Bitset& best) {
  if (p.empty_set() && x.empty_set()) {
    if (r.count() > best.count()) best = r;
    return;
  }
  if (r.count() + p.count() <= best.count()) return;
  // pivot with the most neighbours in p
  std::size_t pivot = p.size();
  std::size_t pivot_deg = 0;
  for (const Bitset* s : {&p, &x}) {
    for_each_bit(*s, [&](std::size_t u) {
      std::size_t deg = (adj[u] & p).count();
      if (pivot == p.size() || deg > pivot_deg) {
        pivot = u;
        pivot_deg = deg;
      }
    });
  }
  Bitset candidates = p;
  if (pivot < p.size()) candidates &= adj[pivot].complement();
  for_each_bit(candidates, [&](std::size_t v) {
    Bitset r2 = r;
    r2.set(v);
    max_clique(adj, r2, p & adj[v], x & adj[v], best);
    p.reset(v);
    x.set(v);
  });
}

}  // namespace

CubeComplex::CubeComplex(std::vector<std::string> labels, std::vector<Bitset> orientations, std::size_t wall_count)
    : labels_(std::move(labels)), orientation_(std::move(orientations)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InputError("cube complex needs at least one vertex");
  if (orientation_.size() != n) throw InputError("label/orientation count mismatch");
  for (Vertex v = 0; v < n; ++v) {
    if (!label_index_.emplace(labels_[v], v).second) throw InputError("duplicate vertex label '" + labels_[v] + "'");
    if (orientation_[v].size() != wall_count) throw InputError("orientation width mismatch at '" + labels_[v] + "'");
    if (!orientation_index_.emplace(orientation_[v], v).second)
      throw InputError("duplicate orientation at '" + labels_[v] + "'");
  }

  std::vector<Bitset> plus(wall_count, Bitset(n));
  for (Vertex v = 0; v < n; ++v)
    for_each_bit(orientation_[v], [&](std::size_t w) { plus[w].set(v); });
  walls_ = WallSystem(labels_, std::move(plus));

  adjacency_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    Bitset flipped = orientation_[v];
    for (std::size_t w = 0; w < wall_count; ++w) {
      flipped.flip(w);
      if (auto it = orientation_index_.find(flipped); it != orientation_index_.end()) {
        adjacency_[v].push_back(it->second);
        if (v < it->second) edges_.emplace_back(v, it->second);
      }
      flipped.flip(w);
    }
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
  }
  std::sort(edges_.begin(), edges_.end());

  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : adjacency_[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
  }
  if (reached != n) throw InputError("1-skeleton is disconnected");
}

Vertex CubeComplex::vertex(std::string_view label) const {
  auto v = find(label);
  if (!v) throw InputError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::optional<Vertex> CubeComplex::find(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Vertex> CubeComplex::find(const Bitset& orientation) const {
  auto it = orientation_index_.find(orientation);
  if (it == orientation_index_.end()) return std::nullopt;
  return it->second;
}

bool CubeComplex::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t CubeComplex::dual_wall(Vertex u, Vertex v) const {
  if (!adjacent(u, v)) throw InputError("'" + labels_[u] + "' and '" + labels_[v] + "' are not adjacent");
  Bitset diff = orientation_[u] ^ orientation_[v];
  return diff.first();
}

void CubeComplex::check_vertex(Vertex v) const {
  if (v >= vertex_count()) throw InputError("vertex index " + std::to_string(v) + " out of range");
}

std::size_t dist_l1(const CubeComplex& X, Vertex x, Vertex y) {
  X.check_vertex(x);
  X.check_vertex(y);
  return hamming(X.orientation(x), X.orientation(y));
}

std::size_t dist_linf(const CubeComplex& X, Vertex x, Vertex y) {
  X.check_vertex(x);
  X.check_vertex(y);
  if (x == y) return 0;
  return X.walls().max_separating_chain(x, y).size();
}

std::size_t distance(const CubeComplex& X, Metric metric, Vertex x, Vertex y) {
  return metric == Metric::l1 ? dist_l1(X, x, y) : dist_linf(X, x, y);
}

std::vector<std::size_t> bfs_distances(const CubeComplex& X, Vertex source) {
  X.check_vertex(source);
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(X.vertex_count(), unreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : X.neighbors(v))
      if (dist[u] == unreached) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

std::vector<std::size_t> distance_matrix(const CubeComplex& X, Metric metric) {
  const std::size_t n = X.vertex_count();
  std::vector<std::size_t> d(n * n, 0);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) d[x * n + y] = d[y * n + x] = distance(X, metric, x, y);
  return d;
}

Vertex median(const CubeComplex& X, Vertex x, Vertex y, Vertex z) {
  X.check_vertex(x);
  X.check_vertex(y);
  X.check_vertex(z);
  const Bitset& a = X.orientation(x);
  const Bitset& b = X.orientation(y);
  const Bitset& c = X.orientation(z);
  Bitset majority = (a & b) | (a & c) | (b & c);
  auto m = X.find(majority);
  if (!m) throw ConsistencyError("majority orientation is not a vertex; the complex is not median");
  return *m;
}

VertexSet metric_interval(const CubeComplex& X, Vertex x, Vertex y) {
  const std::size_t d = dist_l1(X, x, y);
  VertexSet out;
  for (Vertex v = 0; v < X.vertex_count(); ++v)
    if (dist_l1(X, x, v) + dist_l1(X, v, y) == d) out.push_back(v);
  return out;
}

VertexSet interval(const CubeComplex& X, Vertex x, Vertex y) {
  Bitset members(X.vertex_count());
  for (Vertex z = 0; z < X.vertex_count(); ++z) members.set(median(X, x, y, z));
  VertexSet by_medians = to_set(members);
  if (by_medians != metric_interval(X, x, y))
    throw ConsistencyError("median interval differs from metric interval");
  return by_medians;
}

VertexSet halfspace_hull(const CubeComplex& X, std::span<const Vertex> A) {
  if (A.empty()) throw InputError("hull of an empty set");
  for (Vertex a : A) X.check_vertex(a);
  const WallSystem& ws = X.walls();
  Bitset result = Bitset(X.vertex_count()).complement();
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    const Side s = ws.side_of(w, A.front());
    bool unanimous = std::all_of(A.begin(), A.end(), [&](Vertex a) { return ws.side_of(w, a) == s; });
    if (unanimous) result &= ws.half_space({w, s});
  }
  return to_set(result);
}

HullResult hull(const CubeComplex& X, std::span<const Vertex> A) {
  if (A.empty()) throw InputError("hull of an empty set");
  for (Vertex a : A) X.check_vertex(a);
  HullResult out;
  VertexSet current = normalized(A);
  while (true) {
    Bitset next(X.vertex_count());
    for (Vertex a : current) next.set(a);
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j)
        for (Vertex v : metric_interval(X, current[i], current[j])) next.set(v);
    VertexSet grown = to_set(next);
    if (grown == current) break;
    current = std::move(grown);
    ++out.iterations;
  }
  out.vertices = std::move(current);
  if (out.vertices != halfspace_hull(X, A)) throw ConsistencyError("interval hull differs from half-space hull");
  if (out.iterations > dimension(X))
    throw ConsistencyError("hull did not stabilize within dimension rounds");
  return out;
}

bool is_convex(const CubeComplex& X, std::span<const Vertex> Y) {
  return halfspace_hull(X, Y) == normalized(Y);
}

Vertex gate_by_distance(const CubeComplex& X, Vertex x, std::span<const Vertex> Y) {
  if (Y.empty()) throw InputError("gate onto an empty set");
  std::optional<Vertex> best;
  std::size_t best_d = 0;
  bool tie = false;
  for (Vertex y : normalized(Y)) {
    std::size_t d = dist_l1(X, x, y);
    if (!best || d < best_d) {
      best = y;
      best_d = d;
      tie = false;
    } else if (d == best_d) {
      tie = true;
    }
  }
  if (tie) throw ConsistencyError("distance minimizer to a convex set is not unique");
  return *best;
}

Vertex gate_by_walls(const CubeComplex& X, Vertex x, std::span<const Vertex> Y) {
  if (Y.empty()) throw InputError("gate onto an empty set");
  X.check_vertex(x);
  const WallSystem& ws = X.walls();
  const VertexSet members = normalized(Y);
  std::optional<Vertex> found;
  for (Vertex g : members) {
    bool ok = true;
    for (std::size_t w : ws.separating_walls(x, g)) {
      const Side xs = ws.side_of(w, x);
      if (std::any_of(members.begin(), members.end(), [&](Vertex y) { return ws.side_of(w, y) == xs; })) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (found) throw ConsistencyError("wall characterization of the gate is not unique");
      found = g;
    }
  }
  if (!found) throw ConsistencyError("no vertex satisfies the wall characterization of the gate");
  return *found;
}

Vertex gate_by_intervals(const CubeComplex& X, Vertex x, std::span<const Vertex> Y) {
  if (Y.empty()) throw InputError("gate onto an empty set");
  const VertexSet members = normalized(Y);
  Bitset common(X.vertex_count());
  for (Vertex y : members) common.set(y);
  for (Vertex y : members) {
    Bitset in_interval(X.vertex_count());
    for (Vertex v : interval(X, x, y)) in_interval.set(v);
    common &= in_interval;
  }
  if (common.count() != 1) throw ConsistencyError("interval characterization of the gate is not a single vertex");
  return common.first();
}

Vertex gate(const CubeComplex& X, Vertex x, std::span<const Vertex> Y) {
  if (Y.empty()) throw InputError("gate onto an empty set");
  X.check_vertex(x);
  for (Vertex y : Y) X.check_vertex(y);
  if (!is_convex(X, Y)) throw InputError("gate target set is not convex");
  Vertex a = gate_by_distance(X, x, Y);
  Vertex b = gate_by_walls(X, x, Y);
  Vertex c = gate_by_intervals(X, x, Y);
  if (a != b || b != c) throw ConsistencyError("gate characterizations disagree");
  return a;
}

bool is_geodesic(const CubeComplex& X, std::span<const Vertex> path) {
  if (path.empty()) throw InputError("empty path");
  for (Vertex v : path) X.check_vertex(v);
  std::set<std::size_t> crossed;
  bool repeated = false;
  for (std::size_t i = 1; i < path.size(); ++i) {
    std::size_t w = X.dual_wall(path[i - 1], path[i]);
    if (!crossed.insert(w).second) repeated = true;
  }
  const bool geodesic = !repeated;
  const bool by_length = path.size() - 1 == dist_l1(X, path.front(), path.back());
  if (geodesic != by_length) throw ConsistencyError("geodesic test disagrees with path length");
  return geodesic;
}

std::vector<std::size_t> max_crossing_family(const CubeComplex& X) {
  const std::size_t w = X.wall_count();
  if (w == 0) return {};
  std::vector<Bitset> adj(w, Bitset(w));
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < w; ++j)
      if (i != j && X.crosses(i, j)) adj[i].set(j);
  Bitset best(w);
  max_clique(adj, Bitset(w), Bitset(w).complement(), Bitset(w), best);
  std::vector<std::size_t> out;
  for_each_bit(best, [&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t dimension(const CubeComplex& X) { return max_crossing_family(X).size(); }

HellyResult helly_discrete(const CubeComplex& X, std::span<const Ball> balls, Metric metric) {
  HellyResult result;
  if (balls.empty()) throw InputError("helly check needs at least one ball");
  const std::size_t n = X.vertex_count();
  std::vector<Bitset> members;
  members.reserve(balls.size());
  for (const auto& b : balls) {
    X.check_vertex(b.center);
    Bitset m(n);
    for (Vertex v = 0; v < n; ++v)
      if (distance(X, metric, b.center, v) <= b.radius) m.set(v);
    members.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      if (!members[i].intersects(members[j])) {
        result.failure = HellyFailure::pair;
        result.witness = {i, j};
        return result;
      }
  Bitset all = Bitset(n).complement();
  for (const auto& m : members) all &= m;
  if (!all.empty_set()) {
    result.common = all.first();
    return result;
  }
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      for (std::size_t k = j + 1; k < balls.size(); ++k)
        if ((members[i] & members[j] & members[k]).empty_set()) {
          result.failure = HellyFailure::triple;
          result.witness = {i, j, k};
          return result;
        }
  result.failure = HellyFailure::family;
  for (std::size_t i = 0; i < balls.size(); ++i) result.witness.push_back(i);
  return result;
}

std::vector<std::size_t> cube_counts(const CubeComplex& X) {
  const std::size_t n = X.vertex_count();
  std::vector<std::size_t> per_corner(1, n);
  // Each k-cube is seen once from each of its 2^k corners.
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::size_t> dirs;
    for (Vertex u : X.neighbors(v)) dirs.push_back(X.dual_wall(v, u));
    std::sort(dirs.begin(), dirs.end());
    // depth-first over increasing direction sets whose every corner exists
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> stack;
    stack.push_back({{}, 0});
    while (!stack.empty()) {
      auto [set, start] = stack.back();
      stack.pop_back();
      for (std::size_t i = start; i < dirs.size(); ++i) {
        auto grown = set;
        grown.push_back(dirs[i]);
        bool complete = true;
        for (std::size_t mask = 0; mask < (std::size_t{1} << grown.size()) && complete; ++mask) {
          Bitset o = X.orientation(v);
          for (std::size_t b = 0; b < grown.size(); ++b)
            if (mask >> b & 1U) o.flip(grown[b]);
          if (!X.find(o)) complete = false;
        }
        if (!complete) continue;
        if (per_corner.size() <= grown.size()) per_corner.resize(grown.size() + 1, 0);
        ++per_corner[grown.size()];
        stack.push_back({grown, i + 1});
      }
    }
  }
  for (std::size_t k = 1; k < per_corner.size(); ++k) per_corner[k] >>= k;
  return per_corner;
}

}  // namespace cubetight
