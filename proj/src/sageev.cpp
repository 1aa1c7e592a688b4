#include "cubetight/sageev.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "cubetight/errors.hpp"
#include "cubetight/medianrec.hpp"

namespace cubetight {

namespace {

// Half-space h encoded as 2*wall + side.
std::size_t code(std::size_t wall, Side s) { return 2 * wall + static_cast<std::size_t>(s); }

class OrientationSearch {
 public:
  explicit OrientationSearch(const WallSystem& ws) : ws_(ws), n_(ws.wall_count()) {
    const std::size_t m = 2 * n_;
    supersets_.assign(m, {});
    disjoint_.assign(m, Bitset(m));
    std::vector<std::size_t> degree(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        for (Side a : {Side::minus, Side::plus})
          for (Side b : {Side::minus, Side::plus}) {
            if (ws.nested_in({i, a}, {j, b})) {
              supersets_[code(i, a)].push_back(code(j, b));
              ++degree[i];
            }
            if (ws.nested_in({i, a}, {j, opposite(b)})) disjoint_[code(i, a)].set(code(j, b));
          }
      }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    assignment_.assign(n_, -1);
    chosen_ = Bitset(m);
  }

  std::vector<Bitset> run() {
    descend(0);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  // Chooses half-space h and everything above it. Returns false on conflict;
  // trail records what to undo either way.
  bool choose(std::size_t h, std::vector<std::size_t>& trail) {
    std::vector<std::size_t> stack{h};
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      const std::size_t wall = cur / 2;
      const int side = static_cast<int>(cur % 2);
      if (assignment_[wall] == side) continue;
      if (assignment_[wall] != -1) return false;
      if (disjoint_[cur].intersects(chosen_)) return false;
      assignment_[wall] = side;
      chosen_.set(cur);
      trail.push_back(cur);
      for (auto up : supersets_[cur]) stack.push_back(up);
    }
    return true;
  }

  void undo(const std::vector<std::size_t>& trail) {
    for (auto cur : trail) {
      assignment_[cur / 2] = -1;
      chosen_.reset(cur);
    }
  }

  void descend(std::size_t pos) {
    while (pos < n_ && assignment_[order_[pos]] != -1) ++pos;
    if (pos == n_) {
      Bitset o(n_);
      for (std::size_t w = 0; w < n_; ++w)
        if (assignment_[w] == 1) o.set(w);
      results_.push_back(std::move(o));
      return;
    }
    const std::size_t wall = order_[pos];
    for (Side s : {Side::minus, Side::plus}) {
      std::vector<std::size_t> trail;
      if (choose(code(wall, s), trail)) descend(pos + 1);
      undo(trail);
    }
  }

  const WallSystem& ws_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> supersets_;
  std::vector<Bitset> disjoint_;
  std::vector<std::size_t> order_;
  std::vector<int> assignment_;
  Bitset chosen_;
  std::vector<Bitset> results_;
};

}  // namespace

std::vector<Bitset> coherent_orientations(const WallSystem& ws) { return OrientationSearch(ws).run(); }

Bitset principal_orientation(const WallSystem& ws, std::size_t point) {
  if (point >= ws.ground_size()) throw InputError("point index out of range");
  Bitset o(ws.wall_count());
  for (std::size_t w = 0; w < ws.wall_count(); ++w)
    if (ws.side_of(w, point) == Side::plus) o.set(w);
  return o;
}

bool is_coherent(const WallSystem& ws, const Bitset& orientation) {
  if (orientation.size() != ws.wall_count()) return false;
  auto chosen = [&](std::size_t w) { return orientation.test(w) ? Side::plus : Side::minus; };
  for (std::size_t i = 0; i < ws.wall_count(); ++i)
    for (std::size_t j = 0; j < ws.wall_count(); ++j) {
      if (i == j) continue;
      // upward closure: chosen side of i inside a side of j forces that side
      for (Side t : {Side::minus, Side::plus})
        if (ws.nested_in({i, chosen(i)}, {j, t}) && chosen(j) != t) return false;
    }
  return true;
}

CubeComplex dual_complex(const WallSystem& ws) {
  if (ws.ground_size() == 0) throw InputError("dual_complex needs a nonempty ground set");
  auto all = coherent_orientations(ws);
  if (all.empty()) throw ConsistencyError("wall system has no coherent orientation");
  std::unordered_set<Bitset, BitsetHash> coherent(all.begin(), all.end());

  std::unordered_set<Bitset, BitsetHash> component;
  std::deque<Bitset> queue;
  for (std::size_t p = 0; p < ws.ground_size(); ++p) {
    Bitset o = principal_orientation(ws, p);
    if (!coherent.count(o)) throw ConsistencyError("point-induced orientation is not coherent");
    if (component.insert(o).second) queue.push_back(o);
  }
  while (!queue.empty()) {
    Bitset o = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < ws.wall_count(); ++w) {
      o.flip(w);
      if (coherent.count(o) && component.insert(o).second) queue.push_back(o);
      o.flip(w);
    }
  }

  std::vector<Bitset> vertices(component.begin(), component.end());
  std::sort(vertices.begin(), vertices.end(),
            [](const Bitset& a, const Bitset& b) { return a.to_string() < b.to_string(); });
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (const auto& v : vertices) labels.push_back(ws.wall_count() == 0 ? std::string("root") : v.to_string());
  return CubeComplex(std::move(labels), std::move(vertices), ws.wall_count());
}

WallSystem walls_of(const CubeComplex& X) {
  SimpleGraph G = skeleton(X);
  auto d = all_pairs_distances(G);
  auto classes = hyperplane_classes(G, d);
  return WallSystem(X.labels(), std::move(classes.plus_sides));
}

WallIsomorphism wall_roundtrip(const WallSystem& ws) {
  WallIsomorphism cert;
  CubeComplex X = dual_complex(ws);
  WallSystem recovered = walls_of(X);
  const std::size_t n = ws.ground_size();

  for (std::size_t p = 0; p < n; ++p) {
    auto v = X.find(principal_orientation(ws, p));
    if (!v) {
      cert.detail = "point '" + ws.point_name(p) + "' has no principal vertex";
      return cert;
    }
    cert.point_to_vertex.push_back(*v);
  }
  if (recovered.wall_count() != ws.wall_count()) {
    cert.detail = "wall count " + std::to_string(recovered.wall_count()) + " != " + std::to_string(ws.wall_count());
    return cert;
  }

  std::unordered_map<Bitset, std::size_t, BitsetHash> original;
  for (std::size_t w = 0; w < ws.wall_count(); ++w) original.emplace(ws.plus_side(w), w);
  cert.wall_map.assign(ws.wall_count(), ws.wall_count());
  cert.flipped.assign(ws.wall_count(), false);
  for (std::size_t j = 0; j < recovered.wall_count(); ++j) {
    Bitset pulled(n);
    for (std::size_t p = 0; p < n; ++p)
      if (recovered.side_of(j, cert.point_to_vertex[p]) == Side::plus) pulled.set(p);
    bool flip = false;
    auto it = original.find(pulled);
    if (it == original.end()) {
      it = original.find(pulled.complement());
      flip = true;
    }
    if (it == original.end()) {
      cert.detail = "recovered wall " + std::to_string(j) + " matches no original wall";
      return cert;
    }
    if (cert.wall_map[it->second] != ws.wall_count()) {
      cert.detail = "two recovered walls match original wall " + std::to_string(it->second);
      return cert;
    }
    cert.wall_map[it->second] = j;
    cert.flipped[it->second] = flip;
  }
  // pocset structure must agree: crossing and nesting of every pair
  for (std::size_t a = 0; a < ws.wall_count(); ++a)
    for (std::size_t b = 0; b < ws.wall_count(); ++b) {
      if (a == b) continue;
      const std::size_t ja = cert.wall_map[a], jb = cert.wall_map[b];
      if (ws.crosses(a, b) != recovered.crosses(ja, jb)) {
        cert.detail = "crossing of walls " + std::to_string(a) + "," + std::to_string(b) + " not preserved";
        return cert;
      }
      for (Side sa : {Side::minus, Side::plus})
        for (Side sb : {Side::minus, Side::plus}) {
          Side ra = cert.flipped[a] ? opposite(sa) : sa;
          Side rb = cert.flipped[b] ? opposite(sb) : sb;
          if (ws.nested_in({a, sa}, {b, sb}) != recovered.nested_in({ja, ra}, {jb, rb})) {
            cert.detail = "nesting of walls " + std::to_string(a) + "," + std::to_string(b) + " not preserved";
            return cert;
          }
        }
    }
  cert.isomorphic = true;
  return cert;
}

ComplexIsomorphism complex_roundtrip(const CubeComplex& X) {
  ComplexIsomorphism cert;
  WallSystem ws = walls_of(X);
  CubeComplex Y = dual_complex(ws);
  if (Y.vertex_count() != X.vertex_count()) {
    cert.detail = "vertex count " + std::to_string(Y.vertex_count()) + " != " + std::to_string(X.vertex_count());
    return cert;
  }
  std::vector<bool> hit(Y.vertex_count(), false);
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    auto image = Y.find(principal_orientation(ws, v));
    if (!image || hit[*image]) {
      cert.detail = "vertex '" + X.label(v) + "' has no distinct image";
      return cert;
    }
    hit[*image] = true;
    cert.vertex_map.push_back(*image);
  }
  if (Y.edge_count() != X.edge_count()) {
    cert.detail = "edge count differs";
    return cert;
  }
  for (auto [u, v] : X.edges())
    if (!Y.adjacent(cert.vertex_map[u], cert.vertex_map[v])) {
      cert.detail = "edge '" + X.label(u) + "'-'" + X.label(v) + "' not preserved";
      return cert;
    }
  cert.isomorphic = true;
  return cert;
}

RoundTripCertificate roundtrip_check(const WallSystem& ws) {
  RoundTripCertificate cert;
  cert.walls = wall_roundtrip(ws);
  cert.complex = complex_roundtrip(dual_complex(ws));
  return cert;
}

}  // namespace cubetight
