#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubetight/bitset.hpp"
#include "cubetight/wallsys.hpp"

namespace cubetight {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

/// Finite CAT(0) cube complex, stored as its 1-skeleton plus the wall system
/// of its hyperplanes. Vertex v is identified with its orientation: bit w is
/// set iff v lies on the plus side of wall w. Higher cubes are implicit.
class CubeComplex {
 public:
  CubeComplex() = default;

  /// Builds the complex whose vertices are the given orientations; edges join
  /// orientations differing on exactly one wall. Throws InputError on duplicate
  /// labels/orientations, an orientation width mismatch, a wall with an empty
  /// side, or a disconnected 1-skeleton.
  CubeComplex(std::vector<std::string> labels, std::vector<Bitset> orientations, std::size_t wall_count);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t wall_count() const { return walls_.wall_count(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws InputError for unknown labels.
  Vertex vertex(std::string_view label) const;
  std::optional<Vertex> find(std::string_view label) const;
  std::optional<Vertex> find(const Bitset& orientation) const;

  const Bitset& orientation(Vertex v) const { return orientation_.at(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  /// Edges as (u, v) with u < v, sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const;
  /// The single wall separating the endpoints of an edge; InputError otherwise.
  std::size_t dual_wall(Vertex u, Vertex v) const;

  /// Walls over the vertex set, one per hyperplane.
  const WallSystem& walls() const { return walls_; }
  bool crosses(std::size_t w1, std::size_t w2) const { return walls_.crosses(w1, w2); }

  /// Checks that a vertex index is in range (InputError otherwise).
  void check_vertex(Vertex v) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> label_index_;
  std::vector<Bitset> orientation_;
  std::unordered_map<Bitset, Vertex, BitsetHash> orientation_index_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  WallSystem walls_;
};

enum class Metric { l1, linf };

/// Number of separating walls.
std::size_t dist_l1(const CubeComplex& X, Vertex x, Vertex y);
/// Length of a longest chain of separating walls.
std::size_t dist_linf(const CubeComplex& X, Vertex x, Vertex y);
std::size_t distance(const CubeComplex& X, Metric metric, Vertex x, Vertex y);

/// Breadth-first distances from a source on the 1-skeleton.
std::vector<std::size_t> bfs_distances(const CubeComplex& X, Vertex source);

/// Full distance matrix (row-major, n*n) under the chosen metric.
std::vector<std::size_t> distance_matrix(const CubeComplex& X, Metric metric);

/// Majority orientation. ConsistencyError if it is not a vertex.
Vertex median(const CubeComplex& X, Vertex x, Vertex y, Vertex z);

/// {m(x,y,z) : z in X}. Asserts equality with the metric interval.
VertexSet interval(const CubeComplex& X, Vertex x, Vertex y);
/// {v : d(x,v) + d(v,y) = d(x,y)}.
VertexSet metric_interval(const CubeComplex& X, Vertex x, Vertex y);

struct HullResult {
  VertexSet vertices;
  std::size_t iterations = 0;  // interval-join rounds that grew the set
};

/// Fixed point of A -> union of [a,b] over a,b in A. Asserts agreement with the
/// half-space intersection and stabilization within dimension(X) rounds.
HullResult hull(const CubeComplex& X, std::span<const Vertex> A);
/// Intersection of all half-spaces containing A.
VertexSet halfspace_hull(const CubeComplex& X, std::span<const Vertex> A);
bool is_convex(const CubeComplex& X, std::span<const Vertex> Y);

/// Nearest vertex of a convex set. Throws InputError if Y is empty or not
/// convex. Asserts the three characterizations agree.
Vertex gate(const CubeComplex& X, Vertex x, std::span<const Vertex> Y);
/// Distance minimizer (ties are a ConsistencyError for convex Y).
Vertex gate_by_distance(const CubeComplex& X, Vertex x, std::span<const Vertex> Y);
/// Vertex g of Y such that every wall separating x and g separates x from Y.
Vertex gate_by_walls(const CubeComplex& X, Vertex x, std::span<const Vertex> Y);
/// The single vertex of Y lying in every interval [x, y], y in Y.
Vertex gate_by_intervals(const CubeComplex& X, Vertex x, std::span<const Vertex> Y);

/// No wall crossed twice. Throws InputError if consecutive vertices are not
/// adjacent or the path is empty. Asserts equivalence with length == dist_l1.
bool is_geodesic(const CubeComplex& X, std::span<const Vertex> path);

/// Largest family of pairwise crossing walls (0 for a single vertex).
std::size_t dimension(const CubeComplex& X);
/// One maximum pairwise-crossing family, ascending.
std::vector<std::size_t> max_crossing_family(const CubeComplex& X);

struct Ball {
  Vertex center = 0;
  std::size_t radius = 0;
};

enum class HellyFailure { none, pair, triple, family };

struct HellyResult {
  std::optional<Vertex> common;        // set on success
  HellyFailure failure = HellyFailure::none;
  std::vector<std::size_t> witness;    // ball indices of the failing pair/triple/family
};

/// Looks for a vertex in every ball. On failure names a disjoint pair, else an
/// empty triple, else the whole family.
HellyResult helly_discrete(const CubeComplex& X, std::span<const Ball> balls, Metric metric);

/// Cube count by dimension (index k = number of k-cubes). Reporting only.
std::vector<std::size_t> cube_counts(const CubeComplex& X);

}  // namespace cubetight
