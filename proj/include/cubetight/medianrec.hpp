#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubetight/bitset.hpp"
#include "cubetight/cubecomplex.hpp"
#include "cubetight/errors.hpp"

namespace cubetight {

/// Undirected graph without loops or parallel edges. Connectivity is checked
/// by the operations that need it, not at construction.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges);
  SimpleGraph(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  /// (u, v) with u < v, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool connected() const;

 private:
  void build(const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// 1-skeleton of a cube complex.
SimpleGraph skeleton(const CubeComplex& X);

/// Row-major all-pairs BFS distances. Throws InputError when disconnected.
std::vector<std::uint32_t> all_pairs_distances(const SimpleGraph& G);

struct MedianVerdict {
  bool is_median = true;
  std::array<std::size_t, 3> witness{};  // meaningful when !is_median
  std::size_t median_count = 0;          // medians of the witness triple (0 or >= 2)
};

/// Decides whether every triple has exactly one median, by triple enumeration
/// over interval bitsets. Throws InputError for disconnected input.
MedianVerdict is_median(const SimpleGraph& G);

class NotMedianError : public InputError {
 public:
  NotMedianError(const std::string& what, MedianVerdict verdict, std::array<std::string, 3> labels = {})
      : InputError(what), verdict_(verdict), labels_(std::move(labels)) {}
  const MedianVerdict& verdict() const { return verdict_; }
  /// Labels of the witness triple.
  const std::array<std::string, 3>& witness_labels() const { return labels_; }

 private:
  MedianVerdict verdict_;
  std::array<std::string, 3> labels_;
};

/// Half-space pairs {x : m(a1,a2,x) = a1} for every edge (a1,a2), grouped into
/// hyperplane classes by bipartition. Walls are numbered by first edge in the
/// sorted edge list; the minus side holds vertex 0.
struct HyperplaneClasses {
  std::vector<Bitset> plus_sides;
  std::vector<std::size_t> edge_class;  // parallel to G.edges()
};
HyperplaneClasses hyperplane_classes(const SimpleGraph& G, const std::vector<std::uint32_t>& distances);

/// The cube complex whose 1-skeleton is G. Throws NotMedianError carrying the
/// witness triple when G is not median.
CubeComplex cubify(const SimpleGraph& G);

}  // namespace cubetight
