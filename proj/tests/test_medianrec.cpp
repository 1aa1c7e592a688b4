#include "doctest.h"

#include "cubetight/errors.hpp"
#include "cubetight/families.hpp"
#include "cubetight/medianrec.hpp"
#include "cubetight/sageev.hpp"
#include "support/oracles.hpp"

using namespace cubetight;

namespace {

SimpleGraph k23() {
  return SimpleGraph({"a", "b", "x", "y", "z"},
                     std::vector<std::pair<std::string, std::string>>{
                         {"a", "x"}, {"a", "y"}, {"a", "z"}, {"b", "x"}, {"b", "y"}, {"b", "z"}});
}

SimpleGraph cycle(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    edges.emplace_back(i, (i + 1) % n);
  }
  return SimpleGraph(labels, edges);
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
  using E = std::vector<std::pair<std::string, std::string>>;
  CHECK_THROWS_AS(SimpleGraph({"a"}, E{{"a", "a"}}), InputError);
  CHECK_THROWS_AS(SimpleGraph({"a", "b"}, E{{"a", "b"}, {"b", "a"}}), InputError);
  CHECK_THROWS_AS(SimpleGraph({"a", "a"}, E{}), InputError);
  CHECK_THROWS_AS(SimpleGraph({"a"}, E{{"a", "q"}}), InputError);
  CHECK_THROWS_AS(is_median(SimpleGraph({"a", "b"}, E{})), InputError);
}

TEST_CASE("K23 and C6 are rejected with witnesses") {
  for (const SimpleGraph& G : {k23(), cycle(6)}) {
    auto v = is_median(G);
    CHECK_FALSE(v.is_median);
    auto d = all_pairs_distances(G);
    CHECK(oracle::median_count(G, d, v.witness[0], v.witness[1], v.witness[2]) == v.median_count);
    CHECK(v.median_count != 1);
    CHECK_THROWS_AS(cubify(G), NotMedianError);
  }
  CHECK(is_median(cycle(4)).is_median);
  CHECK_FALSE(is_median(cycle(5)).is_median);
}

TEST_CASE("trees and cube-complex skeleta are median") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    SimpleGraph G = skeleton(tree(random_parents(rng, 2 + trial)));
    CHECK(is_median(G).is_median);
  }
  for (const CubeComplex& X : {hypercube(4), grid({3, 3}), staircase(5, 2)}) {
    SimpleGraph G = skeleton(X);
    CHECK(is_median(G).is_median);
    CHECK(oracle::is_median_bruteforce(G));
  }
}

TEST_CASE("verdicts agree with the exhaustive oracle on random graphs") {
  Rng rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = uniform(rng, 2, 9);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(uniform(rng, 0, i - 1), i);  // spanning tree
    for (std::size_t extra = uniform(rng, 0, n); extra > 0; --extra) {
      std::size_t a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
      if (a == b) continue;
      auto e = std::minmax(a, b);
      if (std::find(edges.begin(), edges.end(), std::pair{e.first, e.second}) == edges.end() &&
          std::find(edges.begin(), edges.end(), std::pair{e.second, e.first}) == edges.end())
        edges.emplace_back(e.first, e.second);
    }
    SimpleGraph G(labels, edges);
    CHECK(is_median(G).is_median == oracle::is_median_bruteforce(G));
  }
}

TEST_CASE("cubify recovers the complex of a median graph") {
  CubeComplex g = grid({2, 3});
  CubeComplex X = cubify(skeleton(g));
  CHECK(X.vertex_count() == g.vertex_count());
  CHECK(X.wall_count() == g.wall_count());
  CHECK(dimension(X) == 2);
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    CubeComplex D = dual_complex(random_wall_system(rng));
    CubeComplex Y = cubify(skeleton(D));
    CHECK(Y.wall_count() == D.wall_count());
    CHECK(Y.edge_count() == D.edge_count());
  }
}
