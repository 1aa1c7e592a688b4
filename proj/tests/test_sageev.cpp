#include "doctest.h"

#include "cubetight/families.hpp"
#include "cubetight/sageev.hpp"
#include "support/oracles.hpp"

using namespace cubetight;

namespace {

// Every orientation of the walls, filtered by the definition directly.
std::vector<Bitset> coherent_by_definition(const WallSystem& ws) {
  std::vector<Bitset> out;
  const std::size_t m = ws.wall_count();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Bitset o(m);
    for (std::size_t w = 0; w < m; ++w)
      if (mask >> w & 1U) o.set(w);
    bool ok = true;
    for (std::size_t h = 0; h < m && ok; ++h)
      for (std::size_t k = 0; k < m && ok; ++k) {
        if (h == k) continue;
        const Side sh = o.test(h) ? Side::plus : Side::minus;
        for (Side sk : {Side::minus, Side::plus})
          if (ws.half_space({h, sh}).is_subset_of(ws.half_space({k, sk})) && (o.test(k) ? Side::plus : Side::minus) != sk)
            ok = false;
      }
    if (ok) out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("dual complex examples") {
  WallSystem square(WallSystemSpec{{"a", "b", "c", "d"}, {{{"a", "b"}, {"c", "d"}}, {{"a", "c"}, {"b", "d"}}}});
  CubeComplex X = dual_complex(square);
  CHECK(X.vertex_count() == 4);
  CHECK(X.edge_count() == 4);
  CHECK(cube_counts(X) == std::vector<std::size_t>{4, 4, 1});

  WallSystem nested(WallSystemSpec{{"a", "b", "c", "d"},
                                   {{{"a"}, {"b", "c", "d"}}, {{"a", "b"}, {"c", "d"}}, {{"a", "b", "c"}, {"d"}}}});
  CubeComplex P = dual_complex(nested);
  CHECK(P.vertex_count() == 4);
  CHECK(P.edge_count() == 3);
  CHECK(dimension(P) == 1);

  WallSystem single(WallSystemSpec{{"only"}, {}});
  CHECK(dual_complex(single).vertex_count() == 1);
}

TEST_CASE("dual of a system whose dual has vertices no point induces") {
  // three pairwise crossing walls on four points: the dual is the 3-cube,
  // with four vertices not induced by any point
  WallSystem ws(WallSystemSpec{{"a", "b", "c", "d"},
                               {{{"a", "b"}, {"c", "d"}}, {{"a", "c"}, {"b", "d"}}, {{"a", "d"}, {"b", "c"}}}});
  CubeComplex X = dual_complex(ws);
  CHECK(X.vertex_count() == 8);
  CHECK(dimension(X) == 3);
  CHECK(roundtrip_check(ws).isomorphic());
}

TEST_CASE("walls_of examples") {
  WallSystem c = walls_of(hypercube(3));
  CHECK(c.wall_count() == 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (a != b) CHECK(c.crosses(a, b));

  WallSystem p = walls_of(path(4));
  CHECK(p.wall_count() == 3);
  CHECK(p.max_separating_chain("0", "3").size() == 3);

  // 3x3 vertices: two vertical and two horizontal classes
  WallSystem g = walls_of(grid({2, 2}));
  CHECK(g.wall_count() == 4);
}

TEST_CASE("coherent orientations match the definition on random systems") {
  Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    WallSystem ws = random_wall_system(rng, 6, 7);
    auto fast = coherent_orientations(ws);
    CHECK(fast == coherent_by_definition(ws));
    for (const auto& o : fast) CHECK(is_coherent(ws, o));
    for (std::size_t p = 0; p < ws.ground_size(); ++p) CHECK(is_coherent(ws, principal_orientation(ws, p)));
  }
}

TEST_CASE("round trips on random systems and standard complexes") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    WallSystem ws = random_wall_system(rng);
    auto cert = roundtrip_check(ws);
    CHECK_MESSAGE(cert.isomorphic(), (cert.walls.detail + cert.complex.detail));
  }
  for (const CubeComplex& X : {hypercube(4), grid({3, 2}), path(5), staircase(4, 1), tree({0, 0, 0, 1, 1, 2})})
    CHECK(complex_roundtrip(X).isomorphic);
}

TEST_CASE("certificate contents") {
  WallSystem ws(WallSystemSpec{{"a", "b", "c"}, {{{"a"}, {"b", "c"}}, {{"a", "b"}, {"c"}}}});
  auto cert = wall_roundtrip(ws);
  REQUIRE(cert.isomorphic);
  CHECK(cert.point_to_vertex.size() == 3);
  CHECK(cert.wall_map.size() == 2);
  CHECK(cert.flipped.size() == 2);
}
