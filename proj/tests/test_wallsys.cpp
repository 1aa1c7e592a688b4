#include <algorithm>
#include <set>

#include "doctest.h"

#include "cubetight/errors.hpp"
#include "cubetight/families.hpp"
#include "cubetight/io.hpp"
#include "cubetight/wallsys.hpp"
#include "support/oracles.hpp"

using namespace cubetight;

namespace {

WallSystemSpec abc() { return {{"a", "b", "c"}, {{{"a"}, {"b", "c"}}}}; }

bool has_message(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) { return v.message.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(abc()).empty());

  WallSystemSpec overlap{{"a", "b"}, {{{"a"}, {"a", "b"}}}};
  auto r = validate(overlap);
  REQUIRE(!r.empty());
  CHECK(has_message(r, "sides overlap"));
  CHECK(r[0].wall == std::optional<std::size_t>(0));

  WallSystemSpec dup{{"a", "b", "c"}, {{{"a"}, {"b", "c"}}, {{"b", "c"}, {"a"}}}};
  auto d = validate(dup);
  CHECK(has_message(d, "duplicate wall"));
  CHECK(d.back().wall == std::optional<std::size_t>(1));

  CHECK(has_message(validate({{"a", "b"}, {{{}, {"a", "b"}}}}), "empty plus side"));
  CHECK(has_message(validate({{"a", "b"}, {{{"a"}, {"z"}}}}), "unknown point"));
  CHECK(has_message(validate({{"a", "b", "c"}, {{{"a"}, {"b"}}}}), "do not cover"));
  CHECK_THROWS_AS(WallSystem{overlap}, InputError);
}

TEST_CASE("separates") {
  WallSystem ws(abc());
  CHECK(ws.separates(0, "a", "b"));
  CHECK_FALSE(ws.separates(0, "b", "c"));
  CHECK_THROWS_AS(ws.separates(0, "a", "q"), InputError);

  CubeComplex g = grid({2, 2});
  const auto& gw = g.walls();
  CHECK(gw.separates(0, g.vertex("0-0"), g.vertex("1-0")));
}

TEST_CASE("crosses") {
  CubeComplex g = grid({2, 2});
  // wall 0 vertical (x > 0), wall 2 horizontal (y > 0)
  CHECK(g.walls().crosses(0, 2));
  CubeComplex p4 = path(4);
  CHECK_FALSE(p4.walls().crosses(0, 1));
  CHECK_FALSE(g.walls().crosses(0, 0));
}

TEST_CASE("max_separating_chain examples") {
  CubeComplex p4 = path(4);
  Chain c = p4.walls().max_separating_chain("0", "3");
  CHECK(c.walls == std::vector<std::size_t>{0, 1, 2});

  CubeComplex cube = hypercube(3);
  CHECK(cube.walls().max_separating_chain("000", "111").size() == 1);
  CHECK(oracle::max_chain_bruteforce(cube.walls(), cube.vertex("000"), cube.vertex("111")) == 1);
  CHECK(cube.walls().max_separating_chain("000", "100").size() == 1);
  CHECK_THROWS_AS(cube.walls().max_separating_chain("000", "000"), InputError);

  // chain is ordered from x toward y
  Chain back = p4.walls().max_separating_chain("3", "0");
  CHECK(back.walls == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("random wall systems: invariants and brute-force chain oracle") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    WallSystem ws = random_wall_system(rng);
    const std::size_t n = ws.ground_size(), m = ws.wall_count();
    for (std::size_t a = 0; a < m; ++a) {
      CHECK_FALSE(ws.crosses(a, a));
      for (std::size_t b = 0; b < m; ++b) CHECK(ws.crosses(a, b) == ws.crosses(b, a));
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        for (std::size_t w = 0; w < m; ++w)
          CHECK(ws.separates(w, x, y) != (ws.side_of(w, x) == ws.side_of(w, y)));
        Chain c = ws.max_separating_chain(x, y);
        CHECK(ws.is_chain(c));
        for (auto w : c.walls) CHECK(ws.separates(w, x, y));
        CHECK(c.size() == oracle::max_chain_bruteforce(ws, x, y));
      }
  }
}

TEST_CASE("ties break toward the lexicographically smallest chain") {
  // two disjoint length-1 options: walls 0 and 1 both separate a, d and cross
  WallSystemSpec spec{{"a", "b", "c", "d"}, {{{"a", "b"}, {"c", "d"}}, {{"a", "c"}, {"b", "d"}}}};
  WallSystem ws(spec);
  CHECK(ws.max_separating_chain("a", "d").walls == std::vector<std::size_t>{0});
}

TEST_CASE("JSON round trip is bit-exact after canonical side ordering") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    WallSystem ws = random_wall_system(rng);
    std::string once = io::dump(io::to_json(ws));
    WallSystem back = io::wall_system_from_json(io::parse_json(once));
    CHECK(io::dump(io::to_json(back)) == once);
  }
  // shuffled sides in the input canonicalize to ground order
  WallSystem ws(WallSystemSpec{{"a", "b", "c"}, {{{"c", "a"}, {"b"}}}});
  CHECK(ws.to_spec().walls[0].plus == std::vector<std::string>{"a", "c"});
}
