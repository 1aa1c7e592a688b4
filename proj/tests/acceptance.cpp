// Acceptance runner: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/cli_cases.hpp"
#include "support/corpus.hpp"
#include "cubetight/cubecomplex.hpp"
#include "cubetight/errors.hpp"
#include "cubetight/families.hpp"
#include "cubetight/hypdiag.hpp"
#include "cubetight/io.hpp"
#include "cubetight/medianrec.hpp"
#include "cubetight/sageev.hpp"
#include "cubetight/tightspan.hpp"
#include "support/oracles.hpp"

using namespace cubetight;

namespace {

class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed (first: " << first_ << ")";
    return s.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

const std::vector<corpus::Named>& standard_corpus() {
  static const std::vector<corpus::Named> c = corpus::standard();
  return c;
}

Vertex corner(const CubeComplex& g, std::size_t i, std::size_t j) {
  return g.vertex(std::to_string(i) + "-" + std::to_string(j));
}

std::string pair_name(const std::string& name, Vertex x, Vertex y) {
  return name + " (" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// 1. ---------------------------------------------------------------------------

void dimension_forgetting(Check& check) {
  for (std::size_t n = 1; n <= 6; ++n) {
    CubeComplex X = hypercube(n);
    Vertex a = X.vertex(std::string(n, '0')), b = X.vertex(std::string(n, '1'));
    check(dist_l1(X, a, b) == n, "l1 on cube " + std::to_string(n));
    check(dist_linf(X, a, b) == 1, "linf on cube " + std::to_string(n));
  }
}

// 2. ---------------------------------------------------------------------------

VertexSet random_subset(Rng& rng, std::size_t n, std::size_t k) {
  VertexSet s;
  for (std::size_t i = 0; i < k; ++i) s.push_back(uniform(rng, 0, n - 1));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void hyperplane_calculus(Check& check) {
  Rng rng(101);
  for (const auto& [name, X] : standard_corpus()) {
    const std::size_t n = X.vertex_count();
    auto d = distance_matrix(X, Metric::l1);

    for (Vertex s = 0; s < n; ++s) {
      auto bfs = bfs_distances(X, s);
      auto by_orientation = oracle::bfs_by_orientation(X, s);
      for (Vertex t = 0; t < n; ++t) {
        check(d[s * n + t] == bfs[t], pair_name(name + " l1 vs bfs", s, t));
        check(bfs[t] == by_orientation[t], pair_name(name + " bfs vs orientation graph", s, t));
      }
    }

    // geodesic iff no wall is crossed twice, on random walks
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Vertex> walk{uniform(rng, 0, n - 1)};
      for (std::size_t len = uniform(rng, 0, 8); len > 0 && !X.neighbors(walk.back()).empty(); --len) {
        const auto& nb = X.neighbors(walk.back());
        walk.push_back(nb[uniform(rng, 0, nb.size() - 1)]);
      }
      std::vector<int> crossed(X.wall_count(), 0);
      bool twice = false;
      for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (++crossed[X.dual_wall(walk[i], walk[i + 1])] > 1) twice = true;
      const bool shortest = walk.size() - 1 == d[walk.front() * n + walk.back()];
      check(shortest == !twice, name + " geodesic characterizations");
      check(is_geodesic(X, walk) == shortest, name + " is_geodesic");
    }

    // median: majority orientation, interval intersection, metric median
    const bool all_triples = n <= 50;
    const std::size_t samples = all_triples ? n * n * n : 20000;
    for (std::size_t k = 0; k < samples; ++k) {
      Vertex x, y, z;
      if (all_triples) {
        x = k / (n * n), y = (k / n) % n, z = k % n;
      } else {
        x = uniform(rng, 0, n - 1), y = uniform(rng, 0, n - 1), z = uniform(rng, 0, n - 1);
      }
      Vertex m = median(X, x, y, z);
      Bitset majority = (X.orientation(x) & X.orientation(y)) | (X.orientation(y) & X.orientation(z)) |
                        (X.orientation(x) & X.orientation(z));
      check(X.orientation(m) == majority, name + " majority median");
      std::size_t metric_medians = 0;
      Vertex found = 0;
      for (Vertex v = 0; v < n; ++v)
        if (d[x * n + v] + d[v * n + y] == d[x * n + y] && d[y * n + v] + d[v * n + z] == d[y * n + z] &&
            d[x * n + v] + d[v * n + z] == d[x * n + z]) {
          ++metric_medians;
          found = v;
        }
      check(metric_medians == 1 && found == m, name + " metric median");
    }

    // hull fixed point vs half-space intersection
    const std::size_t dim = dimension(X);
    for (int trial = 0; trial < 40; ++trial) {
      VertexSet A = random_subset(rng, n, uniform(rng, 1, 4));
      HullResult h = hull(X, A);
      check(h.vertices == halfspace_hull(X, A), name + " hull characterizations");
      check(h.iterations <= std::max<std::size_t>(dim, 1), name + " hull stabilization");
      check(is_convex(X, h.vertices), name + " hull convex");

      // gates onto the hull
      for (int g = 0; g < 5; ++g) {
        Vertex x = uniform(rng, 0, n - 1);
        Vertex a = gate_by_distance(X, x, h.vertices);
        Vertex b = gate_by_walls(X, x, h.vertices);
        Vertex c = gate_by_intervals(X, x, h.vertices);
        check(a == b && b == c && gate(X, x, h.vertices) == a, name + " gate characterizations");
      }
    }
  }
}

// 3. ---------------------------------------------------------------------------

void sageev_roundtrips(Check& check) {
  Rng rng(303);
  for (int k = 0; k < 200; ++k) {
    WallSystem ws = random_wall_system(rng, 8, 10);
    auto cert = roundtrip_check(ws);
    check(cert.isomorphic(), "round trip " + std::to_string(k) + ": " + cert.walls.detail + cert.complex.detail);
    check(cert.walls.wall_map.size() == ws.wall_count(), "explicit wall map " + std::to_string(k));
    check(cert.walls.point_to_vertex.size() == ws.ground_size(), "explicit point map " + std::to_string(k));
  }
}

// 4. ---------------------------------------------------------------------------

void median_recognition(Check& check) {
  Rng rng(404);
  for (int k = 0; k < 20; ++k) {
    SimpleGraph t = skeleton(tree(random_parents(rng, uniform(rng, 1, 40))));
    check(is_median(t).is_median, "tree " + std::to_string(k));
  }
  for (const auto& [name, X] : standard_corpus()) {
    SimpleGraph G = skeleton(X);
    check(is_median(G).is_median, name + " skeleton");
    check(cubify(G).wall_count() == X.wall_count(), name + " cubify");
  }

  auto rejected = [&](const std::string& name, const SimpleGraph& G) {
    auto v = is_median(G);
    check(!v.is_median, name + " rejected");
    auto d = all_pairs_distances(G);
    std::size_t count = oracle::median_count(G, d, v.witness[0], v.witness[1], v.witness[2]);
    check(count != 1 && count == v.median_count, name + " witness");
    check(!oracle::is_median_bruteforce(G), name + " brute force");
  };
  rejected("K23", SimpleGraph({"a", "b", "x", "y", "z"},
                              std::vector<std::pair<std::string, std::string>>{
                                  {"a", "x"}, {"a", "y"}, {"a", "z"}, {"b", "x"}, {"b", "y"}, {"b", "z"}}));
  rejected("C6", SimpleGraph({"0", "1", "2", "3", "4", "5"},
                             std::vector<std::pair<std::string, std::string>>{
                                 {"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "0"}}));

  auto duals = corpus::random_duals(rng, 100);
  for (std::size_t k = 0; k < duals.size(); ++k)
    check(is_median(skeleton(duals[k])).is_median, "random dual " + std::to_string(k));
  check(duals.size() == 100, "100 random duals");
}

// 5. ---------------------------------------------------------------------------

void dist_L_sandwich(Check& check) {
  for (const auto& [name, X] : standard_corpus()) {
    SeparationTable table(X);
    const std::size_t n = X.vertex_count();
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x; y < n; ++y) {
        const std::size_t l1 = dist_l1(X, x, y);
        std::size_t prev = dist_L(X, table, 0, x, y);
        for (std::size_t L = 0; L <= X.wall_count(); ++L) {
          const std::size_t next = dist_L(X, table, L + 1, x, y);
          check(prev <= next, pair_name(name + " monotone in L", x, y));
          check(next <= 1 + l1, pair_name(name + " bounded by 1 + dist", x, y));
          prev = next;
        }
      }
  }
}

// 6. ---------------------------------------------------------------------------

void curtain_model(Check& check) {
  const Real zeta4 = zeta_value(Real(4));
  const Real slack("1e-30");
  Rng rng(606);
  for (const auto& [name, X] : standard_corpus()) {
    CurtainModel model(X);
    const std::size_t n = X.vertex_count();
    std::vector<Real> table(n * n, Real(0));
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) table[x * n + y] = table[y * n + x] = model.dist(x, y).value;
    try {
      PseudoMetricTable<Real> metric(n, table, slack);
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) check(x == y || metric.at(x, y) > 0, name + " positive off the diagonal");
    } catch (const InputError& e) {
      check(false, name + " metric: " + e.what());
    }

    for (int k = 0; k < 3; ++k) {
      Vertex x = uniform(rng, 0, n - 1), y = uniform(rng, 0, n - 1);
      check(abs(model.dist(x, y).value - model.truncated(x, y, 10000)) < Real("1e-9"),
            pair_name(name + " truncation", x, y));
    }

    if (name.rfind("tree", 0) == 0 || name.rfind("path", 0) == 0)
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
          check(abs(table[x * n + y] - Real(1 + dist_l1(X, x, y)) * zeta4) < Real("1e-9"),
                pair_name(name + " tree closed form", x, y));
  }

  // four-point delta on square grids
  Real curtain_bound = 0;
  std::vector<Real> curtain_delta;
  std::vector<Rational> l1_delta;
  for (std::size_t s = 2; s <= 6; ++s) {
    CubeComplex g = grid({s, s});
    CurtainModel model(g);
    const std::size_t m = g.vertex_count();
    std::vector<Rational> l1(m * m);
    std::vector<Real> dist(m * m, Real(0));
    for (Vertex a = 0; a < m; ++a)
      for (Vertex b = 0; b < m; ++b) {
        l1[a * m + b] = dist_l1(g, a, b);
        if (a < b) dist[a * m + b] = dist[b * m + a] = model.dist(a, b).value;
      }
    l1_delta.push_back(four_point_delta(PseudoMetricTable<Rational>(m, l1)));
    curtain_delta.push_back(four_point_delta(PseudoMetricTable<Real>(m, dist, slack)));
    if (s == 2) curtain_bound = curtain_delta.back();
  }
  for (std::size_t i = 0; i < curtain_delta.size(); ++i) {
    check(curtain_delta[i] <= curtain_bound, "curtain delta bounded at grid " + std::to_string(i + 2));
    if (i > 0) check(l1_delta[i] > l1_delta[i - 1], "l1 delta grows at grid " + std::to_string(i + 2));
  }
}

// 7. ---------------------------------------------------------------------------

void flat_flattening(Check& check) {
  const std::vector<std::size_t> frozen3{2, 2, 2, 4, 4, 4, 4, 4};
  {
    CubeComplex g = grid({3, 3});
    for (std::size_t L = 0; L < frozen3.size(); ++L)
      check(dist_L(g, L, corner(g, 0, 0), corner(g, 3, 3)) == frozen3[L], "frozen n=3 L=" + std::to_string(L));
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    CubeComplex g = grid({n, n});
    SeparationTable table(g);
    for (std::size_t L = 0; L <= 2 * n + 2; ++L) {
      const std::size_t want = L < n ? 2 : 1 + n;
      check(dist_L(g, table, L, corner(g, 0, 0), corner(g, n, n)) == want,
            "grid " + std::to_string(n) + " L=" + std::to_string(L));
    }
  }
}

// 8. ---------------------------------------------------------------------------

MetricForm random_delta1(const FiniteMetric& M, Rng& rng) {
  const std::size_t n = M.size();
  const std::size_t c0 = uniform(rng, 0, n - 1), c1 = uniform(rng, 0, n - 1);
  const Rational r0(uniform(rng, 0, 6), 2);
  const Rational r1 = std::max(Rational(0), Rational(M.d(c0, c1) - r0)) + Rational(uniform(rng, 0, 4), 3);
  const Rational lambda(uniform(rng, 0, 8), 8);
  const std::size_t p = uniform(rng, 0, n - 1);
  MetricForm g(n);
  for (std::size_t x = 0; x < n; ++x)
    g[x] = lambda * std::min(r0 + M.d(x, c0), r1 + M.d(x, c1)) + (1 - lambda) * M.d(p, x);
  return g;
}

MetricForm lifted(const FiniteMetric& M, Rng& rng) {
  MetricForm f(M.size(), Rational(0));
  for (std::size_t x = 0; x < M.size(); ++x) {
    for (std::size_t y = 0; y < M.size(); ++y) f[x] = std::max(f[x], M.d(x, y));
    f[x] += Rational(uniform(rng, 0, 12), 4);
  }
  return f;
}

void tight_span(Check& check) {
  Rng rng(808);

  for (int k = 0; k < 20; ++k) {
    FiniteMetric M = random_metric(rng, uniform(rng, 2, 7));
    for (std::size_t x = 0; x < M.size(); ++x)
      for (std::size_t y = 0; y < M.size(); ++y)
        check(sup_distance(kuratowski(M, x), kuratowski(M, y)) == M.d(x, y), "Kuratowski isometry");
    auto report = tight_span_cells(M);
    for (const auto& f : report.zero_cells) {
      check(in_delta1(M, f), "zero-cell 1-Lipschitz");
      check(is_extremal(M, f), "zero-cell extremal");
    }
    for (std::size_t x = 0; x < M.size(); ++x)
      check(std::find(report.zero_cells.begin(), report.zero_cells.end(), kuratowski(M, x)) != report.zero_cells.end(),
            "Kuratowski images are zero-cells");
    if (M.size() <= 5) check(report.zero_cells == oracle::zero_cells_by_elimination(M), "zero-cells vs elimination");
  }

  for (int k = 0; k < 200; ++k) {
    FiniteMetric M = random_metric(rng, uniform(rng, 2, 7));
    MetricForm f = random_delta1(M, rng);
    check(in_delta1(M, f), "random form in Delta^1");
    for (std::size_t x = 0; x < M.size(); ++x) check(sup_distance(kuratowski(M, x), f) == f[x], "evaluation identity");
  }

  // segments and tripods
  for (int k = 0; k < 30; ++k) {
    const Rational a(uniform(rng, 1, 20), uniform(rng, 1, 3));
    FiniteMetric seg({"x", "y"}, {0, a, a, 0});
    check(tight_span_cells(seg).zero_cells == std::vector<MetricForm>{{0, a}, {a, 0}}, "segment zero-cells");

    FiniteMetric M = random_metric(rng, 3);
    Tripod t = tripod_center(M, 0, 1, 2);
    check(t.a + t.b == M.d(0, 1) && t.a + t.c == M.d(0, 2) && t.b + t.c == M.d(1, 2), "tripod legs");
    check(t.center == MetricForm{t.a, t.b, t.c}, "tripod center");
    std::set<MetricForm> want{kuratowski(M, 0), kuratowski(M, 1), kuratowski(M, 2), t.center};
    auto cells = tight_span_cells(M).zero_cells;
    check(std::set<MetricForm>(cells.begin(), cells.end()) == want, "tripod zero-cells");
  }

  // Helly
  for (int space = 0; space < 5; ++space) {
    FiniteMetric M = random_metric(rng, uniform(rng, 3, 7));
    int compatible_families = 0;
    while (compatible_families < 500) {
      std::vector<HellyBall> balls;
      for (std::size_t k = uniform(rng, 2, 5); k > 0; --k)
        balls.push_back({uniform(rng, 0, M.size() - 1), Rational(uniform(rng, 0, 20), 2)});
      bool compatible = true;
      for (std::size_t i = 0; i < balls.size(); ++i)
        for (std::size_t j = i + 1; j < balls.size(); ++j)
          if (M.d(balls[i].center, balls[j].center) > balls[i].radius + balls[j].radius) compatible = false;
      auto out = helly_witness(M, balls);
      check(out.witness.has_value() == compatible, "Helly feasibility");
      if (out.witness) {
        ++compatible_families;
        check(is_extremal(M, *out.witness), "Helly witness extremal");
        for (const auto& b : balls)
          check(sup_distance(*out.witness, kuratowski(M, b.center)) <= b.radius, "Helly witness in ball");
      } else if (out.violating) {
        auto [i, j] = *out.violating;
        check(M.d(balls[i].center, balls[j].center) > balls[i].radius + balls[j].radius, "Helly violating pair");
      }
    }
  }

  // retraction
  for (int k = 0; k < 60; ++k) {
    FiniteMetric M = random_metric(rng, uniform(rng, 2, 7));
    MetricForm f = lifted(M, rng), g = lifted(M, rng);
    auto nf = retract_numeric(M, f), ng = retract_numeric(M, g);
    double pre = 0;
    for (std::size_t x = 0; x < M.size(); ++x) pre = std::max(pre, std::abs(nf[x] - ng[x]));
    check(pre <= to_double(sup_distance(f, g)) + 1e-9, "nonexpansive pre-snap");
    MetricForm rf = retract(M, f), rg = retract(M, g);
    check(is_extremal(M, rf), "retraction extremal");
    check(retract(M, rf) == rf, "retraction idempotent");
    bool decreasing = true;
    for (std::size_t x = 0; x < M.size(); ++x) decreasing = decreasing && rf[x] <= f[x];
    check(decreasing, "retraction pointwise decreasing");
    check(sup_distance(rf, rg) <= sup_distance(f, g), "nonexpansive post-snap");
  }

  // combing
  for (int k = 0; k < 200; ++k) {
    FiniteMetric M = random_metric(rng, uniform(rng, 3, 6));
    auto pick = [&] { return kuratowski(M, uniform(rng, 0, M.size() - 1)); };
    MetricForm a = pick(), b = pick(), a2 = retract(M, random_delta1(M, rng)), b2 = pick();
    check(comb(M, a, b, 0) == a && comb(M, a, b, 1) == b, "comb endpoints");
    const Rational t(uniform(rng, 0, 6), 6);
    check(sup_distance(comb(M, a, b, t), comb(M, a2, b2, t)) <= std::max(sup_distance(a, a2), sup_distance(b, b2)),
          "fellow traveling");
  }
}

// 9. ---------------------------------------------------------------------------

void cli_determinism(Check& check) {
  for (const auto& args : cli_cases::examples(CUBETIGHT_SAMPLES)) {
    std::string line;
    for (const auto& a : args) line += a + " ";
    auto first = cli_cases::invoke(args), second = cli_cases::invoke(args);
    check(first.code == 0, "exit 0: " + line + first.err);
    check(first.out == second.out && first.err == second.err, "byte-identical: " + line);
  }
  for (const auto& m : cli_cases::malformed()) {
    auto args = m.command;
    args.push_back("-i");
    args.push_back(std::string(CUBETIGHT_TEST_DATA) + "/" + m.fixture);
    auto r = cli_cases::invoke(args);
    check(r.code == 2, "exit 2: " + m.fixture);
    bool structured = false;
    try {
      auto j = io::Json::parse(r.err);
      structured = j["error"]["type"].is_string() && j["error"]["message"].is_string();
    } catch (const std::exception&) {
    }
    check(structured, "structured error: " + m.fixture);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "dimension forgetting on n-cubes", 1, dimension_forgetting},
      {2, "hyperplane-calculus equivalences", 60, hyperplane_calculus},
      {3, "Sageev round trip on 200 wall systems", 60, sageev_roundtrips},
      {4, "median recognition", 30, median_recognition},
      {5, "dist_L <= dist_L+1 <= 1 + dist", 120, dist_L_sandwich},
      {6, "curtain-model metric", 300, curtain_model},
      {7, "grid corners flatten below L = n", 60, flat_flattening},
      {8, "tight-span suite", 300, tight_span},
      {9, "CLI determinism and malformed input", 30, cli_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool ok = check.ok() && in_time;
    if (!ok) ++failed;
    std::printf("[%s] criterion %d: %s: %s, %.2fs (budget %.0fs)%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                check.summary().c_str(), seconds, c.budget_seconds, in_time ? "" : " over budget");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
