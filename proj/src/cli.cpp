#include "cubetight/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cubetight/cubecomplex.hpp"
#include "cubetight/errors.hpp"
#include "cubetight/families.hpp"
#include "cubetight/hypdiag.hpp"
#include "cubetight/io.hpp"
#include "cubetight/medianrec.hpp"
#include "cubetight/sageev.hpp"
#include "cubetight/tightspan.hpp"
#include "cubetight/wallsys.hpp"

namespace cubetight::cli {

namespace {

using io::Json;

struct Options {
  std::string input = "-";
  std::string output;
  std::string format = "json";
  double tol = 1e-9;
  std::string exponent = "4";
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t points = 5;

  std::string metric = "l1";
  std::string from, to, x, y, z;
  std::vector<std::string> set, path, balls, pts;
  std::optional<std::size_t> L;
  std::vector<std::size_t> wall_pair;
  std::string form, f, g, t = "1/2";
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

// Comma lists may also be given as repeated flags.
std::vector<std::string> flatten(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items)
    for (auto& part : split(item)) out.push_back(part);
  return out;
}

Metric parse_metric_flag(const std::string& m) {
  if (m == "l1") return Metric::l1;
  if (m == "linf") return Metric::linf;
  throw InputError("unknown metric '" + m + "' (expected l1 or linf)");
}

const std::string& require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required flag ") + flag);
  return value;
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  std::string text() const { return io::read_text(o_.input); }
  Json json() const { return io::parse_json(text()); }
  CubeComplex complex() const { return io::complex_from_json(json()); }
  FiniteMetric metric() const { return io::metric_from_text(text()); }

  void emit(const Json& j) const { write(io::dump(j)); }
  void emit_complex(const CubeComplex& X) const {
    if (o_.format == "dot") write(io::to_dot(X));
    else emit(io::to_json(X));
  }

  void write(const std::string& s) const {
    if (o_.output.empty()) {
      out_ << s;
      return;
    }
    std::ofstream file(o_.output, std::ios::binary);
    if (!file) throw InputError("cannot write '" + o_.output + "'");
    file << s;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

std::vector<Vertex> vertices(const CubeComplex& X, const std::vector<std::string>& labels) {
  std::vector<Vertex> out;
  for (const auto& l : flatten(labels)) out.push_back(X.vertex(l));
  return out;
}

Json labels_json(const CubeComplex& X, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(X.label(v));
  return out;
}

Json chain_json(const Chain& c) { return c.walls; }

// Pair table {x: {y: value}} over all ordered vertex pairs.
template <class Fn>
Json pair_table(const CubeComplex& X, Fn&& value) {
  Json table = Json::object();
  for (Vertex a = 0; a < X.vertex_count(); ++a) {
    Json row = Json::object();
    for (Vertex b = 0; b < X.vertex_count(); ++b) row[X.label(b)] = value(a, b);
    table[X.label(a)] = row;
  }
  return table;
}

Real parse_exponent(const std::string& s) {
  Rational r = parse_rational(s);
  return Real(r);
}

MetricForm parse_form(const FiniteMetric& M, const std::string& s, const char* flag) {
  require(s, flag);
  if (s.front() == '@') return kuratowski(M, M.index(s.substr(1)));
  MetricForm f;
  for (const auto& part : split(s)) f.push_back(parse_rational(part));
  if (f.size() != M.size()) throw InputError(std::string(flag) + " needs one value per point");
  return f;
}

void with_form(Json& j, const char* key, const MetricForm& f) {
  j[key] = io::form_json(f);
  j[std::string(key) + "_decimal"] = io::form_decimal_json(f);
}

void with_rational(Json& j, const std::string& key, const Rational& r) {
  j[key] = io::rational_json(r);
  j[key + "_decimal"] = io::decimal_json(r);
}

std::string real_decimal(const Real& r) { return r.str(30, std::ios_base::fixed); }

// ---- verbs -------------------------------------------------------------

void wallsys_validate(const Options& o, Session& s) {
  (void)o;
  auto report = validate(io::wall_system_spec_from_json(s.json()));
  Json violations = Json::array();
  for (const auto& v : report) {
    Json item = {{"message", v.message}};
    item["wall"] = v.wall ? Json(*v.wall) : Json(nullptr);
    violations.push_back(item);
  }
  s.emit({{"valid", report.empty()}, {"violations", violations}});
}

void wallsys_chain(const Options& o, Session& s) {
  WallSystem ws = io::wall_system_from_json(s.json());
  Chain c = ws.max_separating_chain(require(o.from, "--from"), require(o.to, "--to"));
  s.emit({{"chain", chain_json(c)}, {"length", c.size()}});
}

void cube_dist(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  Metric m = parse_metric_flag(o.metric);
  if (!o.from.empty() || !o.to.empty()) {
    s.emit({{"dist", distance(X, m, X.vertex(require(o.from, "--from")), X.vertex(require(o.to, "--to")))}});
    return;
  }
  auto table = distance_matrix(X, m);
  const std::size_t n = X.vertex_count();
  s.emit({{"metric", o.metric}, {"dist", pair_table(X, [&](Vertex a, Vertex b) { return table[a * n + b]; })}});
}

void cube_median(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  Vertex m = median(X, X.vertex(require(o.x, "--x")), X.vertex(require(o.y, "--y")), X.vertex(require(o.z, "--z")));
  s.emit({{"median", X.label(m)}});
}

void cube_interval(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  auto I = interval(X, X.vertex(require(o.from, "--from")), X.vertex(require(o.to, "--to")));
  s.emit({{"interval", labels_json(X, I)}});
}

void cube_hull(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  auto A = vertices(X, o.set);
  if (A.empty()) throw InputError("missing required flag --set");
  auto H = hull(X, A);
  s.emit({{"hull", labels_json(X, H.vertices)}, {"iterations", H.iterations}});
}

void cube_gate(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  auto Y = vertices(X, o.set);
  Vertex g = gate(X, X.vertex(require(o.from, "--from")), Y);
  s.emit({{"gate", X.label(g)}});
}

void cube_geodesic(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  auto P = vertices(X, o.path);
  s.emit({{"geodesic", is_geodesic(X, P)}});
}

void cube_dimension(const Options&, Session& s) {
  CubeComplex X = s.complex();
  auto family = max_crossing_family(X);
  s.emit({{"dimension", family.size()}, {"family", family}, {"cubes", cube_counts(X)}});
}

void cube_helly(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  std::vector<Ball> balls;
  for (const auto& spec : flatten(o.balls)) {
    auto colon = spec.rfind(':');
    if (colon == std::string::npos) throw InputError("ball '" + spec + "' must be center:radius");
    Ball b;
    b.center = X.vertex(spec.substr(0, colon));
    Rational r = parse_rational(spec.substr(colon + 1));
    if (r < 0 || boost::multiprecision::denominator(r) != 1) throw InputError("discrete radius must be a natural number");
    b.radius = boost::multiprecision::numerator(r).convert_to<std::size_t>();
    balls.push_back(b);
  }
  if (balls.empty()) throw InputError("missing required flag --ball");
  auto res = helly_discrete(X, balls, parse_metric_flag(o.metric));
  static const char* names[] = {"none", "pair", "triple", "family"};
  Json j = {{"failure", names[static_cast<int>(res.failure)]}, {"witness", res.witness}};
  j["common"] = res.common ? Json(X.label(*res.common)) : Json(nullptr);
  s.emit(j);
}

void cube_show(const Options&, Session& s) { s.emit_complex(s.complex()); }

void sageev_dual(const Options&, Session& s) {
  Json j = s.json();
  s.emit_complex(dual_complex(io::wall_system_from_json(j.contains("walls") && j["walls"].is_object() ? j["walls"] : j)));
}

void sageev_walls(const Options&, Session& s) { s.emit(io::to_json(walls_of(s.complex()))); }

Json roundtrip_json(const WallSystem& ws, const RoundTripCertificate& cert) {
  CubeComplex X = dual_complex(ws);
  Json bijection = Json::object();
  for (std::size_t w = 0; w < cert.walls.wall_map.size(); ++w)
    bijection[std::to_string(w)] = {{"wall", cert.walls.wall_map[w]}, {"flipped", static_cast<bool>(cert.walls.flipped[w])}};
  Json points = Json::object();
  for (std::size_t p = 0; p < cert.walls.point_to_vertex.size(); ++p)
    points[ws.point_name(p)] = X.label(cert.walls.point_to_vertex[p]);
  Json j = {{"isomorphic", cert.isomorphic()},
            {"wall_bijection", bijection},
            {"point_to_vertex", points},
            {"vertices", X.vertex_count()},
            {"walls", ws.wall_count()}};
  if (!cert.walls.detail.empty()) j["wall_detail"] = cert.walls.detail;
  if (!cert.complex.detail.empty()) j["complex_detail"] = cert.complex.detail;
  return j;
}

void sageev_roundtrip(const Options&, Session& s) {
  Json j = s.json();
  WallSystem ws = j.contains("graph") ? walls_of(s.complex())
                                      : io::wall_system_from_json(j.contains("walls") && j["walls"].is_object() ? j["walls"] : j);
  auto cert = roundtrip_check(ws);
  if (!cert.isomorphic()) throw ConsistencyError("round trip failed: " + cert.walls.detail + cert.complex.detail);
  s.emit(roundtrip_json(ws, cert));
}

void sageev_random(const Options& o, Session& s) {
  Rng rng(o.seed);
  Json runs = Json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < o.count; ++i) {
    WallSystem ws = random_wall_system(rng);
    auto cert = roundtrip_check(ws);
    if (!cert.isomorphic())
      throw ConsistencyError("round trip failed on " + io::to_json(ws).dump() + ": " + cert.walls.detail +
                             cert.complex.detail);
    ++passed;
    runs.push_back({{"input", io::to_json(ws)}, {"certificate", roundtrip_json(ws, cert)}});
  }
  s.emit({{"seed", o.seed}, {"count", o.count}, {"passed", passed}, {"runs", runs}});
}

void median_check(const Options&, Session& s) {
  Json j = s.json();
  SimpleGraph G = io::graph_from_json(j.contains("graph") ? j["graph"] : j);
  auto v = is_median(G);
  Json out = {{"median", v.is_median}};
  if (!v.is_median) {
    out["witness"] = {G.labels()[v.witness[0]], G.labels()[v.witness[1]], G.labels()[v.witness[2]]};
    out["median_count"] = v.median_count;
  }
  s.emit(out);
}

void median_cubify(const Options&, Session& s) {
  Json j = s.json();
  s.emit_complex(cubify(io::graph_from_json(j.contains("graph") ? j["graph"] : j)));
}

void hyp_lsep(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  SeparationTable table(X);
  if (!o.wall_pair.empty()) {
    if (o.wall_pair.size() != 2) throw InputError("--walls takes exactly two wall indices");
    const std::size_t h = o.wall_pair[0], k = o.wall_pair[1];
    Json j = {{"width", table.width(h, k)}};
    if (o.L) j["separated"] = table.separated(h, k, *o.L);
    s.emit(j);
    return;
  }
  Json widths = Json::object();
  for (std::size_t a = 0; a < X.wall_count(); ++a)
    for (std::size_t b = 0; b < X.wall_count(); ++b)
      if (a != b && !X.crosses(a, b)) widths[std::to_string(a)][std::to_string(b)] = table.width(a, b);
  Json j = {{"widths", widths}, {"max_width", table.max_width()}};
  if (o.L) {
    Json sep = Json::object();
    for (auto& [a, row] : widths.items())
      for (auto& [b, w] : row.items()) sep[a][b] = w.get<std::size_t>() <= *o.L;
    j["separated"] = sep;
    j["L"] = *o.L;
  }
  s.emit(j);
}

void hyp_grids(const Options&, Session& s) {
  auto w = grid_thinness(s.complex());
  s.emit({{"thinness", w.thinness}, {"chain_a", chain_json(w.chain_a)}, {"chain_b", chain_json(w.chain_b)}});
}

void hyp_dl(const Options& o, Session& s) {
  if (!o.L) throw InputError("missing required flag --L");
  CubeComplex X = s.complex();
  SeparationTable table(X);
  if (!o.from.empty() || !o.to.empty()) {
    Vertex a = X.vertex(require(o.from, "--from")), b = X.vertex(require(o.to, "--to"));
    s.emit({{"L", *o.L}, {"dist", dist_L(X, table, *o.L, a, b)}, {"chain", chain_json(dist_L_chain(X, table, *o.L, a, b))}});
    return;
  }
  s.emit({{"L", *o.L}, {"dist", pair_table(X, [&](Vertex a, Vertex b) { return dist_L(X, table, *o.L, a, b); })}});
}

Json curtain_json(const CurtainModel& model, const CurtainValue& v) {
  Json j = {{"tail_weight", v.tail_weight}, {"value", real_decimal(v.value)}};
  if (model.exact_finite_part()) j["finite"] = io::rational_json(v.finite);
  return j;
}

void hyp_curtain(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  CurtainModel model(X, parse_exponent(o.exponent));
  Json j = {{"exponent", o.exponent}, {"stable_from", model.stable_from()}, {"tail", real_decimal(model.tail())}};
  if (!o.from.empty() || !o.to.empty()) {
    j["dist"] = curtain_json(model, model.dist(X.vertex(require(o.from, "--from")), X.vertex(require(o.to, "--to"))));
  } else {
    j["dist"] = pair_table(X, [&](Vertex a, Vertex b) { return curtain_json(model, model.dist(a, b)); });
  }
  s.emit(j);
}

void hyp_delta(const Options& o, Session& s) {
  CubeComplex X = s.complex();
  const std::size_t n = X.vertex_count();
  Json j = {{"metric", o.metric}, {"vertices", n}};
  if (o.metric == "curtain") {
    CurtainModel model(X, parse_exponent(o.exponent));
    std::vector<Real> values(n * n);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) values[a * n + b] = values[b * n + a] = model.dist(a, b).value;
    PseudoMetricTable<Real> table(n, std::move(values), Real("1e-40"));
    j["delta"] = real_decimal(four_point_delta(table));
    j["exponent"] = o.exponent;
  } else {
    std::vector<Rational> values(n * n);
    if (o.metric == "dl") {
      if (!o.L) throw InputError("--metric dl needs --L");
      SeparationTable table(X);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) values[a * n + b] = dist_L(X, table, *o.L, a, b);
      j["L"] = *o.L;
    } else {
      auto d = distance_matrix(X, parse_metric_flag(o.metric));
      for (std::size_t i = 0; i < n * n; ++i) values[i] = d[i];
    }
    Rational delta = four_point_delta(PseudoMetricTable<Rational>(n, std::move(values)));
    with_rational(j, "delta", delta);
  }
  s.emit(j);
}

void tightspan_cells(const Options&, Session& s) {
  FiniteMetric M = s.metric();
  auto report = tight_span_cells(M);
  Json cells = Json::array(), decimals = Json::array();
  for (const auto& f : report.zero_cells) {
    cells.push_back(io::form_json(f));
    decimals.push_back(io::form_decimal_json(f));
  }
  Json j = {{"points", M.points()}, {"zero_cells", cells}, {"zero_cells_decimal", decimals}};
  with_rational(j, "coarse_gap", report.coarse_gap);
  s.emit(j);
}

void tightspan_retract(const Options& o, Session& s) {
  FiniteMetric M = s.metric();
  MetricForm f = parse_form(M, o.form, "--form");
  MetricForm r = retract(M, f, {o.tol});
  Json j = {{"points", M.points()}, {"extremal", is_extremal(M, r)}};
  with_form(j, "form", r);
  s.emit(j);
}

void tightspan_helly(const Options& o, Session& s) {
  FiniteMetric M = s.metric();
  std::vector<HellyBall> balls;
  for (const auto& spec : flatten(o.balls)) {
    auto colon = spec.rfind(':');
    if (colon == std::string::npos) throw InputError("ball '" + spec + "' must be center:radius");
    balls.push_back({M.index(spec.substr(0, colon)), parse_rational(spec.substr(colon + 1))});
  }
  auto res = helly_witness(M, balls, {o.tol});
  Json j = {{"points", M.points()}, {"feasible", res.witness.has_value()}};
  if (res.witness) with_form(j, "witness", *res.witness);
  if (res.violating) j["violating"] = {res.violating->first, res.violating->second};
  s.emit(j);
}

void tightspan_tripod(const Options& o, Session& s) {
  FiniteMetric M = s.metric();
  auto t = tripod_center(M, M.index(require(o.x, "--x")), M.index(require(o.y, "--y")), M.index(require(o.z, "--z")),
                         {o.tol});
  Json j = {{"points", M.points()}};
  with_rational(j, "a", t.a);
  with_rational(j, "b", t.b);
  with_rational(j, "c", t.c);
  with_form(j, "center", t.center);
  s.emit(j);
}

void tightspan_center(const Options& o, Session& s) {
  FiniteMetric M = s.metric();
  std::vector<std::size_t> idx;
  for (const auto& p : flatten(o.pts)) idx.push_back(M.index(p));
  Json j = {{"points", M.points()}};
  with_form(j, "center", center(M, idx, {o.tol}));
  s.emit(j);
}

void tightspan_comb(const Options& o, Session& s) {
  FiniteMetric M = s.metric();
  MetricForm f = parse_form(M, o.f, "--f"), g = parse_form(M, o.g, "--g");
  Json j = {{"points", M.points()}};
  with_form(j, "form", comb(M, f, g, parse_rational(o.t), {o.tol}));
  s.emit(j);
}

void tightspan_random_metric(const Options& o, Session& s) {
  Rng rng(o.seed);
  s.emit(io::to_json(random_metric(rng, o.points)));
}

Json error_json(const char* type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cube complexes, wall systems, hyperbolicity diagnostics and tight spans", "cubetight"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-i,--input", o.input, "Input file ('-' for stdin)");
  app.add_option("-o,--output", o.output, "Output file (default stdout)");
  app.add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--tol", o.tol, "Retraction tolerance")->check(CLI::PositiveNumber);
  app.add_option("--exponent", o.exponent, "Curtain-model exponent p > 1");
  app.add_option("--seed", o.seed, "Random seed");

  std::function<void(const Options&, Session&)> action;
  auto verb = [&](CLI::App* group, const char* name, const char* help, void (*fn)(const Options&, Session&)) {
    CLI::App* sub = group->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto add_from_to = [&](CLI::App* sub) {
    sub->add_option("--from", o.from, "Source vertex or point");
    sub->add_option("--to", o.to, "Target vertex or point");
  };
  auto add_xyz = [&](CLI::App* sub) {
    sub->add_option("--x", o.x);
    sub->add_option("--y", o.y);
    sub->add_option("--z", o.z);
  };

  CLI::App* wallsys = app.add_subcommand("wallsys", "Wall systems")->require_subcommand(1);
  verb(wallsys, "validate", "Report every violated wall invariant", wallsys_validate);
  add_from_to(verb(wallsys, "chain", "Longest chain of separating walls", wallsys_chain));

  CLI::App* cube = app.add_subcommand("cube", "Hyperplane calculus on a cube complex")->require_subcommand(1);
  {
    auto* sub = verb(cube, "dist", "Distance (one pair or the full table)", cube_dist);
    add_from_to(sub);
    sub->add_option("--metric", o.metric, "l1 or linf");
  }
  add_xyz(verb(cube, "median", "Median of three vertices", cube_median));
  add_from_to(verb(cube, "interval", "Interval between two vertices", cube_interval));
  verb(cube, "hull", "Convex hull of a vertex set", cube_hull)->add_option("--set", o.set, "Vertices (comma list)");
  {
    auto* sub = verb(cube, "gate", "Gate of a vertex in a convex set", cube_gate);
    sub->add_option("--from", o.from);
    sub->add_option("--set", o.set, "Convex set (comma list)");
  }
  verb(cube, "geodesic", "Is an edge path geodesic", cube_geodesic)->add_option("--path", o.path, "Vertices (comma list)");
  verb(cube, "dimension", "Largest pairwise-crossing wall family", cube_dimension);
  {
    auto* sub = verb(cube, "helly", "Common point of vertex balls", cube_helly);
    sub->add_option("--ball", o.balls, "center:radius");
    sub->add_option("--metric", o.metric, "l1 or linf");
  }
  verb(cube, "show", "Emit the complex (JSON or DOT)", cube_show);
  verb(cube, "dot", "Emit the complex as DOT", [](const Options&, Session& s) {
    s.write(io::to_dot(s.complex()));
  });

  CLI::App* sageev = app.add_subcommand("sageev", "Sageev duality")->require_subcommand(1);
  verb(sageev, "dual", "Dual cube complex of a wall system", sageev_dual);
  verb(sageev, "walls", "Wall system of a cube complex", sageev_walls);
  verb(sageev, "roundtrip", "Certify walls -> complex -> walls", sageev_roundtrip);
  verb(sageev, "random", "Round trips on random wall systems", sageev_random)->add_option("--count", o.count);

  CLI::App* median = app.add_subcommand("median", "Median graphs")->require_subcommand(1);
  verb(median, "check", "Decide whether a graph is median", median_check);
  verb(median, "cubify", "Cube complex of a median graph", median_cubify);

  CLI::App* hyp = app.add_subcommand("hyp", "Hyperbolicity diagnostics")->require_subcommand(1);
  {
    auto* sub = verb(hyp, "lsep", "Separation widths of wall pairs", hyp_lsep);
    sub->add_option("--L", o.L);
    sub->add_option("--walls", o.wall_pair, "Two wall indices")->delimiter(',');
  }
  verb(hyp, "grids", "Grid thinness with a witness", hyp_grids);
  {
    auto* sub = verb(hyp, "dl", "dist_L table", hyp_dl);
    sub->add_option("--L", o.L);
    add_from_to(sub);
  }
  add_from_to(verb(hyp, "curtain-model", "Curtain-model distance", hyp_curtain));
  {
    auto* sub = verb(hyp, "delta", "Four-point hyperbolicity constant", hyp_delta);
    sub->add_option("--metric", o.metric, "l1, linf, dl or curtain");
    sub->add_option("--L", o.L);
  }

  CLI::App* ts = app.add_subcommand("tightspan", "Injective hulls of finite metrics")->require_subcommand(1);
  verb(ts, "cells", "Zero-cells of the tight span", tightspan_cells);
  verb(ts, "retract", "Retract a form onto the tight span", tightspan_retract)
      ->add_option("--form", o.form, "Comma list of values, or @point for its distance function");
  verb(ts, "helly", "Common point of metric balls", tightspan_helly)->add_option("--ball", o.balls, "center:radius");
  add_xyz(verb(ts, "tripod", "Tripod center of three points", tightspan_tripod));
  verb(ts, "center", "Pushed-down barycenter", tightspan_center)->add_option("--points", o.pts, "Points (comma list)");
  {
    auto* sub = verb(ts, "comb", "Point on the combing line", tightspan_comb);
    sub->add_option("--f", o.f);
    sub->add_option("--g", o.g);
    sub->add_option("--t", o.t);
  }
  verb(ts, "random-metric", "Random rational metric", tightspan_random_metric)->add_option("--points", o.points);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage_error", e.what()).dump() << "\n";
    return 2;
  }

  Session session(o, out);
  try {
    if (!action) throw InputError("no command given");
    action(o, session);
    return 0;
  } catch (const NotMedianError& e) {
    Json j = error_json("input_error", e.what());
    j["error"]["median_count"] = e.verdict().median_count;
    j["error"]["witness"] = e.witness_labels();
    err << j.dump() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << error_json("input_error", e.what()).dump() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    Json j = error_json("consistency_error", e.what());
    j["error"]["reproduction"] = {{"argv", args}};
    if (o.input != "-") {
      try {
        j["error"]["reproduction"]["input"] = io::read_text(o.input);
      } catch (const std::exception&) {
      }
    }
    err << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json j = error_json("internal_error", e.what());
    j["error"]["reproduction"] = {{"argv", args}};
    err << j.dump() << "\n";
    return 1;
  }
}

}  // namespace cubetight::cli
