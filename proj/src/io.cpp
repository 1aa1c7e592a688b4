#include "cubetight/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "cubetight/errors.hpp"
#include "cubetight/sageev.hpp"

namespace cubetight::io {

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (v.is_string()) out.push_back(v.get<std::string>());
    else if (v.is_number_integer()) out.push_back(std::to_string(v.get<long long>()));
    else throw InputError(std::string(what) + " entries must be strings");
  }
  return out;
}

}  // namespace

WallSystemSpec wall_system_spec_from_json(const Json& j) {
  WallSystemSpec spec;
  spec.ground = string_list(field(j, "ground"), "ground");
  const Json& walls = field(j, "walls");
  if (!walls.is_array()) throw InputError("walls must be an array");
  for (const auto& w : walls) {
    WallSpec ws;
    ws.plus = string_list(field(w, "plus"), "plus");
    ws.minus = string_list(field(w, "minus"), "minus");
    spec.walls.push_back(std::move(ws));
  }
  return spec;
}

WallSystem wall_system_from_json(const Json& j) { return WallSystem(wall_system_spec_from_json(j)); }

Json to_json(const WallSystem& ws) {
  WallSystemSpec spec = ws.to_spec();
  Json walls = Json::array();
  for (const auto& w : spec.walls) walls.push_back({{"plus", w.plus}, {"minus", w.minus}});
  return {{"ground", spec.ground}, {"walls", walls}};
}

SimpleGraph graph_from_json(const Json& j) {
  auto vertices = string_list(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("edges must be an array");
  std::vector<std::pair<std::string, std::string>> list;
  for (const auto& e : edges) {
    auto ends = string_list(e, "edge");
    if (ends.size() != 2) throw InputError("each edge needs exactly two endpoints");
    list.emplace_back(ends[0], ends[1]);
  }
  return SimpleGraph(std::move(vertices), list);
}

Json to_json(const SimpleGraph& G) {
  Json edges = Json::array();
  for (auto [u, v] : G.edges()) edges.push_back({G.labels()[u], G.labels()[v]});
  return {{"vertices", G.labels()}, {"edges", edges}};
}

CubeComplex complex_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("graph")) return cubify(graph_from_json(j["graph"]));
  if (j.contains("walls") && j["walls"].is_object()) return dual_complex(wall_system_from_json(j["walls"]));
  if (j.contains("ground")) return dual_complex(wall_system_from_json(j));
  throw InputError("complex input needs a 'graph' or 'walls' field");
}

Json to_json(const CubeComplex& X) {
  return {{"graph", to_json(skeleton(X))}, {"walls", to_json(X.walls())}};
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const CubeComplex& X) {
  static const char* palette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
                                  "#e6ab02", "#a6761d", "#666666", "#1f78b4", "#b2df8a"};
  std::ostringstream out;
  out << "graph cube_complex {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < X.vertex_count(); ++v) out << "  " << dot_quote(X.label(v)) << ";\n";
  for (auto [u, v] : X.edges()) {
    const std::size_t w = X.dual_wall(u, v);
    out << "  " << dot_quote(X.label(u)) << " -- " << dot_quote(X.label(v)) << " [label=\"h" << w
        << "\", color=\"" << palette[w % std::size(palette)] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a number or a \"p/q\" string, got " + j.dump());
}

FiniteMetric metric_from_json(const Json& j) {
  auto points = string_list(field(j, "points"), "points");
  const Json& rows = field(j, "d");
  if (!rows.is_array() || rows.size() != points.size()) throw InputError("d must have one row per point");
  std::vector<Rational> d;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != points.size()) throw InputError("d must be square");
    for (const auto& v : row) d.push_back(rational_from_json(v));
  }
  return FiniteMetric(std::move(points), std::move(d));
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  for (auto& cell : cells) {
    auto b = cell.find_first_not_of(" \t");
    auto e = cell.find_last_not_of(" \t");
    cell = b == std::string::npos ? std::string() : cell.substr(b, e - b + 1);
  }
  return cells;
}

}  // namespace

FiniteMetric metric_from_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) lines.push_back(split_csv_line(line));
    start = end + 1;
  }
  if (lines.empty()) throw InputError("empty CSV metric");
  std::vector<std::string> header = lines[0];
  // a leading empty cell marks a row-name column
  const bool named_rows = !header.empty() && header[0].empty();
  if (named_rows) header.erase(header.begin());
  const std::size_t n = header.size();
  if (lines.size() != n + 1) throw InputError("CSV metric needs one row per point");
  std::vector<Rational> d;
  for (std::size_t i = 1; i <= n; ++i) {
    auto row = lines[i];
    if (named_rows) {
      if (row.empty() || row[0] != header[i - 1]) throw InputError("CSV row names must follow the header order");
      row.erase(row.begin());
    }
    if (row.size() != n) throw InputError("CSV row " + std::to_string(i) + " has the wrong length");
    for (const auto& cell : row) d.push_back(parse_rational(cell));
  }
  return FiniteMetric(std::move(header), std::move(d));
}

FiniteMetric metric_from_text(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return metric_from_json(parse_json(text));
  return metric_from_csv(text);
}

Json rational_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    const BigInt& num = boost::multiprecision::numerator(r);
    if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
      return num.convert_to<long long>();
  }
  return format_rational(r);
}

Json decimal_json(const Rational& r) { return format_decimal(r); }

Json form_json(const MetricForm& f) {
  Json out = Json::array();
  for (const auto& v : f) out.push_back(rational_json(v));
  return out;
}

Json form_decimal_json(const MetricForm& f) {
  Json out = Json::array();
  for (const auto& v : f) out.push_back(decimal_json(v));
  return out;
}

Json to_json(const FiniteMetric& M) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < M.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < M.size(); ++j) row.push_back(rational_json(M.d(i, j)));
    rows.push_back(row);
  }
  return {{"points", M.points()}, {"d", rows}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cubetight::io
