#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cubetight/cubecomplex.hpp"
#include "cubetight/medianrec.hpp"
#include "cubetight/rational.hpp"
#include "cubetight/tightspan.hpp"
#include "cubetight/wallsys.hpp"

namespace cubetight::io {

using Json = nlohmann::json;

/// Whole file, or standard input for "-". InputError when unreadable.
std::string read_text(const std::string& path);
/// InputError with the parser's position on malformed text.
Json parse_json(std::string_view text);

/// {"ground": [...], "walls": [{"plus": [...], "minus": [...]}, ...]}.
WallSystemSpec wall_system_spec_from_json(const Json& j);
WallSystem wall_system_from_json(const Json& j);
/// Sides listed in ground order.
Json to_json(const WallSystem& ws);

/// {"vertices": [...], "edges": [[u, v], ...]} with endpoints as labels.
SimpleGraph graph_from_json(const Json& j);
Json to_json(const SimpleGraph& G);

/// Accepts {"graph": ...} (cubified, so it must be median), {"walls": <wall
/// system>} or a bare wall system (dualized). "graph" wins when both appear.
CubeComplex complex_from_json(const Json& j);
/// {"graph": ..., "walls": <wall system over vertex labels>}.
Json to_json(const CubeComplex& X);
/// Undirected DOT; edges coloured by the wall they cross.
std::string to_dot(const CubeComplex& X);

/// {"points": [...], "d": [[...], ...]} with entries as numbers or "p/q".
FiniteMetric metric_from_json(const Json& j);
/// Header row of point names, then one row per point (optional leading name).
FiniteMetric metric_from_csv(std::string_view text);
/// JSON when the text starts with '{', CSV otherwise.
FiniteMetric metric_from_text(std::string_view text);
Json to_json(const FiniteMetric& M);

Rational rational_from_json(const Json& j);
/// Integers as JSON integers when they fit, anything else as "p/q".
Json rational_json(const Rational& r);
Json decimal_json(const Rational& r);
Json form_json(const MetricForm& f);
Json form_decimal_json(const MetricForm& f);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace cubetight::io
