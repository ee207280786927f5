#pragma once

#include <string>

#include <json.hpp>

#include "qbruhat/bruhat_graph.hpp"
#include "qbruhat/poly.hpp"
#include "qbruhat/quantum.hpp"

namespace qbruhat {

using Json = nlohmann::ordered_json;

/// q1*q2^2, or "1" for the zero degree.
std::string format_qmonomial(const QDegree& d);

/// "σ_{312} + q1·σ_{123}", terms in (|d|, lex d, lex w) order.
std::string format_product(const QHElement& el);

/// [{"exponents": {"x": [...], "y": [...], "q": [...]}, "coeff": c}, ...]
/// with blocks sized n, n and n-1.
Json poly_to_json(const Poly& p, int n);
Poly poly_from_json(const Json& j);

/// {"u", "v", "n", "terms": [{"w", "d", "coeff"}]}.
Json gw_table_to_json(const GWTable& table);
GWTable gw_table_from_json(const Json& j);

/// {"system", "rank", "n"?, "vertices", "lengths", "edges", "roots"}.
Json graph_to_json(const QBGraph& g);
QBGraph graph_from_json(const Json& j);

/// Up-edges solid, down-edges dashed and annotated with their q-monomial.
std::string graph_to_dot(const QBGraph& g);

}  // namespace qbruhat
