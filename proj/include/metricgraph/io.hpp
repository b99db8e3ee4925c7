#pragma once

#include <string>
#include <string_view>

#include "metricgraph/functions.hpp"
#include "metricgraph/graph.hpp"

namespace mg {

// Line-oriented text formats (UTF-8). Graph files:
//   edge <id> <length>        length: integer or p/q, positive
//   glue <edge>:0 <edge>:1    the stored relation is the closure of all glue lines
// '#' starts a comment, blank lines are ignored. Ids are nonempty
// alphanumeric tokens. Emission is canonical, so equal graphs produce
// byte-identical files and parse(emit(g)) == g.

MetricGraph parse_graph(std::string_view text);
std::string emit_graph(const MetricGraph& g);

// Relation files contain glue lines (and comments) only; the edge space
// comes from the accompanying graph.
EndpointRelation parse_relation(std::string_view text, const EdgeSpace& edges);

// Function files:
//   piece <edge-id> <c0> <c1> ... <cn>   rational coefficients, ascending degree
PiecewiseFunction parse_function(std::string_view text);
std::string emit_function(const PiecewiseFunction& f);

// Single tokens: "<edge>:0" / "<edge>:1" and "<edge>@<rational>".
Endpoint parse_endpoint(std::string_view token);
GraphPoint parse_point(std::string_view token);
std::string format_endpoint(const Endpoint& e);
std::string format_point(const GraphPoint& p);

bool is_valid_edge_id(std::string_view id);

}  // namespace mg
