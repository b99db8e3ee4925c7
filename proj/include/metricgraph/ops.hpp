#pragma once

#include <optional>

#include "metricgraph/graph.hpp"

namespace mg {

// Binary operations on graphs sharing one edge space (identical ids and
// lengths; a mismatch is a DomainError, never a coercion).

// Relation = intersect(r1, r2).
MetricGraph graph_intersection(const MetricGraph& g1, const MetricGraph& g2);

// Relation = union_generated(r1, r2).
MetricGraph graph_union(const MetricGraph& g1, const MetricGraph& g2);

// Complement of g inside `ambient` (relation = difference_generated of the
// ambient's relation and g's). Without an ambient the flower graph on g's
// edge space is used.
MetricGraph graph_complement(const MetricGraph& g,
                             const std::optional<MetricGraph>& ambient = std::nullopt);

// All endpoints glued into a single vertex: the canonical ambient for
// complements.
MetricGraph flower(const EdgeSpace& edges);

// No endpoints glued at all: the identity for graph_union.
MetricGraph fully_cut(const EdgeSpace& edges);

}  // namespace mg
