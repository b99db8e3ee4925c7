#include "metricgraph/ops.hpp"

#include "metricgraph/errors.hpp"

namespace mg {

namespace {

void require_shared_edges(const MetricGraph& g1, const MetricGraph& g2) {
  if (!(g1.edges() == g2.edges()))
    throw DomainError("graph operation needs operands on one shared edge space");
}

}  // namespace

MetricGraph graph_intersection(const MetricGraph& g1, const MetricGraph& g2) {
  require_shared_edges(g1, g2);
  return MetricGraph(g1.edges(), intersect(g1.relation(), g2.relation()));
}

MetricGraph graph_union(const MetricGraph& g1, const MetricGraph& g2) {
  require_shared_edges(g1, g2);
  return MetricGraph(g1.edges(), union_generated(g1.relation(), g2.relation()));
}

MetricGraph graph_complement(const MetricGraph& g, const std::optional<MetricGraph>& ambient) {
  const MetricGraph& frame = ambient ? *ambient : flower(g.edges());
  require_shared_edges(frame, g);
  return MetricGraph(g.edges(), difference_generated(frame.relation(), g.relation()));
}

MetricGraph flower(const EdgeSpace& edges) {
  return MetricGraph(edges, EndpointRelation::universal(edges.endpoints()));
}

MetricGraph fully_cut(const EdgeSpace& edges) {
  return MetricGraph(edges, EndpointRelation::discrete(edges.endpoints()));
}

}  // namespace mg
