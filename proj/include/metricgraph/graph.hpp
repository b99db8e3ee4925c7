#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "metricgraph/rational.hpp"
#include "metricgraph/relation.hpp"

namespace mg {

// The disjoint union of intervals [0, l_e]: an indexed family of positive
// edge lengths. Finitely many edges; lengths are exact rationals.
class EdgeSpace {
 public:
  using LengthMap = std::map<EdgeId, Rational, IdLess>;

  EdgeSpace() = default;
  explicit EdgeSpace(LengthMap lengths);  // DomainError on id "" or length <= 0

  bool contains(const EdgeId& e) const { return lengths_.count(e) != 0; }
  const Rational& length(const EdgeId& e) const;  // DomainError if unknown
  std::size_t edge_count() const { return lengths_.size(); }
  bool empty() const { return lengths_.empty(); }

  const LengthMap& lengths() const { return lengths_; }
  std::vector<EdgeId> edge_ids() const;

  // Both endpoints of every edge, canonically ordered.
  std::vector<Endpoint> endpoints() const;

  Rational volume() const;

  friend bool operator==(const EdgeSpace&, const EdgeSpace&) = default;

 private:
  LengthMap lengths_;
};

// A vertex of the quotient: one equivalence class of endpoints.
struct Vertex {
  EndpointRelation::Block block;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend bool operator<(const Vertex& a, const Vertex& b) { return a.block < b.block; }
};

// A point (x, e) of the disjoint union, read modulo the graph's relation.
struct GraphPoint {
  EdgeId edge;
  Rational coordinate;

  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

// The metric graph itself: an edge space together with an equivalence
// relation on exactly its endpoint set. Immutable; all operations are pure.
class MetricGraph {
 public:
  MetricGraph() = default;
  MetricGraph(EdgeSpace edges, EndpointRelation relation);  // ambients must match

  const EdgeSpace& edges() const { return edges_; }
  const EndpointRelation& relation() const { return relation_; }

  std::vector<Vertex> vertices() const;
  Vertex vertex_of(const Endpoint& e) const;
  std::size_t vertex_count() const { return relation_.blocks().size(); }

  bool has_vertex(const Vertex& v) const;

  friend bool operator==(const MetricGraph&, const MetricGraph&) = default;

 private:
  EdgeSpace edges_;
  EndpointRelation relation_;
};

// Quotient of the edge space by the closure of the glue pairs.
MetricGraph build_graph(EdgeSpace::LengthMap lengths, const std::vector<EndpointPair>& glue);

// True iff some edge runs between a representative of v and one of w
// (v == w detects loops). DomainError on a vertex foreign to g.
bool adjacent(const MetricGraph& g, const Vertex& v, const Vertex& w);

// Number of vertices adjacent to v. Note this counts *vertices*, not edge
// ends: parallel edges collapse and a figure-8 vertex has degree 1. The
// conventional incidence count is endpoint_multiplicity.
std::size_t degree(const MetricGraph& g, const Vertex& v);
std::size_t endpoint_multiplicity(const MetricGraph& g, const Vertex& v);

// Trivially true for the finite graphs this library builds; evaluated
// literally (per-vertex checks) rather than hardcoded.
bool is_combinatorially_locally_finite(const MetricGraph& g);
bool is_metrically_locally_finite(const MetricGraph& g);

// Total measure: sum of edge lengths.
Rational volume(const MetricGraph& g);

// Edge space restricted to `keep`; relation blocks restricted to the
// surviving endpoints, dropping emptied blocks.
MetricGraph subgraph(const MetricGraph& g, const std::set<EdgeId, IdLess>& keep);

// Maximal connected metric subgraphs, ordered by least edge id.
std::vector<MetricGraph> connected_components(const MetricGraph& g);

// The combinatorial multigraph underlying g. Vertices are indices into
// `vertices`; incidence maps each edge to its one- or two-element vertex set
// (one element exactly for loops).
struct Multigraph {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::map<EdgeId, std::vector<std::size_t>, IdLess> incidence;
};

Multigraph underlying_multigraph(const MetricGraph& g);

// DomainError unless 0 <= p.coordinate <= length(p.edge).
void validate_point(const MetricGraph& g, const GraphPoint& p);

// Whether p and q denote the same point of the quotient (equal, or both
// endpoints lying in one vertex block).
bool same_point(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q);

// The least representative of p's equivalence class.
GraphPoint canonical_point(const MetricGraph& g, const GraphPoint& p);

}  // namespace mg
