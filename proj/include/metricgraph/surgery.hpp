#pragma once

#include <map>
#include <vector>

#include "metricgraph/graph.hpp"

namespace mg {

// A child graph obtained by splitting parent edges at interior points.
// For each parent edge e the child edges mapped onto it tile [0, l_e]:
// consecutive, non-overlapping, lengths summing to l_e. Cut points become
// multiplicity-2 vertices; the parent relation is carried to the outermost
// child endpoints unchanged.
struct Subdivision {
  MetricGraph parent;
  MetricGraph child;
  std::map<EdgeId, EdgeId, IdLess> parent_edge;  // child edge -> parent edge
  std::map<EdgeId, Rational, IdLess> offset;     // child edge -> left end offset in parent edge
};

// Cuts are strictly increasing interior coordinates per edge. Empty cuts
// yield the identity subdivision (child structurally equal to parent).
Subdivision subdivide(const MetricGraph& g,
                      const std::map<EdgeId, std::vector<Rational>, IdLess>& cuts);

// Same edge space, new relation (must share the ambient endpoint set).
MetricGraph rewire(const MetricGraph& g, const EndpointRelation& new_relation);

struct CutResult {
  MetricGraph graph;
  bool nontrivial;  // strict refinement
};

// A rewiring whose relation refines the current one (splits vertices).
// DomainError naming a violating block if new_relation does not refine.
CutResult cut_graph(const MetricGraph& g, const EndpointRelation& new_relation);

// Rewiring of a subdivision: subdivide by `cuts`, then impose `new_relation`
// on the child endpoint set.
MetricGraph rearrange(const MetricGraph& g,
                      const std::map<EdgeId, std::vector<Rational>, IdLess>& cuts,
                      const EndpointRelation& new_relation);

// Set-valued identification of points between graphs related by surgery:
// either the two quotients of one shared edge space (q_target ∘ q_source⁻¹),
// or the two ends of a subdivision.
class PointTransfer {
 public:
  // Requires source and target to share one edge space.
  static PointTransfer between_rewirings(MetricGraph source, MetricGraph target);
  static PointTransfer to_subdivision(Subdivision s);    // parent -> child
  static PointTransfer from_subdivision(Subdivision s);  // child -> parent

  PointTransfer reversed() const;

  const MetricGraph& source() const;
  const MetricGraph& target() const;

  // The transfer image of p: all distinct target points whose source
  // representatives include p. Nonempty; a singleton for interior points.
  std::vector<GraphPoint> apply(const GraphPoint& p) const;

 private:
  enum class Kind { Requotient, ParentToChild, ChildToParent };
  PointTransfer(Kind kind, MetricGraph source, MetricGraph target, Subdivision sub);

  Kind kind_;
  MetricGraph source_;
  MetricGraph target_;
  Subdivision sub_;  // unused for Requotient
};

std::vector<GraphPoint> transfer_points(const PointTransfer& t, const GraphPoint& p);

// Canonical smoothed representative of g's class modulo degree-2 vertices:
// repeatedly merges the two distinct edges meeting at a 2-endpoint vertex,
// summing lengths. A 2-endpoint block whose endpoints belong to one edge
// closes a loop and is kept. Idempotent and volume-preserving.
MetricGraph primitive_form(const MetricGraph& g);

// Whether g1 and g2 are subdivisions of one common graph, decided by
// isomorphism of their primitive forms (edge bijection preserving lengths,
// vertex bijection preserving incidence; backtracking search).
bool equivalent_mod_subdivision(const MetricGraph& g1, const MetricGraph& g2);

}  // namespace mg
