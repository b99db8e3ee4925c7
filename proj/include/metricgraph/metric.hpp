#pragma once

#include <optional>
#include <vector>

#include "metricgraph/graph.hpp"
#include "metricgraph/rational.hpp"

namespace mg {

// A nonnegative rational distance or the distinguished value Infinite.
// Infinite compares greater than every finite value and absorbs under +.
class Distance {
 public:
  Distance() : value_(0) {}
  Distance(Rational value);  // NOLINT(google-explicit-constructor) DomainError if negative
  static Distance infinite() { return Distance(Tag{}); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const Rational& value() const;  // DomainError when infinite

  friend Distance operator+(const Distance& a, const Distance& b);
  friend bool operator==(const Distance&, const Distance&) = default;
  friend bool operator<(const Distance& a, const Distance& b);
  friend bool operator<=(const Distance& a, const Distance& b) { return a < b || a == b; }

 private:
  struct Tag {};
  explicit Distance(Tag) {}
  std::optional<Rational> value_;
};

// One straight run along an edge; `from` and `to` are coordinates in
// [0, l_edge] and may run in either direction.
struct GeodesicSegment {
  EdgeId edge;
  Rational from;
  Rational to;

  Rational length() const { return abs_of(to - from); }
  friend bool operator==(const GeodesicSegment&, const GeodesicSegment&) = default;
};

// A realized shortest chain: consecutive segments meet in a common vertex
// block. Empty when the two query points coincide.
struct Geodesic {
  std::vector<GeodesicSegment> segments;

  Rational total_length() const;
  friend bool operator==(const Geodesic&, const Geodesic&) = default;
};

// The path pseudo-metric: infimum of summed within-edge distances over all
// chains whose consecutive pieces meet at identified endpoints. Infinite iff
// p and q lie in different connected components.
Distance distance(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q);

// A chain attaining distance(g,p,q); nullopt iff that distance is Infinite.
// Ties are broken canonically so the result is deterministic.
std::optional<Geodesic> geodesic(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q);

// True iff the path pseudo-metric never attains Infinite (vacuously true for
// the empty graph).
bool is_connected(const MetricGraph& g);

// Whether the pseudo-metric is certifiably a generalized metric. Finite edge
// sets always qualify (and a finite nonempty graph has inf l_e > 0), so this
// is constant true under this library's finite-edge restriction; it exists
// for API fidelity.
bool is_metric_certified(const MetricGraph& g);

}  // namespace mg
