#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "metricgraph/graph.hpp"
#include "metricgraph/polynomial.hpp"
#include "metricgraph/surgery.hpp"

namespace mg {

// A function on a metric graph as an edge-indexed family of polynomial
// pieces f_e: [0, l_e] -> R. Membership in C(Γ), C^k(Γ) and the norms are
// all evaluated against an ambient graph, which must carry exactly one piece
// per edge.
class PiecewiseFunction {
 public:
  using PieceMap = std::map<EdgeId, Polynomial, IdLess>;

  PiecewiseFunction() = default;
  explicit PiecewiseFunction(PieceMap pieces) : pieces_(std::move(pieces)) {}

  const PieceMap& pieces() const { return pieces_; }
  const Polynomial& piece(const EdgeId& e) const;  // DomainError if missing
  bool has_piece(const EdgeId& e) const { return pieces_.count(e) != 0; }

  PiecewiseFunction derivative() const;
  PiecewiseFunction derivative(unsigned order) const;

  friend PiecewiseFunction operator+(const PiecewiseFunction& a, const PiecewiseFunction& b);
  friend PiecewiseFunction operator*(const Rational& s, const PiecewiseFunction& f);
  friend bool operator==(const PiecewiseFunction&, const PiecewiseFunction&) = default;

 private:
  PieceMap pieces_;
};

// On failure: the first violating vertex block in canonical order, with the
// endpoint evaluations of all incident pieces.
struct ContinuityWitness {
  Vertex vertex;
  std::vector<std::pair<Endpoint, Rational>> values;
};

// nullopt iff within every vertex block all endpoint evaluations agree.
std::optional<ContinuityWitness> continuity_witness(const MetricGraph& g,
                                                    const PiecewiseFunction& f);
bool is_continuous(const MetricGraph& g, const PiecewiseFunction& f);

// Membership in C^k: every edgewise derivative of order 0..k is continuous
// on the quotient. Derivatives are taken in each edge's own coordinate, with
// no orientation correction.
bool is_ck(const MetricGraph& g, const PiecewiseFunction& f, unsigned k);

// A certified rational enclosure [lo, hi]; lo == hi when the quantity is
// exactly representable and was computed exactly.
struct Enclosure {
  Rational lo;
  Rational hi;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

struct NormOptions {
  // Upper bound for the width of any returned enclosure.
  Rational tolerance = Rational(1, Integer(1) << 100);
};

// ∫_Γ |f|^p dμ as a certified enclosure. Exact (point enclosure) whenever p
// is even or every sign change of every piece happens at a rational
// coordinate; sign changes at irrational roots contribute a certified
// interval of width within options.tolerance.
Enclosure lp_norm_pow(const MetricGraph& g, const PiecewiseFunction& f, unsigned p,
                      const NormOptions& options = {});

// max_e sup |f_e| on [0, l_e], via critical-point isolation. Exact when all
// critical points involved are rational, an enclosure otherwise.
Enclosure sup_norm(const MetricGraph& g, const PiecewiseFunction& f,
                   const NormOptions& options = {});

// (lp_norm_pow)^(1/p) as a double. Error: the relative enclosure width is at
// most options.tolerance / lo; on top of that only double rounding of the
// final root, so ~1e-15 relative for the default options.
double lp_norm(const MetricGraph& g, const PiecewiseFunction& f, unsigned p,
               const NormOptions& options = {});

// W^{k,p} membership violated: f^(order) is discontinuous at `vertex`.
class SobolevMembershipError : public DomainError {
 public:
  SobolevMembershipError(unsigned order, Vertex vertex);

  unsigned order() const { return order_; }
  const Vertex& vertex() const { return vertex_; }

 private:
  unsigned order_;
  Vertex vertex_;
};

struct SobolevTerm {
  unsigned order;       // derivative order h
  Enclosure power;      // ∫ |f^(h)|^p exactly (or sup enclosure for p = infinity)
  double value;         // ||f^(h)||_p
};

struct SobolevNorm {
  double value;  // sum of the term norms
  std::vector<SobolevTerm> terms;
};

// ||f||_{k,p} = sum_{h=0..k} ||f^(h)||_p. Checks the membership requirement
// f^(h) ∈ C(Γ) for 0 <= h <= k-1 and throws SobolevMembershipError naming
// the failing order and vertex when violated.
SobolevNorm sobolev_norm(const MetricGraph& g, const PiecewiseFunction& f, unsigned k,
                         unsigned p, const NormOptions& options = {});

// Same norm with p = infinity: sum of sup norms of the derivatives.
SobolevNorm sobolev_sup_norm(const MetricGraph& g, const PiecewiseFunction& f, unsigned k,
                             const NormOptions& options = {});

// The function canonically induced on a subdivision: each child edge gets
// the parent polynomial re-centered by the child's offset.
PiecewiseFunction push_to_subdivision(const Subdivision& s, const PiecewiseFunction& f);

}  // namespace mg
