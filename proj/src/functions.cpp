#include "metricgraph/functions.hpp"

#include <algorithm>
#include <cmath>

#include "metricgraph/errors.hpp"

namespace mg {

const Polynomial& PiecewiseFunction::piece(const EdgeId& e) const {
  auto it = pieces_.find(e);
  if (it == pieces_.end()) throw DomainError("missing piece for edge " + e);
  return it->second;
}

PiecewiseFunction PiecewiseFunction::derivative() const {
  PieceMap out;
  for (const auto& [id, p] : pieces_) out.emplace(id, p.derivative());
  return PiecewiseFunction(std::move(out));
}

PiecewiseFunction PiecewiseFunction::derivative(unsigned order) const {
  PiecewiseFunction out = *this;
  for (unsigned i = 0; i < order; ++i) out = out.derivative();
  return out;
}

PiecewiseFunction operator+(const PiecewiseFunction& a, const PiecewiseFunction& b) {
  if (a.pieces_.size() != b.pieces_.size())
    throw DomainError("piecewise functions over different edge sets");
  PiecewiseFunction::PieceMap out;
  for (const auto& [id, p] : a.pieces_) out.emplace(id, p + b.piece(id));
  return PiecewiseFunction(std::move(out));
}

PiecewiseFunction operator*(const Rational& s, const PiecewiseFunction& f) {
  PiecewiseFunction::PieceMap out;
  for (const auto& [id, p] : f.pieces_) out.emplace(id, s * p);
  return PiecewiseFunction(std::move(out));
}

namespace {

void validate_function(const MetricGraph& g, const PiecewiseFunction& f) {
  for (const auto& [id, len] : g.edges().lengths()) {
    if (!f.has_piece(id)) throw DomainError("missing piece for edge " + id);
  }
  for (const auto& [id, p] : f.pieces()) {
    if (!g.edges().contains(id)) throw DomainError("piece for unknown edge " + id);
  }
}

Rational endpoint_value(const MetricGraph& g, const PiecewiseFunction& f, const Endpoint& e) {
  const Polynomial& p = f.piece(e.edge);
  return e.side == Side::Zero ? p(Rational(0)) : p(g.edges().length(e.edge));
}

}  // namespace

std::optional<ContinuityWitness> continuity_witness(const MetricGraph& g,
                                                    const PiecewiseFunction& f) {
  validate_function(g, f);
  for (const auto& block : g.relation().blocks()) {
    std::vector<std::pair<Endpoint, Rational>> values;
    values.reserve(block.size());
    bool conflict = false;
    for (const Endpoint& e : block) {
      values.emplace_back(e, endpoint_value(g, f, e));
      if (values.back().second != values.front().second) conflict = true;
    }
    if (conflict) return ContinuityWitness{Vertex{block}, std::move(values)};
  }
  return std::nullopt;
}

bool is_continuous(const MetricGraph& g, const PiecewiseFunction& f) {
  return !continuity_witness(g, f).has_value();
}

bool is_ck(const MetricGraph& g, const PiecewiseFunction& f, unsigned k) {
  PiecewiseFunction current = f;
  for (unsigned h = 0; h <= k; ++h) {
    if (!is_continuous(g, current)) return false;
    if (h < k) current = current.derivative();
  }
  return true;
}

namespace {

// Enclosure of the integral of |piece|^p over [0, len] for odd p: exact runs
// between sign changes plus a certified remainder for every irrational
// sign-change bracket.
Enclosure edge_lp_odd(const Polynomial& piece, const Rational& len, unsigned p,
                      const Rational& tolerance) {
  IsolatedRoots roots = isolate_roots(piece, Rational(0), len);
  const Polynomial integral = piece.pow(p).antiderivative();
  const Rational slope_bound = derivative_bound(piece, len);

  for (unsigned attempt = 0;; ++attempt) {
    // Boundary list: degenerate [r,r] for exact roots, [lo,hi] for brackets.
    std::vector<std::pair<Rational, Rational>> boundaries;
    for (const Rational& r : roots.exact) boundaries.push_back({r, r});
    for (const RootBracket& b : roots.brackets) boundaries.push_back({b.lo, b.hi});
    std::sort(boundaries.begin(), boundaries.end());

    Rational exact_total = 0;
    Rational slack = 0;
    Rational prev = 0;
    auto add_run = [&](const Rational& from, const Rational& to) {
      if (!(from < to)) return;
      const int sign = piece((from + to) / 2) < 0 ? -1 : 1;
      exact_total += Rational(sign) * (integral(to) - integral(from));
    };
    for (const auto& [blo, bhi] : boundaries) {
      add_run(prev, blo);
      if (blo < bhi) {
        const Rational magnitude =
            std::max(abs_of(piece(blo)), abs_of(piece(bhi))) + slope_bound * (bhi - blo);
        Rational bound = bhi - blo;
        for (unsigned i = 0; i < p; ++i) bound *= magnitude;
        slack += bound;
      }
      prev = bhi;
    }
    add_run(prev, len);

    if (slack <= tolerance || roots.brackets.empty() || attempt >= 64) {
      return Enclosure{exact_total, exact_total + slack};
    }
    for (RootBracket& b : roots.brackets) refine_bracket(roots.residual, b, 8);
  }
}

Enclosure edge_lp(const Polynomial& piece, const Rational& len, unsigned p,
                  const Rational& tolerance) {
  if (piece.is_zero()) return Enclosure{Rational(0), Rational(0)};
  if (p % 2 == 0) {
    const Polynomial integral = piece.pow(p).antiderivative();
    const Rational value = integral(len) - integral(Rational(0));
    return Enclosure{value, value};
  }
  return edge_lp_odd(piece, len, p, tolerance);
}

Enclosure edge_sup(const Polynomial& piece, const Rational& len, const Rational& tolerance) {
  if (piece.is_zero()) return Enclosure{Rational(0), Rational(0)};

  std::vector<Rational> candidates{abs_of(piece(Rational(0))), abs_of(piece(len))};
  const Polynomial slope = piece.derivative();
  if (slope.is_zero()) {
    const Rational v = *std::max_element(candidates.begin(), candidates.end());
    return Enclosure{v, v};
  }

  IsolatedRoots critical = isolate_roots(slope, Rational(0), len);
  for (const Rational& r : critical.exact) candidates.push_back(abs_of(piece(r)));
  const Rational slope_bound = derivative_bound(piece, len);

  for (unsigned attempt = 0;; ++attempt) {
    Rational lower = *std::max_element(candidates.begin(), candidates.end());
    Rational upper = lower;
    for (const RootBracket& b : critical.brackets) {
      const Rational at_lo = abs_of(piece(b.lo));
      const Rational at_hi = abs_of(piece(b.hi));
      lower = std::max(lower, std::max(at_lo, at_hi));
      const Rational reach = std::min(at_lo, at_hi) + slope_bound * (b.hi - b.lo);
      upper = std::max(upper, reach);
    }
    upper = std::max(upper, lower);

    if (upper - lower <= tolerance || critical.brackets.empty() || attempt >= 64) {
      return Enclosure{lower, upper};
    }
    for (RootBracket& b : critical.brackets) refine_bracket(critical.residual, b, 8);
  }
}

}  // namespace

Enclosure lp_norm_pow(const MetricGraph& g, const PiecewiseFunction& f, unsigned p,
                      const NormOptions& options) {
  if (p < 1) throw DomainError("p must be a positive integer");
  validate_function(g, f);
  const std::size_t edges = std::max<std::size_t>(g.edges().edge_count(), 1);
  const Rational share = options.tolerance / Rational(edges);

  Enclosure total{Rational(0), Rational(0)};
  for (const auto& [id, len] : g.edges().lengths()) {
    const Enclosure e = edge_lp(f.piece(id), len, p, share);
    total.lo += e.lo;
    total.hi += e.hi;
  }
  return total;
}

Enclosure sup_norm(const MetricGraph& g, const PiecewiseFunction& f, const NormOptions& options) {
  validate_function(g, f);
  Enclosure total{Rational(0), Rational(0)};
  for (const auto& [id, len] : g.edges().lengths()) {
    const Enclosure e = edge_sup(f.piece(id), len, options.tolerance);
    total.lo = std::max(total.lo, e.lo);
    total.hi = std::max(total.hi, e.hi);
  }
  return total;
}

double lp_norm(const MetricGraph& g, const PiecewiseFunction& f, unsigned p,
               const NormOptions& options) {
  const Enclosure power = lp_norm_pow(g, f, p, options);
  return std::pow(to_double(power.midpoint()), 1.0 / static_cast<double>(p));
}

SobolevMembershipError::SobolevMembershipError(unsigned order, Vertex vertex)
    : DomainError("not in the Sobolev space: derivative of order " + std::to_string(order) +
                  " is discontinuous at a vertex"),
      order_(order),
      vertex_(std::move(vertex)) {}

namespace {

void check_sobolev_membership(const MetricGraph& g, const PiecewiseFunction& f, unsigned k) {
  PiecewiseFunction current = f;
  for (unsigned h = 0; h + 1 <= k; ++h) {
    if (auto witness = continuity_witness(g, current)) {
      throw SobolevMembershipError(h, witness->vertex);
    }
    current = current.derivative();
  }
}

}  // namespace

SobolevNorm sobolev_norm(const MetricGraph& g, const PiecewiseFunction& f, unsigned k, unsigned p,
                         const NormOptions& options) {
  if (p < 1) throw DomainError("p must be a positive integer");
  validate_function(g, f);
  check_sobolev_membership(g, f, k);

  SobolevNorm result{0.0, {}};
  PiecewiseFunction current = f;
  for (unsigned h = 0; h <= k; ++h) {
    const Enclosure power = lp_norm_pow(g, current, p, options);
    const double value = std::pow(to_double(power.midpoint()), 1.0 / static_cast<double>(p));
    result.terms.push_back({h, power, value});
    result.value += value;
    if (h < k) current = current.derivative();
  }
  return result;
}

SobolevNorm sobolev_sup_norm(const MetricGraph& g, const PiecewiseFunction& f, unsigned k,
                             const NormOptions& options) {
  validate_function(g, f);
  check_sobolev_membership(g, f, k);

  SobolevNorm result{0.0, {}};
  PiecewiseFunction current = f;
  for (unsigned h = 0; h <= k; ++h) {
    const Enclosure power = sup_norm(g, current, options);
    const double value = to_double(power.midpoint());
    result.terms.push_back({h, power, value});
    result.value += value;
    if (h < k) current = current.derivative();
  }
  return result;
}

PiecewiseFunction push_to_subdivision(const Subdivision& s, const PiecewiseFunction& f) {
  validate_function(s.parent, f);
  PiecewiseFunction::PieceMap out;
  for (const auto& [child_id, parent_id] : s.parent_edge) {
    out.emplace(child_id, f.piece(parent_id).shifted(s.offset.at(child_id)));
  }
  return PiecewiseFunction(std::move(out));
}

}  // namespace mg
