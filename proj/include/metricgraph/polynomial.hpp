#pragma once

#include <cstddef>
#include <vector>

#include "metricgraph/rational.hpp"

namespace mg {

// Univariate polynomial with exact rational coefficients, ascending degree.
// The zero polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(Rational c);

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading_coefficient() const;  // DomainError on zero polynomial

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial antiderivative() const;  // constant term 0

  // p(offset + x): re-centers the polynomial, exact coefficient shift.
  Polynomial shifted(const Rational& offset) const;

  Polynomial pow(unsigned exponent) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Exact polynomial division; DomainError if the remainder is nonzero or the
// divisor is zero.
Polynomial exact_divide(const Polynomial& num, const Polynomial& den);

// An open interval with rational endpoints containing exactly one real root.
struct RootBracket {
  Rational lo;
  Rational hi;
};

// Distinct real roots of p in the open interval (lo, hi): rational roots are
// returned exactly; each remaining root as a bracket. `residual` is the
// squarefree, rational-root-free factor whose simple roots the brackets
// isolate (its sign changes across each bracket), usable for refinement.
struct IsolatedRoots {
  std::vector<Rational> exact;
  std::vector<RootBracket> brackets;
  Polynomial residual;
};

IsolatedRoots isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

// Halve the bracket width `halvings` times by sign bisection; `residual`
// must change sign across the bracket (as produced by isolate_roots).
void refine_bracket(const Polynomial& residual, RootBracket& bracket, unsigned halvings);

// The rational with smallest denominator in the closed interval [lo, hi]
// (smallest numerator magnitude among those). Requires lo <= hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

// Number of distinct real roots in the open interval (lo, hi).
std::size_t count_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

// An upper bound for |p'| on [0, bound]: sum of i*|c_i|*bound^(i-1).
Rational derivative_bound(const Polynomial& p, const Rational& bound);

}  // namespace mg
