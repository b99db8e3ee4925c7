#include "metricgraph/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "metricgraph/errors.hpp"

namespace mg {

namespace {

void strip_leading_zeros(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  strip_leading_zeros(coeffs_);
}

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading_coefficient() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rational(i) * coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + 1);
  out[0] = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / Rational(i + 1);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(const Rational& offset) const {
  // Horner with polynomial coefficients: p(offset + x).
  Polynomial acc;
  const Polynomial x_plus_offset({offset, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x_plus_offset + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = Polynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * (*this);
  return result;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> out = p.coeffs_;
  for (Rational& c : out) c *= s;
  return Polynomial(std::move(out));
}

namespace {

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const std::vector<Rational>& d = den.coefficients();
  if (rem.size() < d.size()) return {Polynomial(), num};

  std::vector<Rational> quot(rem.size() - d.size() + 1, Rational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (rem.size() < d.size() + k) continue;
    const Rational factor = rem[d.size() - 1 + k] / d.back();
    quot[k] = factor;
    for (std::size_t i = 0; i < d.size(); ++i) rem[i + k] -= factor * d[i];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading_coefficient()) * p;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(a);
}

int sign_of(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

// Normalize magnitude without touching signs; negative scaling would break
// the Sturm sign-variation property.
Polynomial positive_scaled(const Polynomial& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / abs_of(p.leading_coefficient())) * p;
}

// Sturm chain of a squarefree polynomial.
std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    Polynomial r = Rational(-1) * divide(a, b).remainder;
    chain.push_back(positive_scaled(r));
  }
  chain.pop_back();
  return chain;
}

std::size_t sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  std::size_t variations = 0;
  int prev = 0;
  for (const Polynomial& p : chain) {
    const int s = sign_of(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

Polynomial divide_out_root(const Polynomial& p, const Rational& root) {
  // p / (x - root); remainder must vanish.
  DivMod dm = divide(p, Polynomial({-root, Rational(1)}));
  if (!dm.remainder.is_zero()) throw DomainError("not a root: " + to_string(root));
  return dm.quotient;
}

// Recursive closed-interval simplest-rational search (continued fractions).
Rational simplest_in(const Rational& lo, const Rational& hi) {
  const Integer f = floor_of(lo);
  if (Rational(f) == lo) return lo;            // lo itself is an integer
  if (Rational(f + 1) <= hi) return Rational(f + 1);  // an integer inside
  // Both strictly inside (f, f+1): recurse on the reciprocal tail.
  const Rational inner = simplest_in(Rational(1) / (hi - Rational(f)), Rational(1) / (lo - Rational(f)));
  return Rational(f) + Rational(1) / inner;
}

constexpr unsigned kRationalProbeRounds = 128;

// Exactly one simple root of s lies in (lo, hi) and s changes sign there.
// Returns the root if it is rational with moderate denominator; otherwise
// narrows the bracket and gives up (the bracket stays valid).
std::optional<Rational> find_rational_root(const Polynomial& s, Rational& lo, Rational& hi) {
  int sign_lo = sign_of(s(lo));
  for (unsigned round = 0; round < kRationalProbeRounds; ++round) {
    // One bisection step keeps the width shrinking geometrically.
    const Rational mid = (lo + hi) / 2;
    const int sm = sign_of(s(mid));
    if (sm == 0) return mid;
    if (sm == sign_lo) lo = mid; else hi = mid;

    // Once the bracket is tighter than 1/q^2 the root p/q, if rational, is
    // the simplest rational inside.
    const Rational probe = simplest_in(lo, hi);
    if (probe != lo && probe != hi) {
      const int sp = sign_of(s(probe));
      if (sp == 0) return probe;
      if (sp == sign_lo) lo = probe; else hi = probe;
    }
  }
  return std::nullopt;
}

}  // namespace

Polynomial exact_divide(const Polynomial& num, const Polynomial& den) {
  DivMod dm = divide(num, den);
  if (!dm.remainder.is_zero()) throw DomainError("inexact polynomial division");
  return dm.quotient;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw DomainError("empty interval");
  return simplest_in(lo, hi);
}

std::size_t count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("root counting needs a nonzero polynomial");
  if (!(lo < hi)) return 0;
  Polynomial s = exact_divide(p, poly_gcd(p, p.derivative()));
  // Trim endpoint roots so the open-interval Sturm count is clean.
  while (s(lo) == 0) s = divide_out_root(s, lo);
  while (s(hi) == 0) s = divide_out_root(s, hi);
  if (s.degree() == 0) return 0;
  const auto chain = sturm_chain(s);
  const auto va = sign_variations(chain, lo);
  const auto vb = sign_variations(chain, hi);
  return va >= vb ? va - vb : 0;
}

IsolatedRoots isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("root isolation needs a nonzero polynomial");
  IsolatedRoots result;
  if (!(lo < hi) || p.degree() == 0) {
    result.residual = Polynomial::constant(1);
    return result;
  }

  Polynomial s = exact_divide(p, poly_gcd(p, p.derivative()));
  while (s(lo) == 0) s = divide_out_root(s, lo);
  while (s(hi) == 0) s = divide_out_root(s, hi);

  // Peel off rational roots until only sign-change brackets remain.
  bool changed = true;
  while (changed && s.degree() >= 1) {
    changed = false;
    auto chain = sturm_chain(s);
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    std::vector<RootBracket> brackets;
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      const auto va = sign_variations(chain, a);
      const auto vb = sign_variations(chain, b);
      const std::size_t count = va >= vb ? va - vb : 0;
      if (count == 0) continue;
      if (count == 1) {
        RootBracket bracket{a, b};
        if (auto root = find_rational_root(s, bracket.lo, bracket.hi)) {
          result.exact.push_back(*root);
          s = divide_out_root(s, *root);
          changed = true;
          break;  // chain is stale; restart isolation on the deflated factor
        }
        brackets.push_back(bracket);
        continue;
      }
      const Rational mid = (a + b) / 2;
      if (s(mid) == 0) {
        result.exact.push_back(mid);
        s = divide_out_root(s, mid);
        changed = true;
        break;
      }
      stack.push_back({a, mid});
      stack.push_back({mid, b});
    }
    if (!changed) result.brackets = std::move(brackets);
  }

  std::sort(result.exact.begin(), result.exact.end());
  std::sort(result.brackets.begin(), result.brackets.end(),
            [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
  result.residual = std::move(s);
  return result;
}

void refine_bracket(const Polynomial& residual, RootBracket& bracket, unsigned halvings) {
  int sign_lo = sign_of(residual(bracket.lo));
  for (unsigned i = 0; i < halvings; ++i) {
    const Rational mid = (bracket.lo + bracket.hi) / 2;
    const int sm = sign_of(residual(mid));
    if (sm == 0) {
      // Exceptional exact hit: collapse to a degenerate-but-valid bracket.
      const Rational eps = (bracket.hi - bracket.lo) / 4;
      bracket.lo = mid - eps;
      bracket.hi = mid + eps;
      return;
    }
    if (sm == sign_lo) bracket.lo = mid; else bracket.hi = mid;
  }
}

Rational derivative_bound(const Polynomial& p, const Rational& bound) {
  Rational total = 0;
  Rational power = 1;  // bound^(i-1)
  const auto& coeffs = p.coefficients();
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    total += Rational(i) * abs_of(coeffs[i]) * power;
    power *= bound;
  }
  return total;
}

}  // namespace mg
