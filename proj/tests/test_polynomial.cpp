#include <doctest.h>

#include "metricgraph/polynomial.hpp"
#include "support.hpp"

using namespace mg;

namespace {

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const Rational& r : roots) p = p * Polynomial({-r, 1});
  return p;
}

}  // namespace

TEST_CASE("evaluation, derivative and antiderivative are exact") {
  const Polynomial p({Rational(1), Rational(-2), Rational(3)});  // 1 - 2x + 3x^2
  CHECK(p(Rational(1, 2)) == Rational(3, 4));
  CHECK(p.derivative() == Polynomial({Rational(-2), Rational(6)}));
  CHECK(p.antiderivative() == Polynomial({Rational(0), Rational(1), Rational(-1), Rational(1)}));
  CHECK(p.antiderivative().derivative() == p);
}

TEST_CASE("the zero polynomial stays canonical") {
  CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
  CHECK(Polynomial() == Polynomial::constant(0));
  CHECK(Polynomial({1}).derivative().is_zero());
}

TEST_CASE("shifting re-centers coefficients exactly") {
  const Polynomial p({Rational(0), Rational(0), Rational(1)});  // x^2
  CHECK(p.shifted(1) == Polynomial({Rational(1), Rational(2), Rational(1)}));  // (1+x)^2
  const Polynomial q({Rational(2), Rational(-1), Rational(5)});
  const Rational offset(7, 3);
  for (int i = 0; i <= 4; ++i) {
    const Rational x(i, 2);
    CHECK(q.shifted(offset)(x) == q(offset + x));
  }
}

TEST_CASE("exact division succeeds on factors and rejects non-factors") {
  const Polynomial p = from_roots({Rational(1, 3), Rational(2)});
  CHECK(exact_divide(p, Polynomial({Rational(-2), Rational(1)})) ==
        Polynomial({Rational(-1, 3), Rational(1)}));
  CHECK_THROWS_AS(exact_divide(p, Polynomial({Rational(1), Rational(1)})), DomainError);
}

TEST_CASE("root counting over open intervals") {
  const Polynomial p = from_roots({Rational(1, 3), Rational(1, 2), Rational(5)});
  CHECK(count_roots(p, 0, 1) == 2);
  CHECK(count_roots(p, 0, 10) == 3);
  CHECK(count_roots(p, 1, 2) == 0);
  // Double root: counted once (distinct roots).
  const Polynomial dbl = from_roots({Rational(1, 2), Rational(1, 2)});
  CHECK(count_roots(dbl, 0, 1) == 1);
  // Endpoint roots are excluded from the open interval.
  CHECK(count_roots(from_roots({Rational(0), Rational(1)}), 0, 1) == 0);
}

TEST_CASE("rational roots are isolated exactly") {
  const Polynomial p = from_roots({Rational(1, 3), Rational(2, 5)}) *
                       Polynomial({Rational(1), Rational(0), Rational(1)});  // x^2+1 factor
  const IsolatedRoots roots = isolate_roots(p, 0, 1);
  CHECK(roots.exact == std::vector<Rational>{Rational(1, 3), Rational(2, 5)});
  CHECK(roots.brackets.empty());
}

TEST_CASE("an irrational root becomes a sign-change bracket") {
  const Polynomial p({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
  IsolatedRoots roots = isolate_roots(p, 0, 2);
  CHECK(roots.exact.empty());
  REQUIRE(roots.brackets.size() == 1);
  RootBracket b = roots.brackets[0];
  // sqrt(2) is inside, and refinement keeps it inside while shrinking.
  CHECK(b.lo * b.lo < 2);
  CHECK(b.hi * b.hi > 2);
  refine_bracket(roots.residual, b, 30);
  CHECK(b.lo * b.lo < 2);
  CHECK(b.hi * b.hi > 2);
  CHECK(b.hi - b.lo <= Rational(2, 1 << 30));
}

TEST_CASE("mixed rational and irrational roots are separated") {
  // (x - 1/2)(x^2 - 3): roots 1/2, ±sqrt(3); only two lie in (0, 2).
  const Polynomial p = Polynomial({Rational(-1, 2), Rational(1)}) *
                       Polynomial({Rational(-3), Rational(0), Rational(1)});
  const IsolatedRoots roots = isolate_roots(p, 0, 2);
  CHECK(roots.exact == std::vector<Rational>{Rational(1, 2)});
  REQUIRE(roots.brackets.size() == 1);
  CHECK(roots.brackets[0].lo * roots.brackets[0].lo < 3);
  CHECK(roots.brackets[0].hi * roots.brackets[0].hi > 3);
}

TEST_CASE("repeated roots are reported once") {
  const Polynomial p = from_roots({Rational(1, 2), Rational(1, 2), Rational(3, 4)});
  const IsolatedRoots roots = isolate_roots(p, 0, 1);
  CHECK(roots.exact == std::vector<Rational>{Rational(1, 2), Rational(3, 4)});
  CHECK(roots.brackets.empty());
}

TEST_CASE("simplest rational in an interval has the least denominator") {
  CHECK(simplest_rational_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_rational_between(Rational(5, 2), Rational(7, 2)) == Rational(3));
  CHECK(simplest_rational_between(Rational(3, 7), Rational(4, 7)) == Rational(1, 2));
  CHECK(simplest_rational_between(Rational(13, 30), Rational(14, 30)) == Rational(4, 9));
  CHECK(simplest_rational_between(Rational(2), Rational(2)) == Rational(2));
}

TEST_CASE("roots with moderate denominators are still found exactly") {
  const Polynomial p = from_roots({Rational(355, 113)});
  const IsolatedRoots roots = isolate_roots(p, 3, 4);
  CHECK(roots.exact == std::vector<Rational>{Rational(355, 113)});
}

TEST_CASE("derivative bound dominates the derivative on the interval") {
  const Polynomial p({Rational(1), Rational(-4), Rational(2), Rational(5)});
  const Rational bound = derivative_bound(p, 2);
  const Polynomial dp = p.derivative();
  for (int i = 0; i <= 16; ++i) {
    const Rational x = Rational(i, 8);
    CHECK(abs_of(dp(x)) <= bound);
  }
}

TEST_CASE("polynomial powers multiply out exactly") {
  const Polynomial p({Rational(-1), Rational(1)});
  CHECK(p.pow(0) == Polynomial::constant(1));
  CHECK(p.pow(3) == Polynomial({Rational(-1), Rational(3), Rational(-3), Rational(1)}));
}
