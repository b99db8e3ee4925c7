#include <doctest.h>

#include "metricgraph/io.hpp"
#include "support.hpp"

using namespace mg;

TEST_CASE("a minimal file is a single interval") {
  const MetricGraph g = parse_graph("edge a 1\n");
  CHECK(g == support::interval(1, "a"));
}

TEST_CASE("the lasso file reproduces the worked vertex table") {
  const MetricGraph g = parse_graph(
      "# a loop with a pendant edge\n"
      "edge 1 1\n"
      "edge 2 2\n"
      "glue 1:0 1:1\n"
      "glue 1:0 2:0\n");
  CHECK(g == support::lasso(1, 2));
  REQUIRE(g.vertices().size() == 2);
  CHECK(g.vertices()[0].block ==
        EndpointRelation::Block{{"1", Side::Zero}, {"1", Side::Length}, {"2", Side::Zero}});
}

TEST_CASE("emit then parse is the identity on the figure-8") {
  const auto g = support::figure8(Rational(1, 2), Rational(7, 3));
  CHECK(parse_graph(emit_graph(g)) == g);
}

TEST_CASE("emission is canonical: reparsing and re-emitting is byte stable") {
  support::Rng rng(7777);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = support::random_graph(rng);
    const std::string once = emit_graph(g);
    CHECK(parse_graph(once) == g);
    CHECK(emit_graph(parse_graph(once)) == once);
  }
}

TEST_CASE("comments, blank lines and whitespace are ignored") {
  const MetricGraph g = parse_graph(
      "\n"
      "# heading comment\n"
      "  edge  a   3/2   # trailing comment\n"
      "\n");
  CHECK(g.edges().length("a") == Rational(3, 2));
}

TEST_CASE("rationals are emitted in lowest terms without floats") {
  const auto g = mg::build_graph({{"a", Rational(4, 8)}, {"b", 3}}, {});
  CHECK(emit_graph(g) == "edge a 1/2\nedge b 3\n");
}

TEST_CASE("parse errors carry the offending line number") {
  try {
    parse_graph("edge a 1\nedge b oops\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("edge a 1\nedge a 2\n"), ParseError);   // duplicate id
  CHECK_THROWS_AS(parse_graph("edge a 1 extra\n"), ParseError);      // stray token
  CHECK_THROWS_AS(parse_graph("vertex a\n"), ParseError);            // unknown directive
  CHECK_THROWS_AS(parse_graph("edge a_b 1\n"), ParseError);          // bad id
  CHECK_THROWS_AS(parse_graph("glue a:2 a:0\nedge a 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("edge a 1.5\n"), ParseError);          // no floats
}

TEST_CASE("semantic problems are domain errors, not parse errors") {
  CHECK_THROWS_AS(parse_graph("edge a 0\n"), DomainError);
  CHECK_THROWS_AS(parse_graph("edge a -1/2\n"), DomainError);
  CHECK_THROWS_AS(parse_graph("edge a 1\nglue a:0 b:0\n"), DomainError);
}

TEST_CASE("relation files allow glue lines only") {
  const auto edges = support::figure8(1, 2).edges();
  const EndpointRelation r = parse_relation("glue 1:0 2:0\n", edges);
  CHECK(r.block_of({"1", Side::Zero}).size() == 2);
  CHECK_THROWS_AS(parse_relation("edge 3 1\n", edges), ParseError);
  CHECK_THROWS_AS(parse_relation("glue 1:0 9:0\n", edges), DomainError);
}

TEST_CASE("function files round-trip with canonical coefficients") {
  const PiecewiseFunction f = parse_function("piece a 0 1 -3/2\npiece b 7\n");
  CHECK(f.piece("a") == Polynomial({0, 1, Rational(-3, 2)}));
  CHECK(f.piece("b") == Polynomial::constant(7));
  CHECK(emit_function(f) == "piece a 0 1 -3/2\npiece b 7\n");
  CHECK(parse_function(emit_function(f)) == f);

  // Trailing zero coefficients normalize away; the zero piece stays explicit.
  CHECK(emit_function(parse_function("piece a 1 2 0 0\n")) == "piece a 1 2\n");
  CHECK(emit_function(parse_function("piece a 0 0\n")) == "piece a 0\n");
}

TEST_CASE("function file errors") {
  CHECK_THROWS_AS(parse_function("piece a\n"), ParseError);
  CHECK_THROWS_AS(parse_function("piece a 1\npiece a 2\n"), ParseError);
  CHECK_THROWS_AS(parse_function("edge a 1\n"), ParseError);
  CHECK_THROWS_AS(parse_function("piece a one\n"), ParseError);
}

TEST_CASE("endpoint and point tokens parse and format") {
  CHECK(parse_endpoint("ab:0") == Endpoint{"ab", Side::Zero});
  CHECK(parse_endpoint("ab:1") == Endpoint{"ab", Side::Length});
  CHECK_THROWS_AS(parse_endpoint("ab:2"), ParseError);
  CHECK_THROWS_AS(parse_endpoint("ab"), ParseError);
  CHECK(format_endpoint({"ab", Side::Length}) == "ab:1");

  CHECK(parse_point("e@3/4") == GraphPoint{"e", Rational(3, 4)});
  CHECK(parse_point("e@2") == GraphPoint{"e", Rational(2)});
  CHECK_THROWS_AS(parse_point("e@"), ParseError);
  CHECK_THROWS_AS(parse_point("e"), ParseError);
  CHECK_THROWS_AS(parse_point("e@0.5"), ParseError);
  CHECK(format_point({"e", Rational(1, 3)}) == "e@1/3");
}

TEST_CASE("ids that cannot round-trip are rejected at emission") {
  const auto g = mg::build_graph({{"with space", 1}}, {});
  CHECK_THROWS_AS(emit_graph(g), DomainError);
}
