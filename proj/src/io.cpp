#include "metricgraph/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "metricgraph/errors.hpp"

namespace mg {

bool is_valid_edge_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++number;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      std::size_t start = i;
      while (i < raw.size() && !is_space(raw[i])) ++i;
      if (i > start) tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

Endpoint parse_endpoint_at(std::string_view token, std::size_t line) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos)
    throw ParseError(line, "endpoint must look like <edge>:0 or <edge>:1, got '" +
                               std::string(token) + "'");
  const std::string_view id = token.substr(0, colon);
  const std::string_view side = token.substr(colon + 1);
  if (!is_valid_edge_id(id)) throw ParseError(line, "bad edge id '" + std::string(id) + "'");
  if (side != "0" && side != "1")
    throw ParseError(line, "endpoint side must be 0 or 1, got '" + std::string(side) + "'");
  return {std::string(id), side == "0" ? Side::Zero : Side::Length};
}

Rational parse_rational_at(std::string_view token, std::size_t line) {
  auto r = try_parse_rational(token);
  if (!r) throw ParseError(line, "bad rational '" + std::string(token) + "'");
  return *r;
}

struct ParsedGraphFile {
  EdgeSpace::LengthMap lengths;
  std::vector<EndpointPair> glue;
};

ParsedGraphFile parse_graph_lines(std::string_view text, bool allow_edges) {
  ParsedGraphFile out;
  for (const Line& line : tokenize(text)) {
    const std::string& directive = line.tokens.front();
    if (directive == "edge") {
      if (!allow_edges) throw ParseError(line.number, "edge lines are not allowed here");
      if (line.tokens.size() != 3)
        throw ParseError(line.number, "expected: edge <id> <length>");
      const std::string& id = line.tokens[1];
      if (!is_valid_edge_id(id)) throw ParseError(line.number, "bad edge id '" + id + "'");
      if (out.lengths.count(id)) throw ParseError(line.number, "duplicate edge " + id);
      out.lengths.emplace(id, parse_rational_at(line.tokens[2], line.number));
    } else if (directive == "glue") {
      if (line.tokens.size() != 3)
        throw ParseError(line.number, "expected: glue <endpoint> <endpoint>");
      out.glue.emplace_back(parse_endpoint_at(line.tokens[1], line.number),
                            parse_endpoint_at(line.tokens[2], line.number));
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }
  return out;
}

}  // namespace

MetricGraph parse_graph(std::string_view text) {
  ParsedGraphFile parsed = parse_graph_lines(text, true);
  return build_graph(std::move(parsed.lengths), parsed.glue);
}

std::string emit_graph(const MetricGraph& g) {
  std::string out;
  for (const auto& [id, len] : g.edges().lengths()) {
    if (!is_valid_edge_id(id)) throw DomainError("edge id '" + id + "' is not serializable");
    out += "edge " + id + " " + to_string(len) + "\n";
  }
  for (const auto& block : g.relation().blocks()) {
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      out += "glue " + format_endpoint(block[i]) + " " + format_endpoint(block[i + 1]) + "\n";
    }
  }
  return out;
}

EndpointRelation parse_relation(std::string_view text, const EdgeSpace& edges) {
  ParsedGraphFile parsed = parse_graph_lines(text, false);
  return EndpointRelation::closure(parsed.glue, edges.endpoints());
}

PiecewiseFunction parse_function(std::string_view text) {
  PiecewiseFunction::PieceMap pieces;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.front() != "piece")
      throw ParseError(line.number, "unknown directive '" + line.tokens.front() + "'");
    if (line.tokens.size() < 3)
      throw ParseError(line.number, "expected: piece <edge-id> <c0> [<c1> ...]");
    const std::string& id = line.tokens[1];
    if (!is_valid_edge_id(id)) throw ParseError(line.number, "bad edge id '" + id + "'");
    if (pieces.count(id)) throw ParseError(line.number, "duplicate piece for edge " + id);
    std::vector<Rational> coeffs;
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
      coeffs.push_back(parse_rational_at(line.tokens[i], line.number));
    }
    pieces.emplace(id, Polynomial(std::move(coeffs)));
  }
  return PiecewiseFunction(std::move(pieces));
}

std::string emit_function(const PiecewiseFunction& f) {
  std::string out;
  for (const auto& [id, p] : f.pieces()) {
    if (!is_valid_edge_id(id)) throw DomainError("edge id '" + id + "' is not serializable");
    out += "piece " + id;
    if (p.is_zero()) {
      out += " 0";
    } else {
      for (const Rational& c : p.coefficients()) out += " " + to_string(c);
    }
    out += "\n";
  }
  return out;
}

Endpoint parse_endpoint(std::string_view token) { return parse_endpoint_at(token, 0); }

GraphPoint parse_point(std::string_view token) {
  const auto at = token.find('@');
  if (at == std::string_view::npos)
    throw ParseError(0, "point must look like <edge>@<rational>, got '" + std::string(token) + "'");
  const std::string_view id = token.substr(0, at);
  if (!is_valid_edge_id(id)) throw ParseError(0, "bad edge id '" + std::string(id) + "'");
  return {std::string(id), parse_rational_at(token.substr(at + 1), 0)};
}

std::string format_endpoint(const Endpoint& e) { return to_string(e); }

std::string format_point(const GraphPoint& p) { return p.edge + "@" + to_string(p.coordinate); }

}  // namespace mg
