#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metricgraph/errors.hpp"
#include "metricgraph/functions.hpp"
#include "metricgraph/io.hpp"
#include "metricgraph/metric.hpp"
#include "metricgraph/ops.hpp"
#include "metricgraph/surgery.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mg::DomainError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

mg::MetricGraph load_graph(const std::string& path) { return mg::parse_graph(read_file(path)); }

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string block_text(const mg::EndpointRelation::Block& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ' ';
    out += mg::format_endpoint(block[i]);
  }
  return out + "}";
}

void run_info(const std::string& graph_path) {
  const mg::MetricGraph g = load_graph(graph_path);
  std::cout << "edges " << g.edges().edge_count() << "\n";
  std::cout << "volume " << mg::to_string(mg::volume(g)) << "\n";
  std::cout << "connected " << (mg::is_connected(g) ? "yes" : "no") << "\n";
  for (const mg::Vertex& v : g.vertices()) {
    std::cout << "vertex " << block_text(v.block) << " degree " << mg::degree(g, v)
              << " multiplicity " << mg::endpoint_multiplicity(g, v) << "\n";
  }
  for (const mg::MetricGraph& component : mg::connected_components(g)) {
    std::cout << "component {";
    bool first = true;
    for (const mg::EdgeId& id : component.edges().edge_ids()) {
      if (!first) std::cout << ' ';
      std::cout << id;
      first = false;
    }
    std::cout << "}\n";
  }
}

void run_dist(const std::string& graph_path, const std::string& from, const std::string& to) {
  const mg::MetricGraph g = load_graph(graph_path);
  const mg::Distance d = mg::distance(g, mg::parse_point(from), mg::parse_point(to));
  std::cout << (d.is_infinite() ? "inf" : mg::to_string(d.value())) << "\n";
}

void run_geodesic(const std::string& graph_path, const std::string& from, const std::string& to) {
  const mg::MetricGraph g = load_graph(graph_path);
  const auto geo = mg::geodesic(g, mg::parse_point(from), mg::parse_point(to));
  if (!geo) {
    std::cout << "inf\n";
    return;
  }
  std::cout << "length " << mg::to_string(geo->total_length()) << "\n";
  for (const mg::GeodesicSegment& seg : geo->segments) {
    std::cout << seg.edge << " " << mg::to_string(seg.from) << " " << mg::to_string(seg.to)
              << "\n";
  }
}

void run_subdivide(const std::string& graph_path, const std::vector<std::string>& cut_tokens) {
  const mg::MetricGraph g = load_graph(graph_path);
  std::map<mg::EdgeId, std::vector<mg::Rational>, mg::IdLess> cuts;
  for (const std::string& token : cut_tokens) {
    const mg::GraphPoint p = mg::parse_point(token);
    cuts[p.edge].push_back(p.coordinate);
  }
  std::cout << mg::emit_graph(mg::subdivide(g, cuts).child);
}

void run_rewire(const std::string& graph_path, const std::string& relation_path) {
  const mg::MetricGraph g = load_graph(graph_path);
  const mg::EndpointRelation r = mg::parse_relation(read_file(relation_path), g.edges());
  std::cout << mg::emit_graph(mg::rewire(g, r));
}

void run_cut(const std::string& graph_path, const std::string& relation_path) {
  const mg::MetricGraph g = load_graph(graph_path);
  const mg::EndpointRelation r = mg::parse_relation(read_file(relation_path), g.edges());
  const mg::CutResult cut = mg::cut_graph(g, r);
  std::cout << "# cut " << (cut.nontrivial ? "non-trivial" : "trivial") << "\n";
  std::cout << mg::emit_graph(cut.graph);
}

void run_primitive(const std::string& graph_path) {
  std::cout << mg::emit_graph(mg::primitive_form(load_graph(graph_path)));
}

void run_equiv(const std::string& path1, const std::string& path2) {
  const bool same = mg::equivalent_mod_subdivision(load_graph(path1), load_graph(path2));
  std::cout << (same ? "yes" : "no") << "\n";
}

void run_op(const std::string& kind, const std::string& path1,
            const std::optional<std::string>& path2) {
  const mg::MetricGraph g1 = load_graph(path1);
  std::optional<mg::MetricGraph> g2;
  if (path2) g2 = load_graph(*path2);

  if (kind == "intersect" || kind == "union") {
    if (!g2) throw mg::DomainError("op " + kind + " needs two graphs");
    std::cout << mg::emit_graph(kind == "intersect" ? mg::graph_intersection(g1, *g2)
                                                    : mg::graph_union(g1, *g2));
  } else if (kind == "complement") {
    std::cout << mg::emit_graph(mg::graph_complement(g1, g2));
  } else {
    throw mg::DomainError("unknown operation '" + kind + "' (intersect|union|complement)");
  }
}

void print_witness(const mg::ContinuityWitness& witness) {
  std::cout << "vertex " << block_text(witness.vertex.block) << "\n";
  for (const auto& [endpoint, value] : witness.values) {
    std::cout << "value " << mg::format_endpoint(endpoint) << " " << mg::to_string(value) << "\n";
  }
}

void run_check_function(const std::string& graph_path, const std::string& function_path,
                        std::optional<unsigned> k) {
  const mg::MetricGraph g = load_graph(graph_path);
  const mg::PiecewiseFunction f = mg::parse_function(read_file(function_path));

  if (!k) {
    const auto witness = mg::continuity_witness(g, f);
    std::cout << "continuous " << (witness ? "no" : "yes") << "\n";
    if (witness) print_witness(*witness);
    return;
  }

  mg::PiecewiseFunction current = f;
  for (unsigned h = 0; h <= *k; ++h) {
    if (const auto witness = mg::continuity_witness(g, current)) {
      std::cout << "ck " << *k << " no\n";
      std::cout << "order " << h << "\n";
      print_witness(*witness);
      return;
    }
    if (h < *k) current = current.derivative();
  }
  std::cout << "ck " << *k << " yes\n";
}

std::string enclosure_text(const mg::Enclosure& e) {
  if (e.is_exact()) return mg::to_string(e.lo);
  return "[" + mg::to_string(e.lo) + "," + mg::to_string(e.hi) + "]";
}

void run_norm(const std::string& graph_path, const std::string& function_path,
              const std::string& p_text, unsigned k) {
  const mg::MetricGraph g = load_graph(graph_path);
  const mg::PiecewiseFunction f = mg::parse_function(read_file(function_path));

  mg::SobolevNorm norm;
  const char* label = "power";
  if (p_text == "inf") {
    norm = mg::sobolev_sup_norm(g, f, k);
    label = "sup";
  } else {
    const auto p = mg::try_parse_rational(p_text);
    if (!p || denominator(*p) != 1 || *p < 1 || *p > 1000)
      throw mg::ParseError(0, "--p expects a positive integer or 'inf', got '" + p_text + "'");
    norm = mg::sobolev_norm(g, f, k, numerator(*p).convert_to<unsigned>());
  }
  for (const mg::SobolevTerm& term : norm.terms) {
    std::cout << "h " << term.order << " " << label << " " << enclosure_text(term.power) << "\n";
  }
  std::cout << "norm " << format_double(norm.value) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric graphs as quotients of intervals: inspect, measure, and rearrange them"};
  app.require_subcommand(1);

  std::string graph_path, graph_path2, relation_path, function_path, from, to, op_kind, p_text;
  std::vector<std::string> cut_tokens;
  std::optional<std::string> optional_graph2;
  std::optional<unsigned> check_k;
  unsigned norm_k = 0;

  CLI::App* info = app.add_subcommand("info", "vertices, degrees, components, volume");
  info->add_option("graph", graph_path)->required();

  CLI::App* dist = app.add_subcommand("dist", "exact distance between two points");
  dist->add_option("graph", graph_path)->required();
  dist->add_option("from", from)->required();
  dist->add_option("to", to)->required();

  CLI::App* geo = app.add_subcommand("geodesic", "a shortest chain between two points");
  geo->add_option("graph", graph_path)->required();
  geo->add_option("from", from)->required();
  geo->add_option("to", to)->required();

  CLI::App* subdivide = app.add_subcommand("subdivide", "split edges at interior points");
  subdivide->add_option("graph", graph_path)->required();
  subdivide->add_option("cuts", cut_tokens, "cut points as <edge>@<rational>")->required();

  CLI::App* rewire = app.add_subcommand("rewire", "replace the endpoint relation");
  rewire->add_option("graph", graph_path)->required();
  rewire->add_option("relation", relation_path, "file of glue lines")->required();

  CLI::App* cut = app.add_subcommand("cut", "split vertices (relation must refine)");
  cut->add_option("graph", graph_path)->required();
  cut->add_option("relation", relation_path, "file of glue lines")->required();

  CLI::App* primitive = app.add_subcommand("primitive", "canonical degree-2-smoothed form");
  primitive->add_option("graph", graph_path)->required();

  CLI::App* equiv = app.add_subcommand("equiv", "equality modulo subdivision");
  equiv->add_option("graph1", graph_path)->required();
  equiv->add_option("graph2", graph_path2)->required();

  CLI::App* op = app.add_subcommand("op", "intersect|union|complement on a shared edge space");
  op->add_option("kind", op_kind)->required()->check(CLI::IsMember({"intersect", "union", "complement"}));
  op->add_option("graph1", graph_path)->required();
  op->add_option("graph2", optional_graph2);

  CLI::App* check = app.add_subcommand("check-function", "continuity / C^k membership");
  check->add_option("graph", graph_path)->required();
  check->add_option("function", function_path)->required();
  check->add_option("--k", check_k, "derivative order to check up to");

  CLI::App* norm = app.add_subcommand("norm", "L^p or Sobolev norm");
  norm->add_option("graph", graph_path)->required();
  norm->add_option("function", function_path)->required();
  norm->add_option("--p", p_text, "positive integer or 'inf'")->required();
  norm->add_option("--k", norm_k, "Sobolev order (default 0)");

  try {
    app.parse(argc, argv);

    if (info->parsed()) run_info(graph_path);
    else if (dist->parsed()) run_dist(graph_path, from, to);
    else if (geo->parsed()) run_geodesic(graph_path, from, to);
    else if (subdivide->parsed()) run_subdivide(graph_path, cut_tokens);
    else if (rewire->parsed()) run_rewire(graph_path, relation_path);
    else if (cut->parsed()) run_cut(graph_path, relation_path);
    else if (primitive->parsed()) run_primitive(graph_path);
    else if (equiv->parsed()) run_equiv(graph_path, graph_path2);
    else if (op->parsed()) run_op(op_kind, graph_path, optional_graph2);
    else if (check->parsed()) run_check_function(graph_path, function_path, check_k);
    else if (norm->parsed()) run_norm(graph_path, function_path, p_text, norm_k);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a parse error
  } catch (const mg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const mg::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
