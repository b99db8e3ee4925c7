#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "metricgraph/functions.hpp"
#include "metricgraph/io.hpp"
#include "metricgraph/metric.hpp"
#include "metricgraph/ops.hpp"
#include "metricgraph/surgery.hpp"

namespace py = pybind11;
using namespace mg;

namespace {

// Exact inputs only: int, "p/q" strings, or fractions.Fraction. Floats are
// rejected so nothing silently rounds.
Rational to_rational(const py::handle& value) {
  if (py::isinstance<py::int_>(value)) {
    return *try_parse_rational(py::str(value).cast<std::string>());
  }
  if (py::isinstance<py::float_>(value)) {
    throw DomainError("floats are not exact; pass an int, 'p/q' string, or Fraction");
  }
  const std::string text = py::str(value).cast<std::string>();
  auto parsed = try_parse_rational(text);
  if (!parsed) throw DomainError("not a rational: '" + text + "'");
  return *parsed;
}

py::object as_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

std::vector<std::string> block_tokens(const EndpointRelation::Block& block) {
  std::vector<std::string> out;
  out.reserve(block.size());
  for (const Endpoint& e : block) out.push_back(format_endpoint(e));
  return out;
}

EdgeSpace::LengthMap lengths_from_dict(const py::dict& lengths) {
  EdgeSpace::LengthMap out;
  for (const auto& [key, value] : lengths) {
    out.emplace(key.cast<std::string>(), to_rational(value));
  }
  return out;
}

std::vector<EndpointPair> glue_from_list(const py::iterable& glue) {
  std::vector<EndpointPair> out;
  for (const py::handle& item : glue) {
    const auto pair = item.cast<std::pair<std::string, std::string>>();
    out.push_back({parse_endpoint(pair.first), parse_endpoint(pair.second)});
  }
  return out;
}

std::map<EdgeId, std::vector<Rational>, IdLess> cuts_from_dict(const py::dict& cuts) {
  std::map<EdgeId, std::vector<Rational>, IdLess> out;
  for (const auto& [key, value] : cuts) {
    std::vector<Rational> coords;
    for (const py::handle& c : value.cast<py::iterable>()) coords.push_back(to_rational(c));
    out.emplace(key.cast<std::string>(), std::move(coords));
  }
  return out;
}

PiecewiseFunction function_from_dict(const py::dict& pieces) {
  PiecewiseFunction::PieceMap out;
  for (const auto& [key, value] : pieces) {
    std::vector<Rational> coeffs;
    for (const py::handle& c : value.cast<py::iterable>()) coeffs.push_back(to_rational(c));
    out.emplace(key.cast<std::string>(), Polynomial(std::move(coeffs)));
  }
  return PiecewiseFunction(std::move(out));
}

GraphPoint point_from_token(const std::string& token) { return parse_point(token); }

py::object optional_fraction(const Distance& d) {
  if (d.is_infinite()) return py::none();
  return as_fraction(d.value());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Metric graphs as quotients of interval families: exact distances, "
            "surgery, relation-algebra operations, and function-space norms.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  // Base registered before the derived type: translators run newest first.
  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SobolevMembershipError>(m, "SobolevMembershipError",
                                                 domain_error.ptr());

  py::class_<MetricGraph>(m, "MetricGraph")
      .def("edge_ids",
           [](const MetricGraph& g) { return g.edges().edge_ids(); })
      .def("edge_length",
           [](const MetricGraph& g, const std::string& id) { return as_fraction(g.edges().length(id)); })
      .def("volume", [](const MetricGraph& g) { return as_fraction(volume(g)); })
      .def("vertices",
           [](const MetricGraph& g) {
             std::vector<std::vector<std::string>> out;
             for (const Vertex& v : g.vertices()) out.push_back(block_tokens(v.block));
             return out;
           })
      .def("vertex_of",
           [](const MetricGraph& g, const std::string& endpoint) {
             return block_tokens(g.vertex_of(parse_endpoint(endpoint)).block);
           })
      .def("degree",
           [](const MetricGraph& g, const std::string& endpoint) {
             return degree(g, g.vertex_of(parse_endpoint(endpoint)));
           })
      .def("endpoint_multiplicity",
           [](const MetricGraph& g, const std::string& endpoint) {
             return endpoint_multiplicity(g, g.vertex_of(parse_endpoint(endpoint)));
           })
      .def("is_connected", [](const MetricGraph& g) { return is_connected(g); })
      .def("is_metric_certified", [](const MetricGraph& g) { return is_metric_certified(g); })
      .def("component_count",
           [](const MetricGraph& g) { return connected_components(g).size(); })
      .def("__eq__", [](const MetricGraph& a, const MetricGraph& b) { return a == b; })
      .def("__repr__", [](const MetricGraph& g) {
        return "<MetricGraph edges=" + std::to_string(g.edges().edge_count()) +
               " vertices=" + std::to_string(g.vertex_count()) + ">";
      });

  py::class_<Subdivision>(m, "Subdivision")
      .def_readonly("parent", &Subdivision::parent)
      .def_readonly("child", &Subdivision::child)
      .def("parent_edge_of",
           [](const Subdivision& s, const std::string& child_edge) {
             auto it = s.parent_edge.find(child_edge);
             if (it == s.parent_edge.end()) throw DomainError("unknown child edge " + child_edge);
             return it->second;
           })
      .def("offset_of", [](const Subdivision& s, const std::string& child_edge) {
        auto it = s.offset.find(child_edge);
        if (it == s.offset.end()) throw DomainError("unknown child edge " + child_edge);
        return as_fraction(it->second);
      });

  py::class_<PointTransfer>(m, "PointTransfer")
      .def_static("between_rewirings", &PointTransfer::between_rewirings)
      .def_static("to_subdivision", &PointTransfer::to_subdivision)
      .def_static("from_subdivision", &PointTransfer::from_subdivision)
      .def("reversed", &PointTransfer::reversed)
      .def("apply", [](const PointTransfer& t, const std::string& point) {
        std::vector<std::string> out;
        for (const GraphPoint& p : t.apply(point_from_token(point))) out.push_back(format_point(p));
        return out;
      });

  py::class_<PiecewiseFunction>(m, "PiecewiseFunction")
      .def(py::init([](const py::dict& pieces) { return function_from_dict(pieces); }))
      .def("derivative",
           [](const PiecewiseFunction& f, unsigned order) { return f.derivative(order); },
           py::arg("order") = 1)
      .def("coefficients",
           [](const PiecewiseFunction& f, const std::string& edge) {
             std::vector<py::object> out;
             for (const Rational& c : f.piece(edge).coefficients()) out.push_back(as_fraction(c));
             return out;
           })
      .def("__eq__",
           [](const PiecewiseFunction& a, const PiecewiseFunction& b) { return a == b; });

  m.def("build_graph", [](const py::dict& lengths, const py::iterable& glue) {
    return build_graph(lengths_from_dict(lengths), glue_from_list(glue));
  }, py::arg("lengths"), py::arg("glue") = py::list());

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("emit_graph", [](const MetricGraph& g) { return emit_graph(g); });
  m.def("parse_function", [](const std::string& text) { return parse_function(text); });
  m.def("emit_function", [](const PiecewiseFunction& f) { return emit_function(f); });

  m.def("distance", [](const MetricGraph& g, const std::string& p, const std::string& q) {
    return optional_fraction(distance(g, point_from_token(p), point_from_token(q)));
  });
  m.def("geodesic", [](const MetricGraph& g, const std::string& p, const std::string& q)
            -> py::object {
    const auto geo = geodesic(g, point_from_token(p), point_from_token(q));
    if (!geo) return py::none();
    py::list segments;
    for (const GeodesicSegment& seg : geo->segments) {
      segments.append(py::make_tuple(seg.edge, as_fraction(seg.from), as_fraction(seg.to)));
    }
    return segments;
  });

  m.def("subdivide", [](const MetricGraph& g, const py::dict& cuts) {
    return subdivide(g, cuts_from_dict(cuts));
  });
  m.def("rewire", [](const MetricGraph& g, const py::iterable& glue) {
    return rewire(g, EndpointRelation::closure(glue_from_list(glue), g.edges().endpoints()));
  });
  m.def("cut_graph", [](const MetricGraph& g, const py::iterable& glue) {
    const CutResult r =
        cut_graph(g, EndpointRelation::closure(glue_from_list(glue), g.edges().endpoints()));
    return py::make_tuple(r.graph, r.nontrivial);
  });
  m.def("rearrange", [](const MetricGraph& g, const py::dict& cuts, const py::iterable& glue) {
    const Subdivision s = subdivide(g, cuts_from_dict(cuts));
    return rewire(s.child,
                  EndpointRelation::closure(glue_from_list(glue), s.child.edges().endpoints()));
  });
  m.def("primitive_form", [](const MetricGraph& g) { return primitive_form(g); });
  m.def("equivalent_mod_subdivision", [](const MetricGraph& a, const MetricGraph& b) {
    return equivalent_mod_subdivision(a, b);
  });

  m.def("graph_intersection", [](const MetricGraph& a, const MetricGraph& b) {
    return graph_intersection(a, b);
  });
  m.def("graph_union", [](const MetricGraph& a, const MetricGraph& b) {
    return graph_union(a, b);
  });
  m.def("graph_complement",
        [](const MetricGraph& g, const std::optional<MetricGraph>& ambient) {
          return graph_complement(g, ambient);
        },
        py::arg("graph"), py::arg("ambient") = py::none());
  m.def("flower", [](const MetricGraph& g) { return flower(g.edges()); });
  m.def("fully_cut", [](const MetricGraph& g) { return fully_cut(g.edges()); });

  m.def("is_continuous", [](const MetricGraph& g, const PiecewiseFunction& f) {
    return is_continuous(g, f);
  });
  m.def("continuity_witness",
        [](const MetricGraph& g, const PiecewiseFunction& f) -> py::object {
          const auto witness = continuity_witness(g, f);
          if (!witness) return py::none();
          py::dict out;
          out["vertex"] = block_tokens(witness->vertex.block);
          py::list values;
          for (const auto& [endpoint, value] : witness->values) {
            values.append(py::make_tuple(format_endpoint(endpoint), as_fraction(value)));
          }
          out["values"] = values;
          return out;
        });
  m.def("is_ck", [](const MetricGraph& g, const PiecewiseFunction& f, unsigned k) {
    return is_ck(g, f, k);
  });
  m.def("lp_norm_pow", [](const MetricGraph& g, const PiecewiseFunction& f, unsigned p) {
    const Enclosure e = lp_norm_pow(g, f, p);
    return py::make_tuple(as_fraction(e.lo), as_fraction(e.hi));
  });
  m.def("sup_norm", [](const MetricGraph& g, const PiecewiseFunction& f) {
    const Enclosure e = sup_norm(g, f);
    return py::make_tuple(as_fraction(e.lo), as_fraction(e.hi));
  });
  m.def("lp_norm", [](const MetricGraph& g, const PiecewiseFunction& f, unsigned p) {
    return lp_norm(g, f, p);
  });
  m.def("sobolev_norm",
        [](const MetricGraph& g, const PiecewiseFunction& f, unsigned k, unsigned p) {
          const SobolevNorm norm = sobolev_norm(g, f, k, p);
          py::list terms;
          for (const SobolevTerm& term : norm.terms) {
            py::dict entry;
            entry["order"] = term.order;
            entry["power"] = py::make_tuple(as_fraction(term.power.lo), as_fraction(term.power.hi));
            entry["value"] = term.value;
            terms.append(entry);
          }
          py::dict out;
          out["value"] = norm.value;
          out["terms"] = terms;
          return out;
        });
  m.def("push_to_subdivision", [](const Subdivision& s, const PiecewiseFunction& f) {
    return push_to_subdivision(s, f);
  });
}
