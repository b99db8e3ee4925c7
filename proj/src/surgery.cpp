#include "metricgraph/surgery.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "metricgraph/errors.hpp"

namespace mg {

namespace {

std::string block_text(const EndpointRelation::Block& block) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ' ';
    out += to_string(block[i]);
  }
  return out + "}";
}

}  // namespace

Subdivision subdivide(const MetricGraph& g,
                      const std::map<EdgeId, std::vector<Rational>, IdLess>& cuts) {
  // Validate cuts first: interior, strictly increasing, on known edges.
  for (const auto& [id, coords] : cuts) {
    const Rational& len = g.edges().length(id);
    const Rational* prev = nullptr;
    for (const Rational& c : coords) {
      if (c <= 0 || c >= len)
        throw DomainError("cut " + to_string(c) + " not interior to edge " + id + " of length " +
                          to_string(len));
      if (prev && !(*prev < c))
        throw DomainError("cuts on edge " + id + " must be strictly increasing");
      prev = &c;
    }
  }

  std::set<std::string, IdLess> used;
  for (const EdgeId& id : g.edges().edge_ids()) used.insert(id);
  // One infix per edge, long enough that none of its part ids collide.
  auto part_ids_for = [&used](const EdgeId& base, std::size_t parts) {
    std::string infix = "p";
    for (bool collision = true; collision;) {
      collision = false;
      for (std::size_t i = 1; i <= parts; ++i) {
        if (used.count(base + infix + std::to_string(i))) {
          collision = true;
          infix += 'p';
          break;
        }
      }
    }
    std::vector<EdgeId> ids;
    for (std::size_t i = 1; i <= parts; ++i) {
      ids.push_back(base + infix + std::to_string(i));
      used.insert(ids.back());
    }
    return ids;
  };

  Subdivision s;
  s.parent = g;

  EdgeSpace::LengthMap child_lengths;
  std::map<Endpoint, Endpoint> outer;  // parent endpoint -> child endpoint
  std::vector<EndpointRelation::Block> cut_blocks;

  for (const auto& [id, len] : g.edges().lengths()) {
    auto it = cuts.find(id);
    if (it == cuts.end() || it->second.empty()) {
      child_lengths.emplace(id, len);
      s.parent_edge.emplace(id, id);
      s.offset.emplace(id, Rational(0));
      outer.emplace(Endpoint{id, Side::Zero}, Endpoint{id, Side::Zero});
      outer.emplace(Endpoint{id, Side::Length}, Endpoint{id, Side::Length});
      continue;
    }

    std::vector<Rational> bounds{Rational(0)};
    bounds.insert(bounds.end(), it->second.begin(), it->second.end());
    bounds.push_back(len);

    const std::vector<EdgeId> parts = part_ids_for(id, bounds.size() - 1);
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      child_lengths.emplace(parts[i], bounds[i + 1] - bounds[i]);
      s.parent_edge.emplace(parts[i], id);
      s.offset.emplace(parts[i], bounds[i]);
    }
    outer.emplace(Endpoint{id, Side::Zero}, Endpoint{parts.front(), Side::Zero});
    outer.emplace(Endpoint{id, Side::Length}, Endpoint{parts.back(), Side::Length});
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      cut_blocks.push_back({Endpoint{parts[i], Side::Length}, Endpoint{parts[i + 1], Side::Zero}});
    }
  }

  std::vector<EndpointRelation::Block> blocks;
  blocks.reserve(g.relation().blocks().size() + cut_blocks.size());
  for (const auto& block : g.relation().blocks()) {
    EndpointRelation::Block mapped;
    mapped.reserve(block.size());
    for (const Endpoint& e : block) mapped.push_back(outer.at(e));
    blocks.push_back(std::move(mapped));
  }
  for (auto& block : cut_blocks) blocks.push_back(std::move(block));

  s.child = MetricGraph(EdgeSpace(std::move(child_lengths)),
                        EndpointRelation::from_blocks(std::move(blocks)));
  return s;
}

MetricGraph rewire(const MetricGraph& g, const EndpointRelation& new_relation) {
  if (!new_relation.same_ambient(g.relation()))
    throw DomainError("new relation is not over this graph's endpoint set");
  return MetricGraph(g.edges(), new_relation);
}

CutResult cut_graph(const MetricGraph& g, const EndpointRelation& new_relation) {
  MetricGraph rewired = rewire(g, new_relation);
  for (const auto& block : new_relation.blocks()) {
    const std::size_t target = g.relation().block_index_of(block.front());
    for (const Endpoint& e : block) {
      if (g.relation().block_index_of(e) != target)
        throw DomainError("not a cut: block " + block_text(block) +
                          " is not contained in a vertex of the graph");
    }
  }
  const bool nontrivial = !(new_relation == g.relation());
  return {std::move(rewired), nontrivial};
}

MetricGraph rearrange(const MetricGraph& g,
                      const std::map<EdgeId, std::vector<Rational>, IdLess>& cuts,
                      const EndpointRelation& new_relation) {
  return rewire(subdivide(g, cuts).child, new_relation);
}

PointTransfer::PointTransfer(Kind kind, MetricGraph source, MetricGraph target, Subdivision sub)
    : kind_(kind), source_(std::move(source)), target_(std::move(target)), sub_(std::move(sub)) {}

PointTransfer PointTransfer::between_rewirings(MetricGraph source, MetricGraph target) {
  if (!(source.edges() == target.edges()))
    throw DomainError("point transfer between rewirings needs a shared edge space");
  return PointTransfer(Kind::Requotient, std::move(source), std::move(target), Subdivision{});
}

PointTransfer PointTransfer::to_subdivision(Subdivision s) {
  MetricGraph source = s.parent;
  MetricGraph target = s.child;
  return PointTransfer(Kind::ParentToChild, std::move(source), std::move(target), std::move(s));
}

PointTransfer PointTransfer::from_subdivision(Subdivision s) {
  MetricGraph source = s.child;
  MetricGraph target = s.parent;
  return PointTransfer(Kind::ChildToParent, std::move(source), std::move(target), std::move(s));
}

PointTransfer PointTransfer::reversed() const {
  switch (kind_) {
    case Kind::Requotient:
      return PointTransfer(Kind::Requotient, target_, source_, Subdivision{});
    case Kind::ParentToChild:
      return PointTransfer(Kind::ChildToParent, target_, source_, sub_);
    case Kind::ChildToParent:
      return PointTransfer(Kind::ParentToChild, target_, source_, sub_);
  }
  throw DomainError("unreachable");
}

const MetricGraph& PointTransfer::source() const { return source_; }
const MetricGraph& PointTransfer::target() const { return target_; }

namespace {

bool point_less(const GraphPoint& a, const GraphPoint& b) {
  IdLess less;
  if (less(a.edge, b.edge)) return true;
  if (less(b.edge, a.edge)) return false;
  return a.coordinate < b.coordinate;
}

std::vector<GraphPoint> dedup_canonical(const MetricGraph& target, std::vector<GraphPoint> raw) {
  std::vector<GraphPoint> out;
  for (GraphPoint& p : raw) {
    GraphPoint c = canonical_point(target, p);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

}  // namespace

std::vector<GraphPoint> PointTransfer::apply(const GraphPoint& p) const {
  validate_point(source_, p);

  switch (kind_) {
    case Kind::Requotient: {
      // All edge-space representatives of p, pushed through the target quotient.
      std::vector<GraphPoint> reps{p};
      const Rational& len = source_.edges().length(p.edge);
      std::optional<Endpoint> at;
      if (p.coordinate == 0) at = Endpoint{p.edge, Side::Zero};
      if (p.coordinate == len) at = Endpoint{p.edge, Side::Length};
      if (at) {
        reps.clear();
        for (const Endpoint& e : source_.relation().block_of(*at)) {
          reps.push_back({e.edge, e.side == Side::Zero ? Rational(0)
                                                       : source_.edges().length(e.edge)});
        }
      }
      return dedup_canonical(target_, std::move(reps));
    }

    case Kind::ParentToChild: {
      // A subdivision is a bijection on points: locate the part under p.
      for (const auto& [part, parent] : sub_.parent_edge) {
        if (parent != p.edge) continue;
        const Rational& off = sub_.offset.at(part);
        const Rational& part_len = sub_.child.edges().length(part);
        if (p.coordinate >= off && p.coordinate <= off + part_len) {
          return dedup_canonical(sub_.child, {{part, p.coordinate - off}});
        }
      }
      throw DomainError("no subdivision part covers the point");  // unreachable for valid input
    }

    case Kind::ChildToParent: {
      const EdgeId& parent = sub_.parent_edge.at(p.edge);
      return dedup_canonical(sub_.parent, {{parent, sub_.offset.at(p.edge) + p.coordinate}});
    }
  }
  throw DomainError("unreachable");
}

std::vector<GraphPoint> transfer_points(const PointTransfer& t, const GraphPoint& p) {
  return t.apply(p);
}

namespace {

// Least vertex block with exactly two endpoints on two distinct edges.
// Blocks with both endpoints on one edge close a loop and stay.
std::optional<EndpointRelation::Block> smoothable_block(const MetricGraph& g) {
  for (const auto& block : g.relation().blocks()) {
    if (block.size() == 2 && block[0].edge != block[1].edge) return block;
  }
  return std::nullopt;
}

MetricGraph smooth_once(const MetricGraph& g, const EndpointRelation::Block& block) {
  const Endpoint x = block[0];
  const Endpoint y = block[1];
  const EdgeId a = x.edge;
  const EdgeId b = y.edge;
  const Endpoint far_x{a, x.side == Side::Zero ? Side::Length : Side::Zero};
  const Endpoint far_y{b, y.side == Side::Zero ? Side::Length : Side::Zero};

  EdgeSpace::LengthMap lengths = g.edges().lengths();
  const Rational merged_length = lengths.at(a) + lengths.at(b);
  lengths.erase(a);
  lengths.erase(b);
  lengths.emplace(a, merged_length);

  // The merged edge runs from far_x (new side Zero) to far_y (new side Length).
  auto remap = [&](const Endpoint& e) -> Endpoint {
    if (e == far_x) return {a, Side::Zero};
    if (e == far_y) return {a, Side::Length};
    return e;
  };

  std::vector<EndpointRelation::Block> blocks;
  for (const auto& old : g.relation().blocks()) {
    if (old == block) continue;
    EndpointRelation::Block mapped;
    mapped.reserve(old.size());
    for (const Endpoint& e : old) mapped.push_back(remap(e));
    blocks.push_back(std::move(mapped));
  }
  return MetricGraph(EdgeSpace(std::move(lengths)), EndpointRelation::from_blocks(std::move(blocks)));
}

}  // namespace

MetricGraph primitive_form(const MetricGraph& g) {
  MetricGraph current = g;
  while (auto block = smoothable_block(current)) current = smooth_once(current, *block);
  return current;
}

namespace {

struct IsoState {
  const MetricGraph* g1;
  const MetricGraph* g2;
  std::vector<EdgeId> edges1;
  std::vector<EdgeId> edges2;
  std::vector<std::optional<std::size_t>> vertex_map;  // g1 block index -> g2 block index
  std::vector<bool> vertex_used;                       // g2 block used
  std::vector<bool> edge_used;                         // g2 edge used
};

// Try to bind vertex v1 -> v2; returns whether consistent, records an undo.
bool bind_vertex(IsoState& st, std::size_t v1, std::size_t v2,
                 std::vector<std::size_t>& journal) {
  if (st.vertex_map[v1]) return *st.vertex_map[v1] == v2;
  if (st.vertex_used[v2]) return false;
  st.vertex_map[v1] = v2;
  st.vertex_used[v2] = true;
  journal.push_back(v1);
  return true;
}

void unbind(IsoState& st, const std::vector<std::size_t>& journal) {
  for (std::size_t v1 : journal) {
    st.vertex_used[*st.vertex_map[v1]] = false;
    st.vertex_map[v1].reset();
  }
}

bool extend(IsoState& st, std::size_t i) {
  if (i == st.edges1.size()) return true;
  const EdgeId& e1 = st.edges1[i];
  const Rational& len1 = st.g1->edges().length(e1);
  const std::size_t a1 = st.g1->relation().block_index_of({e1, Side::Zero});
  const std::size_t b1 = st.g1->relation().block_index_of({e1, Side::Length});

  for (std::size_t j = 0; j < st.edges2.size(); ++j) {
    if (st.edge_used[j]) continue;
    const EdgeId& e2 = st.edges2[j];
    if (!(st.g2->edges().length(e2) == len1)) continue;
    const std::size_t a2 = st.g2->relation().block_index_of({e2, Side::Zero});
    const std::size_t b2 = st.g2->relation().block_index_of({e2, Side::Length});

    for (bool flip : {false, true}) {
      const std::size_t ta = flip ? b2 : a2;
      const std::size_t tb = flip ? a2 : b2;
      std::vector<std::size_t> journal;
      if (bind_vertex(st, a1, ta, journal) && bind_vertex(st, b1, tb, journal)) {
        st.edge_used[j] = true;
        if (extend(st, i + 1)) return true;
        st.edge_used[j] = false;
      }
      unbind(st, journal);
    }
  }
  return false;
}

std::vector<Rational> sorted_lengths(const MetricGraph& g) {
  std::vector<Rational> out;
  for (const auto& [id, len] : g.edges().lengths()) out.push_back(len);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> sorted_multiplicities(const MetricGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& block : g.relation().blocks()) out.push_back(block.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Bijection of edges preserving lengths plus a bijection of vertex blocks
// preserving incidence (edge orientation free).
bool isomorphic(const MetricGraph& g1, const MetricGraph& g2) {
  if (g1.edges().edge_count() != g2.edges().edge_count()) return false;
  if (g1.vertex_count() != g2.vertex_count()) return false;
  if (sorted_lengths(g1) != sorted_lengths(g2)) return false;
  if (sorted_multiplicities(g1) != sorted_multiplicities(g2)) return false;

  IsoState st;
  st.g1 = &g1;
  st.g2 = &g2;
  st.edges1 = g1.edges().edge_ids();
  st.edges2 = g2.edges().edge_ids();
  st.vertex_map.assign(g1.vertex_count(), std::nullopt);
  st.vertex_used.assign(g2.vertex_count(), false);
  st.edge_used.assign(st.edges2.size(), false);
  return extend(st, 0);
}

}  // namespace

bool equivalent_mod_subdivision(const MetricGraph& g1, const MetricGraph& g2) {
  return isomorphic(primitive_form(g1), primitive_form(g2));
}

}  // namespace mg
