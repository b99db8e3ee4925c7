// Test-only helpers: fixture graphs, deterministic random generators, and
// independent brute-force oracles. The oracles deliberately avoid the library
// search paths they are checking.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "metricgraph/graph.hpp"
#include "metricgraph/metric.hpp"
#include "metricgraph/relation.hpp"

namespace support {

using mg::Endpoint;
using mg::EndpointRelation;
using mg::GraphPoint;
using mg::MetricGraph;
using mg::Rational;
using mg::Side;

// ---------------------------------------------------------------------------
// Fixture graphs (edge ids "1", "2", ... unless stated otherwise)

inline MetricGraph interval(const Rational& len, const mg::EdgeId& id = "1") {
  return mg::build_graph({{id, len}}, {});
}

inline MetricGraph loop(const Rational& len, const mg::EdgeId& id = "1") {
  return mg::build_graph({{id, len}}, {{{id, Side::Zero}, {id, Side::Length}}});
}

// Two edges forming a single cycle: 1:0~2:1 and 1:1~2:0.
inline MetricGraph cycle2(const Rational& l1, const Rational& l2) {
  return mg::build_graph({{"1", l1}, {"2", l2}},
                         {{{"1", Side::Zero}, {"2", Side::Length}},
                          {{"1", Side::Length}, {"2", Side::Zero}}});
}

inline MetricGraph two_loops(const Rational& l1, const Rational& l2) {
  return mg::build_graph({{"1", l1}, {"2", l2}},
                         {{{"1", Side::Zero}, {"1", Side::Length}},
                          {{"2", Side::Zero}, {"2", Side::Length}}});
}

inline MetricGraph two_intervals(const Rational& l1, const Rational& l2) {
  return mg::build_graph({{"1", l1}, {"2", l2}}, {});
}

// Loop on edge 1 with pendant edge 2 hanging off the loop vertex.
inline MetricGraph lasso(const Rational& l1, const Rational& l2) {
  return mg::build_graph({{"1", l1}, {"2", l2}},
                         {{{"1", Side::Zero}, {"1", Side::Length}},
                          {{"1", Side::Zero}, {"2", Side::Zero}}});
}

inline MetricGraph figure8(const Rational& l1, const Rational& l2) {
  return mg::build_graph({{"1", l1}, {"2", l2}},
                         {{{"1", Side::Zero}, {"1", Side::Length}},
                          {{"1", Side::Zero}, {"2", Side::Zero}},
                          {{"2", Side::Zero}, {"2", Side::Length}}});
}

// Two edges joined end to end: 1:1 ~ 2:0.
inline MetricGraph path2(const Rational& l1, const Rational& l2) {
  return mg::build_graph({{"1", l1}, {"2", l2}}, {{{"1", Side::Length}, {"2", Side::Zero}}});
}

inline MetricGraph triangle124() {
  return mg::build_graph({{"a", 1}, {"b", 2}, {"c", 4}},
                         {{{"a", Side::Length}, {"b", Side::Zero}},
                          {{"b", Side::Length}, {"c", Side::Zero}},
                          {{"c", Side::Length}, {"a", Side::Zero}}});
}

// ---------------------------------------------------------------------------
// Partition enumeration (restricted growth strings): every partition of the
// given endpoints, Bell(n) of them.

inline std::vector<std::vector<EndpointRelation::Block>> all_partitions(
    const std::vector<Endpoint>& items) {
  std::vector<std::vector<EndpointRelation::Block>> result;
  std::vector<std::size_t> assignment(items.size(), 0);

  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t i,
                                                              std::size_t used) {
    if (i == items.size()) {
      std::vector<EndpointRelation::Block> blocks(used);
      for (std::size_t j = 0; j < items.size(); ++j) blocks[assignment[j]].push_back(items[j]);
      result.push_back(std::move(blocks));
      return;
    }
    for (std::size_t b = 0; b <= used && b <= i; ++b) {
      assignment[i] = b;
      recurse(i + 1, std::max(used, b + 1));
    }
  };
  if (!items.empty()) recurse(0, 0);
  else result.push_back({});
  return result;
}

inline std::vector<EndpointRelation> all_relations(const std::vector<Endpoint>& items) {
  std::vector<EndpointRelation> out;
  for (auto& blocks : all_partitions(items)) {
    out.push_back(EndpointRelation::from_blocks(std::move(blocks)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force path pseudo-metric: enumerate every chain whose hops visit a
// vertex at most once, with the one-edge straight run as the base case.

namespace detail {

// Endpoint-to-endpoint hops of one edge, pre-resolved to block indices.
struct ChainWalker {
  struct Hop {
    std::size_t from;
    std::size_t to;
    Rational length;
  };

  std::vector<Hop> hops;
  std::vector<bool> visited;
  std::vector<std::pair<std::size_t, Rational>> targets;  // (vertex, closing leg)
  mg::Distance best = mg::Distance::infinite();

  void walk(std::size_t v, const Rational& acc) {
    if (best.is_finite() && !(acc < best.value())) return;
    for (const auto& [vertex, closing] : targets) {
      if (vertex != v) continue;
      const Rational total = acc + closing;
      if (!best.is_finite() || total < best.value()) best = mg::Distance(total);
    }
    for (const Hop& hop : hops) {
      if (hop.from != v || visited[hop.to]) continue;
      visited[hop.to] = true;
      walk(hop.to, acc + hop.length);
      visited[hop.to] = false;
    }
  }
};

}  // namespace detail

inline mg::Distance oracle_distance(const MetricGraph& g, const GraphPoint& p,
                                    const GraphPoint& q) {
  if (mg::same_point(g, p, q)) return mg::Distance(Rational(0));

  const auto& relation = g.relation();
  auto block_at = [&](const mg::EdgeId& e, Side s) { return relation.block_index_of({e, s}); };
  auto leg = [&](const GraphPoint& pt, Side s) {
    return s == Side::Zero ? pt.coordinate : Rational(g.edges().length(pt.edge) - pt.coordinate);
  };

  detail::ChainWalker walker;
  if (p.edge == q.edge) walker.best = mg::Distance(mg::abs_of(p.coordinate - q.coordinate));
  for (const auto& [id, len] : g.edges().lengths()) {
    const std::size_t a = block_at(id, Side::Zero);
    const std::size_t b = block_at(id, Side::Length);
    walker.hops.push_back({a, b, len});
    walker.hops.push_back({b, a, len});
  }
  for (Side s : {Side::Zero, Side::Length}) walker.targets.push_back({block_at(q.edge, s), leg(q, s)});

  const std::size_t vertex_count = relation.blocks().size();
  for (Side s : {Side::Zero, Side::Length}) {
    const std::size_t v0 = block_at(p.edge, s);
    walker.visited.assign(vertex_count, false);
    walker.visited[v0] = true;
    walker.walk(v0, leg(p, s));
  }
  return walker.best;
}

// ---------------------------------------------------------------------------
// Deterministic random data

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  template <typename T>
  const T& pick(const std::vector<T>& from) {
    return from[below(from.size())];
  }

  bool flip() { return below(2) == 0; }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<Rational> small_lengths() {
  return {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
}

inline MetricGraph random_graph(Rng& rng, std::size_t max_edges = 5) {
  const std::size_t edges = 1 + rng.below(max_edges);
  mg::EdgeSpace::LengthMap lengths;
  std::vector<mg::EdgeId> ids;
  const auto pool = small_lengths();
  for (std::size_t i = 0; i < edges; ++i) {
    mg::EdgeId id = std::to_string(i + 1);
    lengths.emplace(id, rng.pick(pool));
    ids.push_back(std::move(id));
  }

  std::vector<mg::EndpointPair> glue;
  const std::size_t pairs = rng.below(2 * edges + 1);
  for (std::size_t i = 0; i < pairs; ++i) {
    Endpoint a{ids[rng.below(ids.size())], rng.flip() ? Side::Zero : Side::Length};
    Endpoint b{ids[rng.below(ids.size())], rng.flip() ? Side::Zero : Side::Length};
    glue.push_back({std::move(a), std::move(b)});
  }
  return mg::build_graph(std::move(lengths), glue);
}

inline GraphPoint random_point(Rng& rng, const MetricGraph& g) {
  const std::vector<mg::EdgeId> ids = g.edges().edge_ids();
  const mg::EdgeId& id = ids[rng.below(ids.size())];
  const Rational fraction(rng.below(9), 8);  // 0, 1/8, ..., 1
  return {id, g.edges().length(id) * fraction};
}

inline std::map<mg::EdgeId, std::vector<Rational>, mg::IdLess> random_cuts(Rng& rng,
                                                                           const MetricGraph& g) {
  std::map<mg::EdgeId, std::vector<Rational>, mg::IdLess> cuts;
  for (const auto& [id, len] : g.edges().lengths()) {
    if (rng.flip()) continue;
    std::vector<Rational> fractions{Rational(1, 5), Rational(2, 5), Rational(3, 5),
                                    Rational(4, 5)};
    const std::size_t count = 1 + rng.below(2);
    std::vector<Rational> chosen;
    while (chosen.size() < count) {
      const Rational f = rng.pick(fractions);
      if (std::find(chosen.begin(), chosen.end(), f) == chosen.end()) chosen.push_back(f);
    }
    std::sort(chosen.begin(), chosen.end());
    for (Rational& f : chosen) f *= len;
    cuts.emplace(id, std::move(chosen));
  }
  return cuts;
}

}  // namespace support
