#include "metricgraph/relation.hpp"

#include <algorithm>
#include <numeric>

namespace mg {

std::string to_string(const Endpoint& e) {
  return e.edge + (e.side == Side::Zero ? ":0" : ":1");
}

namespace {

// Transient union-find over ambient indices; only closure and
// union_generated need it.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<EndpointRelation::Block> canonicalize(std::vector<EndpointRelation::Block> blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

std::vector<EndpointRelation::Block> blocks_from_union_find(
    const std::vector<Endpoint>& ambient, UnionFind& uf) {
  std::map<std::size_t, EndpointRelation::Block> grouped;
  for (std::size_t i = 0; i < ambient.size(); ++i) grouped[uf.find(i)].push_back(ambient[i]);
  std::vector<EndpointRelation::Block> blocks;
  blocks.reserve(grouped.size());
  for (auto& [root, block] : grouped) blocks.push_back(std::move(block));
  return blocks;
}

void require_same_ambient(const EndpointRelation& r1, const EndpointRelation& r2) {
  if (!r1.same_ambient(r2)) throw DomainError("relations have mismatched ambient endpoint sets");
}

}  // namespace

EndpointRelation::EndpointRelation(std::vector<Block> blocks) : blocks_(canonicalize(std::move(blocks))) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty()) throw DomainError("empty block in endpoint relation");
    for (const Endpoint& e : blocks_[i]) {
      if (!index_.emplace(e, i).second)
        throw DomainError("endpoint " + to_string(e) + " appears in two blocks");
    }
  }
}

EndpointRelation EndpointRelation::discrete(std::vector<Endpoint> ambient) {
  std::vector<Block> blocks;
  blocks.reserve(ambient.size());
  for (Endpoint& e : ambient) blocks.push_back({std::move(e)});
  return EndpointRelation(std::move(blocks));
}

EndpointRelation EndpointRelation::universal(std::vector<Endpoint> ambient) {
  if (ambient.empty()) return EndpointRelation();
  return EndpointRelation({std::move(ambient)});
}

EndpointRelation EndpointRelation::from_blocks(std::vector<Block> blocks) {
  return EndpointRelation(std::move(blocks));
}

EndpointRelation EndpointRelation::closure(const std::vector<EndpointPair>& pairs,
                                           std::vector<Endpoint> ambient) {
  std::sort(ambient.begin(), ambient.end());
  ambient.erase(std::unique(ambient.begin(), ambient.end()), ambient.end());
  std::map<Endpoint, std::size_t> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);

  UnionFind uf(ambient.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    if (ia == index.end()) throw DomainError("unknown endpoint " + to_string(a));
    auto ib = index.find(b);
    if (ib == index.end()) throw DomainError("unknown endpoint " + to_string(b));
    uf.unite(ia->second, ib->second);
  }
  return EndpointRelation(blocks_from_union_find(ambient, uf));
}

std::vector<Endpoint> EndpointRelation::ambient() const {
  std::vector<Endpoint> all;
  all.reserve(index_.size());
  for (const auto& [e, i] : index_) all.push_back(e);
  return all;  // std::map iterates in sorted order
}

bool EndpointRelation::contains(const Endpoint& e) const { return index_.count(e) != 0; }

std::size_t EndpointRelation::block_index_of(const Endpoint& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw DomainError("unknown endpoint " + to_string(e));
  return it->second;
}

const EndpointRelation::Block& EndpointRelation::block_of(const Endpoint& e) const {
  return blocks_[block_index_of(e)];
}

bool EndpointRelation::related(const Endpoint& a, const Endpoint& b) const {
  return block_index_of(a) == block_index_of(b);
}

std::vector<EndpointPair> EndpointRelation::related_pairs() const {
  std::vector<EndpointPair> pairs;
  for (const Block& block : blocks_) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) pairs.emplace_back(block[i], block[j]);
    }
  }
  return pairs;
}

bool EndpointRelation::same_ambient(const EndpointRelation& other) const {
  if (index_.size() != other.index_.size()) return false;
  auto it = other.index_.begin();
  for (const auto& [e, i] : index_) {
    if (it->first != e) return false;
    ++it;
  }
  return true;
}

EndpointRelation intersect(const EndpointRelation& r1, const EndpointRelation& r2) {
  require_same_ambient(r1, r2);
  std::map<std::pair<std::size_t, std::size_t>, EndpointRelation::Block> grouped;
  for (const Endpoint& e : r1.ambient()) {
    grouped[{r1.block_index_of(e), r2.block_index_of(e)}].push_back(e);
  }
  std::vector<EndpointRelation::Block> blocks;
  blocks.reserve(grouped.size());
  for (auto& [key, block] : grouped) blocks.push_back(std::move(block));
  return EndpointRelation::from_blocks(std::move(blocks));
}

EndpointRelation union_generated(const EndpointRelation& r1, const EndpointRelation& r2) {
  require_same_ambient(r1, r2);
  std::vector<EndpointPair> pairs = r1.related_pairs();
  const std::vector<EndpointPair> more = r2.related_pairs();
  pairs.insert(pairs.end(), more.begin(), more.end());
  return EndpointRelation::closure(pairs, r1.ambient());
}

EndpointRelation difference_generated(const EndpointRelation& r1, const EndpointRelation& r2) {
  require_same_ambient(r1, r2);
  std::vector<EndpointPair> pairs;
  for (const EndpointPair& pair : r1.related_pairs()) {
    if (!r2.related(pair.first, pair.second)) pairs.push_back(pair);
  }
  // Diagonal pairs never survive the difference; closure restores reflexivity.
  return EndpointRelation::closure(pairs, r1.ambient());
}

bool is_refinement(const EndpointRelation& fine, const EndpointRelation& coarse) {
  require_same_ambient(fine, coarse);
  for (const auto& block : fine.blocks()) {
    const std::size_t target = coarse.block_index_of(block.front());
    for (const Endpoint& e : block) {
      if (coarse.block_index_of(e) != target) return false;
    }
  }
  return true;
}

}  // namespace mg
