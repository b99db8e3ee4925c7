#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "metricgraph/errors.hpp"

namespace mg {

using EdgeId = std::string;

// Canonical edge-id order: shorter ids first, then lexicographic. Keeps
// purely numeric ids like "2" < "10" in numeric order while staying a total
// order on arbitrary alphanumeric tokens.
struct IdLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Which end of the interval [0, l_e] an endpoint denotes.
enum class Side { Zero, Length };

// One element of the endpoint set: (0,e) or (l_e,e), named independently of
// the actual edge length so relations do not depend on lengths.
struct Endpoint {
  EdgeId edge;
  Side side = Side::Zero;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend bool operator<(const Endpoint& a, const Endpoint& b) {
    IdLess less;
    if (less(a.edge, b.edge)) return true;
    if (less(b.edge, a.edge)) return false;
    return a.side < b.side;
  }
};

using EndpointPair = std::pair<Endpoint, Endpoint>;

// An equivalence relation on a finite endpoint set, stored as its partition
// in canonical form: each block sorted, blocks ordered by least element.
// Values are immutable after construction; equality is structural.
class EndpointRelation {
 public:
  using Block = std::vector<Endpoint>;

  EndpointRelation() = default;

  // Finest partition: every endpoint is its own block.
  static EndpointRelation discrete(std::vector<Endpoint> ambient);

  // Coarsest partition: one block containing every endpoint.
  static EndpointRelation universal(std::vector<Endpoint> ambient);

  // Validates that `blocks` partitions its own union (nonempty, disjoint).
  static EndpointRelation from_blocks(std::vector<Block> blocks);

  // Smallest equivalence relation on `ambient` containing every pair.
  // Throws DomainError naming the offending endpoint if a pair mentions an
  // endpoint outside `ambient`.
  static EndpointRelation closure(const std::vector<EndpointPair>& pairs,
                                  std::vector<Endpoint> ambient);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<Endpoint> ambient() const;

  bool contains(const Endpoint& e) const;
  std::size_t block_index_of(const Endpoint& e) const;  // DomainError if unknown
  const Block& block_of(const Endpoint& e) const;
  bool related(const Endpoint& a, const Endpoint& b) const;

  // All unordered pairs {a,b}, a != b, lying in a common block.
  std::vector<EndpointPair> related_pairs() const;

  bool same_ambient(const EndpointRelation& other) const;

  std::size_t endpoint_count() const { return index_.size(); }

  friend bool operator==(const EndpointRelation& a, const EndpointRelation& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  explicit EndpointRelation(std::vector<Block> blocks);

  std::vector<Block> blocks_;
  std::map<Endpoint, std::size_t> index_;
};

// x,y share a block iff they do in both operands. Throws DomainError on
// mismatched ambients (as do the other binary operations below).
EndpointRelation intersect(const EndpointRelation& r1, const EndpointRelation& r2);

// Smallest equivalence relation containing both operands.
EndpointRelation union_generated(const EndpointRelation& r1, const EndpointRelation& r2);

// Closure of the pairs related under r1 but not under r2.
EndpointRelation difference_generated(const EndpointRelation& r1, const EndpointRelation& r2);

// True iff every block of `fine` is contained in some block of `coarse`.
bool is_refinement(const EndpointRelation& fine, const EndpointRelation& coarse);

std::string to_string(const Endpoint& e);

}  // namespace mg
