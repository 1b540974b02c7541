#pragma once

// Pasch configurations and Fano closures in Steiner triple systems.

#include <array>
#include <set>
#include <vector>

#include "steiner/algebra.hpp"
#include "steiner/term.hpp"

namespace steiner {

using Triple = std::array<Element, 3>;

/// Four blocks on six points, each point on exactly two blocks, any two
/// blocks meeting in one point. Stored canonically: blocks ascending
/// internally, the four blocks sorted.
class PaschConfig {
 public:
  /// Throws ValidationError if the blocks do not have Pasch shape.
  explicit PaschConfig(std::array<Block, 4> blocks);

  const std::array<Block, 4>& blocks() const noexcept { return blocks_; }

  friend auto operator<=>(const PaschConfig&, const PaschConfig&) = default;
  friend bool operator==(const PaschConfig&, const PaschConfig&) = default;

 private:
  std::array<Block, 4> blocks_;
};

bool has_pasch_shape(const std::array<Block, 4>& blocks);

/// Ordered triples (x,y,z) of distinct points, not on a common block, with
/// x(yz) = (xy)z. Lexicographic order.
std::vector<Triple> associating_triples(const QuasigroupTable& q);

/// The configuration {x,y,xy}, {y,z,yz}, {x,yz,c}, {xy,z,c} with c = x(yz)
/// determined by an associating triple.
PaschConfig pasch_from_triple(const QuasigroupTable& q, Element x, Element y, Element z);

/// All Pasch configurations, found through associating triples.
std::set<PaschConfig> find_pasch_configs(const TripleSystem& s);
/// Same set, found by scanning every 4-subset of blocks. Slow (O(b^4)).
std::set<PaschConfig> find_pasch_configs_by_blocks(const TripleSystem& s);

bool is_anti_pasch(const TripleSystem& s);

/// Number of Pasch configurations through each point.
std::vector<std::size_t> pasch_counts_per_point(const TripleSystem& s);

/// For a Pasch triple: x(yz) = y(xz) and (xy)(yz) = xz. Throws
/// PreconditionError with code "not-distinct", "collinear" or
/// "not-associating" when (x,y,z) is not a Pasch triple.
bool triple_closes_fano(const QuasigroupTable& q, Element x, Element y, Element z);

/// Smallest superset of `points` closed under completing blocks. Throws
/// PreconditionError("range") on out-of-range points.
std::vector<Element> subsystem_generated(const TripleSystem& s, const std::vector<Element>& points);

/// Holds iff every Pasch triple closes to a Fano plane. The counterexample
/// (variables x, y, z) is the first failing triple in lexicographic order;
/// assignments_checked counts the ordered triples visited.
CheckReport every_pasch_generates_fano(const TripleSystem& s);

}  // namespace steiner
