#pragma once

// Cayley-table loops and quasigroups, Steiner triple systems, and the
// correspondences between the three.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "steiner/error.hpp"

namespace steiner {

using Element = std::uint32_t;
using Block = std::array<Element, 3>;

/// Square multiplication table over {0, ..., n-1}. Construction checks that
/// the table is a Latin square; the object is immutable afterwards.
class CayleyTable {
 public:
  CayleyTable(std::size_t order, std::vector<Element> cells);

  static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t order() const noexcept { return order_; }
  Element operator()(Element a, Element b) const noexcept { return cells_[a * order_ + b]; }
  std::span<const Element> row(Element a) const noexcept {
    return {cells_.data() + a * order_, order_};
  }
  const std::vector<Element>& cells() const noexcept { return cells_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::size_t order_;
  std::vector<Element> cells_;
};

/// A quasigroup given by its Cayley table (order >= 1).
class QuasigroupTable {
 public:
  explicit QuasigroupTable(CayleyTable table);

  std::size_t order() const noexcept { return table_.order(); }
  Element operator()(Element a, Element b) const noexcept { return table_(a, b); }
  const CayleyTable& table() const noexcept { return table_; }

  friend bool operator==(const QuasigroupTable&, const QuasigroupTable&) = default;

 private:
  CayleyTable table_;
};

/// A loop whose identity element is index 0.
class LoopTable {
 public:
  static constexpr Element identity = 0;

  explicit LoopTable(CayleyTable table);

  std::size_t order() const noexcept { return table_.order(); }
  Element operator()(Element a, Element b) const noexcept { return table_(a, b); }
  const CayleyTable& table() const noexcept { return table_; }

  friend bool operator==(const LoopTable&, const LoopTable&) = default;

 private:
  CayleyTable table_;
};

struct Violation {
  std::string rule;
  std::vector<long long> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  static constexpr std::size_t max_violations = 100;

  bool valid = true;
  std::vector<Violation> violations;
  /// Violations found beyond `max_violations` and not listed.
  std::size_t truncated = 0;

  void add(std::string rule, std::vector<long long> witness);
};

/// Raw triple as read from a file or built by hand; entries may be out of
/// range or repeated, which `validate_sts` reports.
using RawTriple = std::array<long long, 3>;

/// Checks point ranges, block shape, and that every pair of distinct points
/// lies in exactly one block. Rules reported: "point-range",
/// "repeated-point", "pair-covered-twice", "pair-uncovered". Pair coverage
/// implies |blocks| = v(v-1)/6 and v = 0, 1, 3 (mod 6), so neither is a
/// separate rule.
ValidationReport validate_sts(long long v, std::span<const RawTriple> blocks);

/// A Steiner triple system in canonical form: blocks ascending internally,
/// block list sorted lexicographically. v = 0 and v = 1 are admitted with no
/// blocks.
class TripleSystem {
 public:
  /// Throws ValidationError with the first violation if `blocks` is not an
  /// STS on `v` points.
  TripleSystem(std::size_t v, std::vector<Block> blocks);

  std::size_t points() const noexcept { return v_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;
  friend auto operator<=>(const TripleSystem&, const TripleSystem&) = default;

 private:
  std::size_t v_;
  std::vector<Block> blocks_;
};

bool is_steiner_loop(const LoopTable& t);
bool is_steiner_quasigroup(const QuasigroupTable& q);
bool is_associative(const CayleyTable& t);

/// xy = z iff {x,y,z} is a block; xx = x. Requires v >= 1.
QuasigroupTable sts_to_quasigroup(const TripleSystem& s);
TripleSystem quasigroup_to_sts(const QuasigroupTable& q);
/// Adjoins identity 0 and shifts quasigroup elements up by one.
LoopTable quasigroup_to_loop(const QuasigroupTable& q);
LoopTable sts_to_loop(const TripleSystem& s);
/// Removes the identity and restores xx = x. Requires order >= 2.
QuasigroupTable loop_to_quasigroup(const LoopTable& t);
TripleSystem loop_to_sts(const LoopTable& t);

}  // namespace steiner
