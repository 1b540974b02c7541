#pragma once

// Search for identities that hold in a target Steiner loop but are not
// consequences of the Steiner loop axioms.
//
// This only proposes candidates. An identity is reported when it holds in
// the target and fails in some witness Steiner loop, which certifies that
// it does not follow from xy = yx and x(xy) = y. Nothing here describes the
// full equational theory of the target.

#include <string>
#include <vector>

#include "steiner/algebra.hpp"
#include "steiner/term.hpp"

namespace steiner {

constexpr std::size_t max_explorer_leaves = 8;

/// Product trees over `variables` (repetition allowed, no '1') with at
/// most `max_leaves` leaves, one per commutativity class: every product has
/// its factors in ascending Term order. Sorted by Term order. Throws
/// PreconditionError("guard") above max_explorer_leaves.
std::vector<Term> enumerate_terms(const std::vector<char>& variables, std::size_t max_leaves);

/// Rewrites aa -> 1, a(ab) -> b, 1a -> a (factors matched up to
/// commutativity) bottom-up and orders factors canonically. Idempotent, and
/// value-preserving in every Steiner loop.
Term steiner_normalize(const Term& t);

struct NamedLoop {
  std::string name;
  LoopTable loop;
};

struct FoundIdentity {
  Identity identity;
  /// First witness (in the given order) where the identity fails.
  std::string witness;
};

/// Loops of both STS(13) classes, PG(3,2) and the Bose STS(15), named
/// sts13-1, sts13-2, pg3, bose2.
std::vector<NamedLoop> default_witnesses();

struct ExploreOptions {
  std::vector<char> variables{'x', 'y', 'z'};
  std::size_t max_leaves = 6;
};

/// Both sides range over Steiner-normal terms from enumerate_terms. Within
/// each class of terms equal as functions on the target, every member is
/// paired with the class minimum (lhs < rhs); all other identities of the
/// class follow from these by transitivity, and any of them failing in a
/// witness means one of these fails there too. Pairs that hold in every
/// witness are dropped. Output is sorted by total leaf count, then lhs,
/// then rhs. Throws PreconditionError("not-steiner") on non-Steiner input.
std::vector<FoundIdentity> find_identities(const LoopTable& target, const std::vector<NamedLoop>& witnesses,
                                           const ExploreOptions& options = {});

}  // namespace steiner
