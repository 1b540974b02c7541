#pragma once

// Deciders for "the loop satisfies Moufang's theorem": whenever
// x(yz) = (xy)z, the subloop <x,y,z> is a group.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/algebra.hpp"
#include "steiner/term.hpp"

namespace steiner {

enum class MtMethod { definition, prop1, fano };

std::string to_string(MtMethod method);

struct MTReport {
  bool satisfies = true;
  MtMethod method = MtMethod::definition;
  std::optional<std::array<Element, 3>> counterexample;
  std::uint64_t triples_examined = 0;
};

/// Smallest subset containing `generators` and the identity that is closed
/// under the product, sorted ascending.
///
/// Closing under multiplication alone is enough in a finite loop: if S is
/// finite and closed under the product, left translation by a in S maps S
/// injectively into S, hence onto S, so a\b and b/a also lie in S.
std::vector<Element> subloop_generated(const LoopTable& t, const std::vector<Element>& generators);

/// Associativity on all triples from `subset`. Throws PreconditionError
/// ("not-closed") if `subset` lacks the identity or is not product-closed.
bool is_group_on(const LoopTable& t, const std::vector<Element>& subset);

struct DefinitionOptions {
  /// For Steiner loops, skip triples containing the identity or lying in a
  /// block: their generated subloop has at most 4 elements and is a group.
  /// Ignored for non-Steiner loops.
  bool steiner_shortcuts = true;
};

/// Direct check over all ordered triples; works for any loop.
MTReport satisfies_mt_definition(const LoopTable& t, DefinitionOptions options = {});

/// x(yz) = (xy)z implies x(yz) = y(xz). Steiner loops only
/// (PreconditionError "not-steiner" otherwise).
MTReport satisfies_mt_prop1(const LoopTable& t);

/// Every Pasch configuration of the associated triple system closes to a
/// Fano plane. Steiner loops of order >= 2 only.
MTReport satisfies_mt_fano(const LoopTable& t);

/// The Moufang identity x(y(xz)) = ((xy)x)z.
CheckReport is_moufang(const LoopTable& t);

}  // namespace steiner
