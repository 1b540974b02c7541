#pragma once

// Concrete triple systems and loops, isomorphism testing, and exhaustive
// enumeration of small Steiner triple systems.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "steiner/algebra.hpp"

namespace steiner {

/// Blocks {0,1,2},{0,3,4},{0,5,6},{1,3,5},{1,4,6},{2,3,6},{2,4,5}.
TripleSystem fano();

/// AG(2,3): point (i,j) of Z3 x Z3 has index 3i+j; {p,q,r} is a block iff
/// p+q+r = 0 componentwise. Its quasigroup is x.y = -x-y.
TripleSystem affine_ag23();

/// Steiner loop of the affine STS(9), order 10.
LoopTable steiner_loop_10();

/// PG(n,2): points are the nonzero vectors of GF(2)^(n+1), point index =
/// integer value - 1, blocks {x, y, x xor y}. 1 <= n <= 5.
TripleSystem projective(int n);

/// Bose STS(6k+3) from the idempotent commutative quasigroup
/// a.b = (a+b)(k+1) mod 2k+1. Point (a,i), a in Z_{2k+1}, i in Z3, has
/// index i(2k+1)+a. 1 <= k <= 10.
TripleSystem bose(int k);

/// x.y = x xor y on 2^n elements, 0 <= n <= 6.
LoopTable elementary_abelian_loop(int n);

/// Z_n under addition, 1 <= n <= 64. Not Steiner for n > 2.
LoopTable cyclic_group(int n);

/// Chein double M(S3, 2): the smallest non-associative Moufang loop
/// (order 12). Elements 0..5 are S3 x {0}, 6..11 are S3 x {1}.
LoopTable moufang_loop_12();

/// The two isomorphism classes of STS(13) in canonical form, as produced by
/// enumerate_sts(13).
const std::vector<TripleSystem>& sts13_classes();

/// A point bijection f with {f(a),f(b),f(c)} a block of `b` for every block
/// {a,b,c} of `a`, or empty. Per-point Pasch counts prune the search.
std::optional<std::vector<Element>> are_isomorphic(const TripleSystem& a, const TripleSystem& b);

/// Relabels points by `map` (old point p becomes map[p]).
TripleSystem relabel(const TripleSystem& s, const std::vector<Element>& map);

/// Canonical representative of the isomorphism class of `s`.
///
/// Points are labelled 0, 1, 2, ... in generation order: a free choice of
/// the next unlabelled point, then every block completion forced by the
/// labelled points (pairs scanned in label order). Free choices range over
/// the unlabelled points with the smallest Pasch count. The result is the
/// least relabelled block list over all such labelings. Cost grows with the
/// number of generators; intended for v <= 15 or so.
TripleSystem canonical_form(const TripleSystem& s);

struct EnumerateOptions {
  /// Required for v = 13.
  bool allow_slow = false;
  /// Called periodically with (completions visited, classes so far).
  std::function<void(std::uint64_t, std::size_t)> progress;
};

/// Every STS(v) up to isomorphism, in canonical form and sorted.
/// v must be 1, 3, 7, 9, or 13 (13 needs allow_slow). Throws
/// PreconditionError "inadmissible" for v not 1 or 3 mod 6 and
/// "out-of-range"/"slow" otherwise.
std::vector<TripleSystem> enumerate_sts(int v, const EnumerateOptions& options = {});

}  // namespace steiner
