#pragma once

// Loop words and identities between them.
//
// Grammar (whitespace is ignored):
//   term   := factor factor*
//   factor := 'a'..'z' | '1' | '(' term ')'
// Juxtaposition is the product and associates to the LEFT: "xyz" is (xy)z,
// "x(yz)" is x(yz). '1' is the identity element of a loop.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "steiner/algebra.hpp"

namespace steiner {

class Term {
 public:
  enum class Kind : std::uint8_t { one, variable, product };

  static Term one();
  static Term variable(char name);
  static Term product(Term left, Term right);

  Kind kind() const noexcept;
  bool is_product() const noexcept { return kind() == Kind::product; }
  char name() const noexcept;
  const Term& left() const;
  const Term& right() const;
  std::size_t leaves() const noexcept;

  friend bool operator==(const Term& a, const Term& b);
  /// Total order: fewer leaves first, then one < variable < product, then
  /// by letter, then left factor, then right factor.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// lhs = rhs. `variables()` lists the letters of lhs then rhs in order of
/// first occurrence; assignments are enumerated in that order.
class Identity {
 public:
  Identity(Term lhs, Term rhs);

  const Term& lhs() const noexcept { return lhs_; }
  const Term& rhs() const noexcept { return rhs_; }
  const std::vector<char>& variables() const noexcept { return variables_; }
  bool uses_one() const noexcept { return uses_one_; }

  friend bool operator==(const Identity& a, const Identity& b) { return a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_; }

 private:
  Term lhs_;
  Term rhs_;
  std::vector<char> variables_;
  bool uses_one_ = false;
};

/// Throws ParseError carrying the byte offset of the problem.
Term parse_term(std::string_view text);
Identity parse_identity(std::string_view text);

/// Renders with the fewest parentheses the grammar needs: a product as a
/// right factor is parenthesized, nothing else is.
std::string print_term(const Term& t);
/// "lhs = rhs"
std::string print_identity(const Identity& i);

std::vector<char> variables_of(const Term& t);
bool contains_one(const Term& t);

using Assignment = std::vector<std::pair<char, Element>>;

Element eval_term(const Term& t, const LoopTable& table, const Assignment& assignment);
/// Throws PreconditionError if `t` contains '1'.
Element eval_term(const Term& t, const QuasigroupTable& table, const Assignment& assignment);

/// A term flattened to postfix form with variables bound to slots, for
/// repeated evaluation over many assignments.
class TermProgram {
 public:
  TermProgram(const Term& t, std::span<const char> slots);

  Element run(const CayleyTable& table, std::span<const Element> values) const;
  bool uses_one() const noexcept { return uses_one_; }

 private:
  // op >= 0: push slot value; op == push_one: push 0; op == multiply.
  static constexpr std::int16_t push_one = -1;
  static constexpr std::int16_t multiply = -2;
  std::vector<std::int16_t> ops_;
  std::size_t depth_ = 0;
  bool uses_one_ = false;
};

struct CheckReport {
  bool holds = true;
  /// Lexicographically first failing assignment, in variable order.
  std::optional<Assignment> counterexample;
  std::uint64_t assignments_checked = 0;
};

/// Sweeps all order^k assignments (first variable most significant). The
/// counterexample is the lexicographically first failure regardless of how
/// the sweep is split across threads.
CheckReport check_identity(const Identity& identity, const LoopTable& table);
/// Throws PreconditionError if the identity mentions '1'.
CheckReport check_identity(const Identity& identity, const QuasigroupTable& table);

namespace builtin {
const Identity& steiner_comm();  // xy=yx
const Identity& steiner_key();   // x(xy)=y
const Identity& idempotent();    // xx=x
const Identity& moufang();       // x(y(xz))=((xy)x)z
const Identity& id4();           // (xz)(((xy)z)(yz))=((xz)((xy)z))(yz)
const Identity& extra10();       // (xy)(y(xz))=x(y((xy)z))
const Identity& assoc();         // x(yz)=(xy)z
}  // namespace builtin

/// Looks up STEINER_COMM, STEINER_KEY, IDEMPOTENT, MOUFANG, ID4, EXTRA10,
/// ASSOC.
std::optional<Identity> builtin_identity(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace steiner
