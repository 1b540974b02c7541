#include "steiner/term.hpp"

#include <algorithm>
#include <array>

#include "steiner/parallel.hpp"

namespace steiner {

struct Term::Node {
  Kind kind;
  char name = 0;
  std::size_t leaves = 1;
  std::optional<Term> left;
  std::optional<Term> right;
};

Term Term::one() {
  static const Term instance(std::make_shared<const Node>(Node{Kind::one, 0, 1, std::nullopt, std::nullopt}));
  return instance;
}

Term Term::variable(char name) {
  if (name < 'a' || name > 'z') throw PreconditionError("variable", std::string("bad variable name '") + name + "'");
  return Term(std::make_shared<const Node>(Node{Kind::variable, name, 1, std::nullopt, std::nullopt}));
}

Term Term::product(Term left, Term right) {
  std::size_t leaves = left.leaves() + right.leaves();
  return Term(std::make_shared<const Node>(Node{Kind::product, 0, leaves, std::move(left), std::move(right)}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
char Term::name() const noexcept { return node_->name; }
std::size_t Term::leaves() const noexcept { return node_->leaves; }

const Term& Term::left() const {
  if (!node_->left) throw PreconditionError("kind", "term is not a product");
  return *node_->left;
}

const Term& Term::right() const {
  if (!node_->right) throw PreconditionError("kind", "term is not a product");
  return *node_->right;
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == std::strong_ordering::equal; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.leaves() <=> b.leaves(); c != 0) return c;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::one: return std::strong_ordering::equal;
    case Term::Kind::variable: return a.name() <=> b.name();
    case Term::Kind::product:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
  return std::strong_ordering::equal;
}

namespace {

void collect_variables(const Term& t, std::vector<char>& out) {
  switch (t.kind()) {
    case Term::Kind::one: return;
    case Term::Kind::variable:
      if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
      return;
    case Term::Kind::product:
      collect_variables(t.left(), out);
      collect_variables(t.right(), out);
      return;
  }
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  Term parse_all() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty term", base_ + pos_);
    Term t = parse_sequence();
    skip();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", base_ + pos_);
      throw ParseError(std::string("illegal character '") + text_[pos_] + "'", base_ + pos_);
    }
    return t;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool at_factor_start() {
    skip();
    if (pos_ == text_.size()) return false;
    char c = text_[pos_];
    return (c >= 'a' && c <= 'z') || c == '1' || c == '(';
  }

  Term parse_sequence() {
    Term acc = parse_factor();
    while (at_factor_start()) acc = Term::product(std::move(acc), parse_factor());
    return acc;
  }

  Term parse_factor() {
    skip();
    if (pos_ == text_.size()) throw ParseError("expected a term", base_ + pos_);
    char c = text_[pos_];
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Term::variable(c);
    }
    if (c == '1') {
      ++pos_;
      return Term::one();
    }
    if (c == '(') {
      std::size_t open = pos_++;
      skip();
      if (pos_ < text_.size() && text_[pos_] == ')') throw ParseError("empty parentheses", base_ + pos_);
      if (pos_ == text_.size()) throw ParseError("unbalanced '('", base_ + open);
      Term inner = parse_sequence();
      skip();
      if (pos_ == text_.size()) throw ParseError("unbalanced '('", base_ + open);
      if (text_[pos_] != ')')
        throw ParseError(std::string("illegal character '") + text_[pos_] + "'", base_ + pos_);
      ++pos_;
      return inner;
    }
    if (c == ')') throw ParseError("unbalanced ')'", base_ + pos_);
    throw ParseError(std::string("illegal character '") + c + "'", base_ + pos_);
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::one: out += '1'; return;
    case Term::Kind::variable: out += t.name(); return;
    case Term::Kind::product:
      print_into(t.left(), out);
      if (t.right().is_product()) {
        out += '(';
        print_into(t.right(), out);
        out += ')';
      } else {
        print_into(t.right(), out);
      }
      return;
  }
}

Element eval_impl(const Term& t, const CayleyTable& table, const Assignment& assignment) {
  switch (t.kind()) {
    case Term::Kind::one: return LoopTable::identity;
    case Term::Kind::variable:
      for (const auto& [name, value] : assignment)
        if (name == t.name()) {
          if (value >= table.order())
            throw PreconditionError("range", std::string("value of ") + name + " is out of range");
          return value;
        }
      throw PreconditionError("unassigned", std::string("variable ") + t.name() + " is unassigned");
    case Term::Kind::product:
      return table(eval_impl(t.left(), table, assignment), eval_impl(t.right(), table, assignment));
  }
  return 0;
}

void compile(const Term& t, std::span<const char> slots, std::vector<std::int16_t>& ops, bool& uses_one) {
  switch (t.kind()) {
    case Term::Kind::one:
      ops.push_back(-1);
      uses_one = true;
      return;
    case Term::Kind::variable: {
      auto it = std::find(slots.begin(), slots.end(), t.name());
      if (it == slots.end())
        throw PreconditionError("unassigned", std::string("variable ") + t.name() + " has no slot");
      ops.push_back(static_cast<std::int16_t>(it - slots.begin()));
      return;
    }
    case Term::Kind::product:
      compile(t.left(), slots, ops, uses_one);
      compile(t.right(), slots, ops, uses_one);
      ops.push_back(-2);
      return;
  }
}

CheckReport check_impl(const Identity& identity, const CayleyTable& table) {
  const auto& vars = identity.variables();
  const TermProgram lhs(identity.lhs(), vars);
  const TermProgram rhs(identity.rhs(), vars);
  const std::size_t n = table.order();
  const std::size_t k = vars.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= n;

  auto decode = [&](std::size_t index, std::vector<Element>& values) {
    for (std::size_t i = k; i-- > 0;) {
      values[i] = static_cast<Element>(index % n);
      index /= n;
    }
  };
  auto fail = detail::first_failure(
      total, [&] { return std::vector<Element>(k); },
      [&](std::vector<Element>& values, std::size_t index) {
        decode(index, values);
        return lhs.run(table, values) != rhs.run(table, values);
      });

  CheckReport report;
  if (!fail) {
    report.assignments_checked = total;
    return report;
  }
  std::vector<Element> values(k);
  decode(*fail, values);
  Assignment witness;
  for (std::size_t i = 0; i < k; ++i) witness.emplace_back(vars[i], values[i]);
  report.holds = false;
  report.counterexample = std::move(witness);
  report.assignments_checked = *fail + 1;
  return report;
}

}  // namespace

Identity::Identity(Term lhs, Term rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  collect_variables(lhs_, variables_);
  collect_variables(rhs_, variables_);
  uses_one_ = contains_one(lhs_) || contains_one(rhs_);
}

Term parse_term(std::string_view text) { return Parser(text, 0).parse_all(); }

Identity parse_identity(std::string_view text) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("missing '='", text.size());
  if (std::size_t second = text.find('=', eq + 1); second != std::string_view::npos)
    throw ParseError("more than one '='", second);
  Term lhs = Parser(text.substr(0, eq), 0).parse_all();
  Term rhs = Parser(text.substr(eq + 1), eq + 1).parse_all();
  return Identity(std::move(lhs), std::move(rhs));
}

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::string print_identity(const Identity& i) { return print_term(i.lhs()) + " = " + print_term(i.rhs()); }

std::vector<char> variables_of(const Term& t) {
  std::vector<char> out;
  collect_variables(t, out);
  return out;
}

bool contains_one(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::one: return true;
    case Term::Kind::variable: return false;
    case Term::Kind::product: return contains_one(t.left()) || contains_one(t.right());
  }
  return false;
}

Element eval_term(const Term& t, const LoopTable& table, const Assignment& assignment) {
  return eval_impl(t, table.table(), assignment);
}

Element eval_term(const Term& t, const QuasigroupTable& table, const Assignment& assignment) {
  if (contains_one(t)) throw PreconditionError("one-in-quasigroup", "'1' cannot be evaluated in a quasigroup");
  return eval_impl(t, table.table(), assignment);
}

TermProgram::TermProgram(const Term& t, std::span<const char> slots) {
  compile(t, slots, ops_, uses_one_);
  std::size_t depth = 0;
  for (auto op : ops_) {
    if (op == multiply)
      --depth;
    else
      depth_ = std::max(depth_, ++depth);
  }
}

Element TermProgram::run(const CayleyTable& table, std::span<const Element> values) const {
  constexpr std::size_t inline_depth = 32;
  std::array<Element, inline_depth> small{};
  std::vector<Element> large;
  Element* stack = small.data();
  if (depth_ > inline_depth) {
    large.resize(depth_);
    stack = large.data();
  }
  std::size_t top = 0;
  for (auto op : ops_) {
    if (op >= 0) {
      stack[top++] = values[static_cast<std::size_t>(op)];
    } else if (op == push_one) {
      stack[top++] = LoopTable::identity;
    } else {
      --top;
      stack[top - 1] = table(stack[top - 1], stack[top]);
    }
  }
  return stack[0];
}

CheckReport check_identity(const Identity& identity, const LoopTable& table) {
  return check_impl(identity, table.table());
}

CheckReport check_identity(const Identity& identity, const QuasigroupTable& table) {
  if (identity.uses_one())
    throw PreconditionError("one-in-quasigroup", "identity mentions '1' but the table is a quasigroup");
  return check_impl(identity, table.table());
}

namespace builtin {

const Identity& steiner_comm() {
  static const Identity identity = parse_identity("xy=yx");
  return identity;
}

const Identity& steiner_key() {
  static const Identity identity = parse_identity("x(xy)=y");
  return identity;
}

const Identity& idempotent() {
  static const Identity identity = parse_identity("xx=x");
  return identity;
}

const Identity& moufang() {
  static const Identity identity = parse_identity("x(y(xz))=((xy)x)z");
  return identity;
}

const Identity& id4() {
  static const Identity identity = parse_identity("(xz)(((xy)z)(yz))=((xz)((xy)z))(yz)");
  return identity;
}

const Identity& extra10() {
  static const Identity identity = parse_identity("(xy)(y(xz))=x(y((xy)z))");
  return identity;
}

const Identity& assoc() {
  static const Identity identity = parse_identity("x(yz)=(xy)z");
  return identity;
}


}  // namespace builtin

std::optional<Identity> builtin_identity(std::string_view name) {
  if (name == "STEINER_COMM") return builtin::steiner_comm();
  if (name == "STEINER_KEY") return builtin::steiner_key();
  if (name == "IDEMPOTENT") return builtin::idempotent();
  if (name == "MOUFANG") return builtin::moufang();
  if (name == "ID4") return builtin::id4();
  if (name == "EXTRA10") return builtin::extra10();
  if (name == "ASSOC") return builtin::assoc();
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  return {"STEINER_COMM", "STEINER_KEY", "IDEMPOTENT", "MOUFANG", "ID4", "EXTRA10", "ASSOC"};
}

}  // namespace steiner
