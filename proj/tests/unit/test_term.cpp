#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "steiner/constructions.hpp"
#include "steiner/term.hpp"

using namespace steiner;

namespace {
Term v(char c) { return Term::variable(c); }
Term p(Term a, Term b) { return Term::product(std::move(a), std::move(b)); }

std::size_t offset_of(std::string_view text) {
  try {
    parse_identity(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string_view::npos;
}
std::size_t term_offset_of(std::string_view text) {
  try {
    parse_term(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string_view::npos;
}
}  // namespace

TEST_CASE("parse_term follows left-associative juxtaposition") {
  CHECK(parse_term("x(yz)") == p(v('x'), p(v('y'), v('z'))));
  CHECK(parse_term("xyz") == p(p(v('x'), v('y')), v('z')));
  CHECK(parse_term("((xy)x)z") == p(p(p(v('x'), v('y')), v('x')), v('z')));
  CHECK(parse_term(" x ( y z ) ") == parse_term("x(yz)"));
  CHECK(parse_term("1").kind() == Term::Kind::one);
  CHECK(parse_term("(((x)))") == v('x'));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(term_offset_of("") == 0);
  CHECK(term_offset_of("   ") == 3);
  CHECK(term_offset_of("x(y") == 1);
  CHECK(term_offset_of("xy)") == 2);
  CHECK(term_offset_of("x+y") == 1);
  CHECK(term_offset_of("x()") == 2);
  CHECK(term_offset_of("X") == 0);
  CHECK(offset_of("xy") == 2);
  CHECK(offset_of("x=y=z") == 3);
  CHECK(offset_of("x=") == 2);
  CHECK(offset_of("xy=y(x") == 4);
}

TEST_CASE("parse_identity") {
  auto comm = parse_identity("xy=yx");
  CHECK(comm.variables() == std::vector<char>{'x', 'y'});
  CHECK(comm.lhs() == p(v('x'), v('y')));
  auto key = parse_identity("x(xy)=y");
  CHECK(key.rhs() == v('y'));
  auto trivial = parse_identity("1=1");
  CHECK(trivial.variables().empty());
  CHECK(trivial.uses_one());
  CHECK(parse_identity("zx = y").variables() == std::vector<char>{'z', 'x', 'y'});
}

TEST_CASE("print_term uses minimal parentheses") {
  CHECK(print_term(p(p(v('x'), v('y')), v('z'))) == "xyz");
  CHECK(print_term(p(v('x'), p(v('y'), v('z')))) == "x(yz)");
  CHECK(print_identity(builtin::id4()) == "xz(xyz(yz)) = xz(xyz)(yz)");
  CHECK(print_identity(builtin::moufang()) == "x(y(xz)) = xyxz");
  CHECK(parse_identity(print_identity(builtin::id4())) == builtin::id4());
}

TEST_CASE("property: parse(print(t)) == t and print(parse(s)) is idempotent") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Term t = steiner::testing::random_term(rng, "xyzuvw", 10, true);
    const std::string s = print_term(t);
    CHECK(parse_term(s) == t);
    CHECK(print_term(parse_term(s)) == s);
  }
}

TEST_CASE("term order is total and consistent with equality") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Term a = steiner::testing::random_term(rng, "xy", 4, false);
    Term b = steiner::testing::random_term(rng, "xy", 4, false);
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
  }
}

TEST_CASE("eval_term") {
  auto loop = steiner_loop_10();
  // Loop element k+1 is the point 3i+j, i.e. (i,j) in Z3 x Z3.
  auto elem = [](Element i, Element j) { return 3 * i + j + 1; };
  CHECK(eval_term(parse_term("xy"), loop, {{'x', elem(0, 1)}, {'y', elem(1, 0)}}) == elem(2, 2));
  for (Element x = 0; x < 10; ++x)
    for (Element y = 0; y < 10; ++y) CHECK(eval_term(parse_term("x(xy)"), loop, {{'x', x}, {'y', y}}) == y);
  CHECK(eval_term(Term::one(), loop, {}) == 0);
  CHECK_THROWS_AS(eval_term(parse_term("xy"), loop, {{'x', 1}}), PreconditionError);
  CHECK_THROWS_AS(eval_term(parse_term("x1"), sts_to_quasigroup(fano()), {{'x', 1}}), PreconditionError);
  CHECK_THROWS_AS(eval_term(parse_term("x"), loop, {{'x', 10}}), PreconditionError);
}

TEST_CASE("check_identity on the order-10 Steiner loop") {
  auto loop = steiner_loop_10();
  auto id4 = check_identity(builtin::id4(), loop);
  CHECK(id4.holds);
  CHECK(id4.assignments_checked == 1000);
  CHECK_FALSE(id4.counterexample.has_value());

  auto moufang = check_identity(builtin::moufang(), loop);
  CHECK_FALSE(moufang.holds);
  auto oracle = steiner::testing::moufang_failure(loop.table());
  REQUIRE(oracle.has_value());
  REQUIRE(moufang.counterexample.has_value());
  const Assignment expected{{'x', (*oracle)[0]}, {'y', (*oracle)[1]}, {'z', (*oracle)[2]}};
  CHECK(*moufang.counterexample == expected);
  CHECK(moufang.assignments_checked == (*oracle)[0] * 100 + (*oracle)[1] * 10 + (*oracle)[2] + 1);

  CHECK(check_identity(builtin::extra10(), loop).holds);
  CHECK(check_identity(parse_identity("x1=x"), loop).holds);
  CHECK(check_identity(parse_identity("1=1"), loop).assignments_checked == 1);
}

TEST_CASE("check_identity on quasigroups") {
  auto q = sts_to_quasigroup(fano());
  CHECK(check_identity(builtin::idempotent(), q).holds);
  CHECK(check_identity(builtin::steiner_key(), q).holds);
  CHECK_THROWS_AS(check_identity(parse_identity("x1=x"), q), PreconditionError);
}

TEST_CASE("property: Steiner identities agree with is_steiner_loop") {
  std::vector<LoopTable> loops{cyclic_group(4), cyclic_group(3), cyclic_group(2), elementary_abelian_loop(3),
                               steiner_loop_10(), moufang_loop_12()};
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) loops.push_back(sts_to_loop(steiner::testing::random_sts(9 + 6 * (i % 2), rng)));
  for (const auto& t : loops) {
    const bool by_identities =
        check_identity(builtin::steiner_comm(), t).holds && check_identity(builtin::steiner_key(), t).holds;
    CHECK(by_identities == is_steiner_loop(t));
    CHECK(check_identity(builtin::assoc(), t).holds == !steiner::testing::assoc_failure(t.table()).has_value());
  }
}

TEST_CASE("groups satisfy the Moufang identity") {
  for (int n = 1; n <= 8; ++n) CHECK(check_identity(builtin::moufang(), cyclic_group(n)).holds);
  for (int n = 0; n <= 4; ++n) CHECK(check_identity(builtin::moufang(), elementary_abelian_loop(n)).holds);
}

TEST_CASE("builtin registry") {
  for (const auto& name : builtin_names()) CHECK(builtin_identity(name).has_value());
  CHECK_FALSE(builtin_identity("NOPE").has_value());
  CHECK(*builtin_identity("EXTRA10") == parse_identity("(xy)(y(xz))=x(y((xy)z))"));
}
