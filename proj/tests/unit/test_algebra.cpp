#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "steiner/algebra.hpp"
#include "steiner/constructions.hpp"

using namespace steiner;

namespace {

std::vector<RawTriple> fano_raw() {
  return {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
}

std::size_t count_rule(const ValidationReport& r, const std::string& rule) {
  return static_cast<std::size_t>(
      std::count_if(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; }));
}

}  // namespace

TEST_CASE("validate_sts accepts the Fano plane and STS(3)") {
  auto raw = fano_raw();
  // Oracle: every one of the 21 pairs appears in exactly one listed block.
  for (long long a = 0; a < 7; ++a)
    for (long long b = a + 1; b < 7; ++b) {
      int hits = 0;
      for (const auto& blk : raw)
        hits += std::count(blk.begin(), blk.end(), a) && std::count(blk.begin(), blk.end(), b);
      CHECK(hits == 1);
    }
  CHECK(validate_sts(7, raw).valid);
  std::vector<RawTriple> three{{0, 1, 2}};
  CHECK(validate_sts(3, three).valid);
  CHECK(validate_sts(0, {}).valid);
  CHECK(validate_sts(1, {}).valid);
}

TEST_CASE("validate_sts reports the pairs of a deleted block") {
  auto raw = fano_raw();
  raw.erase(raw.begin() + 3);  // {1,3,5}
  auto report = validate_sts(7, raw);
  CHECK_FALSE(report.valid);
  REQUIRE(count_rule(report, "pair-uncovered") == 3);
  CHECK(report.violations[0].witness == std::vector<long long>{1, 3});
  CHECK(report.violations[1].witness == std::vector<long long>{1, 5});
  CHECK(report.violations[2].witness == std::vector<long long>{3, 5});
}

TEST_CASE("validate_sts flags garbage without throwing") {
  std::vector<RawTriple> raw{{0, 1, 1}, {0, 1, 9}, {0, 1, 2}, {0, 1, 2}};
  auto report = validate_sts(3, raw);
  CHECK_FALSE(report.valid);
  CHECK(count_rule(report, "repeated-point") == 1);
  CHECK(count_rule(report, "point-range") == 1);
  CHECK(count_rule(report, "pair-covered-twice") == 3);
  CHECK(validate_sts(2, {}).violations.size() == 1);
  CHECK_FALSE(validate_sts(-1, {}).valid);
}

TEST_CASE("validation report is capped") {
  auto report = validate_sts(40, {});
  CHECK(report.violations.size() == ValidationReport::max_violations);
  CHECK(report.truncated == 40 * 39 / 2 - ValidationReport::max_violations);
}

TEST_CASE("TripleSystem canonicalizes and rejects invalid input") {
  TripleSystem s(3, {{2, 0, 1}});
  CHECK(s.blocks() == std::vector<Block>{{0, 1, 2}});
  TripleSystem t(7, {{5, 4, 2}, {6, 3, 2}, {1, 4, 6}, {5, 3, 1}, {0, 5, 6}, {4, 0, 3}, {0, 1, 2}});
  CHECK(t == fano());
  CHECK_THROWS_AS(TripleSystem(7, {{0, 1, 2}}), ValidationError);
  CHECK_THROWS_AS(TripleSystem(5, {}), ValidationError);
}

TEST_CASE("tables must be Latin squares; loops need identity 0") {
  CHECK_THROWS_AS(CayleyTable(2, {0, 1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(CayleyTable(2, {0, 1, 1}), ValidationError);
  CHECK_THROWS_AS(CayleyTable(2, {0, 2, 1, 0}), ValidationError);
  CHECK_THROWS_AS(CayleyTable(0, {}), ValidationError);
  CHECK_THROWS_AS(LoopTable(CayleyTable(2, {1, 0, 0, 1})), ValidationError);
  CHECK_NOTHROW(QuasigroupTable(CayleyTable(2, {1, 0, 0, 1})));
  CHECK_THROWS_AS(CayleyTable::from_rows({{0, 1}, {1}}), ValidationError);
}

TEST_CASE("is_steiner_loop") {
  CHECK(is_steiner_loop(elementary_abelian_loop(2)));
  // Z4: 1 has order 4, so 1(1*1) = 3 != 1.
  CHECK_FALSE(is_steiner_loop(cyclic_group(4)));
  CHECK(is_steiner_loop(steiner_loop_10()));
  CHECK(is_steiner_loop(cyclic_group(2)));
  CHECK(is_steiner_loop(cyclic_group(1)));
}

TEST_CASE("is_steiner_quasigroup") {
  // AG(2,3) as x.y = -x-y over Z3 x Z3.
  std::vector<Element> cells(81);
  for (Element p = 0; p < 9; ++p)
    for (Element q = 0; q < 9; ++q)
      cells[p * 9 + q] = 3 * ((6 - p / 3 - q / 3) % 3) + (6 - p % 3 - q % 3) % 3;
  QuasigroupTable ag(CayleyTable(9, cells));
  CHECK(is_steiner_quasigroup(ag));
  CHECK(sts_to_quasigroup(affine_ag23()) == ag);
  CHECK_FALSE(is_steiner_quasigroup(QuasigroupTable(elementary_abelian_loop(2).table())));
  CHECK_FALSE(is_steiner_quasigroup(QuasigroupTable(cyclic_group(3).table())));
  CHECK(is_steiner_quasigroup(QuasigroupTable(CayleyTable(1, {0}))));
}

TEST_CASE("STS(3) converts to the forced 3x3 table and to the Klein group") {
  TripleSystem s(3, {{0, 1, 2}});
  auto q = sts_to_quasigroup(s);
  CHECK(q.table() == CayleyTable::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));
  auto loop = quasigroup_to_loop(q);
  CHECK(loop.order() == 4);
  CHECK_FALSE(steiner::testing::assoc_failure(loop.table()).has_value());
  CHECK(loop == elementary_abelian_loop(2));
  CHECK(loop_to_quasigroup(loop) == q);
  CHECK(quasigroup_to_sts(q) == s);
}

TEST_CASE("degenerate systems") {
  TripleSystem one(1, {});
  auto q = sts_to_quasigroup(one);
  CHECK(q.table() == CayleyTable(1, {0}));
  auto loop = quasigroup_to_loop(q);
  CHECK(loop == cyclic_group(2));
  CHECK(loop_to_sts(loop) == one);
  CHECK_THROWS_AS(sts_to_quasigroup(TripleSystem(0, {})), PreconditionError);
  CHECK_THROWS_AS(loop_to_quasigroup(cyclic_group(1)), PreconditionError);
}

TEST_CASE("conversions refuse non-Steiner input") {
  auto z4 = cyclic_group(4);
  CHECK_THROWS_AS(loop_to_quasigroup(z4), PreconditionError);
  QuasigroupTable not_steiner(cyclic_group(3).table());
  CHECK_THROWS_AS(quasigroup_to_sts(not_steiner), PreconditionError);
  CHECK_THROWS_AS(quasigroup_to_loop(not_steiner), PreconditionError);
}

TEST_CASE("Fano quasigroup satisfies the Steiner quasigroup identities") {
  auto q = sts_to_quasigroup(fano());
  for (Element x = 0; x < 7; ++x) {
    CHECK(q(x, x) == x);
    for (Element y = 0; y < 7; ++y) {
      CHECK(q(x, y) == q(y, x));
      CHECK(q(x, q(x, y)) == y);
    }
  }
}

TEST_CASE("property: conversions round-trip on random systems") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t v = std::vector<std::size_t>{7, 9, 13, 15, 19}[trial % 5];
    TripleSystem s = steiner::testing::random_sts(v, rng);
    auto q = sts_to_quasigroup(s);
    REQUIRE(is_steiner_quasigroup(q));
    CHECK(quasigroup_to_sts(q) == s);
    auto loop = quasigroup_to_loop(q);
    CHECK(loop.order() == v + 1);
    CHECK(is_steiner_loop(loop));
    for (Element x = 1; x < loop.order(); ++x) CHECK(loop(x, x) == LoopTable::identity);
    CHECK(loop_to_quasigroup(loop) == q);
  }
}
