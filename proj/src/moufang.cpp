#include "steiner/moufang.hpp"

#include <algorithm>
#include <map>

#include "steiner/configurations.hpp"
#include "steiner/parallel.hpp"

namespace steiner {

namespace {

std::array<Element, 3> decode_triple(std::size_t index, std::size_t m) {
  return {static_cast<Element>(index / (m * m)), static_cast<Element>(index / m % m), static_cast<Element>(index % m)};
}

MTReport finish(MtMethod method, std::optional<std::size_t> fail, std::size_t m) {
  MTReport report;
  report.method = method;
  if (!fail) {
    report.triples_examined = static_cast<std::uint64_t>(m) * m * m;
    return report;
  }
  report.satisfies = false;
  report.counterexample = decode_triple(*fail, m);
  report.triples_examined = *fail + 1;
  return report;
}

void require_steiner(const LoopTable& t) {
  if (!is_steiner_loop(t)) throw PreconditionError("not-steiner", "method requires a Steiner loop");
}

}  // namespace

std::string to_string(MtMethod method) {
  switch (method) {
    case MtMethod::definition: return "definition";
    case MtMethod::prop1: return "prop1";
    case MtMethod::fano: return "fano";
  }
  return "?";
}

std::vector<Element> subloop_generated(const LoopTable& t, const std::vector<Element>& generators) {
  const std::size_t m = t.order();
  std::vector<std::uint8_t> in(m, 0);
  std::vector<Element> members{LoopTable::identity};
  in[LoopTable::identity] = 1;
  for (Element g : generators) {
    if (g >= m) throw PreconditionError("range", "element " + std::to_string(g) + " out of range");
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  }
  // Each ordered pair of members is multiplied once; members appended later
  // are paired with everything before them in both orders.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Element p : {t(members[i], members[j]), t(members[j], members[i])})
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_group_on(const LoopTable& t, const std::vector<Element>& subset) {
  const std::size_t m = t.order();
  std::vector<std::uint8_t> in(m, 0);
  for (Element e : subset) {
    if (e >= m) throw PreconditionError("range", "element " + std::to_string(e) + " out of range");
    in[e] = 1;
  }
  if (!in[LoopTable::identity]) throw PreconditionError("not-closed", "subset does not contain the identity");
  for (Element a : subset)
    for (Element b : subset)
      if (!in[t(a, b)]) throw PreconditionError("not-closed", "subset is not closed under the product");
  for (Element a : subset)
    for (Element b : subset)
      for (Element c : subset)
        if (t(a, t(b, c)) != t(t(a, b), c)) return false;
  return true;
}

MTReport satisfies_mt_definition(const LoopTable& t, DefinitionOptions options) {
  const std::size_t m = t.order();
  const bool shortcuts = options.steiner_shortcuts && is_steiner_loop(t);
  using Memo = std::map<std::array<Element, 3>, bool>;
  auto fail = detail::first_failure(
      m * m * m, [] { return Memo{}; },
      [&](Memo& memo, std::size_t index) {
        auto [x, y, z] = decode_triple(index, m);
        if (t(x, t(y, z)) != t(t(x, y), z)) return false;
        if (shortcuts) {
          // <x,y,z> has at most two non-identity generators, or z = xy:
          // a subloop of order <= 4 of a Steiner loop, always a group.
          if (x == 0 || y == 0 || z == 0 || x == y || y == z || x == z || t(x, y) == z) return false;
        }
        std::array<Element, 3> key{x, y, z};
        std::sort(key.begin(), key.end());
        auto it = memo.find(key);
        if (it == memo.end()) {
          bool group = is_group_on(t, subloop_generated(t, {x, y, z}));
          it = memo.emplace(key, group).first;
        }
        return !it->second;
      },
      1 << 12);
  return finish(MtMethod::definition, fail, m);
}

MTReport satisfies_mt_prop1(const LoopTable& t) {
  require_steiner(t);
  const std::size_t m = t.order();
  auto fail = detail::first_failure(m * m * m, [&](std::size_t index) {
    auto [x, y, z] = decode_triple(index, m);
    const Element left = t(x, t(y, z));
    return left == t(t(x, y), z) && left != t(y, t(x, z));
  });
  return finish(MtMethod::prop1, fail, m);
}

MTReport satisfies_mt_fano(const LoopTable& t) {
  require_steiner(t);
  if (t.order() < 2) throw PreconditionError("order", "method requires order >= 2");
  CheckReport inner = every_pasch_generates_fano(loop_to_sts(t));
  MTReport report;
  report.method = MtMethod::fano;
  report.satisfies = inner.holds;
  report.triples_examined = inner.assignments_checked;
  if (inner.counterexample) {
    const auto& a = *inner.counterexample;
    // Quasigroup point p is loop element p + 1.
    report.counterexample = std::array<Element, 3>{a[0].second + 1, a[1].second + 1, a[2].second + 1};
  }
  return report;
}

CheckReport is_moufang(const LoopTable& t) { return check_identity(builtin::moufang(), t); }

}  // namespace steiner
