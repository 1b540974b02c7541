#include "steiner/explorer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "steiner/constructions.hpp"

namespace steiner {

namespace {

// One product step of the normalizer; both factors are already normal.
Term combine(const Term& l, const Term& r) {
  if (l.kind() == Term::Kind::one) return r;
  if (r.kind() == Term::Kind::one) return l;
  if (l == r) return Term::one();
  if (r.is_product()) {
    if (r.left() == l) return r.right();
    if (r.right() == l) return r.left();
  }
  if (l.is_product()) {
    if (l.left() == r) return l.right();
    if (l.right() == r) return l.left();
  }
  return l < r ? Term::product(l, r) : Term::product(r, l);
}

using Fingerprint = std::vector<std::uint8_t>;

Fingerprint fingerprint(const Term& t, const std::vector<char>& variables, const CayleyTable& table) {
  const std::size_t n = table.order();
  const std::size_t k = variables.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= n;
  const TermProgram program(t, variables);
  Fingerprint out(total);
  std::vector<Element> values(k, 0);
  for (std::size_t index = 0; index < total; ++index) {
    out[index] = static_cast<std::uint8_t>(program.run(table, values));
    for (std::size_t i = k; i-- > 0;) {
      if (++values[i] < n) break;
      values[i] = 0;
    }
  }
  return out;
}

void require_explorable(const LoopTable& t, const char* role) {
  if (!is_steiner_loop(t)) throw PreconditionError("not-steiner", std::string(role) + " is not a Steiner loop");
  if (t.order() > 256) throw PreconditionError("guard", std::string(role) + " is larger than 256 elements");
}

}  // namespace

std::vector<Term> enumerate_terms(const std::vector<char>& variables, std::size_t max_leaves) {
  if (max_leaves > max_explorer_leaves)
    throw PreconditionError("guard", "max_leaves " + std::to_string(max_leaves) + " exceeds " +
                                         std::to_string(max_explorer_leaves));
  std::set<char> distinct(variables.begin(), variables.end());
  if (distinct.size() != variables.size()) throw PreconditionError("variables", "variables must be distinct");

  std::vector<std::vector<Term>> by_leaves(max_leaves + 1);
  if (max_leaves >= 1)
    for (char c : distinct) by_leaves[1].push_back(Term::variable(c));
  for (std::size_t n = 2; n <= max_leaves; ++n) {
    for (std::size_t i = 1; i <= n / 2; ++i) {
      const auto& small = by_leaves[i];
      const auto& large = by_leaves[n - i];
      for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = (i == n - i ? a : 0); b < large.size(); ++b)
          by_leaves[n].push_back(Term::product(small[a], large[b]));
    }
    std::sort(by_leaves[n].begin(), by_leaves[n].end());
  }
  std::vector<Term> out;
  for (auto& level : by_leaves) out.insert(out.end(), level.begin(), level.end());
  return out;
}

Term steiner_normalize(const Term& t) {
  if (!t.is_product()) return t;
  return combine(steiner_normalize(t.left()), steiner_normalize(t.right()));
}

std::vector<FoundIdentity> find_identities(const LoopTable& target, const std::vector<NamedLoop>& witnesses,
                                           const ExploreOptions& options) {
  require_explorable(target, "target");
  for (const NamedLoop& w : witnesses) require_explorable(w.loop, "witness");
  if (witnesses.empty()) return {};

  std::vector<Term> terms;
  for (Term& t : enumerate_terms(options.variables, options.max_leaves))
    if (steiner_normalize(t) == t) terms.push_back(std::move(t));

  // Terms are sorted, so each class lists its minimum first.
  std::map<Fingerprint, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < terms.size(); ++i)
    classes[fingerprint(terms[i], options.variables, target.table())].push_back(i);

  std::vector<std::map<std::size_t, Fingerprint>> witness_cache(witnesses.size());
  auto witness_print = [&](std::size_t w, std::size_t term) -> const Fingerprint& {
    auto it = witness_cache[w].find(term);
    if (it == witness_cache[w].end())
      it = witness_cache[w].emplace(term, fingerprint(terms[term], options.variables, witnesses[w].loop.table())).first;
    return it->second;
  };

  std::vector<FoundIdentity> found;
  for (const auto& [print, members] : classes) {
    const std::size_t rep = members.front();
    for (std::size_t m = 1; m < members.size(); ++m) {
      const std::size_t other = members[m];
      if (steiner_normalize(terms[rep]) == steiner_normalize(terms[other])) continue;
      for (std::size_t w = 0; w < witnesses.size(); ++w) {
        if (witness_print(w, rep) != witness_print(w, other)) {
          found.push_back({Identity(terms[rep], terms[other]), witnesses[w].name});
          break;
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const FoundIdentity& a, const FoundIdentity& b) {
    const auto la = a.identity.lhs().leaves() + a.identity.rhs().leaves();
    const auto lb = b.identity.lhs().leaves() + b.identity.rhs().leaves();
    if (la != lb) return la < lb;
    if (a.identity.lhs() != b.identity.lhs()) return a.identity.lhs() < b.identity.lhs();
    return a.identity.rhs() < b.identity.rhs();
  });
  return found;
}

std::vector<NamedLoop> default_witnesses() {
  return {{"sts13-1", sts_to_loop(sts13_classes()[0])},
          {"sts13-2", sts_to_loop(sts13_classes()[1])},
          {"pg3", sts_to_loop(projective(3))},
          {"bose2", sts_to_loop(bose(2))}};
}

}  // namespace steiner
