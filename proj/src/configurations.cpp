#include "steiner/configurations.hpp"

#include <algorithm>
#include <map>

#include "steiner/parallel.hpp"

namespace steiner {

namespace {

Block sorted_block(Element a, Element b, Element c) {
  Block blk{a, b, c};
  std::sort(blk.begin(), blk.end());
  return blk;
}

bool is_pasch_triple(const QuasigroupTable& q, Element x, Element y, Element z) {
  if (x == y || y == z || x == z) return false;
  if (q(x, y) == z) return false;
  return q(x, q(y, z)) == q(q(x, y), z);
}

}  // namespace

bool has_pasch_shape(const std::array<Block, 4>& blocks) {
  std::map<Element, int> degree;
  for (const Block& b : blocks) {
    if (b[0] == b[1] || b[0] == b[2] || b[1] == b[2]) return false;
    for (Element p : b) ++degree[p];
  }
  if (degree.size() != 6) return false;
  for (auto [point, d] : degree)
    if (d != 2) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int shared = 0;
      for (Element p : blocks[i]) shared += static_cast<int>(std::count(blocks[j].begin(), blocks[j].end(), p));
      if (shared != 1) return false;
    }
  return true;
}

PaschConfig::PaschConfig(std::array<Block, 4> blocks) : blocks_(blocks) {
  for (Block& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end());
  if (!has_pasch_shape(blocks_)) throw ValidationError("blocks do not form a Pasch configuration");
}

std::vector<Triple> associating_triples(const QuasigroupTable& q) {
  if (!is_steiner_quasigroup(q)) throw PreconditionError("not-steiner", "quasigroup is not a Steiner quasigroup");
  const auto n = static_cast<Element>(q.order());
  std::vector<Triple> out;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (is_pasch_triple(q, x, y, z)) out.push_back({x, y, z});
  return out;
}

PaschConfig pasch_from_triple(const QuasigroupTable& q, Element x, Element y, Element z) {
  if (!is_pasch_triple(q, x, y, z)) throw PreconditionError("not-pasch", "triple is not an associating triple");
  const Element xy = q(x, y), yz = q(y, z), c = q(x, yz);
  return PaschConfig({sorted_block(x, y, xy), sorted_block(y, z, yz), sorted_block(x, yz, c), sorted_block(xy, z, c)});
}

std::set<PaschConfig> find_pasch_configs(const TripleSystem& s) {
  std::set<PaschConfig> out;
  if (s.points() <= 3) return out;
  const QuasigroupTable q = sts_to_quasigroup(s);
  for (const Triple& t : associating_triples(q)) out.insert(pasch_from_triple(q, t[0], t[1], t[2]));
  return out;
}

std::set<PaschConfig> find_pasch_configs_by_blocks(const TripleSystem& s) {
  std::set<PaschConfig> out;
  const auto& b = s.blocks();
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          std::array<Block, 4> quad{b[i], b[j], b[k], b[l]};
          if (has_pasch_shape(quad)) out.insert(PaschConfig(quad));
        }
  return out;
}

bool is_anti_pasch(const TripleSystem& s) { return find_pasch_configs(s).empty(); }

std::vector<std::size_t> pasch_counts_per_point(const TripleSystem& s) {
  const std::size_t v = s.points();
  std::vector<std::size_t> counts(v, 0);
  if (v <= 3) return counts;
  const QuasigroupTable q = sts_to_quasigroup(s);
  // A Pasch configuration through p uses two blocks {p,a,b}, {p,c,d} and
  // closes with {a,c,e}, {b,d,e} (ac = bd) or {a,d,e}, {b,c,e} (ad = bc).
  std::vector<std::pair<Element, Element>> lines;
  for (Element p = 0; p < v; ++p) {
    lines.clear();
    for (Element a = 0; a < v; ++a)
      if (a != p && q(p, a) > a) lines.emplace_back(a, q(p, a));
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        auto [a, b] = lines[i];
        auto [c, d] = lines[j];
        counts[p] += (q(a, c) == q(b, d)) + (q(a, d) == q(b, c));
      }
  }
  return counts;
}

bool triple_closes_fano(const QuasigroupTable& q, Element x, Element y, Element z) {
  const auto n = q.order();
  if (x >= n || y >= n || z >= n) throw PreconditionError("range", "point out of range");
  if (x == y || y == z || x == z) throw PreconditionError("not-distinct", "points must be pairwise distinct");
  if (q(x, y) == z) throw PreconditionError("collinear", "points lie on a common block");
  if (q(x, q(y, z)) != q(q(x, y), z)) throw PreconditionError("not-associating", "x(yz) != (xy)z");
  return q(x, q(y, z)) == q(y, q(x, z)) && q(q(x, y), q(y, z)) == q(x, z);
}

std::vector<Element> subsystem_generated(const TripleSystem& s, const std::vector<Element>& points) {
  const std::size_t v = s.points();
  std::vector<std::uint8_t> in(v, 0);
  std::vector<Element> members;
  for (Element p : points) {
    if (p >= v) throw PreconditionError("range", "point " + std::to_string(p) + " out of range");
    if (!in[p]) {
      in[p] = 1;
      members.push_back(p);
    }
  }
  if (members.size() < 2) {
    std::sort(members.begin(), members.end());
    return members;
  }
  const QuasigroupTable q = sts_to_quasigroup(s);
  // Every pair (members[i], members[j]) with j < i is completed exactly once;
  // new members are appended and paired against all earlier ones.
  for (std::size_t i = 1; i < members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Element c = q(members[i], members[j]);
      if (!in[c]) {
        in[c] = 1;
        members.push_back(c);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

CheckReport every_pasch_generates_fano(const TripleSystem& s) {
  CheckReport report;
  const std::size_t v = s.points();
  const std::size_t total = v * v * v;
  if (v <= 3) {
    report.assignments_checked = total;
    return report;
  }
  const QuasigroupTable q = sts_to_quasigroup(s);
  auto decode = [v](std::size_t i) {
    return Triple{static_cast<Element>(i / (v * v)), static_cast<Element>(i / v % v), static_cast<Element>(i % v)};
  };
  auto fail = detail::first_failure(total, [&](std::size_t i) {
    auto [x, y, z] = decode(i);
    return is_pasch_triple(q, x, y, z) && !triple_closes_fano(q, x, y, z);
  });
  if (!fail) {
    report.assignments_checked = total;
    return report;
  }
  auto [x, y, z] = decode(*fail);
  report.holds = false;
  report.counterexample = Assignment{{'x', x}, {'y', y}, {'z', z}};
  report.assignments_checked = *fail + 1;
  return report;
}

}  // namespace steiner
