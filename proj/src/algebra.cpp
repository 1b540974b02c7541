#include "steiner/algebra.hpp"

#include <algorithm>
#include <string>

namespace steiner {

namespace {

std::string cell_name(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

void require_steiner_quasigroup(const QuasigroupTable& q) {
  if (!is_steiner_quasigroup(q))
    throw PreconditionError("not-steiner", "quasigroup is not a Steiner quasigroup");
}

void require_steiner_loop(const LoopTable& t) {
  if (!is_steiner_loop(t)) throw PreconditionError("not-steiner", "loop is not a Steiner loop");
}

}  // namespace

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> cells)
    : order_(order), cells_(std::move(cells)) {
  if (order_ == 0) throw ValidationError("table order must be positive");
  if (cells_.size() != order_ * order_)
    throw ValidationError("table has " + std::to_string(cells_.size()) + " cells, expected " +
                          std::to_string(order_ * order_));
  std::vector<std::uint8_t> seen(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < order_; ++c) {
      Element e = cells_[r * order_ + c];
      if (e >= order_) throw ValidationError("entry out of range at " + cell_name(r, c));
      if (seen[e]++) throw ValidationError("row " + std::to_string(r) + " repeats " + std::to_string(e));
    }
  }
  for (std::size_t c = 0; c < order_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < order_; ++r) {
      if (seen[cells_[r * order_ + c]]++)
        throw ValidationError("column " + std::to_string(c) + " repeats " +
                              std::to_string(cells_[r * order_ + c]));
    }
  }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> cells;
  cells.reserve(rows.size() * rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw ValidationError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                            " entries, expected " + std::to_string(rows.size()));
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  return CayleyTable(rows.size(), std::move(cells));
}

QuasigroupTable::QuasigroupTable(CayleyTable table) : table_(std::move(table)) {}

LoopTable::LoopTable(CayleyTable table) : table_(std::move(table)) {
  for (Element x = 0; x < table_.order(); ++x) {
    if (table_(identity, x) != x || table_(x, identity) != x)
      throw ValidationError("element 0 is not a two-sided identity (fails at " + std::to_string(x) + ")");
  }
}

void ValidationReport::add(std::string rule, std::vector<long long> witness) {
  valid = false;
  if (violations.size() < max_violations)
    violations.push_back({std::move(rule), std::move(witness)});
  else
    ++truncated;
}

ValidationReport validate_sts(long long v, std::span<const RawTriple> blocks) {
  ValidationReport report;
  if (v < 0) {
    report.add("point-range", {v});
    return report;
  }
  const auto n = static_cast<std::size_t>(v);
  // Pair (a,b), a<b, is indexed a*n+b; counts saturate at 2.
  std::vector<std::uint8_t> cover(n * n, 0);
  for (const RawTriple& raw : blocks) {
    bool in_range = true;
    for (long long p : raw) {
      if (p < 0 || p >= v) {
        report.add("point-range", {raw[0], raw[1], raw[2]});
        in_range = false;
        break;
      }
    }
    if (!in_range) continue;
    if (raw[0] == raw[1] || raw[0] == raw[2] || raw[1] == raw[2]) {
      report.add("repeated-point", {raw[0], raw[1], raw[2]});
      continue;
    }
    RawTriple b = raw;
    std::sort(b.begin(), b.end());
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      auto& c = cover[static_cast<std::size_t>(b[i]) * n + static_cast<std::size_t>(b[j])];
      if (c == 1) report.add("pair-covered-twice", {b[i], b[j]});
      if (c < 2) ++c;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (cover[a * n + b] == 0)
        report.add("pair-uncovered", {static_cast<long long>(a), static_cast<long long>(b)});
  return report;
}

TripleSystem::TripleSystem(std::size_t v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
  std::vector<RawTriple> raw;
  raw.reserve(blocks_.size());
  for (const Block& b : blocks_) raw.push_back({b[0], b[1], b[2]});
  ValidationReport report = validate_sts(static_cast<long long>(v_), raw);
  if (!report.valid) {
    const Violation& first = report.violations.front();
    std::string w;
    for (long long p : first.witness) w += (w.empty() ? "" : " ") + std::to_string(p);
    throw ValidationError("not a Steiner triple system: " + first.rule + " [" + w + "]");
  }
  for (Block& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end());
}

bool is_steiner_loop(const LoopTable& t) {
  const auto m = static_cast<Element>(t.order());
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      if (t(x, y) != t(y, x) || t(x, t(x, y)) != y) return false;
  return true;
}

bool is_steiner_quasigroup(const QuasigroupTable& q) {
  const auto n = static_cast<Element>(q.order());
  for (Element x = 0; x < n; ++x) {
    if (q(x, x) != x) return false;
    for (Element y = 0; y < n; ++y)
      if (q(x, y) != q(y, x) || q(x, q(x, y)) != y) return false;
  }
  return true;
}

bool is_associative(const CayleyTable& t) {
  const auto n = static_cast<Element>(t.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t(x, t(y, z)) != t(t(x, y), z)) return false;
  return true;
}

QuasigroupTable sts_to_quasigroup(const TripleSystem& s) {
  const std::size_t n = s.points();
  if (n == 0) throw PreconditionError("empty", "the empty triple system has no quasigroup");
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x) cells[x * n + x] = x;
  for (const Block& b : s.blocks()) {
    for (int i = 0; i < 3; ++i) {
      Element x = b[i], y = b[(i + 1) % 3], z = b[(i + 2) % 3];
      cells[x * n + y] = z;
      cells[y * n + x] = z;
    }
  }
  return QuasigroupTable(CayleyTable(n, std::move(cells)));
}

TripleSystem quasigroup_to_sts(const QuasigroupTable& q) {
  require_steiner_quasigroup(q);
  const auto n = static_cast<Element>(q.order());
  std::vector<Block> blocks;
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (Element z = q(x, y); z > y) blocks.push_back({x, y, z});
  return TripleSystem(n, std::move(blocks));
}

LoopTable quasigroup_to_loop(const QuasigroupTable& q) {
  require_steiner_quasigroup(q);
  const std::size_t n = q.order();
  const std::size_t m = n + 1;
  std::vector<Element> cells(m * m);
  for (Element x = 0; x < m; ++x) {
    cells[x] = x;
    cells[x * m] = x;
  }
  for (Element x = 1; x < m; ++x)
    for (Element y = 1; y < m; ++y)
      cells[x * m + y] = x == y ? LoopTable::identity : q(x - 1, y - 1) + 1;
  return LoopTable(CayleyTable(m, std::move(cells)));
}

LoopTable sts_to_loop(const TripleSystem& s) {
  return quasigroup_to_loop(sts_to_quasigroup(s));
}

QuasigroupTable loop_to_quasigroup(const LoopTable& t) {
  if (t.order() < 2) throw PreconditionError("order", "loop of order < 2 has no Steiner quasigroup");
  require_steiner_loop(t);
  const std::size_t n = t.order() - 1;
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) cells[x * n + y] = x == y ? x : t(x + 1, y + 1) - 1;
  return QuasigroupTable(CayleyTable(n, std::move(cells)));
}

TripleSystem loop_to_sts(const LoopTable& t) {
  return quasigroup_to_sts(loop_to_quasigroup(t));
}

}  // namespace steiner
