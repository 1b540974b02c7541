#include <algorithm>
#include <bit>
#include <map>

#include "steiner/configurations.hpp"
#include "steiner/constructions.hpp"

namespace steiner {

namespace {

constexpr Element unmapped = ~Element{0};

// Partial point bijection between two systems, grown by forced block
// completions.
class IsoSearch {
 public:
  IsoSearch(const TripleSystem& a, const TripleSystem& b)
      : v_(a.points()),
        qa_(sts_to_quasigroup(a)),
        qb_(sts_to_quasigroup(b)),
        inv_a_(pasch_counts_per_point(a)),
        inv_b_(pasch_counts_per_point(b)),
        forward_(v_, unmapped),
        backward_(v_, unmapped) {}

  std::optional<std::vector<Element>> run() {
    if (search()) return forward_;
    return std::nullopt;
  }

 private:
  bool assign(Element p, Element image) {
    std::vector<std::pair<Element, Element>> work{{p, image}};
    while (!work.empty()) {
      auto [x, fx] = work.back();
      work.pop_back();
      if (forward_[x] != unmapped) {
        if (forward_[x] != fx) return false;
        continue;
      }
      if (backward_[fx] != unmapped || inv_a_[x] != inv_b_[fx]) return false;
      forward_[x] = fx;
      backward_[fx] = x;
      order_.push_back(x);
      for (Element y : order_) {
        if (y == x) continue;
        Element c = qa_(x, y);
        Element fc = qb_(fx, forward_[y]);
        work.emplace_back(c, fc);
      }
    }
    return true;
  }

  bool search() {
    auto next = std::find(forward_.begin(), forward_.end(), unmapped);
    if (next == forward_.end()) return true;
    const auto p = static_cast<Element>(next - forward_.begin());
    for (Element image = 0; image < v_; ++image) {
      if (backward_[image] != unmapped || inv_a_[p] != inv_b_[image]) continue;
      auto saved_forward = forward_;
      auto saved_backward = backward_;
      const std::size_t saved_order = order_.size();
      if (assign(p, image) && search()) return true;
      forward_ = std::move(saved_forward);
      backward_ = std::move(saved_backward);
      order_.resize(saved_order);
    }
    return false;
  }

  std::size_t v_;
  QuasigroupTable qa_;
  QuasigroupTable qb_;
  std::vector<std::size_t> inv_a_;
  std::vector<std::size_t> inv_b_;
  std::vector<Element> forward_;
  std::vector<Element> backward_;
  std::vector<Element> order_;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const TripleSystem& s)
      : s_(s), q_(sts_to_quasigroup(s)), inv_(pasch_counts_per_point(s)), label_(s.points(), unmapped) {}

  TripleSystem run() {
    explore(0);
    return TripleSystem(s_.points(), *best_);
  }

 private:
  // Labels every point forced by pairs of labelled points, scanning pair
  // (order_[i], order_[j]) for j from `from` upward and i < j.
  void close(std::size_t from) {
    for (std::size_t j = std::max<std::size_t>(from, 1); j < order_.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        Element c = q_(order_[i], order_[j]);
        if (label_[c] == unmapped) {
          label_[c] = static_cast<Element>(order_.size());
          order_.push_back(c);
        }
      }
  }

  void explore(std::size_t closed_upto) {
    if (order_.size() == s_.points()) {
      std::vector<Block> blocks;
      blocks.reserve(s_.blocks().size());
      for (const Block& b : s_.blocks()) {
        Block r{label_[b[0]], label_[b[1]], label_[b[2]]};
        std::sort(r.begin(), r.end());
        blocks.push_back(r);
      }
      std::sort(blocks.begin(), blocks.end());
      if (!best_ || blocks < *best_) best_ = std::move(blocks);
      return;
    }
    std::size_t min_inv = ~std::size_t{0};
    for (Element p = 0; p < s_.points(); ++p)
      if (label_[p] == unmapped) min_inv = std::min(min_inv, inv_[p]);
    for (Element p = 0; p < s_.points(); ++p) {
      if (label_[p] != unmapped || inv_[p] != min_inv) continue;
      const std::size_t saved = order_.size();
      label_[p] = static_cast<Element>(saved);
      order_.push_back(p);
      close(closed_upto);
      explore(order_.size());
      for (std::size_t i = saved; i < order_.size(); ++i) label_[order_[i]] = unmapped;
      order_.resize(saved);
    }
  }

  const TripleSystem& s_;
  QuasigroupTable q_;
  std::vector<std::size_t> inv_;
  std::vector<Element> label_;
  std::vector<Element> order_;
  std::optional<std::vector<Block>> best_;
};

// Completes the fixed star {0,1,2},{0,3,4},... of point 0 to full systems.
// Uncovered-pair sets are bitmasks, so v <= 32.
class Completer {
 public:
  using Visit = std::function<void(const std::vector<Block>&)>;

  Completer(std::size_t v, Visit visit) : v_(v), visit_(std::move(visit)), uncovered_(v, 0) {
    for (std::size_t a = 0; a < v_; ++a)
      for (std::size_t b = 0; b < v_; ++b)
        if (a != b) uncovered_[a] |= std::uint32_t{1} << b;
    for (Element i = 1; i + 1 < v_; i += 2) place({0, i, i + 1});
  }

  void run() { extend(); }

 private:
  void toggle(const Block& b) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) uncovered_[b[i]] ^= std::uint32_t{1} << b[j];
  }
  void place(const Block& b) {
    toggle(b);
    blocks_.push_back(b);
  }
  void remove() {
    toggle(blocks_.back());
    blocks_.pop_back();
  }

  void extend() {
    Element a = 0;
    while (a < v_ && uncovered_[a] == 0) ++a;
    if (a == v_) {
      visit_(blocks_);
      return;
    }
    const auto b = static_cast<Element>(std::countr_zero(uncovered_[a]));
    // Pairs (a, x) with x < b are covered, so the third point exceeds b.
    std::uint32_t candidates = uncovered_[a] & uncovered_[b] & ~((std::uint32_t{2} << b) - 1);
    while (candidates) {
      const auto c = static_cast<Element>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      place({a, b, c});
      extend();
      remove();
    }
  }

  std::size_t v_;
  Visit visit_;
  std::vector<std::uint32_t> uncovered_;
  std::vector<Block> blocks_;
};

}  // namespace

std::optional<std::vector<Element>> are_isomorphic(const TripleSystem& a, const TripleSystem& b) {
  if (a.points() != b.points() || a.blocks().size() != b.blocks().size()) return std::nullopt;
  if (a.points() == 0) return std::vector<Element>{};
  auto ia = pasch_counts_per_point(a);
  auto ib = pasch_counts_per_point(b);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;
  auto map = IsoSearch(a, b).run();
  if (map && relabel(a, *map) != b) return std::nullopt;
  return map;
}

TripleSystem canonical_form(const TripleSystem& s) {
  if (s.points() == 0) return s;
  return Canonicalizer(s).run();
}

std::vector<TripleSystem> enumerate_sts(int v, const EnumerateOptions& options) {
  if (v < 1 || (v % 6 != 1 && v % 6 != 3))
    throw PreconditionError("inadmissible", "inadmissible order " + std::to_string(v) + " (need v = 1 or 3 mod 6)");
  if (v > 13) throw PreconditionError("out-of-range", "enumeration is limited to v <= 13");
  if (v == 13 && !options.allow_slow)
    throw PreconditionError("slow", "v = 13 takes minutes; pass allow_slow to enable");

  struct Class {
    std::vector<std::size_t> invariant;
    TripleSystem rep;
  };
  std::vector<Class> classes;
  std::uint64_t visited = 0;
  const auto n = static_cast<std::size_t>(v);

  Completer(n, [&](const std::vector<Block>& blocks) {
    ++visited;
    TripleSystem s(n, blocks);
    auto invariant = pasch_counts_per_point(s);
    std::sort(invariant.begin(), invariant.end());
    bool known = false;
    for (const Class& c : classes)
      if (c.invariant == invariant && are_isomorphic(s, c.rep)) {
        known = true;
        break;
      }
    if (!known) classes.push_back({std::move(invariant), std::move(s)});
    if (options.progress && visited % 4096 == 0) options.progress(visited, classes.size());
  }).run();
  if (options.progress) options.progress(visited, classes.size());

  std::vector<TripleSystem> out;
  for (const Class& c : classes) out.push_back(canonical_form(c.rep));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace steiner
