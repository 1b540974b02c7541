#include "steiner/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace steiner {

namespace {

void require_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi)
    throw PreconditionError("out-of-range", std::string(what) + " must be in [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "], got " + std::to_string(value));
}

}  // namespace

TripleSystem fano() {
  return TripleSystem(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

TripleSystem affine_ag23() {
  std::vector<Block> blocks;
  for (Element p = 0; p < 9; ++p)
    for (Element q = p + 1; q < 9; ++q) {
      // r = -(p+q) componentwise mod 3.
      Element i = (6 - p / 3 - q / 3) % 3;
      Element j = (6 - p % 3 - q % 3) % 3;
      Element r = 3 * i + j;
      if (r > q) blocks.push_back({p, q, r});
    }
  return TripleSystem(9, std::move(blocks));
}

LoopTable steiner_loop_10() { return sts_to_loop(affine_ag23()); }

TripleSystem projective(int n) {
  require_range(n, 1, 5, "projective dimension");
  const Element size = (Element{1} << (n + 1)) - 1;
  std::vector<Block> blocks;
  for (Element x = 1; x <= size; ++x)
    for (Element y = x + 1; y <= size; ++y)
      if (Element z = x ^ y; z > y) blocks.push_back({x - 1, y - 1, z - 1});
  return TripleSystem(size, std::move(blocks));
}

TripleSystem bose(int k) {
  require_range(k, 1, 10, "Bose parameter");
  const Element n = 2 * static_cast<Element>(k) + 1;
  const Element half = static_cast<Element>(k) + 1;  // inverse of 2 mod n
  auto point = [n](Element a, Element i) { return (i % 3) * n + a; };
  std::vector<Block> blocks;
  for (Element a = 0; a < n; ++a) blocks.push_back({point(a, 0), point(a, 1), point(a, 2)});
  for (Element i = 0; i < 3; ++i)
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b)
        blocks.push_back({point(a, i), point(b, i), point((a + b) * half % n, i + 1)});
  return TripleSystem(3 * n, std::move(blocks));
}

LoopTable elementary_abelian_loop(int n) {
  require_range(n, 0, 6, "elementary abelian rank");
  const std::size_t m = std::size_t{1} << n;
  std::vector<Element> cells(m * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) cells[x * m + y] = x ^ y;
  return LoopTable(CayleyTable(m, std::move(cells)));
}

LoopTable cyclic_group(int n) {
  require_range(n, 1, 64, "cyclic group order");
  const auto m = static_cast<std::size_t>(n);
  std::vector<Element> cells(m * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) cells[x * m + y] = static_cast<Element>((x + y) % m);
  return LoopTable(CayleyTable(m, std::move(cells)));
}

LoopTable moufang_loop_12() {
  // S3 as permutations of {0,1,2}; index 0 is the identity permutation.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<Element>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  auto mul = [&](Element g, Element h) {  // (gh)(i) = g(h(i))
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = perms[g][perms[h][i]];
    return index_of(r);
  };
  auto inv = [&](Element g) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[perms[g][i]] = i;
    return index_of(r);
  };
  constexpr std::size_t m = 12;
  std::vector<Element> cells(m * m);
  for (Element g = 0; g < 6; ++g)
    for (Element h = 0; h < 6; ++h) {
      cells[g * m + h] = mul(g, h);
      cells[g * m + h + 6] = mul(h, g) + 6;
      cells[(g + 6) * m + h] = mul(g, inv(h)) + 6;
      cells[(g + 6) * m + h + 6] = mul(inv(h), g);
    }
  return LoopTable(CayleyTable(m, std::move(cells)));
}

TripleSystem relabel(const TripleSystem& s, const std::vector<Element>& map) {
  if (map.size() != s.points()) throw PreconditionError("range", "relabeling has the wrong size");
  std::vector<Block> blocks;
  blocks.reserve(s.blocks().size());
  for (const Block& b : s.blocks()) blocks.push_back({map[b[0]], map[b[1]], map[b[2]]});
  return TripleSystem(s.points(), std::move(blocks));
}

}  // namespace steiner
