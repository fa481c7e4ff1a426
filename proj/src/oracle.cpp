#include "diskclique/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <string>

#include "diskclique/errors.hpp"

namespace diskclique::oracle {

namespace {

// Bron-Kerbosch with Tomita-style pivoting over bitmask sets. Enumerates
// every maximal clique; the caller keeps the best under the (size, lex)
// order. Vertices are positions in the adjacency matrix.
struct BronKerbosch {
  const AdjacencyOracle& adj;
  std::uint64_t best_mask = 0;
  int best_size = 0;

  explicit BronKerbosch(const AdjacencyOracle& a) : adj(a) {}

  std::uint64_t neighbors(int v) const {
    return adj.rows[static_cast<std::size_t>(v)] & ~(1ULL << v);
  }

  static bool lex_smaller(std::uint64_t a, std::uint64_t b) {
    // Compare as sorted id sequences: the lowest differing id decides.
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (a >> std::countr_zero(diff)) & 1u;
  }

  void report(std::uint64_t clique_mask) {
    const int size = std::popcount(clique_mask);
    if (size > best_size ||
        (size == best_size && lex_smaller(clique_mask, best_mask))) {
      best_size = size;
      best_mask = clique_mask;
    }
  }

  void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (p == 0 && x == 0) {
      report(r);
      return;
    }
    // Pivot: vertex of P|X covering the most of P; ties to the smallest id.
    int pivot = -1, covered = -1;
    for (std::uint64_t px = p | x; px != 0; px &= px - 1) {
      const int v = std::countr_zero(px);
      const int c = std::popcount(p & neighbors(v));
      if (c > covered) {
        covered = c;
        pivot = v;
      }
    }
    std::uint64_t candidates = p & ~neighbors(pivot);
    while (candidates != 0) {
      const int v = std::countr_zero(candidates);
      const std::uint64_t bit = 1ULL << v;
      candidates &= candidates - 1;
      expand(r | bit, p & neighbors(v), x & neighbors(v));
      p &= ~bit;
      x |= bit;
    }
  }
};

}  // namespace

AdjacencyOracle AdjacencyOracle::build(std::span<const Disk> disks) {
  if (disks.size() > 64)
    throw TooLarge("adjacency oracle capped at 64 disks, got " + std::to_string(disks.size()));
  AdjacencyOracle out;
  out.rows.assign(disks.size(), 0);
  for (std::size_t i = 0; i < disks.size(); ++i) {
    out.rows[i] |= 1ULL << i;
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      if (disks_intersect(disks[i], disks[j])) {
        out.rows[i] |= 1ULL << j;
        out.rows[j] |= 1ULL << i;
      }
    }
  }
  return out;
}

Clique exact_max_clique(std::span<const Disk> disks) {
  const AdjacencyOracle adj = AdjacencyOracle::build(disks);
  Clique out;
  if (disks.empty()) return out;
  BronKerbosch bk(adj);
  const std::uint64_t all = disks.size() == 64
                                ? ~0ULL
                                : ((1ULL << disks.size()) - 1);
  bk.expand(0, all, 0);
  for (std::uint64_t m = bk.best_mask; m != 0; m &= m - 1)
    out.ids.push_back(disks[static_cast<std::size_t>(std::countr_zero(m))].id);
  std::sort(out.ids.begin(), out.ids.end());
  return out;
}

Matching exact_max_matching(const CobipInstance& inst) {
  const int nl = static_cast<int>(inst.left.size());
  const int nr = static_cast<int>(inst.right.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nl));
  for (int u = 0; u < nl; ++u)
    for (int v = 0; v < nr; ++v)
      if (disks_disjoint(inst.left[static_cast<std::size_t>(u)],
                         inst.right[static_cast<std::size_t>(v)]))
        adj[static_cast<std::size_t>(u)].push_back(v);

  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_l(static_cast<std::size_t>(nl), -1);
  std::vector<int> match_r(static_cast<std::size_t>(nr), -1);
  std::vector<int> level(static_cast<std::size_t>(nl), kInf);

  auto bfs = [&]() {
    std::queue<int> q;
    int free_level = kInf;
    for (int u = 0; u < nl; ++u) {
      if (match_l[static_cast<std::size_t>(u)] < 0) {
        level[static_cast<std::size_t>(u)] = 0;
        q.push(u);
      } else {
        level[static_cast<std::size_t>(u)] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (level[static_cast<std::size_t>(u)] >= free_level) continue;
      for (int v : adj[static_cast<std::size_t>(u)]) {
        const int w = match_r[static_cast<std::size_t>(v)];
        if (w < 0) {
          free_level = std::min(free_level, level[static_cast<std::size_t>(u)] + 1);
        } else if (level[static_cast<std::size_t>(w)] == kInf) {
          level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return free_level != kInf;
  };

  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      const int w = match_r[static_cast<std::size_t>(v)];
      if (w < 0 || (level[static_cast<std::size_t>(w)] ==
                        level[static_cast<std::size_t>(u)] + 1 &&
                    self(self, w))) {
        match_l[static_cast<std::size_t>(u)] = v;
        match_r[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    level[static_cast<std::size_t>(u)] = kInf;
    return false;
  };

  int phases = 0;
  while (bfs()) {
    ++phases;
    for (int u = 0; u < nl; ++u)
      if (match_l[static_cast<std::size_t>(u)] < 0) dfs(dfs, u);
  }

  Matching m;
  m.left_partner = match_l;
  m.right_partner = match_r;
  m.phases_executed = phases;
  for (int u = 0; u < nl; ++u) {
    const int v = match_l[static_cast<std::size_t>(u)];
    if (v >= 0)
      m.pairs.emplace_back(inst.left[static_cast<std::size_t>(u)].id,
                           inst.right[static_cast<std::size_t>(v)].id);
  }
  return m;
}

bool verify_clique(std::span<const Disk> disks, std::span<const int> ids) {
  for (int id : ids)
    if (id < 0 || static_cast<std::size_t>(id) >= disks.size())
      throw UnknownId("clique id " + std::to_string(id) + " out of range");
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (!disks_intersect(disks[static_cast<std::size_t>(ids[i])],
                           disks[static_cast<std::size_t>(ids[j])]))
        return false;
  return true;
}

bool verify_vertex_cover(const CobipInstance& inst, const VertexCover& cover) {
  std::vector<int> sorted = cover.ids;
  std::sort(sorted.begin(), sorted.end());
  auto in_cover = [&](int id) {
    return std::binary_search(sorted.begin(), sorted.end(), id);
  };
  for (const auto& x : inst.left)
    for (const auto& y : inst.right)
      if (disks_disjoint(x, y) && !in_cover(x.id) && !in_cover(y.id)) return false;
  return true;
}

}  // namespace diskclique::oracle
