#pragma once

#include <span>
#include <vector>

#include "diskclique/clique.hpp"
#include "diskclique/cobip.hpp"
#include "diskclique/geometry.hpp"

namespace diskclique::oracle {

// Explicit intersection matrix for at most 64 disks, one bitmask row per
// disk. Diagonal bits are set.
struct AdjacencyOracle {
  std::vector<std::uint64_t> rows;

  static AdjacencyOracle build(std::span<const Disk> disks);  // throws TooLarge
  bool adjacent(int i, int j) const { return (rows[static_cast<std::size_t>(i)] >> j) & 1u; }
  std::size_t size() const { return rows.size(); }
};

// Maximum clique by Bron-Kerbosch with pivoting; among maximum cliques,
// returns the lexicographically smallest id set. Guarded to <= 64 disks.
Clique exact_max_clique(std::span<const Disk> disks);  // throws TooLarge

// Maximum matching of the complement bipartite graph, run to optimality
// with explicit edges (independent of the furthest-index machinery).
Matching exact_max_matching(const CobipInstance& inst);

// True iff all pairs of the referenced disks intersect. Throws UnknownId
// for an id outside [0, |disks|).
bool verify_clique(std::span<const Disk> disks, std::span<const int> ids);

// True iff every complement edge of the instance has an endpoint in the
// cover (explicit enumeration).
bool verify_vertex_cover(const CobipInstance& inst, const VertexCover& cover);

}  // namespace diskclique::oracle
