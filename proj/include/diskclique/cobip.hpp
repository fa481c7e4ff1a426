#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "diskclique/clique.hpp"
#include "diskclique/furthest_index.hpp"
#include "diskclique/geometry.hpp"

namespace diskclique {

// Two sides of a co-bipartite disk graph. Callers construct instances whose
// sides pairwise intersect geometrically; the implicit complement bipartite
// graph has an edge (x, y) exactly when dist(x, y) > r(x) + r(y).
struct CobipInstance {
  std::vector<Disk> left;
  std::vector<Disk> right;

  std::size_t size() const { return left.size() + right.size(); }
  bool sides_are_cliques() const;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (left disk id, right disk id)
  std::vector<int> left_partner;           // left slot -> right slot or -1
  std::vector<int> right_partner;          // right slot -> left slot or -1
  int phases_executed = 0;
  std::vector<std::uint64_t> phase_index_ops;  // furthest-index ops per phase

  std::size_t size() const { return pairs.size(); }
  std::uint64_t index_ops() const;
};

struct VertexCover {
  std::vector<int> ids;  // sorted disk ids drawn from both sides

  std::size_t size() const { return ids.size(); }
};

// Output of the Hopcroft-Karp breadth-first layering on the complement
// graph. Slot layers alternate left (X_0, X_1, ...) and right (Y_0, ...);
// slots never reached keep layer -1 and form the residual sets.
struct BfsLayers {
  std::vector<std::vector<int>> left_layers;
  std::vector<std::vector<int>> right_layers;
  std::vector<int> left_layer;
  std::vector<int> right_layer;
};

// How the solvers pick a furthest-index backend. Auto switches to the
// bucketed grid once a side is large enough for bucket pruning to pay off;
// both backends return identical results.
enum class IndexPolicy { Auto, BruteForce, Bucketed };

// ceil(1/eps) Hopcroft-Karp phases; throws InvalidEpsilon unless eps in (0,1].
int phase_count(double eps);

// (1-eps)-approximate maximum matching of the complement bipartite graph,
// computed with at most phase_count(eps) phases. Deterministic.
Matching approx_matching(const CobipInstance& inst, double eps,
                         IndexPolicy policy = IndexPolicy::Auto);

// Vertex cover of the complement graph with |K| <= (1+eps)|M*|, together
// with the matching that produced it.
std::pair<VertexCover, Matching> approx_vertex_cover(const CobipInstance& inst, double eps,
                                                     IndexPolicy policy = IndexPolicy::Auto);

// (1-eps)-approximate maximum clique: the complement of the vertex cover.
// |clique| = |left| + |right| - |cover| always holds.
Clique approx_clique(const CobipInstance& inst, double eps,
                     IndexPolicy policy = IndexPolicy::Auto);

// Full (untruncated) complement-graph BFS layering from the unmatched left
// slots of `m`; exposed for the cover construction and its tests.
BfsLayers full_layering(const CobipInstance& inst, const Matching& m, IndexPolicy policy);

}  // namespace diskclique
