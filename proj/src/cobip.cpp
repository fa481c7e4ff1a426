#include "diskclique/cobip.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diskclique/errors.hpp"

namespace diskclique {

namespace {

FurthestBackend resolve_backend(IndexPolicy policy, std::size_t n) {
  switch (policy) {
    case IndexPolicy::BruteForce: return FurthestBackend::BruteForce;
    case IndexPolicy::Bucketed: return FurthestBackend::Bucketed;
    case IndexPolicy::Auto: break;
  }
  return n >= 64 ? FurthestBackend::Bucketed : FurthestBackend::BruteForce;
}

void check_eps(double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw InvalidEpsilon("epsilon must be in (0, 1], got " + std::to_string(eps));
}

// Hopcroft-Karp over the implicit complement graph. All neighbor iteration
// goes through furthest-site indexes: extracting the sites s with
// delta(c, s) > r yields exactly the complement edges of D(c, r) among the
// still-unvisited nodes, and the extraction doubles as the visited mark.
struct MatchingEngine {
  const CobipInstance* inst = nullptr;
  int nl = 0, nr = 0;
  FurthestBackend backend = FurthestBackend::BruteForce;

  std::vector<int> match_l, match_r;
  std::vector<std::vector<int>> left_layers, right_layers;
  std::vector<int> left_layer, right_layer;
  int n_left_layers = 0, n_right_layers = 0;

  FurthestIndex right_index{FurthestBackend::BruteForce};
  std::vector<FurthestIndex> layer_indexes;
  std::vector<WeightedSite> site_buf;
  std::vector<WeightedSite> pulled;
  std::vector<int> stk_left, stk_right;
  std::uint64_t phase_ops = 0;

  void reset(const CobipInstance& instance, FurthestBackend be) {
    inst = &instance;
    backend = be;
    nl = static_cast<int>(instance.left.size());
    nr = static_cast<int>(instance.right.size());
    match_l.assign(static_cast<std::size_t>(nl), -1);
    match_r.assign(static_cast<std::size_t>(nr), -1);
    left_layer.assign(static_cast<std::size_t>(nl), -1);
    right_layer.assign(static_cast<std::size_t>(nr), -1);
  }

  const Disk& left_disk(int u) const { return inst->left[static_cast<std::size_t>(u)]; }
  const Disk& right_disk(int v) const { return inst->right[static_cast<std::size_t>(v)]; }

  std::vector<int>& layer_slot(std::vector<std::vector<int>>& layers, int j) {
    if (layers.size() <= static_cast<std::size_t>(j)) layers.emplace_back();
    layers[static_cast<std::size_t>(j)].clear();
    return layers[static_cast<std::size_t>(j)];
  }

  void seed_right_index() {
    site_buf.clear();
    for (int v = 0; v < nr; ++v)
      site_buf.push_back({v, right_disk(v).center, -right_disk(v).radius});
    right_index.assign(backend, site_buf);
    right_index.reset_counts();
  }

  // One BFS layering from the unmatched left slots. With stop_early set it
  // halts after the first right layer holding an unmatched slot (matching
  // phase); otherwise it runs until no layer can be created (cover phase).
  // Returns true when an unmatched right slot was reached.
  bool bfs(bool stop_early) {
    n_left_layers = n_right_layers = 0;
    std::fill(left_layer.begin(), left_layer.end(), -1);
    std::fill(right_layer.begin(), right_layer.end(), -1);
    seed_right_index();

    std::vector<int>& first = layer_slot(left_layers, 0);
    for (int u = 0; u < nl; ++u)
      if (match_l[static_cast<std::size_t>(u)] < 0) {
        first.push_back(u);
        left_layer[static_cast<std::size_t>(u)] = 0;
      }
    n_left_layers = 1;
    if (first.empty()) {
      phase_ops += right_index.counts().total();
      return false;
    }

    bool found = false;
    for (int j = 0;; ++j) {
      std::vector<int>& next_right = layer_slot(right_layers, j);
      for (int u : left_layers[static_cast<std::size_t>(j)]) {
        const Disk& d = left_disk(u);
        pulled.clear();
        right_index.extract_above_into(d.center, d.radius, pulled);
        for (const auto& s : pulled) {
          right_layer[static_cast<std::size_t>(s.site_id)] = j;
          next_right.push_back(s.site_id);
          if (match_r[static_cast<std::size_t>(s.site_id)] < 0) found = true;
        }
      }
      if (next_right.empty()) break;
      n_right_layers = j + 1;
      if (found && stop_early) break;
      std::vector<int>& next_left = layer_slot(left_layers, j + 1);
      for (int v : next_right) {
        const int u = match_r[static_cast<std::size_t>(v)];
        if (u >= 0) {
          next_left.push_back(u);
          left_layer[static_cast<std::size_t>(u)] = j + 1;
        }
      }
      if (next_left.empty()) break;
      n_left_layers = j + 2;
    }
    phase_ops += right_index.counts().total();
    return found;
  }

  // Pops the furthest complement neighbor of D(c, r) from `idx`, if any.
  static int extract_one(FurthestIndex& idx, const Disk& d) {
    auto top = idx.furthest(d.center);
    if (!top || top->second <= d.radius) return -1;
    idx.erase(top->first.site_id);
    return top->first.site_id;
  }

  // Maximal set of node-disjoint shortest augmenting paths for the current
  // layering. Left nodes are consumed from per-layer indexes, which is the
  // phase-global visited marking.
  int dfs_augment_all() {
    while (layer_indexes.size() < static_cast<std::size_t>(n_left_layers))
      layer_indexes.emplace_back(backend);
    for (int j = 0; j < n_left_layers; ++j) {
      site_buf.clear();
      for (int u : left_layers[static_cast<std::size_t>(j)])
        site_buf.push_back({u, left_disk(u).center, -left_disk(u).radius});
      layer_indexes[static_cast<std::size_t>(j)].assign(backend, site_buf);
      layer_indexes[static_cast<std::size_t>(j)].reset_counts();
    }

    int augmented = 0;
    const int last = n_right_layers - 1;
    for (int root : right_layers[static_cast<std::size_t>(last)]) {
      if (match_r[static_cast<std::size_t>(root)] >= 0) continue;
      stk_left.clear();
      stk_right.clear();
      stk_right.push_back(root);
      while (!stk_right.empty()) {
        const int v = stk_right.back();
        const int j = right_layer[static_cast<std::size_t>(v)];
        const int u = extract_one(layer_indexes[static_cast<std::size_t>(j)], right_disk(v));
        if (u < 0) {
          stk_right.pop_back();
          if (!stk_left.empty()) stk_left.pop_back();
          continue;
        }
        if (match_l[static_cast<std::size_t>(u)] < 0) {
          stk_left.push_back(u);
          for (std::size_t i = 0; i < stk_left.size(); ++i) {
            match_l[static_cast<std::size_t>(stk_left[i])] = stk_right[i];
            match_r[static_cast<std::size_t>(stk_right[i])] = stk_left[i];
          }
          ++augmented;
          break;
        }
        stk_left.push_back(u);
        stk_right.push_back(match_l[static_cast<std::size_t>(u)]);
      }
    }
    for (int j = 0; j < n_left_layers; ++j)
      phase_ops += layer_indexes[static_cast<std::size_t>(j)].counts().total();
    return augmented;
  }

  Matching finish(int phases, std::vector<std::uint64_t> per_phase_ops) const {
    Matching m;
    m.left_partner = match_l;
    m.right_partner = match_r;
    m.phases_executed = phases;
    m.phase_index_ops = std::move(per_phase_ops);
    for (int u = 0; u < nl; ++u) {
      const int v = match_l[static_cast<std::size_t>(u)];
      if (v >= 0) m.pairs.emplace_back(left_disk(u).id, right_disk(v).id);
    }
    return m;
  }
};

// The engine's buffers are reused across calls within a thread; the solvers
// fire large numbers of tiny instances at it.
MatchingEngine& engine() {
  static thread_local MatchingEngine eng;
  return eng;
}

}  // namespace

bool CobipInstance::sides_are_cliques() const {
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = i + 1; j < left.size(); ++j)
      if (!disks_intersect(left[i], left[j])) return false;
  for (std::size_t i = 0; i < right.size(); ++i)
    for (std::size_t j = i + 1; j < right.size(); ++j)
      if (!disks_intersect(right[i], right[j])) return false;
  return true;
}

std::uint64_t Matching::index_ops() const {
  std::uint64_t total = 0;
  for (auto v : phase_index_ops) total += v;
  return total;
}

int phase_count(double eps) {
  check_eps(eps);
  // Matching saturates (and the loop exits) after at most n+1 phases, so
  // clamping pathological microscopic eps keeps the contract intact.
  const double raw = std::ceil(1.0 / eps);
  return raw > 2147483647.0 ? 2147483647 : static_cast<int>(raw);
}

Matching approx_matching(const CobipInstance& inst, double eps, IndexPolicy policy) {
  const int phases = phase_count(eps);
  MatchingEngine& eng = engine();
  eng.reset(inst, resolve_backend(policy, inst.size()));

  std::vector<std::uint64_t> per_phase;
  int executed = 0;
  for (int p = 0; p < phases; ++p) {
    eng.phase_ops = 0;
    const bool found = eng.bfs(/*stop_early=*/true);
    ++executed;
    if (!found) {
      per_phase.push_back(eng.phase_ops);
      break;
    }
    eng.dfs_augment_all();
    per_phase.push_back(eng.phase_ops);
  }
  return eng.finish(executed, std::move(per_phase));
}

BfsLayers full_layering(const CobipInstance& inst, const Matching& m, IndexPolicy policy) {
  MatchingEngine& eng = engine();
  eng.reset(inst, resolve_backend(policy, inst.size()));
  eng.match_l = m.left_partner;
  eng.match_r = m.right_partner;
  eng.bfs(/*stop_early=*/false);

  BfsLayers out;
  out.left_layer = eng.left_layer;
  out.right_layer = eng.right_layer;
  out.left_layers.assign(eng.left_layers.begin(),
                         eng.left_layers.begin() + eng.n_left_layers);
  out.right_layers.assign(eng.right_layers.begin(),
                          eng.right_layers.begin() + eng.n_right_layers);
  return out;
}

std::pair<VertexCover, Matching> approx_vertex_cover(const CobipInstance& inst, double eps,
                                                     IndexPolicy policy) {
  const int phases = phase_count(eps);
  Matching m = approx_matching(inst, eps, policy);
  const BfsLayers layers = full_layering(inst, m, policy);

  // If no reachable right slot is unmatched the matching is maximum; taking
  // every layer then reproduces the Konig cover exactly (size |M|).
  bool maximum = true;
  for (const auto& layer : layers.right_layers)
    for (int v : layer)
      if (m.right_partner[static_cast<std::size_t>(v)] < 0) maximum = false;

  int pick;
  if (maximum) {
    pick = static_cast<int>(layers.right_layers.size());
  } else {
    // Smallest i in {0..phases-1} with |Y_i| <= |M| / phases. Layers past
    // the last BFS layer are empty, so a qualifying i exists within range.
    const auto matched = static_cast<std::uint64_t>(m.pairs.size());
    pick = -1;
    const int scan_end = static_cast<int>(std::min<std::int64_t>(
        phases, static_cast<std::int64_t>(layers.right_layers.size()) + 1));
    for (int i = 0; i < scan_end; ++i) {
      const std::uint64_t sz = i < static_cast<int>(layers.right_layers.size())
                                   ? layers.right_layers[static_cast<std::size_t>(i)].size()
                                   : 0;
      if (sz * static_cast<std::uint64_t>(phases) <= matched) {
        pick = i;
        break;
      }
    }
    if (pick < 0) pick = phases - 1;
  }

  VertexCover cover;
  for (std::size_t u = 0; u < inst.left.size(); ++u) {
    const int lay = layers.left_layer[u];
    if (lay < 0 || lay > pick) cover.ids.push_back(inst.left[u].id);
  }
  for (std::size_t v = 0; v < inst.right.size(); ++v) {
    const int lay = layers.right_layer[v];
    if (lay >= 0 && lay <= pick) cover.ids.push_back(inst.right[v].id);
  }
  std::sort(cover.ids.begin(), cover.ids.end());
  return {std::move(cover), std::move(m)};
}

Clique approx_clique(const CobipInstance& inst, double eps, IndexPolicy policy) {
  auto [cover, m] = approx_vertex_cover(inst, eps, policy);
  Clique clique;
  clique.ids.reserve(inst.size() - cover.size());
  std::size_t c = 0;
  auto take_unless_covered = [&](int id) {
    while (c < cover.ids.size() && cover.ids[c] < id) ++c;
    if (c == cover.ids.size() || cover.ids[c] != id) clique.ids.push_back(id);
  };
  std::vector<int> all_ids;
  all_ids.reserve(inst.size());
  for (const auto& d : inst.left) all_ids.push_back(d.id);
  for (const auto& d : inst.right) all_ids.push_back(d.id);
  std::sort(all_ids.begin(), all_ids.end());
  for (int id : all_ids) take_unless_covered(id);
  return clique;
}

}  // namespace diskclique
