#include "diskclique/unit.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <unordered_map>

#include "diskclique/cobip.hpp"
#include "diskclique/errors.hpp"
#include "diskclique/parallel.hpp"

namespace diskclique {

std::int64_t default_trials_per_cell(double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw InvalidEpsilon("epsilon must be in (0, 1]");
  return static_cast<std::int64_t>(std::ceil(1250.0 * std::numbers::ln2 / eps));
}

int amplification_rounds(double delta) {
  if (!(delta > 0.0) || delta >= 1.0) throw InvalidDelta("delta must be in (0, 1)");
  return std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / delta))));
}

CellPartition build_partition(const UnitInstance& inst) {
  CellPartition part;
  std::unordered_map<CellCoord, std::vector<int>, CellCoordHash> grid;
  for (std::size_t i = 0; i < inst.points.size(); ++i)
    grid[cell_of(inst.points[i])].push_back(static_cast<int>(i));

  part.cells.reserve(grid.size());
  for (const auto& [cc, ids] : grid) part.cells.push_back(cc);
  std::sort(part.cells.begin(), part.cells.end());

  part.cell_points.resize(part.cells.size());
  part.extensions.resize(part.cells.size());
  for (std::size_t c = 0; c < part.cells.size(); ++c) {
    auto& own = part.cell_points[c] = grid[part.cells[c]];
    std::sort(own.begin(), own.end());
    auto& ext = part.extensions[c];
    for (std::int64_t dx = -2; dx <= 2; ++dx)
      for (std::int64_t dy = -2; dy <= 2; ++dy) {
        auto it = grid.find({part.cells[c].cx + dx, part.cells[c].cy + dy});
        if (it != grid.end()) ext.insert(ext.end(), it->second.begin(), it->second.end());
      }
    std::sort(ext.begin(), ext.end());
  }
  return part;
}

namespace {

// The oriented length-2 axis through the sampled pair: starts at p2,
// pointing toward p1. Coincident samples fall back to the +x direction.
Lens lens_for_pair(Point p1, Point p2) {
  const double d = dist(p1, p2);
  Point x;
  if (d == 0.0) {
    x = {p2.x + 2.0, p2.y};
  } else {
    x = {p2.x + 2.0 * (p1.x - p2.x) / d, p2.y + 2.0 * (p1.y - p2.y) / d};
  }
  return Lens{x, p2, 2.0, p2, x};
}

struct SideBuffers {
  std::vector<Disk> left;
  std::vector<Disk> right;
};

Clique solve_lens(std::span<const Point> pts, const Lens& lens, double eps) {
  SideBuffers sides;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!in_lens(pts[i], lens)) continue;
    Disk d{static_cast<int>(i), pts[i], 1.0};
    if (lens_side(pts[i], lens) == LensSide::Left)
      sides.left.push_back(d);
    else
      sides.right.push_back(d);
  }
#ifndef NDEBUG
  // Each half-lens has diameter at most 2, so both sides are cliques.
  for (std::size_t i = 0; i < sides.left.size(); ++i)
    for (std::size_t j = i + 1; j < sides.left.size(); ++j)
      assert(disks_intersect(sides.left[i], sides.left[j]));
  for (std::size_t i = 0; i < sides.right.size(); ++i)
    for (std::size_t j = i + 1; j < sides.right.size(); ++j)
      assert(disks_intersect(sides.right[i], sides.right[j]));
#endif
  CobipInstance inst{std::move(sides.left), std::move(sides.right)};
  return approx_clique(inst, eps / 2.0);
}

// Shared per-extension trial cache: a trial's outcome is a pure function of
// the sampled index pair, so repeated draws reuse the solved result. Small
// extensions use a flat m*m table; large ones fall back to a hash map.
struct ExtensionMemo {
  std::span<const Point> pts;
  double eps;
  int m = 0;
  bool flat = false;
  std::vector<Clique> table;
  std::vector<char> done;
  std::unordered_map<std::uint64_t, Clique> map;

  ExtensionMemo(std::span<const Point> points, double epsilon)
      : pts(points), eps(epsilon), m(static_cast<int>(points.size())) {
    flat = m <= 512;
    if (flat) {
      table.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
      done.assign(table.size(), 0);
    }
  }

  const Clique& outcome(int i, int j) {
    if (flat) {
      const auto key = static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                       static_cast<std::size_t>(j);
      if (!done[key]) {
        table[key] = lens_trial_at(pts, i, j, eps);
        done[key] = 1;
      }
      return table[key];
    }
    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
        static_cast<std::uint32_t>(j);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
    return map.emplace(key, lens_trial_at(pts, i, j, eps)).first->second;
  }
};

// One round of draws; the running best is tracked as a pointer into the
// memo, so ties cost a vector compare and winners cost nothing until the
// caller materializes the result. Local ids are sorted and the extension id
// list is increasing, so local lexicographic order matches global order.
void run_trial_round(ExtensionMemo& memo, SeedSeq round_seq, std::int64_t trials,
                     const Clique*& best) {
  const int m = memo.m;
  for (std::int64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = round_seq.child(static_cast<std::uint64_t>(t)).rng();
    const int i = rng.bounded_int(m);
    const int j = rng.bounded_int(m);
    const Clique& out = memo.outcome(i, j);
    if (best == nullptr || out.ids.size() > best->ids.size() ||
        (out.ids.size() == best->ids.size() && out.ids < best->ids))
      best = &out;
  }
}

}  // namespace

Clique lens_trial_at(std::span<const Point> pts, int i, int j, double eps) {
  const Point p1 = pts[static_cast<std::size_t>(i)];
  const Point p2 = pts[static_cast<std::size_t>(j)];
  return solve_lens(pts, lens_for_pair(p1, p2), eps);
}

Clique lens_trial(std::span<const Point> pts, double eps, SplitMix64& rng) {
  const int m = static_cast<int>(pts.size());
  const int i = rng.bounded_int(m);
  const int j = rng.bounded_int(m);
  return lens_trial_at(pts, i, j, eps);
}

Clique solve_cell(std::span<const Point> pts, const UnitConfig& cfg, SeedSeq stream) {
  const std::int64_t trials =
      cfg.trials_per_cell_override.value_or(default_trials_per_cell(cfg.eps));
  ExtensionMemo memo(pts, cfg.eps);
  const Clique* best = nullptr;
  run_trial_round(memo, stream, trials, best);
  return best == nullptr ? Clique{} : *best;
}

int maxcl_lower_bound(std::span<const Point> extension_points) {
  std::unordered_map<CellCoord, int, CellCoordHash> counts;
  int best = 0;
  for (const Point& p : extension_points) best = std::max(best, ++counts[cell_of(p)]);
  return best;
}

UnitResult solve_unit(const UnitInstance& inst, const UnitConfig& cfg) {
  if (inst.points.empty()) throw EmptyInstance("unit instance has no points");
  const std::int64_t trials =
      cfg.trials_per_cell_override.value_or(default_trials_per_cell(cfg.eps));
  const int rounds = amplification_rounds(cfg.delta);
  const CellPartition part = build_partition(inst);
  const std::size_t n_cells = part.cells.size();

  // Cells sharing one extension point set share the trial cache; the
  // per-cell draw schedule is untouched, so results do not depend on the
  // grouping or on the thread count.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_ext;
  std::vector<std::uint64_t> ext_hash(n_cells);
  for (std::size_t c = 0; c < n_cells; ++c) {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (int id : part.extensions[c]) h = seed_fold(h, static_cast<std::uint64_t>(id));
    ext_hash[c] = h;
    by_ext[h].push_back(c);
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<bool> grouped(n_cells, false);
  for (std::size_t c = 0; c < n_cells; ++c) {
    if (grouped[c]) continue;
    std::vector<std::size_t> g{c};
    grouped[c] = true;
    for (std::size_t other : by_ext[ext_hash[c]])
      if (!grouped[other] && part.extensions[other] == part.extensions[c]) {
        g.push_back(other);
        grouped[other] = true;
      }
    groups.push_back(std::move(g));
  }

  const SeedSeq root{cfg.master_seed};
  std::vector<Clique> cell_best(n_cells);

  parallel_for(groups.size(), cfg.threads, [&](std::size_t gi) {
    const auto& group = groups[gi];
    const auto& ext_ids = part.extensions[group.front()];
    std::vector<Point> pts(ext_ids.size());
    for (std::size_t k = 0; k < ext_ids.size(); ++k)
      pts[k] = inst.points[static_cast<std::size_t>(ext_ids[k])];
    ExtensionMemo memo(pts, cfg.eps);

    for (std::size_t cell : group) {
      const SeedSeq cell_seq = root.child(static_cast<std::uint64_t>(cell));
      const Clique* best = nullptr;
      for (int r = 0; r < rounds; ++r)
        run_trial_round(memo, cell_seq.child(static_cast<std::uint64_t>(r)), trials, best);
      if (best != nullptr) {
        Clique mapped;
        mapped.ids.reserve(best->ids.size());
        for (int idx : best->ids)
          mapped.ids.push_back(ext_ids[static_cast<std::size_t>(idx)]);
        cell_best[cell] = std::move(mapped);
      }
    }
  });

  UnitResult out;
  out.rounds = rounds;
  out.trials_executed = static_cast<std::uint64_t>(n_cells) *
                        static_cast<std::uint64_t>(rounds) *
                        static_cast<std::uint64_t>(trials);

  auto consider = [&](Clique cand) {
    if (!better_clique(cand, out.clique)) return;
    if (!pairwise_within_two(inst.points, cand.ids)) return;
    out.clique = std::move(cand);
  };

  for (std::size_t c = 0; c < n_cells; ++c) {
    consider(std::move(cell_best[c]));
    // Warm start: the largest single-cell group of this extension is a
    // clique of size >= |P_C| / 25 for free.
    std::size_t best_cell = c;
    for (std::int64_t dx = -2; dx <= 2; ++dx)
      for (std::int64_t dy = -2; dy <= 2; ++dy) {
        const CellCoord cc{part.cells[c].cx + dx, part.cells[c].cy + dy};
        const auto it = std::lower_bound(part.cells.begin(), part.cells.end(), cc);
        if (it != part.cells.end() && *it == cc) {
          const auto idx = static_cast<std::size_t>(it - part.cells.begin());
          if (part.cell_points[idx].size() > part.cell_points[best_cell].size())
            best_cell = idx;
        }
      }
    consider(Clique{part.cell_points[best_cell]});
  }

  if (cfg.verify_output && !pairwise_within_two(inst.points, out.clique.ids))
    throw VerificationFailed("unit solver produced an invalid clique");
  out.verified = cfg.verify_output;
  return out;
}

}  // namespace diskclique
