#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "diskclique/clique.hpp"
#include "diskclique/geometry.hpp"
#include "diskclique/rng.hpp"

namespace diskclique {

// Unit disk instance: every disk has radius 1, so two disks intersect
// exactly when their centers are within distance 2. Ids are positional.
struct UnitInstance {
  std::vector<Point> points;
};

// Grid partition of the instance plus, per nonempty cell, the extension
// P_C: ids of all points in the 5x5 block of cells centered at C.
struct CellPartition {
  std::vector<CellCoord> cells;                 // sorted nonempty cells
  std::vector<std::vector<int>> cell_points;    // per cell, sorted ids
  std::vector<std::vector<int>> extensions;     // per cell, sorted ids of P_C
};

struct UnitConfig {
  double eps = 0.2;
  double delta = 0.05;
  std::uint64_t master_seed = 0;
  std::optional<std::int64_t> trials_per_cell_override;
  bool verify_output = true;
  int threads = 1;
};

struct UnitResult {
  Clique clique;
  std::uint64_t trials_executed = 0;
  int rounds = 0;
  bool verified = false;
};

// ceil(1250 * ln 2 / eps): per-cell trial count that amplifies the eps/1250
// per-trial success bound to 1/2 per round.
std::int64_t default_trials_per_cell(double eps);

// ceil(log2(1/delta)) independent repetitions of the whole per-cell loop.
int amplification_rounds(double delta);

CellPartition build_partition(const UnitInstance& inst);

// One sampling trial over an extension: picks p1, p2 (with replacement),
// builds the lens of D(x,2) and D(p2,2) where x = p2 + 2*(p1-p2)/|p1-p2|,
// splits the contained points into the two half-lenses and solves the
// resulting co-bipartite instance with parameter eps/2. Returned ids are
// indices into `pts`.
Clique lens_trial(std::span<const Point> pts, double eps, SplitMix64& rng);

// Deterministic core of lens_trial for a fixed sampled pair (i, j).
Clique lens_trial_at(std::span<const Point> pts, int i, int j, double eps);

// Best clique over one round of independent lens trials on an extension.
// Trial t draws from stream.child(t).
Clique solve_cell(std::span<const Point> pts, const UnitConfig& cfg, SeedSeq stream);

// Size of the largest single-cell group inside the extension; a guaranteed
// clique of size >= ceil(|pts| / 25).
int maxcl_lower_bound(std::span<const Point> extension_points);

// Full solver: best clique over all nonempty cells and all amplification
// rounds, also competing against each extension's single-cell warm start.
// Deterministic given (inst, cfg), independent of thread count.
UnitResult solve_unit(const UnitInstance& inst, const UnitConfig& cfg);

}  // namespace diskclique
