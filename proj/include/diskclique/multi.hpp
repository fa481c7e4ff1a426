#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "diskclique/clique.hpp"
#include "diskclique/geometry.hpp"
#include "diskclique/rng.hpp"

namespace diskclique {

// Disk instance with t distinct radii. radius_classes is sorted increasing
// and class_of maps each disk to its class index.
struct MultiInstance {
  std::vector<Disk> disks;
  std::vector<double> radius_classes;
  std::vector<int> class_of;
  std::vector<std::vector<int>> class_members;  // per class, sorted disk ids

  static MultiInstance build(std::vector<Disk> disks);  // throws EmptyInstance
  int t() const { return static_cast<int>(radius_classes.size()); }
};

// Per-class uniform grid over disk centers answering closed circular range
// queries. The grid pitch for class i is r1 + r_i (r1 = smallest radius),
// the default query radius.
class RangeIndex {
 public:
  explicit RangeIndex(const MultiInstance& inst);

  // Ids of class-i disks with dist(o, center) <= r1 + r_i, sorted by id.
  std::vector<int> report(Point o, int class_i) const;  // throws UnknownClass
  // Same with an explicit query radius (used when a radius subset promotes
  // a larger class to the r1 role).
  std::vector<int> report(Point o, int class_i, double radius) const;
  void report_into(Point o, int class_i, double radius, std::vector<int>& out) const;

 private:
  const MultiInstance* inst_;
  std::vector<double> side_;  // per class grid pitch
  std::vector<std::unordered_map<CellCoord, std::vector<int>, CellCoordHash>> grid_;
};

// One sampled trial: the anchor disk plus, per active class, the sampled
// pair (a_i, b_i) relabeled so a_i is not to the right of b_i. Classes with
// an empty candidate set contribute no sample.
struct TrialSample {
  int anchor = -1;
  std::vector<std::optional<std::pair<int, int>>> pairs;  // aligned with active classes
  std::vector<int> x_ids;                                 // all sampled disk ids
};

struct MultiConfig {
  double eps = 0.25;
  std::uint64_t master_seed = 0;
  std::optional<std::int64_t> m1_override;
  std::optional<std::int64_t> m2_override;
  int rounds = 1;
  bool verify_output = true;
  int threads = 1;
};

struct ConeEstimate {
  int k = 0;          // clique-size estimate with k*/6 <= k <= k*
  Clique witness;     // the realizing clique: best anchor + its best cone class
};

// Constant-factor clique-size estimate from the six-cone argument: for each
// disk o, disks with radius >= r_o that intersect o and share a cone at o's
// center form a clique.
ConeEstimate constant_approx_size(const MultiInstance& inst);  // throws EmptyInstance

// Steps 2-3 for one sample: the anchor neighborhood filtered to disks
// intersecting every sampled disk, with each sampled class split by its
// slab into the Above side L and the Below side R (sorted ids).
std::pair<std::vector<int>, std::vector<int>> trial_sides(
    const MultiInstance& inst, std::span<const int> active_classes,
    const std::vector<std::vector<int>>& dprime_by_class, const TrialSample& sample);

// Steps 2-4 for one sample: trial_sides, then a (1-eps/2)-approximate
// clique of the co-bipartite instance G(L u R). The candidate is verified
// and replaced by an empty clique if invalid.
Clique run_trial(const MultiInstance& inst,
                 std::span<const int> active_classes,
                 const std::vector<std::vector<int>>& dprime_by_class,
                 const TrialSample& sample, double eps);

std::int64_t default_m1(std::size_t n, double k, double eps);
std::int64_t default_m2(int active_classes, double eps);

// Sampling loop for one radius subset: m1 anchor draws from the smallest
// active class, m2 inner trials per anchor. Always returns a valid clique
// (at worst a singleton anchor).
Clique solve_fixed_radii(const MultiInstance& inst, const RangeIndex& ridx,
                         std::span<const int> active_classes, double eps, double k,
                         const MultiConfig& cfg, SeedSeq stream);

struct MultiResult {
  Clique clique;
  std::uint64_t trials_executed = 0;
  int k_estimate = 0;
  bool verified = false;
};

// Full solver: cone estimate, then solve_fixed_radii(eps/2, k/t) over every
// nonempty subset of radius classes. Deterministic given (inst, cfg).
MultiResult solve_multi(const MultiInstance& inst, const MultiConfig& cfg);

}  // namespace diskclique
