#include "diskclique/multi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "diskclique/cobip.hpp"
#include "diskclique/errors.hpp"
#include "diskclique/parallel.hpp"

namespace diskclique {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0) || eps > 1.0)
    throw InvalidEpsilon("epsilon must be in (0, 1], got " + std::to_string(eps));
}

constexpr std::uint64_t kAnchorStream = 0xA17C50655ED5ULL;

}  // namespace

MultiInstance MultiInstance::build(std::vector<Disk> disks) {
  if (disks.empty()) throw EmptyInstance("multi-radius instance has no disks");
  MultiInstance inst;
  inst.disks = std::move(disks);
  for (std::size_t i = 0; i < inst.disks.size(); ++i)
    inst.disks[i].id = static_cast<int>(i);

  inst.radius_classes.reserve(inst.disks.size());
  for (const auto& d : inst.disks) inst.radius_classes.push_back(d.radius);
  std::sort(inst.radius_classes.begin(), inst.radius_classes.end());
  inst.radius_classes.erase(
      std::unique(inst.radius_classes.begin(), inst.radius_classes.end()),
      inst.radius_classes.end());

  inst.class_of.resize(inst.disks.size());
  inst.class_members.resize(inst.radius_classes.size());
  for (std::size_t i = 0; i < inst.disks.size(); ++i) {
    const auto it = std::lower_bound(inst.radius_classes.begin(), inst.radius_classes.end(),
                                     inst.disks[i].radius);
    const int cls = static_cast<int>(it - inst.radius_classes.begin());
    inst.class_of[i] = cls;
    inst.class_members[static_cast<std::size_t>(cls)].push_back(static_cast<int>(i));
  }
  return inst;
}

RangeIndex::RangeIndex(const MultiInstance& inst) : inst_(&inst) {
  const int t = inst.t();
  side_.resize(static_cast<std::size_t>(t));
  grid_.resize(static_cast<std::size_t>(t));
  const double r1 = inst.radius_classes.front();
  for (int c = 0; c < t; ++c) {
    side_[static_cast<std::size_t>(c)] = r1 + inst.radius_classes[static_cast<std::size_t>(c)];
    auto& g = grid_[static_cast<std::size_t>(c)];
    for (int id : inst.class_members[static_cast<std::size_t>(c)]) {
      const Point p = inst.disks[static_cast<std::size_t>(id)].center;
      const double s = side_[static_cast<std::size_t>(c)];
      g[CellCoord{static_cast<std::int64_t>(std::floor(p.x / s)),
                  static_cast<std::int64_t>(std::floor(p.y / s))}]
          .push_back(id);
    }
  }
}

std::vector<int> RangeIndex::report(Point o, int class_i) const {
  if (class_i < 0 || class_i >= inst_->t())
    throw UnknownClass("radius class " + std::to_string(class_i) + " out of range");
  return report(o, class_i,
                inst_->radius_classes.front() +
                    inst_->radius_classes[static_cast<std::size_t>(class_i)]);
}

std::vector<int> RangeIndex::report(Point o, int class_i, double radius) const {
  std::vector<int> out;
  report_into(o, class_i, radius, out);
  return out;
}

void RangeIndex::report_into(Point o, int class_i, double radius,
                             std::vector<int>& out) const {
  if (class_i < 0 || class_i >= inst_->t())
    throw UnknownClass("radius class " + std::to_string(class_i) + " out of range");
  out.clear();
  const double s = side_[static_cast<std::size_t>(class_i)];
  const auto& g = grid_[static_cast<std::size_t>(class_i)];
  const auto lo_x = static_cast<std::int64_t>(std::floor((o.x - radius) / s));
  const auto hi_x = static_cast<std::int64_t>(std::floor((o.x + radius) / s));
  const auto lo_y = static_cast<std::int64_t>(std::floor((o.y - radius) / s));
  const auto hi_y = static_cast<std::int64_t>(std::floor((o.y + radius) / s));
  const double rr = radius * radius;
  for (std::int64_t cx = lo_x; cx <= hi_x; ++cx)
    for (std::int64_t cy = lo_y; cy <= hi_y; ++cy) {
      const auto it = g.find(CellCoord{cx, cy});
      if (it == g.end()) continue;
      for (int id : it->second)
        if (dist_sq(o, inst_->disks[static_cast<std::size_t>(id)].center) <= rr)
          out.push_back(id);
    }
  std::sort(out.begin(), out.end());
}

ConeEstimate constant_approx_size(const MultiInstance& inst) {
  if (inst.disks.empty()) throw EmptyInstance("multi-radius instance has no disks");
  ConeEstimate best;
  std::array<std::vector<int>, 6> cones;
  for (const auto& o : inst.disks) {
    for (auto& c : cones) c.clear();
    for (const auto& d : inst.disks) {
      if (d.radius < o.radius) continue;
      if (!disks_intersect(o, d)) continue;
      cones[static_cast<std::size_t>(cone_index(o.center, d.center))].push_back(d.id);
    }
    for (const auto& cone : cones) {
      if (static_cast<int>(cone.size()) > best.k) {
        best.k = static_cast<int>(cone.size());
        best.witness.ids = cone;
        if (std::find(cone.begin(), cone.end(), o.id) == cone.end())
          best.witness.ids.push_back(o.id);
        std::sort(best.witness.ids.begin(), best.witness.ids.end());
      }
    }
  }
  return best;
}

std::pair<std::vector<int>, std::vector<int>> trial_sides(
    const MultiInstance& inst, std::span<const int> active_classes,
    const std::vector<std::vector<int>>& dprime_by_class, const TrialSample& sample) {
  std::pair<std::vector<int>, std::vector<int>> sides;
  for (std::size_t a = 0; a < active_classes.size(); ++a) {
    if (!sample.pairs[a].has_value()) continue;
    const auto [ai, bi] = *sample.pairs[a];
    const Point pa = inst.disks[static_cast<std::size_t>(ai)].center;
    const Point pb = inst.disks[static_cast<std::size_t>(bi)].center;
    for (int id : dprime_by_class[a]) {
      const Disk& d = inst.disks[static_cast<std::size_t>(id)];
      // D'' membership: intersects every sampled disk.
      bool ok = true;
      for (int x : sample.x_ids)
        if (!disks_intersect(d, inst.disks[static_cast<std::size_t>(x)])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      switch (in_slab_and_side(d.center, pa, pb)) {
        case SlabPosition::Above: sides.first.push_back(id); break;
        case SlabPosition::Below: sides.second.push_back(id); break;
        case SlabPosition::Outside: break;
      }
    }
  }
  std::sort(sides.first.begin(), sides.first.end());
  std::sort(sides.second.begin(), sides.second.end());
  return sides;
}

Clique run_trial(const MultiInstance& inst, std::span<const int> active_classes,
                 const std::vector<std::vector<int>>& dprime_by_class,
                 const TrialSample& sample, double eps) {
  const auto [left_ids, right_ids] = trial_sides(inst, active_classes, dprime_by_class, sample);
  if (left_ids.empty() && right_ids.empty()) return {};

  CobipInstance cobip;
  cobip.left.reserve(left_ids.size());
  cobip.right.reserve(right_ids.size());
  for (int id : left_ids) cobip.left.push_back(inst.disks[static_cast<std::size_t>(id)]);
  for (int id : right_ids) cobip.right.push_back(inst.disks[static_cast<std::size_t>(id)]);

  Clique clique = approx_clique(cobip, eps / 2.0);
  if (!pairwise_intersecting(inst.disks, clique.ids)) return {};
  return clique;
}

std::int64_t default_m1(std::size_t n, double k, double eps) {
  const double denom = std::max(k, 1e-9) * eps;
  const double raw = std::ceil(2.0 * std::numbers::ln2 * static_cast<double>(n) / denom);
  return std::clamp<std::int64_t>(static_cast<std::int64_t>(raw), 1,
                                  std::int64_t{1} << 40);
}

std::int64_t default_m2(int active_classes, double eps) {
  const double base = 144.0 / (eps * eps);
  const double raw = 3.0 * std::pow(base, 2.0 * active_classes);
  if (!(raw < 9.0e18)) return std::numeric_limits<std::int64_t>::max() / 4;
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(raw)));
}

Clique solve_fixed_radii(const MultiInstance& inst, const RangeIndex& ridx,
                         std::span<const int> active_classes, double eps, double k,
                         const MultiConfig& cfg, SeedSeq stream) {
  check_eps(eps);
  const int anchor_class = active_classes.front();
  const auto& anchor_pool = inst.class_members[static_cast<std::size_t>(anchor_class)];
  const double r_small = inst.radius_classes[static_cast<std::size_t>(anchor_class)];

  const std::int64_t m1 = cfg.m1_override.value_or(default_m1(inst.disks.size(), k, eps));
  const std::int64_t m2 =
      cfg.m2_override.value_or(default_m2(static_cast<int>(active_classes.size()), eps));

  // Draw all anchors up front and group the trials by anchor disk: the
  // neighborhood and the per-sample cache depend only on the disk, not on
  // which anchor draw hit it.
  std::vector<int> anchor_of(static_cast<std::size_t>(m1));
  for (std::int64_t a = 0; a < m1; ++a) {
    SplitMix64 rng = stream.child(static_cast<std::uint64_t>(a)).child(kAnchorStream).rng();
    anchor_of[static_cast<std::size_t>(a)] =
        anchor_pool[rng.bounded(anchor_pool.size())];
  }
  std::unordered_map<int, std::vector<std::int64_t>> trials_by_anchor;
  std::vector<int> anchor_order;
  for (std::int64_t a = 0; a < m1; ++a) {
    auto& v = trials_by_anchor[anchor_of[static_cast<std::size_t>(a)]];
    if (v.empty()) anchor_order.push_back(anchor_of[static_cast<std::size_t>(a)]);
    v.push_back(a);
  }

  std::vector<Clique> per_anchor_best(anchor_order.size());
  parallel_for(anchor_order.size(), cfg.threads, [&](std::size_t gi) {
    const int anchor = anchor_order[gi];
    const Disk& anchor_disk = inst.disks[static_cast<std::size_t>(anchor)];
    std::vector<std::vector<int>> dprime(active_classes.size());
    std::vector<std::size_t> pool_sizes(active_classes.size());
    for (std::size_t ci = 0; ci < active_classes.size(); ++ci) {
      const int cls = active_classes[ci];
      ridx.report_into(anchor_disk.center, cls,
                       r_small + inst.radius_classes[static_cast<std::size_t>(cls)],
                       dprime[ci]);
      pool_sizes[ci] = dprime[ci].size();
    }

    std::unordered_map<std::uint64_t, Clique> memo;
    Clique best{std::vector<int>{anchor}};
    TrialSample sample;
    sample.anchor = anchor;
    for (std::int64_t a : trials_by_anchor.at(anchor)) {
      const SeedSeq anchor_seq = stream.child(static_cast<std::uint64_t>(a));
      for (std::int64_t trial = 0; trial < m2; ++trial) {
        SplitMix64 rng = anchor_seq.child(static_cast<std::uint64_t>(trial)).rng();
        sample.pairs.assign(active_classes.size(), std::nullopt);
        sample.x_ids.clear();
        std::uint64_t key = 0x243F6A8885A308D3ULL;
        for (std::size_t ci = 0; ci < active_classes.size(); ++ci) {
          if (pool_sizes[ci] == 0) {
            key = seed_fold(key, ~0ULL);
            continue;
          }
          int ai = dprime[ci][rng.bounded(pool_sizes[ci])];
          int bi = dprime[ci][rng.bounded(pool_sizes[ci])];
          const Point pa = inst.disks[static_cast<std::size_t>(ai)].center;
          const Point pb = inst.disks[static_cast<std::size_t>(bi)].center;
          if (pa.x > pb.x || (pa.x == pb.x && ai > bi)) std::swap(ai, bi);
          sample.pairs[ci] = std::make_pair(ai, bi);
          sample.x_ids.push_back(ai);
          sample.x_ids.push_back(bi);
          key = seed_fold(key, static_cast<std::uint64_t>(ai));
          key = seed_fold(key, static_cast<std::uint64_t>(bi));
        }
        auto it = memo.find(key);
        if (it == memo.end())
          it = memo.emplace(key, run_trial(inst, active_classes, dprime, sample, eps)).first;
        if (it->second.empty()) continue;
        keep_better(best, it->second);
      }
    }
    per_anchor_best[gi] = std::move(best);
  });

  Clique best;
  for (auto& cand : per_anchor_best) keep_better(best, std::move(cand));
  return best;
}

MultiResult solve_multi(const MultiInstance& inst, const MultiConfig& cfg) {
  check_eps(cfg.eps);
  if (inst.disks.empty()) throw EmptyInstance("multi-radius instance has no disks");
  const int t = inst.t();
  if (t > 24) throw TooLarge("radius-subset loop capped at 24 distinct radii");
  if (cfg.rounds < 1) throw BadParams("rounds must be >= 1");

  const ConeEstimate est = constant_approx_size(inst);
  const RangeIndex ridx(inst);
  const double k_over_t = static_cast<double>(est.k) / static_cast<double>(t);
  const double sub_eps = cfg.eps / 2.0;

  MultiResult out;
  out.k_estimate = est.k;

  Clique best;
  auto consider = [&](Clique cand) {
    if (!better_clique(cand, best)) return;
    if (!pairwise_intersecting(inst.disks, cand.ids)) return;
    best = std::move(cand);
  };
  consider(Clique{{inst.disks.front().id}});
  consider(est.witness);

  const SeedSeq root{cfg.master_seed};
  for (int round = 0; round < cfg.rounds; ++round) {
    const SeedSeq round_seq =
        round == 0 ? root : root.child(0x524F554E440000ULL + static_cast<std::uint64_t>(round));
    for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
      std::vector<int> active;
      for (int c = 0; c < t; ++c)
        if (mask & (1u << c)) active.push_back(c);
      consider(solve_fixed_radii(inst, ridx, active, sub_eps, k_over_t, cfg,
                                 round_seq.child(mask)));
      const std::int64_t m1 =
          cfg.m1_override.value_or(default_m1(inst.disks.size(), k_over_t, sub_eps));
      const std::int64_t m2 = cfg.m2_override.value_or(
          default_m2(static_cast<int>(active.size()), sub_eps));
      const auto executed = static_cast<unsigned __int128>(m1) * static_cast<unsigned __int128>(m2);
      out.trials_executed += executed > ~0ULL ? ~0ULL : static_cast<std::uint64_t>(executed);
    }
  }

  if (cfg.verify_output && !pairwise_intersecting(inst.disks, best.ids))
    throw VerificationFailed("multi solver produced an invalid clique");
  out.verified = cfg.verify_output;
  out.clique = std::move(best);
  return out;
}

}  // namespace diskclique
