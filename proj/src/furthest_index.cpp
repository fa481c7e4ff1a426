#include "diskclique/furthest_index.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diskclique/errors.hpp"

namespace diskclique {

namespace {

// Prefer (delta, -id) lexicographically: larger delta first, smaller id on ties.
inline bool site_beats(double d_new, int id_new, double d_best, int id_best) {
  if (d_new != d_best) return d_new > d_best;
  return id_new < id_best;
}

}  // namespace

void FurthestIndex::Bucket::recompute_stats() {
  max_weight = sites.front().weight;
  min_x = max_x = sites.front().location.x;
  min_y = max_y = sites.front().location.y;
  for (std::size_t i = 1; i < sites.size(); ++i) add_stats(sites[i]);
}

void FurthestIndex::Bucket::add_stats(const WeightedSite& s) {
  max_weight = std::max(max_weight, s.weight);
  min_x = std::min(min_x, s.location.x);
  max_x = std::max(max_x, s.location.x);
  min_y = std::min(min_y, s.location.y);
  max_y = std::max(max_y, s.location.y);
}

FurthestIndex::FurthestIndex(FurthestBackend backend) : backend_(backend) {}

FurthestIndex::FurthestIndex(FurthestBackend backend, std::span<const WeightedSite> sites)
    : backend_(backend) {
  assign(sites);
}

void FurthestIndex::choose_bucket_side(std::span<const WeightedSite> sites) {
  bucket_side_ = 1.0;
  if (sites.empty()) return;
  double min_x = sites[0].location.x, max_x = min_x;
  double min_y = sites[0].location.y, max_y = min_y;
  for (const auto& s : sites) {
    min_x = std::min(min_x, s.location.x);
    max_x = std::max(max_x, s.location.x);
    min_y = std::min(min_y, s.location.y);
    max_y = std::max(max_y, s.location.y);
  }
  const double diag = std::hypot(max_x - min_x, max_y - min_y);
  const double cells = std::ceil(std::sqrt(static_cast<double>(sites.size())));
  const double side = diag / std::max(cells, 1.0);
  if (side > 0.0 && std::isfinite(side)) bucket_side_ = side;
}

CellCoord FurthestIndex::bucket_coord(Point p) const {
  return {static_cast<std::int64_t>(std::floor(p.x / bucket_side_)),
          static_cast<std::int64_t>(std::floor(p.y / bucket_side_))};
}

void FurthestIndex::assign(std::span<const WeightedSite> sites) {
  live_ = 0;
  std::fill(slot_of_.begin(), slot_of_.end(), -1);
  slots_.clear();
  buckets_.clear();
  if (backend_ == FurthestBackend::Bucketed) choose_bucket_side(sites);
  for (const auto& s : sites) insert(s);
}

void FurthestIndex::assign(FurthestBackend backend, std::span<const WeightedSite> sites) {
  backend_ = backend;
  assign(sites);
}

void FurthestIndex::insert(const WeightedSite& s) {
  if (s.site_id < 0) throw DuplicateSite("negative site_id");
  const auto id = static_cast<std::size_t>(s.site_id);
  if (id >= slot_of_.size()) slot_of_.resize(id + 1, -1);
  if (slot_of_[id] >= 0) throw DuplicateSite("site " + std::to_string(s.site_id) + " already live");
  ++counts_.inserts;
  ++live_;
  if (backend_ == FurthestBackend::BruteForce) {
    slot_of_[id] = static_cast<std::int32_t>(slots_.size());
    slots_.push_back(s);
    return;
  }
  const CellCoord cc = bucket_coord(s.location);
  if (id >= bucket_of_.size()) bucket_of_.resize(id + 1);
  bucket_of_[id] = cc;
  Bucket& b = buckets_[cc];
  slot_of_[id] = static_cast<std::int32_t>(b.sites.size());
  b.sites.push_back(s);
  if (b.sites.size() == 1)
    b.recompute_stats();
  else
    b.add_stats(s);
}

void FurthestIndex::erase(int site_id) {
  if (!known(site_id)) throw UnknownSite("site " + std::to_string(site_id) + " not live");
  const auto id = static_cast<std::size_t>(site_id);
  const auto pos = static_cast<std::size_t>(slot_of_[id]);
  ++counts_.erases;
  --live_;
  slot_of_[id] = -1;
  if (backend_ == FurthestBackend::BruteForce) {
    if (pos + 1 != slots_.size()) {
      slots_[pos] = slots_.back();
      slot_of_[static_cast<std::size_t>(slots_[pos].site_id)] = static_cast<std::int32_t>(pos);
    }
    slots_.pop_back();
    return;
  }
  auto it = buckets_.find(bucket_of_[id]);
  Bucket& b = it->second;
  if (pos + 1 != b.sites.size()) {
    b.sites[pos] = b.sites.back();
    slot_of_[static_cast<std::size_t>(b.sites[pos].site_id)] = static_cast<std::int32_t>(pos);
  }
  b.sites.pop_back();
  if (b.sites.empty())
    buckets_.erase(it);
  else
    b.recompute_stats();
}

bool FurthestIndex::contains(int site_id) const { return known(site_id); }

std::optional<std::pair<WeightedSite, double>> FurthestIndex::furthest(Point q) const {
  ++counts_.furthest_queries;
  if (live_ == 0) return std::nullopt;

  const WeightedSite* best = nullptr;
  double best_delta = 0.0;

  if (backend_ == FurthestBackend::BruteForce) {
    for (const auto& s : slots_) {
      const double d = site_delta(q, s);
      if (best == nullptr || site_beats(d, s.site_id, best_delta, best->site_id)) {
        best = &s;
        best_delta = d;
      }
    }
    return std::make_pair(*best, best_delta);
  }

  // Upper bound per bucket: max weight plus the distance to the far corner
  // of the bucket's actual bounding box. Buckets whose bound falls strictly
  // below the current best cannot contain the answer or tie it.
  scan_order_.clear();
  for (const auto& [cc, b] : buckets_) {
    const double dx = std::max(std::abs(q.x - b.min_x), std::abs(q.x - b.max_x));
    const double dy = std::max(std::abs(q.y - b.min_y), std::abs(q.y - b.max_y));
    scan_order_.emplace_back(b.max_weight + std::sqrt(dx * dx + dy * dy), &b);
  }
  std::sort(scan_order_.begin(), scan_order_.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [bound, bp] : scan_order_) {
    if (best != nullptr && bound < best_delta) break;
    for (const auto& s : bp->sites) {
      const double d = site_delta(q, s);
      if (best == nullptr || site_beats(d, s.site_id, best_delta, best->site_id)) {
        best = &s;
        best_delta = d;
      }
    }
  }
  return std::make_pair(*best, best_delta);
}

std::vector<WeightedSite> FurthestIndex::extract_above(Point q, double threshold) {
  std::vector<WeightedSite> out;
  extract_above_into(q, threshold, out);
  return out;
}

void FurthestIndex::extract_above_into(Point q, double threshold,
                                       std::vector<WeightedSite>& out) {
  ++counts_.extract_calls;
  const std::size_t first = out.size();
  if (backend_ == FurthestBackend::BruteForce) {
    for (const auto& s : slots_)
      if (site_delta(q, s) > threshold) out.push_back(s);
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
              [&](const WeightedSite& a, const WeightedSite& b) {
                return site_beats(site_delta(q, a), a.site_id, site_delta(q, b), b.site_id);
              });
    for (std::size_t i = first; i < out.size(); ++i) {
      ++counts_.extracted_sites;
      erase(out[i].site_id);
    }
    return;
  }
  for (;;) {
    auto top = furthest(q);
    if (!top || top->second <= threshold) break;
    ++counts_.extracted_sites;
    erase(top->first.site_id);
    out.push_back(top->first);
  }
}

std::vector<WeightedSite> FurthestIndex::live_sites() const {
  if (backend_ == FurthestBackend::BruteForce) return slots_;
  std::vector<WeightedSite> out;
  out.reserve(live_);
  for (const auto& [cc, b] : buckets_) out.insert(out.end(), b.sites.begin(), b.sites.end());
  return out;
}

}  // namespace diskclique
