#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diskclique/geometry.hpp"

namespace diskclique {

// A planar site with an additive weight. The only distance functional the
// index exposes is delta(q, s) = weight + dist(q, location).
struct WeightedSite {
  int site_id = -1;
  Point location{};
  double weight = 0.0;
};

inline double site_delta(Point q, const WeightedSite& s) {
  return s.weight + dist(q, s.location);
}

enum class FurthestBackend { BruteForce, Bucketed };

struct IndexOpCounts {
  std::uint64_t inserts = 0;
  std::uint64_t erases = 0;
  std::uint64_t furthest_queries = 0;
  std::uint64_t extract_calls = 0;
  std::uint64_t extracted_sites = 0;

  std::uint64_t total() const {
    return inserts + erases + furthest_queries + extract_calls + extracted_sites;
  }
};

// Dynamic index over weighted sites supporting furthest-site queries and
// threshold extract-and-delete. Two backends with identical outputs:
// BruteForce scans all live sites; Bucketed prunes a uniform grid of
// buckets by per-bucket delta upper bounds. Ties always break toward the
// smallest site_id.
class FurthestIndex {
 public:
  explicit FurthestIndex(FurthestBackend backend);
  FurthestIndex(FurthestBackend backend, std::span<const WeightedSite> sites);

  // Replaces the contents, reusing storage. The Bucketed grid pitch is
  // rebuilt from the new site set.
  void assign(std::span<const WeightedSite> sites);
  void assign(FurthestBackend backend, std::span<const WeightedSite> sites);

  void insert(const WeightedSite& s);  // throws DuplicateSite
  void erase(int site_id);             // throws UnknownSite
  bool contains(int site_id) const;

  std::size_t size() const { return live_; }
  bool empty() const { return live_ == 0; }
  FurthestBackend backend() const { return backend_; }

  // Live site maximizing delta(q, s), or nullopt when empty.
  std::optional<std::pair<WeightedSite, double>> furthest(Point q) const;

  // Removes and returns every live site with delta(q, s) > threshold
  // (strict), ordered by decreasing delta, ties by site_id.
  std::vector<WeightedSite> extract_above(Point q, double threshold);
  void extract_above_into(Point q, double threshold, std::vector<WeightedSite>& out);

  const IndexOpCounts& counts() const { return counts_; }
  void reset_counts() { counts_ = {}; }

  // Live sites in unspecified order (testing convenience).
  std::vector<WeightedSite> live_sites() const;

 private:
  struct Bucket {
    std::vector<WeightedSite> sites;
    double max_weight = 0.0;
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;

    void recompute_stats();
    void add_stats(const WeightedSite& s);
  };

  FurthestBackend backend_;
  std::size_t live_ = 0;
  mutable IndexOpCounts counts_{};

  // id -> slot (BruteForce) or id -> 1 + nothing (presence only, Bucketed).
  std::vector<std::int32_t> slot_of_;

  // BruteForce storage.
  std::vector<WeightedSite> slots_;

  // Bucketed storage.
  double bucket_side_ = 1.0;
  std::unordered_map<CellCoord, Bucket, CellCoordHash> buckets_;
  std::vector<CellCoord> bucket_of_;  // id -> cell (valid while live)
  mutable std::vector<std::pair<double, const Bucket*>> scan_order_;

  CellCoord bucket_coord(Point p) const;
  void choose_bucket_side(std::span<const WeightedSite> sites);
  bool known(int site_id) const {
    return site_id >= 0 && static_cast<std::size_t>(site_id) < slot_of_.size() &&
           slot_of_[static_cast<std::size_t>(site_id)] >= 0;
  }
};

}  // namespace diskclique
