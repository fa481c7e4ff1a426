#pragma once

#include <span>
#include <vector>

#include "diskclique/geometry.hpp"

namespace diskclique {

// A clique reported as sorted disk ids.
struct Clique {
  std::vector<int> ids;

  std::size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
};

// Ordering used by every solver when reducing candidates: larger size wins,
// ties go to the lexicographically smallest id set. Returns true when `a`
// is strictly better than `b`.
inline bool better_clique(const Clique& a, const Clique& b) {
  if (a.ids.size() != b.ids.size()) return a.ids.size() > b.ids.size();
  return a.ids < b.ids;
}

inline void keep_better(Clique& best, Clique candidate) {
  if (better_clique(candidate, best)) best = std::move(candidate);
}

// Pairwise intersection check over positional disks (disk id == index).
inline bool pairwise_intersecting(std::span<const Disk> disks, std::span<const int> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (!disks_intersect(disks[static_cast<std::size_t>(ids[i])],
                           disks[static_cast<std::size_t>(ids[j])]))
        return false;
  return true;
}

// Same check for unit disks given by their centers.
inline bool pairwise_within_two(std::span<const Point> points, std::span<const int> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (dist_sq(points[static_cast<std::size_t>(ids[i])],
                  points[static_cast<std::size_t>(ids[j])]) > 4.0)
        return false;
  return true;
}

}  // namespace diskclique
