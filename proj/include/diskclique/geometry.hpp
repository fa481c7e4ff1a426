#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>

namespace diskclique {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A closed disk. `id` is the disk's position in the owning instance.
struct Disk {
  int id = -1;
  Point center{};
  double radius = 1.0;
};

// Intersection of two equal-radius disks, with the oriented axis segment
// that splits it into a left and a right half.
struct Lens {
  Point center_a{};
  Point center_b{};
  double radius = 0.0;
  Point axis_origin{};
  Point axis_tip{};
};

// Index of a square grid cell of side kCellSide; cells are half-open so
// every point belongs to exactly one cell.
struct CellCoord {
  std::int64_t cx = 0;
  std::int64_t cy = 0;
  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

enum class LensSide { Left, Right };
enum class SlabPosition { Outside, Above, Below };

inline constexpr double kCellSide = std::numbers::sqrt2;

inline double dist_sq(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double dist(Point a, Point b) { return std::sqrt(dist_sq(a, b)); }

inline bool disks_intersect(const Disk& d1, const Disk& d2) {
  const double s = d1.radius + d2.radius;
  return dist_sq(d1.center, d2.center) <= s * s;
}

// Complement-graph edge of a co-bipartite disk graph: strictly disjoint disks.
inline bool disks_disjoint(const Disk& d1, const Disk& d2) {
  return !disks_intersect(d1, d2);
}

// Sextant of the direction apex -> p among the six cones of angle pi/3,
// half-open at every k*pi/3 boundary; cone 0 starts at the positive x-axis.
// cone_index(apex, apex) is 0.
inline int cone_index(Point apex, Point p) {
  const double dx = p.x - apex.x;
  const double dy = p.y - apex.y;
  if (dy == 0.0) return dx >= 0.0 ? 0 : 3;
  const double a = std::numbers::sqrt3 * dx;
  if (dy > 0.0) {
    if (dy < a) return 0;
    if (dy > -a) return 1;
    return 2;
  }
  if (dy > a) return 3;
  if (dy < -a) return 4;
  return 5;
}

inline CellCoord cell_of(Point p) {
  return {static_cast<std::int64_t>(std::floor(p.x / kCellSide)),
          static_cast<std::int64_t>(std::floor(p.y / kCellSide))};
}

inline bool in_lens(Point p, const Lens& lens) {
  const double rr = lens.radius * lens.radius;
  return dist_sq(p, lens.center_a) <= rr && dist_sq(p, lens.center_b) <= rr;
}

// Points exactly on the axis line count as Left.
inline LensSide lens_side(Point p, const Lens& lens) {
  const double ax = lens.axis_tip.x - lens.axis_origin.x;
  const double ay = lens.axis_tip.y - lens.axis_origin.y;
  const double px = p.x - lens.axis_origin.x;
  const double py = p.y - lens.axis_origin.y;
  return (ax * py - ay * px) >= 0.0 ? LensSide::Left : LensSide::Right;
}

// Membership in the closed vertical slab of a and b, split by the line
// through a and b. On-line points count as Above.
inline SlabPosition in_slab_and_side(Point p, Point a, Point b) {
  const double lo = std::min(a.x, b.x);
  const double hi = std::max(a.x, b.x);
  if (p.x < lo || p.x > hi) return SlabPosition::Outside;
  if (a.x > b.x) std::swap(a, b);
  const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  return cross >= 0.0 ? SlabPosition::Above : SlabPosition::Below;
}

// 64-bit mix of a grid cell index, used by the hash-grid containers.
inline std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
  std::uint64_t h = static_cast<std::uint64_t>(cx) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(cy) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

struct CellCoordHash {
  std::size_t operator()(const CellCoord& c) const noexcept {
    return static_cast<std::size_t>(cell_key(c.cx, c.cy));
  }
};

}  // namespace diskclique
