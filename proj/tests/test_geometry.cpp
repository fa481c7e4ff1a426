#include <cmath>
#include <numbers>

#include "diskclique/geometry.hpp"
#include "diskclique/rng.hpp"
#include "doctest.h"

using namespace diskclique;

TEST_SUITE("geometry") {

TEST_CASE("dist basics") {
  CHECK(dist({0, 0}, {3, 4}) == doctest::Approx(5.0));
  CHECK(dist({1, 1}, {1, 1}) == 0.0);
  CHECK(dist({0, 0}, {1, 1}) == doctest::Approx(std::numbers::sqrt2));
  CHECK(dist({2, 3}, {-1, 7}) == dist({-1, 7}, {2, 3}));
}

TEST_CASE("disks_intersect closed tangency") {
  CHECK(disks_intersect({0, {0, 0}, 1.0}, {1, {2, 0}, 1.0}));
  CHECK_FALSE(disks_intersect({0, {0, 0}, 1.0}, {1, {2.0001, 0}, 1.0}));
  CHECK(disks_intersect({0, {0, 0}, 2.0}, {1, {1, 1}, 0.5}));
}

TEST_CASE("disks_intersect symmetric and reflexive") {
  SplitMix64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    Disk a{0, {rng.unit() * 10, rng.unit() * 10}, 0.1 + rng.unit() * 3};
    Disk b{1, {rng.unit() * 10, rng.unit() * 10}, 0.1 + rng.unit() * 3};
    CHECK(disks_intersect(a, b) == disks_intersect(b, a));
    CHECK(disks_intersect(a, a));
  }
}

TEST_CASE("cone_index sextants") {
  CHECK(cone_index({0, 0}, {1, 0}) == 0);
  CHECK(cone_index({0, 0}, {0, 1}) == 1);
  CHECK(cone_index({0, 0}, {-1, 0}) == 3);
  CHECK(cone_index({0, 0}, {0, 0}) == 0);
  CHECK(cone_index({0, 0}, {0, -1}) == 4);
  CHECK(cone_index({0, 0}, {1, -0.001}) == 5);
  CHECK(cone_index({0, 0}, {-1, 0.001}) == 2);
  CHECK(cone_index({2, 3}, {3, 3}) == 0);
}

TEST_CASE("cone_index partitions the punctured plane") {
  SplitMix64 rng(11);
  for (int it = 0; it < 10000; ++it) {
    const Point apex{rng.unit() * 4 - 2, rng.unit() * 4 - 2};
    const double ang = rng.unit() * 2 * std::numbers::pi;
    const double rad = 0.001 + rng.unit() * 5;
    const Point p{apex.x + rad * std::cos(ang), apex.y + rad * std::sin(ang)};
    const int k = cone_index(apex, p);
    CHECK(k >= 0);
    CHECK(k <= 5);
  }
}

TEST_CASE("cone clique property with disks") {
  // Two disks intersecting D(o, r1), radii >= r1, centers in one cone:
  // they intersect each other.
  SplitMix64 rng(13);
  int same_cone_pairs = 0;
  for (int it = 0; it < 20000; ++it) {
    const double r1 = 0.2 + rng.unit();
    const Disk o{0, {0, 0}, r1};
    auto sample_neighbor = [&](int id) {
      const double r = r1 + rng.unit() * 2;
      const double ang = rng.unit() * 2 * std::numbers::pi;
      const double d = rng.unit() * 0.999 * (r1 + r);
      return Disk{id, {d * std::cos(ang), d * std::sin(ang)}, r};
    };
    const Disk a = sample_neighbor(1);
    const Disk b = sample_neighbor(2);
    REQUIRE(disks_intersect(o, a));
    REQUIRE(disks_intersect(o, b));
    if (cone_index(o.center, a.center) != cone_index(o.center, b.center)) continue;
    ++same_cone_pairs;
    CHECK(disks_intersect(a, b));
  }
  CHECK(same_cone_pairs > 1000);
}

TEST_CASE("cell_of half-open cells") {
  CHECK(cell_of({0, 0}) == CellCoord{0, 0});
  CHECK(cell_of({1.5, -0.1}) == CellCoord{1, -1});
  CHECK(cell_of({std::numbers::sqrt2, std::numbers::sqrt2}) == CellCoord{1, 1});
}

TEST_CASE("same cell implies distance at most 2") {
  SplitMix64 rng(17);
  for (int it = 0; it < 10000; ++it) {
    const Point p{rng.unit() * 20 - 10, rng.unit() * 20 - 10};
    const Point q{rng.unit() * 20 - 10, rng.unit() * 20 - 10};
    if (cell_of(p) == cell_of(q)) CHECK(dist(p, q) <= 2.0);
  }
}

static Lens make_lens(Point a, Point b, double r) { return Lens{a, b, r, a, b}; }

TEST_CASE("in_lens closed membership") {
  const Lens lens = make_lens({0, 0}, {2, 0}, 2.0);
  CHECK(in_lens({1, 0}, lens));
  CHECK_FALSE(in_lens({-2, 0}, lens));
  CHECK(in_lens({1, std::sqrt(3.0)}, lens));
}

TEST_CASE("lens_side with on-axis points left") {
  const Lens lens{{0, 0}, {0, 2}, 2.0, {0, 0}, {0, 2}};
  CHECK(lens_side({-1, 1}, lens) == LensSide::Left);
  CHECK(lens_side({1, 1}, lens) == LensSide::Right);
  CHECK(lens_side({0, 1}, lens) == LensSide::Left);
}

TEST_CASE("half-lens diameter is at most 2") {
  // Lens of two radius-2 disks whose centers are 2 apart, split by the
  // oriented axis: points on one side are pairwise within distance 2.
  SplitMix64 rng(19);
  int tested = 0;
  for (int it = 0; it < 40000 && tested < 10000; ++it) {
    const double ang = rng.unit() * 2 * std::numbers::pi;
    const Point p2{rng.unit() * 4 - 2, rng.unit() * 4 - 2};
    const Point x{p2.x + 2 * std::cos(ang), p2.y + 2 * std::sin(ang)};
    const Lens lens{x, p2, 2.0, p2, x};

    auto sample_in_lens = [&]() -> Point {
      for (;;) {
        const Point p{p2.x + rng.unit() * 8 - 4, p2.y + rng.unit() * 8 - 4};
        if (in_lens(p, lens)) return p;
      }
    };
    const Point a = sample_in_lens();
    const Point b = sample_in_lens();
    if (lens_side(a, lens) != lens_side(b, lens)) continue;
    ++tested;
    CHECK(dist(a, b) <= 2.0);
  }
  CHECK(tested == 10000);
}

TEST_CASE("in_slab_and_side") {
  CHECK(in_slab_and_side({2, 1}, {0, 0}, {4, 0}) == SlabPosition::Above);
  CHECK(in_slab_and_side({5, 0}, {0, 0}, {4, 0}) == SlabPosition::Outside);
  CHECK(in_slab_and_side({2, 0}, {0, 0}, {4, 0}) == SlabPosition::Above);
  CHECK(in_slab_and_side({2, -0.5}, {0, 0}, {4, 0}) == SlabPosition::Below);
  // Order of a and b must not matter.
  CHECK(in_slab_and_side({2, 1}, {4, 0}, {0, 0}) == SlabPosition::Above);
  CHECK(in_slab_and_side({2, -0.5}, {4, 0}, {0, 0}) == SlabPosition::Below);
  // Degenerate vertical slab: in-slab points are on the line, hence Above.
  CHECK(in_slab_and_side({1, 5}, {1, 0}, {1, 2}) == SlabPosition::Above);
  CHECK(in_slab_and_side({1.1, 5}, {1, 0}, {1, 2}) == SlabPosition::Outside);
}

}  // TEST_SUITE
