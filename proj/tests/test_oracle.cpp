#include <vector>

#include "diskclique/errors.hpp"
#include "diskclique/oracle.hpp"
#include "diskclique/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace diskclique;
using namespace diskclique::testutil;

TEST_SUITE("oracle") {

TEST_CASE("exact_max_clique basics") {
  std::vector<Disk> tri = {{0, {0, 0}, 1.0}, {1, {1, 0}, 1.0}, {2, {0.5, 0.8}, 1.0}};
  CHECK(oracle::exact_max_clique(tri).ids == std::vector<int>{0, 1, 2});

  std::vector<Disk> apart = {{0, {0, 0}, 1.0}, {1, {10, 0}, 1.0}, {2, {20, 0}, 1.0}};
  CHECK(oracle::exact_max_clique(apart).ids.size() == 1);

  std::vector<Disk> path = {{0, {0, 0}, 1.0}, {1, {2, 0}, 1.0}, {2, {4, 0}, 1.0}};
  const auto got = oracle::exact_max_clique(path);
  CHECK(got.ids.size() == 2);
  CHECK(got.ids == std::vector<int>{0, 1});  // lexicographically smallest maximum
}

TEST_CASE("exact_max_clique guard") {
  std::vector<Disk> big(65, Disk{0, {0, 0}, 1.0});
  for (int i = 0; i < 65; ++i) big[static_cast<std::size_t>(i)].id = i;
  CHECK_THROWS_AS(oracle::exact_max_clique(big), TooLarge);
}

TEST_CASE("exact_max_clique agrees with subset enumeration") {
  SplitMix64 rng(71);
  for (int rep = 0; rep < 120; ++rep) {
    const int n = 1 + rng.bounded_int(14);
    std::vector<Disk> disks;
    for (int i = 0; i < n; ++i)
      disks.push_back({i, {rng.unit() * 6, rng.unit() * 6}, 0.4 + rng.unit() * 1.2});
    const auto bk = oracle::exact_max_clique(disks);
    const auto brute = enum_max_clique(disks);
    CHECK(bk.ids == brute);
  }
}

TEST_CASE("exact_max_matching basics and flow cross-check") {
  CobipInstance empty_c;
  empty_c.left = {{0, {0, 0}, 1.0}};
  empty_c.right = {{1, {0.5, 0}, 1.0}};
  CHECK(oracle::exact_max_matching(empty_c).pairs.empty());

  CobipInstance one;
  one.left = {{0, {0, 0}, 1.0}};
  one.right = {{1, {10, 0}, 1.0}};
  CHECK(oracle::exact_max_matching(one).pairs.size() == 1);

  SplitMix64 rng(72);
  for (int rep = 0; rep < 60; ++rep) {
    const auto inst = random_cobip(rng, 12, rep % 2 == 0);
    const auto hk = oracle::exact_max_matching(inst);
    CHECK(static_cast<int>(hk.pairs.size()) == kuhn_max_matching(inst));
  }
}

TEST_CASE("verify_clique") {
  std::vector<Disk> disks = {{0, {0, 0}, 1.0}, {1, {2, 0}, 1.0}, {2, {9, 0}, 1.0}};
  CHECK(oracle::verify_clique(disks, std::vector<int>{}));
  CHECK(oracle::verify_clique(disks, std::vector<int>{2}));
  CHECK(oracle::verify_clique(disks, std::vector<int>{0, 1}));  // tangent pair
  CHECK_FALSE(oracle::verify_clique(disks, std::vector<int>{0, 2}));
  CHECK_THROWS_AS(oracle::verify_clique(disks, std::vector<int>{3}), UnknownId);
}

TEST_CASE("verify_vertex_cover") {
  CobipInstance edgeless;
  edgeless.left = {{0, {0, 0}, 1.0}};
  edgeless.right = {{1, {0.5, 0}, 1.0}};
  CHECK(oracle::verify_vertex_cover(edgeless, VertexCover{}));

  CobipInstance one;
  one.left = {{0, {0, 0}, 1.0}};
  one.right = {{1, {10, 0}, 1.0}};
  CHECK_FALSE(oracle::verify_vertex_cover(one, VertexCover{}));
  CHECK(oracle::verify_vertex_cover(one, VertexCover{{0}}));
  CHECK(oracle::verify_vertex_cover(one, VertexCover{{1}}));
}

}  // TEST_SUITE
