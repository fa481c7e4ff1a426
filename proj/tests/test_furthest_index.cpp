#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "diskclique/errors.hpp"
#include "diskclique/furthest_index.hpp"
#include "diskclique/rng.hpp"
#include "doctest.h"

using namespace diskclique;

namespace {

// Linear-scan reference over a plain list, sharing nothing with the index.
struct ScanOracle {
  std::vector<WeightedSite> sites;

  void insert(const WeightedSite& s) { sites.push_back(s); }
  void erase(int id) {
    sites.erase(std::find_if(sites.begin(), sites.end(),
                             [&](const WeightedSite& s) { return s.site_id == id; }));
  }
  bool contains(int id) const {
    return std::any_of(sites.begin(), sites.end(),
                       [&](const WeightedSite& s) { return s.site_id == id; });
  }
  std::optional<std::pair<WeightedSite, double>> furthest(Point q) const {
    std::optional<std::pair<WeightedSite, double>> best;
    for (const auto& s : sites) {
      const double d = site_delta(q, s);
      if (!best || d > best->second || (d == best->second && s.site_id < best->first.site_id))
        best = std::make_pair(s, d);
    }
    return best;
  }
  std::vector<WeightedSite> extract_above(Point q, double thr) {
    std::vector<WeightedSite> out;
    for (const auto& s : sites)
      if (site_delta(q, s) > thr) out.push_back(s);
    std::sort(out.begin(), out.end(), [&](const WeightedSite& a, const WeightedSite& b) {
      const double da = site_delta(q, a), db = site_delta(q, b);
      if (da != db) return da > db;
      return a.site_id < b.site_id;
    });
    for (const auto& s : out) erase(s.site_id);
    return out;
  }
};

WeightedSite random_site(SplitMix64& rng, int id) {
  return {id, {rng.unit() * 40 - 20, rng.unit() * 40 - 20}, rng.unit() * 10 - 5};
}

}  // namespace

TEST_SUITE("furthest_index") {

TEST_CASE("insert, duplicate, delete, unknown") {
  for (auto be : {FurthestBackend::BruteForce, FurthestBackend::Bucketed}) {
    FurthestIndex idx(be);
    idx.insert({0, {0, 0}, 0.0});
    CHECK(idx.size() == 1);
    CHECK_THROWS_AS(idx.insert({0, {1, 1}, 0.0}), DuplicateSite);
    idx.erase(0);
    CHECK(idx.empty());
    CHECK_THROWS_AS(idx.erase(0), UnknownSite);
    CHECK_THROWS_AS(FurthestIndex(be).erase(3), UnknownSite);
  }
}

TEST_CASE("furthest basics and tie-break") {
  for (auto be : {FurthestBackend::BruteForce, FurthestBackend::Bucketed}) {
    FurthestIndex idx(be);
    idx.insert({0, {0, 0}, 0.0});
    idx.insert({1, {5, 0}, 0.0});
    auto got = idx.furthest({1, 0});
    REQUIRE(got.has_value());
    CHECK(got->first.site_id == 1);
    CHECK(got->second == doctest::Approx(4.0));

    FurthestIndex tie(be);
    tie.insert({0, {0, 0}, 3.0});
    tie.insert({1, {5, 0}, 0.0});
    auto t = tie.furthest({1, 0});
    REQUIRE(t.has_value());
    CHECK(t->second == doctest::Approx(4.0));
    CHECK(t->first.site_id == 0);

    CHECK_FALSE(FurthestIndex(be).furthest({0, 0}).has_value());
  }
}

TEST_CASE("furthest agrees with linear scan after 1000 inserts") {
  SplitMix64 rng(101);
  for (auto be : {FurthestBackend::BruteForce, FurthestBackend::Bucketed}) {
    FurthestIndex idx(be);
    ScanOracle oracle;
    for (int i = 0; i < 1000; ++i) {
      const auto s = random_site(rng, i);
      idx.insert(s);
      oracle.insert(s);
    }
    CHECK(idx.size() == 1000);
    for (int q = 0; q < 50; ++q) {
      const Point p{rng.unit() * 60 - 30, rng.unit() * 60 - 30};
      const auto a = idx.furthest(p);
      const auto b = oracle.furthest(p);
      REQUIRE(a.has_value());
      CHECK(a->first.site_id == b->first.site_id);
      CHECK(a->second == b->second);
    }
  }
}

TEST_CASE("extract_above ordering example") {
  for (auto be : {FurthestBackend::BruteForce, FurthestBackend::Bucketed}) {
    FurthestIndex idx(be);
    idx.insert({0, {3, 0}, 0.0});
    idx.insert({1, {5, 0}, 0.0});
    idx.insert({2, {4.5, 0}, 0.0});
    const auto got = idx.extract_above({0, 0}, 4.0);
    REQUIRE(got.size() == 2);
    CHECK(got[0].site_id == 1);
    CHECK(got[1].site_id == 2);
    CHECK(idx.size() == 1);
    CHECK(idx.contains(0));
    // Idempotent at fixed (q, threshold).
    CHECK(idx.extract_above({0, 0}, 4.0).empty());
  }
}

TEST_CASE("extract_above on empty index") {
  for (auto be : {FurthestBackend::BruteForce, FurthestBackend::Bucketed}) {
    FurthestIndex idx(be);
    CHECK(idx.extract_above({1, 2}, 0.0).empty());
  }
}

TEST_CASE("random interleaving matches set-difference oracle") {
  SplitMix64 rng(202);
  for (auto be : {FurthestBackend::BruteForce, FurthestBackend::Bucketed}) {
    FurthestIndex idx(be);
    std::set<int> live;
    int next_id = 0;
    for (int step = 0; step < 500; ++step) {
      if (live.empty() || rng.unit() < 0.6) {
        const auto s = random_site(rng, next_id++);
        idx.insert(s);
        live.insert(s.site_id);
      } else {
        auto it = live.begin();
        std::advance(it, static_cast<long>(rng.bounded(live.size())));
        idx.erase(*it);
        live.erase(it);
      }
    }
    CHECK(idx.size() == live.size());
    for (int id : live) CHECK(idx.contains(id));
    auto sites = idx.live_sites();
    CHECK(sites.size() == live.size());
    for (const auto& s : sites) CHECK(live.count(s.site_id) == 1);
  }
}

TEST_CASE("extract_above equals filter-and-remove oracle on random instances") {
  SplitMix64 rng(303);
  for (auto be : {FurthestBackend::BruteForce, FurthestBackend::Bucketed}) {
    for (int rep = 0; rep < 40; ++rep) {
      FurthestIndex idx(be);
      ScanOracle oracle;
      const int n = 1 + rng.bounded_int(120);
      for (int i = 0; i < n; ++i) {
        const auto s = random_site(rng, i);
        idx.insert(s);
        oracle.insert(s);
      }
      const Point q{rng.unit() * 50 - 25, rng.unit() * 50 - 25};
      const double thr = rng.unit() * 30;
      const auto a = idx.extract_above(q, thr);
      const auto b = oracle.extract_above(q, thr);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].site_id == b[i].site_id);
      CHECK(idx.size() == oracle.sites.size());
    }
  }
}

TEST_CASE("backend equivalence over long mixed replays") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    SplitMix64 rng(seed * 7919);
    FurthestIndex brute(FurthestBackend::BruteForce);
    FurthestIndex bucket(FurthestBackend::Bucketed);
    int next_id = 0;
    std::vector<int> live;
    for (int step = 0; step < 10000; ++step) {
      const double roll = rng.unit();
      if (live.empty() || roll < 0.45) {
        const auto s = random_site(rng, next_id++);
        brute.insert(s);
        bucket.insert(s);
        live.push_back(s.site_id);
      } else if (roll < 0.65) {
        const auto pos = rng.bounded(live.size());
        const int id = live[pos];
        brute.erase(id);
        bucket.erase(id);
        live[pos] = live.back();
        live.pop_back();
      } else if (roll < 0.9) {
        const Point q{rng.unit() * 60 - 30, rng.unit() * 60 - 30};
        const auto a = brute.furthest(q);
        const auto b = bucket.furthest(q);
        REQUIRE(a.has_value() == b.has_value());
        if (a) {
          CHECK(a->first.site_id == b->first.site_id);
          CHECK(a->second == b->second);
        }
      } else {
        const Point q{rng.unit() * 60 - 30, rng.unit() * 60 - 30};
        const double thr = rng.unit() * 40 - 5;
        const auto a = brute.extract_above(q, thr);
        const auto b = bucket.extract_above(q, thr);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].site_id == b[i].site_id);
        std::erase_if(live, [&](int id) { return !brute.contains(id); });
      }
      if (brute.size() != bucket.size()) {
        REQUIRE(brute.size() == bucket.size());
      }
    }
  }
}

TEST_CASE("operation counters") {
  FurthestIndex idx(FurthestBackend::BruteForce);
  idx.insert({0, {0, 0}, 0.0});
  idx.insert({1, {9, 0}, 0.0});
  (void)idx.furthest({0, 0});
  (void)idx.extract_above({0, 0}, 5.0);
  const auto& c = idx.counts();
  CHECK(c.inserts == 2);
  CHECK(c.furthest_queries == 1);
  CHECK(c.extract_calls == 1);
  CHECK(c.extracted_sites == 1);
  CHECK(c.erases == 1);
}

}  // TEST_SUITE
