#include <set>

#include "diskclique/errors.hpp"
#include "diskclique/generator.hpp"
#include "diskclique/io.hpp"
#include "diskclique/rng.hpp"
#include "doctest.h"

using namespace diskclique;

TEST_SUITE("io") {

TEST_CASE("parse accepts header, comments and blank lines") {
  const auto got = parse_instance("# disks 2 radii 1\n\n0 0 1\n2.5\t-1 1\n");
  REQUIRE(got.disks.size() == 2);
  CHECK(got.disks[0].id == 0);
  CHECK(got.disks[1].id == 1);
  CHECK(got.disks[1].center.x == 2.5);
  CHECK(got.distinct_radii == 1);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_instance("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("0 0 1 9\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("a b c\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("0 0 nan\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("1e10 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("0 0 1e-7\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("0 0 0\n"), ParseError);
}

TEST_CASE("emit then parse round-trips exactly") {
  SplitMix64 rng(501);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Disk> disks;
    const int n = 1 + rng.bounded_int(40);
    for (int i = 0; i < n; ++i)
      disks.push_back({i,
                       {rng.unit() * 2e9 - 1e9, rng.unit() * 2e9 - 1e9},
                       1e-6 + rng.unit() * 10.0});
    const auto text = emit_instance(disks);
    const auto back = parse_instance(text);
    REQUIRE(back.disks.size() == disks.size());
    for (std::size_t i = 0; i < disks.size(); ++i) {
      CHECK(back.disks[i].center.x == disks[i].center.x);
      CHECK(back.disks[i].center.y == disks[i].center.y);
      CHECK(back.disks[i].radius == disks[i].radius);
    }
    CHECK(emit_instance(back.disks) == text);
  }
}

TEST_CASE("generators are deterministic") {
  CHECK(emit_instance(gen_uniform_unit(30, 10.0, 7)) ==
        emit_instance(gen_uniform_unit(30, 10.0, 7)));
  CHECK(emit_instance(gen_clustered_unit(30, 10.0, 7)) ==
        emit_instance(gen_clustered_unit(30, 10.0, 7)));
  CHECK(emit_instance(gen_multi_radii(30, 3, 10.0, 1.5, 7)) ==
        emit_instance(gen_multi_radii(30, 3, 10.0, 1.5, 7)));
  CHECK(emit_instance(gen_uniform_unit(30, 10.0, 7)) !=
        emit_instance(gen_uniform_unit(30, 10.0, 8)));
}

TEST_CASE("generator shapes") {
  const auto unit = gen_uniform_unit(1, 5.0, 3);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].radius == 1.0);

  const auto multi = gen_multi_radii(50, 3, 10.0, 1.5, 9);
  std::set<double> radii;
  for (const auto& d : multi) radii.insert(d.radius);
  CHECK(radii.size() == 3);

  CHECK_THROWS_AS(gen_multi_radii(2, 3, 10.0, 1.5, 1), BadParams);
  CHECK_THROWS_AS(gen_uniform_unit(0, 10.0, 1), BadParams);
  CHECK_THROWS_AS(gen_uniform_unit(5, -1.0, 1), BadParams);
}

TEST_CASE("result record layout") {
  ResultRecord rec;
  rec.mode = "unit";
  rec.n = 3;
  rec.t = 1;
  rec.epsilon = 0.25;
  rec.delta = 0.05;
  rec.seed = 42;
  rec.clique.ids = {0, 2};
  rec.elapsed_ms = 1.25;
  rec.trials_executed = 10;
  rec.verified = true;
  const auto text = rec.to_text();
  CHECK(text ==
        "mode unit\nn 3\nt 1\nepsilon 0.25\ndelta 0.05\nseed 42\nclique_size 2\n"
        "clique_ids 0 2\nelapsed_ms 1.250\ntrials_executed 10\nverified true\n");
}

}  // TEST_SUITE
