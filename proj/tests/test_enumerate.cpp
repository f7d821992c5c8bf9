#include "oracles.hpp"
#include "unicell/enumerate.hpp"

#include <doctest.h>

#include <set>

using namespace unicell;

TEST_CASE("gluing counts") {
  CHECK(gen_unicellular(2, true).size() == 3);
  CHECK(gen_unicellular(2, false).size() == 12);
  CHECK(gen_unicellular(1, false).size() == 2);
  CHECK_THROWS_AS(gen_unicellular(0, false), std::invalid_argument);
  for (int n = 1; n <= 5; ++n) {
    auto all = gen_unicellular(n, false);
    std::set<PolygonGluing> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    CHECK(oracle::Int(static_cast<unsigned long>(all.size())) ==
          (oracle::Int(1) << n) * oracle::double_factorial(2 * n - 1));
  }
}

TEST_CASE("vertex profiles") {
  CountTable e1 = vertex_profile(1, true);
  CHECK(e1.get({1, 2}) == 1);
  CHECK(e1.total() == 1);
  CountTable e2 = vertex_profile(2, true);
  CHECK(e2.get({2, 1}) == 1);
  CHECK(e2.get({2, 3}) == 2);
  CountTable h1 = vertex_profile(1, false);
  CHECK(h1.get({1, 1}) == 1);
  CHECK(h1.get({1, 2}) == 1);
}

TEST_CASE("profiles match the independent gluing oracle") {
  for (bool orientable : {true, false}) {
    auto brute = oracle::vertex_profile(5, orientable);
    CountTable table = unicellular_profiles(5, orientable);
    CHECK(table.entries().size() == brute.size());
    for (const auto& [key, count] : brute) CHECK(table.get({key.first, key.second}) == count);
  }
}

TEST_CASE("threaded enumeration merges to the same table") {
  for (bool orientable : {true, false})
    CHECK(vertex_profile(5, orientable, 3) == vertex_profile(5, orientable, 1));
  CHECK(planar_census(5, 4).table == planar_census(5, 1).table);
}

TEST_CASE("rooted orientable maps") {
  CHECK(gen_rooted_orientable_maps(1).size() == 2);
  CHECK(gen_rooted_orientable_maps(2).size() == 10);
  const std::size_t expected[] = {0, 2, 10, 74, 706, 8162};
  for (int e = 1; e <= 5; ++e) {
    std::size_t count = 0;
    for_each_rooted_map(e, [&](const RootedMap& m) {
      euler_data(m);
      ++count;
    });
    CHECK(count == expected[e]);
  }
}

TEST_CASE("rooted maps by vertices and faces match the labelled oracle") {
  for (int e = 1; e <= 3; ++e) {
    std::map<std::pair<int, int>, oracle::Int> ours;
    for (const RootedMap& m : gen_rooted_orientable_maps(e)) {
      EulerData d = euler_data(m);
      ours[{d.vertices, d.faces}] += 1;
    }
    CHECK(ours == oracle::rooted_maps_by_vertices_faces(e));
  }
}

TEST_CASE("planar census") {
  PlanarCensus c = planar_census(5);
  CHECK(c.count(1, 2) == 1);
  CHECK(c.count(2, 1) == 1);
  CHECK(c.count(3, 1) == 2);
  CHECK(c.count(2, 2) == 5);
  CHECK(c.count(1, 1) == 1);
  CHECK_THROWS_AS(c.count(4, 4), std::out_of_range);
  for (int i = 1; i <= 6; ++i) CHECK(c.count(i, 1) == oracle::catalan(i - 1));
  for (int q = 1; q <= 6; ++q)
    for (int r = 1; q + r <= 7; ++r) CHECK(c.count(q, r) == c.count(r, q));
  auto totals = planar_totals(c);
  for (int e = 1; e <= 5; ++e) CHECK(totals[e] == oracle::tutte_planar(e));
  auto small = oracle::rooted_maps_by_vertices_faces(3);
  for (const auto& [key, count] : small)
    if (key.first + key.second == 5) CHECK(c.count(key.first, key.second) == count);
}

TEST_CASE("tree-rooted maps") {
  CHECK(gen_tree_rooted_maps(1, 2).size() == 2);
  CHECK(gen_tree_rooted_maps(2, 1).size() == 3);
  CHECK(gen_tree_rooted_maps(2, 3).size() == 12);
  for (int n = 1; n <= 3; ++n)
    for (int q = 1; q <= n + 1; ++q) {
      auto all = gen_tree_rooted_maps(n, q);
      for (const auto& t : all) validate_tree_rooted(t);
      std::set<TreeRootedMap> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
      CHECK(oracle::Int(static_cast<unsigned long>(all.size())) == oracle::tree_rooted_count(n, q));
    }
}

TEST_CASE("spanning trees skip loops") {
  RootedMap loop({1, 0}, {1, 0}, 0);
  auto trees = spanning_trees(loop);
  REQUIRE(trees.size() == 1);
  CHECK(trees[0] == std::vector<char>{0, 0});
  // two parallel edges between two vertices
  RootedMap digon({2, 3, 0, 1}, {1, 0, 3, 2}, 0);
  CHECK(spanning_trees(digon).size() == 2);
}

TEST_CASE("surjections") {
  for (int v = 1; v <= 5; ++v) CHECK(surjection_count(v, 1) == 1);
  CHECK(surjection_count(2, 2) == 2);
  CHECK(surjection_count(3, 2) == 6);
  CHECK(surjection_count(0, 0) == 1);
  CHECK(surjection_count(2, 3) == 0);
  for (int v = 0; v <= 6; ++v)
    for (int q = 0; q <= 6; ++q) {
      CHECK(surjection_count(v, q) == oracle::surjections(v, q));
      std::size_t listed = 0;
      for_each_surjection(v, q, [&](const std::vector<int>& f) {
        std::set<int> image(f.begin(), f.end());
        CHECK(static_cast<int>(image.size()) == q);
        ++listed;
      });
      CHECK(oracle::Int(static_cast<unsigned long>(listed)) == oracle::surjections(v, q));
    }
}

TEST_CASE("colored unicellular maps") {
  for (int n = 1; n <= 3; ++n)
    for (int q = 1; q <= n + 1; ++q)
      for (bool orientable : {true, false}) {
        auto all = gen_colored_unicellular(n, q, orientable);
        auto profile = oracle::vertex_profile(n, orientable);
        oracle::Int expected = 0;
        for (const auto& [key, count] : profile)
          if (key.first == n) expected += count * oracle::surjections(key.second, q);
        CHECK(oracle::Int(static_cast<unsigned long>(all.size())) == expected);
      }
}

TEST_CASE("count table") {
  CountTable t;
  t.add({1, 2}, 3);
  t.add({1, 2}, 4);
  t.set({0, 1}, 1);
  CHECK(t.get({1, 2}) == 7);
  CHECK(t.get({5, 5}) == 0);
  CHECK(t.total() == 8);
  CountTable u;
  u.add({1, 2}, 1);
  t.merge(u);
  CHECK(t.get({1, 2}) == 8);
}
