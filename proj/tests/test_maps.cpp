#include "oracles.hpp"
#include "unicell/enumerate.hpp"
#include "unicell/maps.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace unicell;

namespace {

RootedMap one_edge() { return RootedMap({0, 1}, {1, 0}, 0); }
RootedMap loop() { return RootedMap({1, 0}, {1, 0}, 0); }
RootedMap torus() { return RootedMap({1, 2, 3, 0}, {2, 3, 0, 1}, 0); }

std::vector<int> random_bijection(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("face tracing") {
  CHECK(trace_faces(one_edge()).size() == 1);
  CHECK(trace_faces(one_edge())[0].size() == 2);
  CHECK(trace_faces(loop()).size() == 2);
  CHECK(trace_faces(torus()).size() == 1);
}

TEST_CASE("euler data") {
  CHECK(euler_data(one_edge()) == EulerData{2, 1, 1, 0});
  CHECK(euler_data(torus()) == EulerData{1, 2, 1, 1});
  CHECK(euler_data(loop()) == EulerData{1, 1, 2, 0});
  // path with three vertices
  RootedMap path({0, 2, 1, 3}, {1, 0, 3, 2}, 0);
  CHECK(euler_data(path) == EulerData{3, 2, 1, 0});
}

TEST_CASE("rooted map validation") {
  CHECK_THROWS_AS(RootedMap({0, 1}, {0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootedMap({0, 1, 2}, {1, 0, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootedMap({0, 0}, {1, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootedMap({0, 1, 2, 3}, {1, 0, 3, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootedMap({0, 1}, {1, 0}, 2), std::invalid_argument);
}

TEST_CASE("glue polygon examples") {
  GluedSkeleton plain = glue_polygon(PolygonGluing(1, {{0, 1}}, {false}));
  CHECK(plain.vertex_count == 2);
  CHECK(plain.orientable);
  GluedSkeleton twisted = glue_polygon(PolygonGluing(1, {{0, 1}}, {true}));
  CHECK(twisted.vertex_count == 1);
  CHECK_FALSE(twisted.orientable);
  GluedSkeleton t = glue_polygon(PolygonGluing(2, {{0, 2}, {1, 3}}, {false, false}));
  CHECK(t.vertex_count == 1);
  CHECK(t.orientable);
  CHECK(t.vertex_classes().size() == 1);
}

TEST_CASE("malformed gluings are rejected") {
  CHECK_THROWS_AS(PolygonGluing(2, {{0, 1}, {1, 2}}, {false, false}), std::invalid_argument);
  CHECK_THROWS_AS(PolygonGluing(2, {{0, 1}}, {false}), std::invalid_argument);
  CHECK_THROWS_AS(PolygonGluing(1, {{0, 2}}, {false}), std::invalid_argument);
  CHECK_THROWS_AS(PolygonGluing(1, {{0, 0}}, {false}), std::invalid_argument);
}

TEST_CASE("vertex counts agree with the corner oracle") {
  for (int n = 1; n <= 4; ++n) {
    std::size_t seen = 0;
    for (const PolygonGluing& g : gen_unicellular(n, false)) {
      std::vector<char> tw(2 * n);
      for (int s = 0; s < 2 * n; ++s) tw[s] = g.twisted_side(s);
      GluedSkeleton sk = glue_polygon(g);
      REQUIRE(sk.vertex_count == oracle::gluing_vertices(g.partners(), tw));
      CHECK(sk.orientable == g.orientable());
      if (sk.orientable) CHECK((sk.vertex_count - n + 1) % 2 == 0);
      ++seen;
    }
    CHECK(seen == (std::size_t{1} << n) * oracle::double_factorial(2 * n - 1).get_ui());
  }
}

TEST_CASE("gluing to map round trip") {
  for (int n = 1; n <= 4; ++n)
    for (const PolygonGluing& g : gen_unicellular(n, true)) {
      RootedMap m = gluing_to_map(g);
      EulerData e = euler_data(m);
      CHECK(e.faces == 1);
      CHECK(e.vertices == glue_polygon(g).vertex_count);
      CHECK(map_to_gluing(m) == g);
    }
  CHECK_THROWS(map_to_gluing(loop()));
}

TEST_CASE("canonical forms") {
  std::mt19937 rng(7);
  for (int e = 1; e <= 4; ++e)
    for (const RootedMap& m : gen_rooted_orientable_maps(e)) {
      CHECK(is_canonical(m));
      CHECK(canonicalize(canonicalize(m)) == canonicalize(m));
      for (int trial = 0; trial < 3; ++trial) {
        auto p = random_bijection(m.half_edge_count(), rng);
        RootedMap moved = relabel(m, p);
        CHECK(moved.root() == p[m.root()]);
        CHECK(canonicalize(moved) == m);
      }
    }
}

TEST_CASE("two plane trees with two edges differ") {
  // path rooted at an end, and the cherry
  RootedMap path({0, 2, 1, 3}, {1, 0, 3, 2}, 0);
  RootedMap cherry({2, 1, 0, 3}, {1, 0, 3, 2}, 0);
  CHECK(euler_data(path).genus == 0);
  CHECK(euler_data(cherry).genus == 0);
  CHECK_FALSE(canonicalize(path) == canonicalize(cherry));
}

TEST_CASE("canonical form separates isomorphism classes") {
  for (int e = 1; e <= 3; ++e) {
    auto maps = gen_rooted_orientable_maps(e);
    std::set<RootedMap> distinct(maps.begin(), maps.end());
    CHECK(distinct.size() == maps.size());
    oracle::Int total = 0;
    for (const auto& [key, count] : oracle::rooted_maps_by_vertices_faces(e)) total += count;
    CHECK(total == oracle::Int(static_cast<unsigned long>(maps.size())));
  }
}

TEST_CASE("colored unicellular maps") {
  PolygonGluing g(1, {{0, 1}}, {false});
  CHECK_THROWS_AS(ColoredUnicellularMap(g, {0, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(ColoredUnicellularMap(g, {0}, 1), std::invalid_argument);
  ColoredUnicellularMap u(g, {0, 1}, 2);
  CHECK(edge_color_pairs(u) == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(color_degree_sums(u) == std::vector<int>{1, 1});
  CHECK(u.corner_color(0) != u.corner_color(1));
}
