#include "oracles.hpp"
#include "unicell/enumerate.hpp"
#include "unicell/planar_closure.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace unicell;

namespace {

NearEulerianTree single_edge() { return {{0, 1}, {1, 0}, {Arrow::none, Arrow::none}, 0}; }
NearEulerianTree bud_pair() { return {{1, 0}, {-1, -1}, {Arrow::out, Arrow::in}, 0}; }
RootedMap nested_loops() { return RootedMap({1, 2, 3, 0}, {3, 2, 1, 0}, 0); }

bool connected_without(const RootedMap& m, const std::set<int>& removed_edges) {
  std::vector<int> comp(m.vertex_count());
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (int h = 0; h < m.half_edge_count(); ++h)
    if (!removed_edges.count(std::min(h, m.alpha(h)))) comp[find(m.vertex_of(h))] = find(m.vertex_of(m.alpha(h)));
  for (int v = 0; v < m.vertex_count(); ++v)
    if (find(v) != find(0)) return false;
  return true;
}

template <class F>
void for_each_plane_map(int e, F&& visit) {
  for_each_rooted_map(e, [&](const RootedMap& map) {
    if (euler_data(map).genus != 0) return;
    for (const auto& face : trace_faces(map)) visit(PlaneMap(map, *std::min_element(face.begin(), face.end())));
  });
}

}  // namespace

TEST_CASE("closure without buds") {
  auto m = closure_gamma(single_edge());
  CHECK(m.plane.map() == RootedMap({0, 1}, {1, 0}, 0));
  CHECK(m.plane.face_count() == 1);
  CHECK(m.arrow == PartialOrientation{Arrow::none, Arrow::none});
  CHECK(opening_delta(m.plane) == single_edge());
}

TEST_CASE("closure of one bud pair") {
  NearEulerianTree t = bud_pair();
  CHECK(t.external_weight() == 1);
  auto m = closure_gamma(t);
  CHECK(m.plane.map() == RootedMap({1, 0}, {1, 0}, 0));
  CHECK(m.plane.face_count() == 2);
  CHECK(m.plane.outer() == 0);
  CHECK(dual_distances(m.plane)[m.plane.outer_face()] == 0);
  CHECK(m.arrow == dual_distance_orientation(m.plane));
  CHECK(opening_delta(m.plane) == t);
}

TEST_CASE("dual distances of nested loops") {
  PlaneMap inner(nested_loops(), 0);
  CHECK(inner.face_count() == 3);
  CHECK(dual_distances(inner) == std::vector<int>{0, 1, 2});
  PlaneMap outer(nested_loops(), 2);
  CHECK(dual_distances(outer) == std::vector<int>{2, 1, 0});
  PlaneMap middle(nested_loops(), 3);
  CHECK(middle.outer() == 1);
  CHECK(dual_distances(middle) == std::vector<int>{1, 0, 1});
  CHECK(breakable_edges(inner) == std::vector<int>{3});
  CHECK(breakable_edges(middle).size() == 2);
}

TEST_CASE("invalid near-Eulerian trees") {
  NearEulerianTree t = bud_pair();
  t.arrow[1] = Arrow::out;
  CHECK_THROWS_AS(validate_near_eulerian(t), std::invalid_argument);
  NearEulerianTree away = single_edge();
  away.arrow = {Arrow::out, Arrow::in};
  CHECK_THROWS_AS(validate_near_eulerian(away), std::invalid_argument);
  NearEulerianTree cycle{{1, 0}, {1, 0}, {Arrow::none, Arrow::none}, 0};
  CHECK_THROWS_AS(validate_near_eulerian(cycle), std::invalid_argument);
  CHECK_THROWS_AS(PlaneMap(RootedMap({1, 2, 3, 0}, {2, 3, 0, 1}, 0), 0), std::invalid_argument);
}

TEST_CASE("breakable edges cross from the first layer and keep the map connected") {
  for (int e = 1; e <= 4; ++e)
    for_each_plane_map(e, [](const PlaneMap& p) {
      auto dist = dual_distances(p);
      auto cuts = breakable_edges(p);
      int first_layer = static_cast<int>(std::count(dist.begin(), dist.end(), 1));
      CHECK(static_cast<int>(cuts.size()) == first_layer);
      std::set<int> removed;
      for (int h : cuts) {
        CHECK(dist[p.face_of()[h]] == 1);
        CHECK(p.face_of()[p.map().alpha(h)] == p.outer_face());
        removed.insert(std::min(h, p.map().alpha(h)));
      }
      CHECK(removed.size() == cuts.size());
      CHECK(connected_without(p.map(), removed));
    });
}

TEST_CASE("opening then closing is the identity on plane maps") {
  for (int e = 1; e <= 4; ++e)
    for_each_plane_map(e, [](const PlaneMap& p) {
      NearEulerianTree t = opening_delta(p);
      validate_near_eulerian(t);
      CHECK(t.external_weight() + 1 == p.face_count());
      auto back = closure_gamma(t);
      CHECK(back.plane == p);
      CHECK(back.arrow == dual_distance_orientation(p));
    });
}

TEST_CASE("closing then opening is the identity on trees") {
  for (int slots = 2; slots <= 8; ++slots)
    for_each_near_eulerian_tree(slots, [](const NearEulerianTree& t) {
      CHECK(canonicalize(t) == t);
      auto m = closure_gamma(t);
      CHECK(m.plane.face_count() == t.external_weight() + 1);
      CHECK(m.arrow == dual_distance_orientation(m.plane));
      CHECK(opening_delta(m.plane) == t);
    });
}

TEST_CASE("trees count plane maps with a marked face") {
  for (int e = 1; e <= 4; ++e) {
    std::map<int, oracle::Int> by_weight, by_faces;
    for_each_near_eulerian_tree(2 * e, [&](const NearEulerianTree& t) { by_weight[t.external_weight() + 1] += 1; });
    for (auto [vf, count] : oracle::rooted_maps_by_vertices_faces(e)) {
      auto [v, f] = vf;
      if (v + f == e + 2) by_faces[f] += count * f;
    }
    CHECK(by_weight == by_faces);
  }
  int odd = 0;
  for_each_near_eulerian_tree(5, [&](const NearEulerianTree&) { ++odd; });
  CHECK(odd == 0);
}

TEST_CASE("near-Eulerian trees are distinct") {
  std::set<NearEulerianTree> seen;
  int count = 0;
  for_each_near_eulerian_tree(6, [&](const NearEulerianTree& t) {
    seen.insert(t);
    ++count;
  });
  CHECK(static_cast<int>(seen.size()) == count);
}
