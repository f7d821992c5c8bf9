#pragma once

#include "unicell/maps.hpp"

#include <functional>
#include <vector>

namespace unicell {

// Per half-edge: `out` if the edge (or bud) leaves the vertex of h, `in` if it
// enters it. An edge has opposite arrows on its two halves.
enum class Arrow : signed char { none = 0, out = 1, in = -1 };

using PartialOrientation = std::vector<Arrow>;

// A rooted plane tree with buds. alpha[h] = -1 marks a bud; sigma covers tree
// half-edges and buds alike.
struct NearEulerianTree {
  std::vector<int> sigma;
  std::vector<int> alpha;
  PartialOrientation arrow;
  int root = 0;

  int half_edge_count() const { return static_cast<int>(sigma.size()); }
  int external_weight() const;

  bool operator==(const NearEulerianTree&) const = default;
  auto operator<=>(const NearEulerianTree&) const = default;
};

void validate_near_eulerian(const NearEulerianTree& t);
NearEulerianTree canonicalize(const NearEulerianTree& t);

// A genus 0 map with the face on the right of `outer` marked. outer is
// normalized to the smallest half-edge of its face.
class PlaneMap {
 public:
  PlaneMap(RootedMap map, int outer_half_edge);

  const RootedMap& map() const { return map_; }
  int outer() const { return outer_; }
  int outer_face() const { return face_of_[outer_]; }
  const std::vector<int>& face_of() const { return face_of_; }
  int face_count() const { return face_count_; }

  bool operator==(const PlaneMap& other) const { return outer_ == other.outer_ && map_ == other.map_; }

 private:
  RootedMap map_;
  int outer_;
  std::vector<int> face_of_;
  int face_count_ = 0;
};

struct OrientedPlaneMap {
  PlaneMap plane;
  PartialOrientation arrow;
};

OrientedPlaneMap closure_gamma(const NearEulerianTree& t);

// Indexed by the face ids of PlaneMap::face_of.
std::vector<int> dual_distances(const PlaneMap& m);

PartialOrientation dual_distance_orientation(const PlaneMap& m);

// One half-edge per breakable edge, lying on the inner face it is chosen for.
std::vector<int> breakable_edges(const PlaneMap& m);

NearEulerianTree opening_delta(const PlaneMap& m);

// Near-Eulerian trees with exactly `slots` half-edges (tree halves plus buds),
// in canonical form.
void for_each_near_eulerian_tree(int slots, const std::function<void(const NearEulerianTree&)>& visit);

bool is_balanced(const std::vector<int>& sigma, const PartialOrientation& arrow);

}  // namespace unicell
