#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace unicell {

// Half-edges are 0..2m-1. sigma is the counterclockwise rotation at each
// vertex, alpha pairs the two halves of an edge, and the face on the right of
// h continues with phi(h) = sigma(alpha(h)).
class RootedMap {
 public:
  RootedMap(std::vector<int> sigma, std::vector<int> alpha, int root);

  int half_edge_count() const { return static_cast<int>(sigma_.size()); }
  int edge_count() const { return half_edge_count() / 2; }
  int vertex_count() const { return vertex_count_; }
  int root() const { return root_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& alpha() const { return alpha_; }
  int sigma(int h) const { return sigma_[h]; }
  int alpha(int h) const { return alpha_[h]; }
  int phi(int h) const { return sigma_[alpha_[h]]; }

  // Vertices are numbered in order of their smallest half-edge.
  int vertex_of(int h) const { return vertex_of_[h]; }
  const std::vector<int>& vertex_of() const { return vertex_of_; }
  int degree(int vertex) const;

  bool operator==(const RootedMap& other) const {
    return root_ == other.root_ && sigma_ == other.sigma_ && alpha_ == other.alpha_;
  }
  auto operator<=>(const RootedMap& other) const {
    if (auto c = root_ <=> other.root_; c != 0) return c;
    if (auto c = sigma_ <=> other.sigma_; c != 0) return c;
    return alpha_ <=> other.alpha_;
  }

 private:
  std::vector<int> sigma_;
  std::vector<int> alpha_;
  int root_;
  std::vector<int> vertex_of_;
  int vertex_count_ = 0;
};

struct EulerData {
  int vertices;
  int edges;
  int faces;
  int genus;
  bool operator==(const EulerData&) const = default;
};

std::vector<std::vector<int>> trace_faces(const RootedMap& map);

// Face id of every half-edge, ids in the order trace_faces lists them.
std::vector<int> face_of(const RootedMap& map);

EulerData euler_data(const RootedMap& map);

// Orbit decomposition of a permutation, orbits ordered by smallest element.
std::vector<int> orbit_ids(std::span<const int> perm, int& orbit_count);

// new_label[h] for a first-visit traversal from root that looks at alpha(h)
// before sigma(h). alpha may hold -1 for dangling half-edges.
std::vector<int> canonical_relabeling(std::span<const int> sigma, std::span<const int> alpha,
                                      int root);

// Applies a relabeling to a permutation-like array (values are half-edges,
// -1 is preserved).
std::vector<int> relabel_permutation(std::span<const int> perm, std::span<const int> new_label);

template <class T>
std::vector<T> relabel_values(const std::vector<T>& per_half_edge, std::span<const int> new_label) {
  std::vector<T> out(per_half_edge.size());
  for (std::size_t h = 0; h < per_half_edge.size(); ++h) out[new_label[h]] = per_half_edge[h];
  return out;
}

RootedMap relabel(const RootedMap& map, std::span<const int> new_label);
RootedMap canonicalize(const RootedMap& map);
bool is_canonical(const RootedMap& map);

// Sides 0..2n-1 of a rooted 2n-gon; side k runs from corner k to corner k+1.
class PolygonGluing {
 public:
  PolygonGluing(int n, const std::vector<std::pair<int, int>>& pairs,
                const std::vector<bool>& twisted);

  int n() const { return n_; }
  int partner(int side) const { return partner_[side]; }
  const std::vector<int>& partners() const { return partner_; }
  // Pairs are indexed by their smaller side.
  int pair_of(int side) const { return pair_of_[side]; }
  int pair_count() const { return n_; }
  std::pair<int, int> pair(int index) const;
  std::vector<std::pair<int, int>> pairs() const;
  bool twisted_pair(int index) const { return twisted_[index]; }
  bool twisted_side(int side) const { return twisted_[pair_of_[side]]; }
  const std::vector<bool>& twists() const { return twisted_; }
  bool orientable() const;

  bool operator==(const PolygonGluing& other) const {
    return partner_ == other.partner_ && twisted_ == other.twisted_;
  }
  auto operator<=>(const PolygonGluing& other) const {
    if (auto c = partner_ <=> other.partner_; c != 0) return c;
    return twisted_ <=> other.twisted_;
  }

 private:
  int n_;
  std::vector<int> partner_;
  std::vector<int> pair_of_;
  std::vector<bool> twisted_;
};

struct GluedSkeleton {
  // Vertex classes are numbered in order of their smallest corner.
  std::vector<int> vertex_of_corner;
  int vertex_count;
  bool orientable;

  std::vector<std::vector<int>> vertex_classes() const;
};

GluedSkeleton glue_polygon(const PolygonGluing& gluing);

// Rotation system of an orientable gluing: half-edge k is side k and the
// single face visits 0,1,...,2n-1.
RootedMap gluing_to_map(const PolygonGluing& gluing);

// Inverse of gluing_to_map for unicellular rooted maps.
PolygonGluing map_to_gluing(const RootedMap& map);

// Colors are 0..q-1 and indexed by vertex class of the glued skeleton.
class ColoredUnicellularMap {
 public:
  ColoredUnicellularMap(PolygonGluing gluing, std::vector<int> colors, int q);

  const PolygonGluing& gluing() const { return gluing_; }
  const GluedSkeleton& skeleton() const { return skeleton_; }
  const std::vector<int>& colors() const { return colors_; }
  int q() const { return q_; }
  int n() const { return gluing_.n(); }
  int corner_color(int corner) const;
  bool orientable() const { return skeleton_.orientable; }

  bool operator==(const ColoredUnicellularMap& other) const {
    return q_ == other.q_ && gluing_ == other.gluing_ && colors_ == other.colors_;
  }
  auto operator<=>(const ColoredUnicellularMap& other) const {
    if (auto c = q_ <=> other.q_; c != 0) return c;
    if (auto c = gluing_ <=> other.gluing_; c != 0) return c;
    return colors_ <=> other.colors_;
  }

 private:
  PolygonGluing gluing_;
  GluedSkeleton skeleton_;
  std::vector<int> colors_;
  int q_;
};

// Unordered color pair of every edge, sorted; the multiset preserved by the
// bijections.
std::vector<std::pair<int, int>> edge_color_pairs(const ColoredUnicellularMap& map);

// Sum of degrees of the vertices of each color.
std::vector<int> color_degree_sums(const ColoredUnicellularMap& map);

}  // namespace unicell
