#pragma once

#include "unicell/enumerate.hpp"
#include "unicell/maps.hpp"
#include "unicell/planar_closure.hpp"
#include "unicell/tours.hpp"

#include <vector>

namespace unicell {

struct CompatiblyOrientedTreeRootedMap {
  TreeRootedMap base;
  PartialOrientation arrow;

  int external_weight() const;

  bool operator==(const CompatiblyOrientedTreeRootedMap&) const = default;
  auto operator<=>(const CompatiblyOrientedTreeRootedMap&) const = default;
};

void validate_compatible(const CompatiblyOrientedTreeRootedMap& m);

// Edge id of every half-edge, edges numbered by their smaller half-edge.
std::vector<int> edge_ids(const RootedMap& map);

// Per-vertex values carried through a half-edge relabeling.
std::vector<int> relabel_vertex_values(const RootedMap& before, const std::vector<int>& values,
                                       std::span<const int> new_label, const RootedMap& after);

TreeRootedMap canonicalize(const TreeRootedMap& t);
CompatiblyOrientedTreeRootedMap canonicalize(const CompatiblyOrientedTreeRootedMap& m);

// Compatibly-oriented tree-rooted maps with n edges and vertex labels 0..q-1.
std::vector<CompatiblyOrientedTreeRootedMap> gen_compatibly_oriented(int n, int q);

// edge_labels[edge id] is the label of that edge in the produced graph.
LabelledGraphTour theta(const CompatiblyOrientedTreeRootedMap& m, const std::vector<int>& edge_labels);
LabelledGraphTour theta(const CompatiblyOrientedTreeRootedMap& m);

struct LabelledCompatibleMap {
  CompatiblyOrientedTreeRootedMap map;
  std::vector<int> edge_labels;
};

// All preimages of a tour, canonical and sorted.
std::vector<LabelledCompatibleMap> theta_fiber(const EdgeLabelledGraph& g, const BiEulerianTour& tour);

ColoredUnicellularMap upsilon(const CompatiblyOrientedTreeRootedMap& m);
std::vector<CompatiblyOrientedTreeRootedMap> upsilon_fiber(const ColoredUnicellularMap& u);

// Number of edges that the tour of u uses twice in the same direction, tree
// edges of the last-exit tree excluded.
int external_weight(const ColoredUnicellularMap& u);

TreeRootedMap phi(const ColoredUnicellularMap& u);
ColoredUnicellularMap phi_inv(const TreeRootedMap& t);

// Oriented non-tree edges become pairs of buds (alpha = -1).
struct NearEulerianTreeRootedMap {
  std::vector<int> sigma;
  std::vector<int> alpha;
  PartialOrientation arrow;
  std::vector<int> vertex_label;
  std::vector<char> in_tree;
  int root = 0;

  bool operator==(const NearEulerianTreeRootedMap&) const = default;
  auto operator<=>(const NearEulerianTreeRootedMap&) const = default;
};

NearEulerianTreeRootedMap lambda_cut(const CompatiblyOrientedTreeRootedMap& m);
NearEulerianTreeRootedMap canonicalize(const NearEulerianTreeRootedMap& t);
std::vector<int> vertex_degrees(const std::vector<int>& sigma);

// labeling[k] is the label in 0..r-1 of the k-th face of the submap, faces
// indexed by first visit along the canonical traversal of the submap from the
// first submap half-edge at or after the root. The face labelled 0 is the
// marked outer face.
struct ExternallyLabelledPlanarRootedMap {
  RootedMap map;
  std::vector<int> vertex_label;
  std::vector<char> in_submap;
  std::vector<int> labeling;

  int face_count() const { return static_cast<int>(labeling.size()); }

  bool operator==(const ExternallyLabelledPlanarRootedMap&) const = default;
  auto operator<=>(const ExternallyLabelledPlanarRootedMap&) const = default;
};

void validate_planar_rooted(const ExternallyLabelledPlanarRootedMap& p);

// Face index of every submap half-edge (-1 elsewhere) and the face count.
std::vector<int> submap_face_index(const RootedMap& map, const std::vector<char>& in_submap, int& face_count);

std::vector<ExternallyLabelledPlanarRootedMap> psi_fiber(const ColoredUnicellularMap& u);
ExternallyLabelledPlanarRootedMap psi_encode(const CompatiblyOrientedTreeRootedMap& m);
CompatiblyOrientedTreeRootedMap psi_decode(const ExternallyLabelledPlanarRootedMap& p);
ColoredUnicellularMap psi(const ExternallyLabelledPlanarRootedMap& p);

// Degree of the vertex carrying each label.
std::vector<int> label_degrees(const RootedMap& map, const std::vector<int>& vertex_label);

}  // namespace unicell
