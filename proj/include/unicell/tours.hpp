#pragma once

#include "unicell/maps.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace unicell {

// Vertices 0..q-1, edge labels 0..n-1. Each edge is stored with
// first <= second; loops have first == second.
struct EdgeLabelledGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  bool operator==(const EdgeLabelledGraph&) const = default;
};

// A traversal of a non-loop edge goes first -> second unless reversed. For a
// loop, the first traversal is never reversed and the second is reversed iff
// the two traversals go around the loop in opposite directions.
struct TourStep {
  int edge;
  bool reversed;

  bool operator==(const TourStep&) const = default;
  auto operator<=>(const TourStep&) const = default;
};

struct BiEulerianTour {
  int origin = 0;
  std::vector<TourStep> steps;

  bool operator==(const BiEulerianTour&) const = default;
  auto operator<=>(const BiEulerianTour&) const = default;
};

void validate_graph(const EdgeLabelledGraph& g);
void validate_tour(const EdgeLabelledGraph& g, const BiEulerianTour& tour);

// Vertex where each step starts; entry 2n is the end vertex.
std::vector<int> tour_vertices(const EdgeLabelledGraph& g, const BiEulerianTour& tour);

void for_each_bi_eulerian_tour(const EdgeLabelledGraph& g, int origin,
                               const std::function<void(const BiEulerianTour&)>& visit);

struct LabelledGraphTour {
  EdgeLabelledGraph graph;
  BiEulerianTour tour;

  bool operator==(const LabelledGraphTour&) const = default;
};

// edge_labels[p] is the label of the edge glued from pair p of the polygon.
LabelledGraphTour xi(const ColoredUnicellularMap& u, const std::vector<int>& edge_labels);
LabelledGraphTour xi(const ColoredUnicellularMap& u);

struct LabelledUnicellular {
  ColoredUnicellularMap map;
  std::vector<int> edge_labels;
};

LabelledUnicellular xi_inverse(const EdgeLabelledGraph& g, const BiEulerianTour& tour);

enum class EdgeDirection : signed char { none = 0, forward = 1, backward = -1 };

// Orientation per edge label: the edges used twice in the same direction.
std::vector<EdgeDirection> tour_orientation(const EdgeLabelledGraph& g, const BiEulerianTour& tour);

bool is_balanced(const EdgeLabelledGraph& g, const std::vector<EdgeDirection>& orientation);

struct Arc {
  int tail;
  int head;
  bool operator==(const Arc&) const = default;
};

// twin[a] is the arc that a tour cannot tell apart from a, or -1.
struct Digraph {
  int vertex_count = 0;
  std::vector<Arc> arcs;
  std::vector<int> twin;
};

struct EulerianTour {
  int origin = 0;
  std::vector<int> arcs;

  bool operator==(const EulerianTour&) const = default;
  auto operator<=>(const EulerianTour&) const = default;
};

// tree_arc[origin] = -1; orders[v] lists the non-tree exits of v in order of use.
struct EulerTourDecomposition {
  int origin = 0;
  std::vector<int> tree_arc;
  std::vector<std::vector<int>> orders;

  bool operator==(const EulerTourDecomposition&) const = default;
  auto operator<=>(const EulerTourDecomposition&) const = default;
};

void validate_digraph(const Digraph& g);
bool is_balanced(const Digraph& g);
void validate_eulerian_tour(const Digraph& g, const EulerianTour& tour);

// Representative with the smaller arc of each twin pair used first.
EulerianTour canonical_tour(const Digraph& g, const EulerianTour& tour);

EulerTourDecomposition best_decompose(const Digraph& g, const EulerianTour& tour);
EulerianTour best_compose(const Digraph& g, const EulerTourDecomposition& d);

// Every Eulerian tour from origin, one per twin class, in canonical form.
void for_each_eulerian_tour(const Digraph& g, int origin, const std::function<void(const EulerianTour&)>& visit);

}  // namespace unicell
