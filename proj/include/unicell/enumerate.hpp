#pragma once

#include "unicell/exact.hpp"
#include "unicell/maps.hpp"

#include <functional>
#include <initializer_list>
#include <map>
#include <vector>

namespace unicell {

class CountTable {
 public:
  using Key = std::vector<int>;

  ExactInteger get(const Key& key) const;
  ExactInteger get(std::initializer_list<int> key) const { return get(Key(key)); }
  void add(const Key& key, const ExactInteger& value);
  void set(const Key& key, const ExactInteger& value);
  void merge(const CountTable& other);
  ExactInteger total() const;
  const std::map<Key, ExactInteger>& entries() const { return entries_; }
  bool operator==(const CountTable& other) const { return entries_ == other.entries_; }

 private:
  std::map<Key, ExactInteger> entries_;
};

// A slice of a search tree: only branches whose index at the split depth is
// congruent to `index` modulo `count` are explored.
struct Partition {
  int index = 0;
  int count = 1;
};

using GluingVisitor = std::function<void(const PolygonGluing&)>;
using MapVisitor = std::function<void(const RootedMap&)>;

void for_each_unicellular(int n, bool orientable_only, const GluingVisitor& visit, Partition part = {});
std::vector<PolygonGluing> gen_unicellular(int n, bool orientable_only);

// Keys (n, v).
CountTable vertex_profile(int n, bool orientable_only, int threads = 1);

// vertex_profile for 1..n_max together with the vertex map entry (0, 1) = 1.
CountTable unicellular_profiles(int n_max, bool orientable_only, int threads = 1);

// Rooted maps with e edges on orientable surfaces of every genus, each in
// canonical form and each isomorphism class once.
void for_each_rooted_map(int e, const MapVisitor& visit, Partition part = {});
std::vector<RootedMap> gen_rooted_orientable_maps(int e);

struct PlanarCensus {
  // Keys (q, r): q vertices, r faces. Includes the vertex map (1, 1).
  CountTable table;
  int max_edges = 0;

  bool covers(int q, int r) const { return q + r - 2 <= max_edges; }
  ExactInteger count(int q, int r) const;
};

PlanarCensus planar_census(int max_edges, int threads = 1);

// Per-edge totals of the census, keyed (e).
std::vector<ExactInteger> planar_totals(const PlanarCensus& census);

// Tree edges are flagged on both of their half-edges. vertex_label is indexed
// by vertex id of the map and is a permutation of 0..q-1.
struct TreeRootedMap {
  RootedMap map;
  std::vector<int> vertex_label;
  std::vector<char> in_tree;

  bool operator==(const TreeRootedMap&) const = default;
  auto operator<=>(const TreeRootedMap&) const = default;
};

void validate_tree_rooted(const TreeRootedMap& t);

// Spanning trees of the underlying graph as per-half-edge flags.
std::vector<std::vector<char>> spanning_trees(const RootedMap& map);

void for_each_tree_rooted_map(int n, int q, const std::function<void(const TreeRootedMap&)>& visit);
std::vector<TreeRootedMap> gen_tree_rooted_maps(int n, int q);

ExactInteger surjection_count(int v, int q);

// All surjections [v] -> [q] in lexicographic order.
void for_each_surjection(int v, int q, const std::function<void(const std::vector<int>&)>& visit);

std::vector<ColoredUnicellularMap> gen_colored_unicellular(int n, int q, bool orientable_only);

}  // namespace unicell
