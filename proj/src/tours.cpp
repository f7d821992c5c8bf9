#include "unicell/tours.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unicell {

namespace {

bool is_loop(const EdgeLabelledGraph& g, int e) { return g.edges[e].first == g.edges[e].second; }

void check_labels(const std::vector<int>& labels, int n) {
  if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("one edge label per pair required");
  std::vector<char> seen(n, 0);
  for (int l : labels) {
    if (l < 0 || l >= n || seen[l]) throw std::invalid_argument("edge labels are not a permutation");
    seen[l] = 1;
  }
}

}  // namespace

void validate_graph(const EdgeLabelledGraph& g) {
  if (g.vertex_count < 1) throw std::invalid_argument("graph needs a vertex");
  std::vector<int> comp(g.vertex_count);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a > b || b >= g.vertex_count) throw std::invalid_argument("edge endpoints out of range");
    comp[find(a)] = find(b);
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (find(v) != find(0)) throw std::invalid_argument("graph is not connected");
}

std::vector<int> tour_vertices(const EdgeLabelledGraph& g, const BiEulerianTour& tour) {
  std::vector<int> at{tour.origin};
  int cur = tour.origin;
  for (const TourStep& s : tour.steps) {
    if (s.edge < 0 || s.edge >= static_cast<int>(g.edges.size())) throw std::invalid_argument("tour uses unknown edge");
    auto [a, b] = g.edges[s.edge];
    if (a == b) {
      if (cur != a) throw std::invalid_argument("tour is not a walk");
    } else if (!s.reversed) {
      if (cur != a) throw std::invalid_argument("tour is not a walk");
      cur = b;
    } else {
      if (cur != b) throw std::invalid_argument("tour is not a walk");
      cur = a;
    }
    at.push_back(cur);
  }
  return at;
}

void validate_tour(const EdgeLabelledGraph& g, const BiEulerianTour& tour) {
  validate_graph(g);
  const int n = static_cast<int>(g.edges.size());
  if (static_cast<int>(tour.steps.size()) != 2 * n) throw std::invalid_argument("tour must have 2n steps");
  if (tour.origin < 0 || tour.origin >= g.vertex_count) throw std::invalid_argument("origin out of range");
  std::vector<int> uses(n, 0);
  for (const TourStep& s : tour.steps) {
    if (s.edge < 0 || s.edge >= n) throw std::invalid_argument("tour uses unknown edge");
    if (is_loop(g, s.edge) && uses[s.edge] == 0 && s.reversed)
      throw std::invalid_argument("first traversal of a loop must not be reversed");
    if (++uses[s.edge] > 2) throw std::invalid_argument("edge used more than twice");
  }
  auto at = tour_vertices(g, tour);
  if (at.back() != tour.origin) throw std::invalid_argument("tour is not closed");
}

void for_each_bi_eulerian_tour(const EdgeLabelledGraph& g, int origin,
                               const std::function<void(const BiEulerianTour&)>& visit) {
  validate_graph(g);
  const int n = static_cast<int>(g.edges.size());
  std::vector<int> uses(n, 0);
  BiEulerianTour tour{origin, {}};
  std::function<void(int)> go = [&](int cur) {
    if (static_cast<int>(tour.steps.size()) == 2 * n) {
      if (cur == origin) visit(tour);
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (uses[e] == 2) continue;
      auto [a, b] = g.edges[e];
      if (a != cur && b != cur) continue;
      ++uses[e];
      if (a == b) {
        tour.steps.push_back({e, false});
        go(cur);
        tour.steps.pop_back();
        if (uses[e] == 2) {
          tour.steps.push_back({e, true});
          go(cur);
          tour.steps.pop_back();
        }
      } else {
        bool rev = cur == b;
        tour.steps.push_back({e, rev});
        go(rev ? a : b);
        tour.steps.pop_back();
      }
      --uses[e];
    }
  };
  go(origin);
}

LabelledGraphTour xi(const ColoredUnicellularMap& u, const std::vector<int>& edge_labels) {
  const PolygonGluing& gl = u.gluing();
  const int n = gl.n(), m2 = 2 * n;
  check_labels(edge_labels, n);
  LabelledGraphTour out;
  out.graph.vertex_count = u.q();
  out.graph.edges.resize(n);
  for (int p = 0; p < n; ++p) {
    auto [i, j] = gl.pair(p);
    (void)j;
    int a = u.corner_color(i), b = u.corner_color((i + 1) % m2);
    out.graph.edges[edge_labels[p]] = {std::min(a, b), std::max(a, b)};
  }
  out.tour.origin = u.corner_color(0);
  for (int k = 0; k < m2; ++k) {
    int p = gl.pair_of(k);
    int from = u.corner_color(k), to = u.corner_color((k + 1) % m2);
    bool reversed;
    if (from != to)
      reversed = from > to;
    else
      reversed = k > gl.partner(k) && !gl.twisted_pair(p);
    out.tour.steps.push_back({edge_labels[p], reversed});
  }
  return out;
}

LabelledGraphTour xi(const ColoredUnicellularMap& u) {
  std::vector<int> labels(u.n());
  std::iota(labels.begin(), labels.end(), 0);
  return xi(u, labels);
}

LabelledUnicellular xi_inverse(const EdgeLabelledGraph& g, const BiEulerianTour& tour) {
  validate_tour(g, tour);
  const int n = static_cast<int>(g.edges.size()), m2 = 2 * n;
  if (n < 1) throw std::invalid_argument("tour needs at least one edge");
  auto at = tour_vertices(g, tour);
  std::vector<int> first_side(n, -1), second_side(n, -1);
  for (int k = 0; k < m2; ++k) {
    int e = tour.steps[k].edge;
    (first_side[e] < 0 ? first_side[e] : second_side[e]) = k;
  }
  std::vector<std::pair<int, int>> pairs(n);
  std::vector<bool> twisted(n);
  for (int e = 0; e < n; ++e) {
    pairs[e] = {first_side[e], second_side[e]};
    const TourStep& s1 = tour.steps[first_side[e]];
    const TourStep& s2 = tour.steps[second_side[e]];
    twisted[e] = is_loop(g, e) ? !s2.reversed : s1.reversed == s2.reversed;
  }
  PolygonGluing gluing(n, pairs, twisted);
  GluedSkeleton sk = glue_polygon(gluing);
  std::vector<int> colors(sk.vertex_count, -1);
  for (int k = 0; k < m2; ++k) {
    int& c = colors[sk.vertex_of_corner[k]];
    if (c >= 0 && c != at[k]) throw std::logic_error("glued corners carry different colors");
    c = at[k];
  }
  std::vector<int> labels(n);
  for (int p = 0; p < n; ++p) labels[p] = tour.steps[gluing.pair(p).first].edge;
  return {ColoredUnicellularMap(gluing, colors, g.vertex_count), labels};
}

std::vector<EdgeDirection> tour_orientation(const EdgeLabelledGraph& g, const BiEulerianTour& tour) {
  validate_tour(g, tour);
  const int n = static_cast<int>(g.edges.size());
  std::vector<int> first(n, -1);
  std::vector<EdgeDirection> out(n, EdgeDirection::none);
  for (const TourStep& s : tour.steps) {
    if (first[s.edge] < 0) {
      first[s.edge] = s.reversed ? 1 : 0;
      continue;
    }
    if (is_loop(g, s.edge)) {
      if (!s.reversed) out[s.edge] = EdgeDirection::forward;
    } else if ((first[s.edge] == 1) == s.reversed) {
      out[s.edge] = s.reversed ? EdgeDirection::backward : EdgeDirection::forward;
    }
  }
  return out;
}

bool is_balanced(const EdgeLabelledGraph& g, const std::vector<EdgeDirection>& orientation) {
  std::vector<int> excess(g.vertex_count, 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (orientation[e] == EdgeDirection::none) continue;
    auto [a, b] = g.edges[e];
    if (orientation[e] == EdgeDirection::backward) std::swap(a, b);
    ++excess[a];
    --excess[b];
  }
  return std::all_of(excess.begin(), excess.end(), [](int x) { return x == 0; });
}

void validate_digraph(const Digraph& g) {
  const int m = static_cast<int>(g.arcs.size());
  if (static_cast<int>(g.twin.size()) != m) throw std::invalid_argument("twin table size");
  for (int a = 0; a < m; ++a) {
    const Arc& arc = g.arcs[a];
    if (arc.tail < 0 || arc.head < 0 || arc.tail >= g.vertex_count || arc.head >= g.vertex_count)
      throw std::invalid_argument("arc endpoint out of range");
    int t = g.twin[a];
    if (t < 0) continue;
    if (t == a || t >= m || g.twin[t] != a || !(g.arcs[t] == arc)) throw std::invalid_argument("bad twin pairing");
  }
}

bool is_balanced(const Digraph& g) {
  std::vector<int> excess(g.vertex_count, 0);
  for (const Arc& a : g.arcs) {
    ++excess[a.tail];
    --excess[a.head];
  }
  return std::all_of(excess.begin(), excess.end(), [](int x) { return x == 0; });
}

void validate_eulerian_tour(const Digraph& g, const EulerianTour& tour) {
  validate_digraph(g);
  if (!is_balanced(g)) throw std::invalid_argument("digraph is not balanced");
  const int m = static_cast<int>(g.arcs.size());
  if (static_cast<int>(tour.arcs.size()) != m) throw std::invalid_argument("tour must use every arc once");
  std::vector<char> used(m, 0);
  int cur = tour.origin;
  for (int a : tour.arcs) {
    if (a < 0 || a >= m || used[a]) throw std::invalid_argument("tour repeats or misses an arc");
    if (g.arcs[a].tail != cur) throw std::invalid_argument("tour is not a walk");
    used[a] = 1;
    cur = g.arcs[a].head;
  }
  if (cur != tour.origin) throw std::invalid_argument("tour is not closed");
}

EulerianTour canonical_tour(const Digraph& g, const EulerianTour& tour) {
  EulerianTour out = tour;
  std::vector<int> pos(g.arcs.size(), -1);
  for (std::size_t k = 0; k < out.arcs.size(); ++k) pos[out.arcs[k]] = static_cast<int>(k);
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    int t = g.twin[a];
    if (t > static_cast<int>(a) && pos[t] < pos[a]) std::swap(out.arcs[pos[a]], out.arcs[pos[t]]);
  }
  return out;
}

EulerTourDecomposition best_decompose(const Digraph& g, const EulerianTour& raw) {
  validate_eulerian_tour(g, raw);
  EulerianTour tour = canonical_tour(g, raw);
  EulerTourDecomposition d{tour.origin, std::vector<int>(g.vertex_count, -1),
                           std::vector<std::vector<int>>(g.vertex_count)};
  for (int a : tour.arcs) d.tree_arc[g.arcs[a].tail] = a;
  for (int v = 0; v < g.vertex_count; ++v)
    if (v != tour.origin && d.tree_arc[v] < 0) throw std::invalid_argument("tour misses a vertex");
  d.tree_arc[tour.origin] = -1;
  for (int a : tour.arcs) {
    int v = g.arcs[a].tail;
    if (a != d.tree_arc[v]) d.orders[v].push_back(a);
  }
  return d;
}

EulerianTour best_compose(const Digraph& g, const EulerTourDecomposition& d) {
  validate_digraph(g);
  if (!is_balanced(g)) throw std::invalid_argument("digraph is not balanced");
  const int q = g.vertex_count, m = static_cast<int>(g.arcs.size());
  if (static_cast<int>(d.tree_arc.size()) != q || static_cast<int>(d.orders.size()) != q)
    throw std::invalid_argument("decomposition size mismatch");
  if (d.origin < 0 || d.origin >= q || d.tree_arc[d.origin] != -1) throw std::invalid_argument("bad origin");
  std::vector<int> owner(m, -1);
  for (int v = 0; v < q; ++v) {
    std::vector<int> exits = d.orders[v];
    if (v != d.origin) exits.push_back(d.tree_arc[v]);
    for (int a : exits) {
      if (a < 0 || a >= m || owner[a] >= 0 || g.arcs[a].tail != v)
        throw std::invalid_argument("orders do not cover the exits of a vertex");
      owner[a] = v;
    }
  }
  for (int a = 0; a < m; ++a)
    if (owner[a] < 0) throw std::invalid_argument("orders do not cover the non-tree arcs");
  for (int v = 0; v < q; ++v) {
    int cur = v;
    for (int steps = 0; cur != d.origin; ++steps) {
      if (steps > q) throw std::invalid_argument("tree arcs contain a cycle");
      cur = g.arcs[d.tree_arc[cur]].head;
    }
  }
  std::vector<std::size_t> next(q, 0);
  std::vector<char> tree_used(q, 0);
  EulerianTour tour{d.origin, {}};
  int cur = d.origin;
  while (true) {
    int a;
    if (next[cur] < d.orders[cur].size()) {
      a = d.orders[cur][next[cur]++];
    } else if (cur != d.origin && !tree_used[cur]) {
      tree_used[cur] = 1;
      a = d.tree_arc[cur];
    } else {
      break;
    }
    tour.arcs.push_back(a);
    cur = g.arcs[a].head;
  }
  if (static_cast<int>(tour.arcs.size()) != m) throw std::logic_error("walk stopped before using every arc");
  return canonical_tour(g, tour);
}

void for_each_eulerian_tour(const Digraph& g, int origin, const std::function<void(const EulerianTour&)>& visit) {
  validate_digraph(g);
  const int m = static_cast<int>(g.arcs.size());
  std::vector<char> used(m, 0);
  EulerianTour tour{origin, {}};
  std::function<void(int)> go = [&](int cur) {
    if (static_cast<int>(tour.arcs.size()) == m) {
      if (cur == origin) visit(tour);
      return;
    }
    for (int a = 0; a < m; ++a) {
      if (used[a] || g.arcs[a].tail != cur) continue;
      int t = g.twin[a];
      if (t >= 0 && t < a && !used[t]) continue;
      used[a] = 1;
      tour.arcs.push_back(a);
      go(g.arcs[a].head);
      tour.arcs.pop_back();
      used[a] = 0;
    }
  };
  go(origin);
}

}  // namespace unicell
