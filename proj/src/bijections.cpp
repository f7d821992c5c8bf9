#include "unicell/bijections.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace unicell {

namespace {

// Half-edge at every vertex on the tree edge towards the root vertex (-1 at
// the root vertex).
std::vector<int> parent_half_edges(const RootedMap& map, const std::vector<char>& in_tree) {
  std::vector<int> parent(map.vertex_count(), -1);
  std::vector<char> seen(map.vertex_count(), 0);
  std::deque<int> queue{map.vertex_of(map.root())};
  seen[queue.front()] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int h = 0; h < map.half_edge_count(); ++h) {
      if (map.vertex_of(h) != v || !in_tree[h]) continue;
      int u = map.vertex_of(map.alpha(h));
      if (seen[u]) continue;
      seen[u] = 1;
      parent[u] = map.alpha(h);
      queue.push_back(u);
    }
  }
  return parent;
}

struct Compressed {
  std::vector<int> index;
  std::vector<int> back;
  std::vector<int> sigma;
  std::vector<int> alpha;
  int root = -1;
};

// Restriction of a rotation system to the kept half-edges. alpha may contain
// -1 and must map kept half-edges to kept half-edges.
Compressed compress(const std::vector<int>& sigma, const std::vector<int>& alpha, const std::vector<char>& keep,
                    int root) {
  Compressed c;
  const int n = static_cast<int>(sigma.size());
  c.index.assign(n, -1);
  for (int h = 0; h < n; ++h)
    if (keep[h]) {
      c.index[h] = static_cast<int>(c.back.size());
      c.back.push_back(h);
    }
  if (c.back.empty()) return c;
  for (int h : c.back) {
    int next = sigma[h];
    while (!keep[next]) next = sigma[next];
    c.sigma.push_back(c.index[next]);
    c.alpha.push_back(alpha[h] < 0 ? -1 : c.index[alpha[h]]);
  }
  int r = root;
  for (int k = 0; k < n && !keep[r]; ++k) r = sigma[r];
  if (!keep[r]) throw std::invalid_argument("submap misses the root vertex");
  c.root = c.index[r];
  return c;
}

struct SubmapFaces {
  Compressed view;
  std::vector<int> face;
  std::vector<int> canon;
  int face_count = 0;
};

SubmapFaces submap_faces(const RootedMap& map, const std::vector<char>& in_submap) {
  SubmapFaces s;
  s.view = compress(map.sigma(), map.alpha(), in_submap, map.root());
  const int k = static_cast<int>(s.view.back.size());
  if (k == 0) {
    s.face_count = 1;
    return s;
  }
  s.canon = canonical_relabeling(s.view.sigma, s.view.alpha, s.view.root);
  std::vector<int> order(k);
  for (int h = 0; h < k; ++h) order[s.canon[h]] = h;
  s.face.assign(k, -1);
  for (int h : order) {
    if (s.face[h] >= 0) continue;
    for (int x = h; s.face[x] < 0; x = s.view.sigma[s.view.alpha[x]]) s.face[x] = s.face_count;
    ++s.face_count;
  }
  return s;
}

void require_label_permutation(const std::vector<int>& labels, int size, const char* what) {
  if (static_cast<int>(labels.size()) != size) throw std::invalid_argument(std::string(what) + " has wrong size");
  std::vector<char> seen(size, 0);
  for (int l : labels) {
    if (l < 0 || l >= size || seen[l]) throw std::invalid_argument(std::string(what) + " is not a permutation");
    seen[l] = 1;
  }
}

ExternallyLabelledPlanarRootedMap canonicalize(const ExternallyLabelledPlanarRootedMap& p) {
  auto lab = canonical_relabeling(p.map.sigma(), p.map.alpha(), p.map.root());
  RootedMap m = relabel(p.map, lab);
  return {m, relabel_vertex_values(p.map, p.vertex_label, lab, m), relabel_values(p.in_submap, lab), p.labeling};
}

}  // namespace

std::vector<int> edge_ids(const RootedMap& map) {
  std::vector<int> id(map.half_edge_count(), -1);
  int next = 0;
  for (int h = 0; h < map.half_edge_count(); ++h)
    if (id[h] < 0) id[h] = id[map.alpha(h)] = next++;
  return id;
}

std::vector<int> relabel_vertex_values(const RootedMap& before, const std::vector<int>& values,
                                       std::span<const int> new_label, const RootedMap& after) {
  std::vector<int> out(values.size());
  for (int h = 0; h < before.half_edge_count(); ++h) out[after.vertex_of(new_label[h])] = values[before.vertex_of(h)];
  return out;
}

TreeRootedMap canonicalize(const TreeRootedMap& t) {
  auto lab = canonical_relabeling(t.map.sigma(), t.map.alpha(), t.map.root());
  RootedMap m = relabel(t.map, lab);
  return TreeRootedMap{m, relabel_vertex_values(t.map, t.vertex_label, lab, m), relabel_values(t.in_tree, lab)};
}

CompatiblyOrientedTreeRootedMap canonicalize(const CompatiblyOrientedTreeRootedMap& m) {
  auto lab = canonical_relabeling(m.base.map.sigma(), m.base.map.alpha(), m.base.map.root());
  RootedMap map = relabel(m.base.map, lab);
  return {TreeRootedMap{map, relabel_vertex_values(m.base.map, m.base.vertex_label, lab, map),
                        relabel_values(m.base.in_tree, lab)},
          relabel_values(m.arrow, lab)};
}

int CompatiblyOrientedTreeRootedMap::external_weight() const {
  int w = 0;
  for (int h = 0; h < base.map.half_edge_count(); ++h)
    if (arrow[h] == Arrow::out && !base.in_tree[h]) ++w;
  return w;
}

void validate_compatible(const CompatiblyOrientedTreeRootedMap& m) {
  validate_tree_rooted(m.base);
  const RootedMap& map = m.base.map;
  if (static_cast<int>(m.arrow.size()) != map.half_edge_count()) throw std::invalid_argument("arrow size");
  for (int h = 0; h < map.half_edge_count(); ++h)
    if (static_cast<int>(m.arrow[h]) != -static_cast<int>(m.arrow[map.alpha(h)]))
      throw std::invalid_argument("edge arrows disagree");
  if (!is_balanced(map.sigma(), m.arrow)) throw std::invalid_argument("orientation is not balanced");
  auto parent = parent_half_edges(map, m.base.in_tree);
  for (int v = 0; v < map.vertex_count(); ++v)
    if (parent[v] >= 0 && m.arrow[parent[v]] == Arrow::in)
      throw std::invalid_argument("oriented tree edge points away from the root");
}

std::vector<CompatiblyOrientedTreeRootedMap> gen_compatibly_oriented(int n, int q) {
  std::vector<CompatiblyOrientedTreeRootedMap> out;
  for_each_rooted_map(n, [&](const RootedMap& map) {
    if (map.vertex_count() != q) return;
    std::vector<int> first_half;
    for (int h = 0; h < map.half_edge_count(); ++h)
      if (h < map.alpha(h)) first_half.push_back(h);
    for (const auto& tree : spanning_trees(map)) {
      auto parent = parent_half_edges(map, tree);
      std::vector<std::vector<Arrow>> choices;
      for (int h : first_half) {
        if (!tree[h]) {
          choices.push_back({Arrow::none, Arrow::out, Arrow::in});
          continue;
        }
        bool h_is_child = parent[map.vertex_of(h)] == h;
        choices.push_back({Arrow::none, h_is_child ? Arrow::out : Arrow::in});
      }
      std::vector<std::size_t> pick(first_half.size(), 0);
      while (true) {
        PartialOrientation arrow(map.half_edge_count(), Arrow::none);
        for (std::size_t k = 0; k < first_half.size(); ++k) {
          Arrow a = choices[k][pick[k]];
          arrow[first_half[k]] = a;
          arrow[map.alpha(first_half[k])] = static_cast<Arrow>(-static_cast<int>(a));
        }
        if (is_balanced(map.sigma(), arrow)) {
          std::vector<int> labels(q);
          std::iota(labels.begin(), labels.end(), 0);
          do {
            out.push_back({TreeRootedMap{map, labels, tree}, arrow});
          } while (std::next_permutation(labels.begin(), labels.end()));
        }
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
      }
    }
  });
  return out;
}

LabelledGraphTour theta(const CompatiblyOrientedTreeRootedMap& m, const std::vector<int>& edge_labels) {
  validate_compatible(m);
  const RootedMap& map = m.base.map;
  const auto& label = m.base.vertex_label;
  const int nh = map.half_edge_count(), nv = map.vertex_count();
  auto eid = edge_ids(map);
  require_label_permutation(edge_labels, map.edge_count(), "edge labels");

  const int v0 = map.vertex_of(map.root());
  auto parent = parent_half_edges(map, m.base.in_tree);
  std::vector<std::vector<int>> order(nv);
  std::vector<int> pos(nh, -1);
  for (int v = 0; v < nv; ++v) {
    int start = v == v0 ? map.root() : map.sigma(parent[v]);
    int h = start;
    do {
      pos[h] = static_cast<int>(order[v].size());
      order[v].push_back(h);
      h = map.sigma(h);
    } while (h != start);
  }

  std::vector<int> beta(nh, -1);
  for (int v = 0; v < nv; ++v) {
    std::vector<int> ins, outs;
    for (int h : order[v]) {
      if (m.arrow[h] == Arrow::in) ins.push_back(h);
      if (m.arrow[h] == Arrow::out) outs.push_back(h);
    }
    std::sort(ins.begin(), ins.end(), [&](int a, int b) {
      return std::pair(label[map.vertex_of(map.alpha(a))], pos[map.alpha(a)]) <
             std::pair(label[map.vertex_of(map.alpha(b))], pos[map.alpha(b)]);
    });
    for (std::size_t k = 0; k < ins.size(); ++k) beta[ins[k]] = outs[k];
  }

  LabelledGraphTour out;
  out.graph.vertex_count = nv;
  out.graph.edges.resize(map.edge_count());
  for (int h = 0; h < nh; ++h) {
    int a = label[map.vertex_of(h)], b = label[map.vertex_of(map.alpha(h))];
    out.graph.edges[edge_labels[eid[h]]] = {std::min(a, b), std::max(a, b)};
  }
  out.tour.origin = label[v0];
  std::vector<std::size_t> next(nv, 0);
  std::vector<int> first_exit(map.edge_count(), -1);
  int cur = v0;
  while (next[cur] < order[cur].size()) {
    int h = order[cur][next[cur]++];
    int exit = m.arrow[h] == Arrow::in ? beta[h] : h;
    int e = eid[exit];
    int to = map.vertex_of(map.alpha(exit));
    bool reversed;
    if (to != cur) {
      reversed = label[cur] > label[to];
    } else if (first_exit[e] < 0) {
      reversed = false;
    } else {
      reversed = first_exit[e] != exit;
    }
    if (first_exit[e] < 0) first_exit[e] = exit;
    out.tour.steps.push_back({edge_labels[e], reversed});
    cur = to;
  }
  if (cur != v0 || static_cast<int>(out.tour.steps.size()) != nh)
    throw std::logic_error("walk did not use every half-edge slot");
  return out;
}

LabelledGraphTour theta(const CompatiblyOrientedTreeRootedMap& m) {
  std::vector<int> labels(m.base.map.edge_count());
  std::iota(labels.begin(), labels.end(), 0);
  return theta(m, labels);
}

std::vector<LabelledCompatibleMap> theta_fiber(const EdgeLabelledGraph& g, const BiEulerianTour& tour) {
  validate_tour(g, tour);
  const int n = static_cast<int>(g.edges.size()), q = g.vertex_count, v0 = tour.origin;
  auto at = tour_vertices(g, tour);
  auto dir = tour_orientation(g, tour);
  std::vector<std::vector<int>> exits(q);
  for (int k = 0; k < 2 * n; ++k) exits[at[k]].push_back(k);
  std::vector<char> edge_in_tree(n, 0);
  for (int v = 0; v < q; ++v) {
    if (exits[v].empty()) throw std::invalid_argument("tour misses a vertex");
    if (v != v0) edge_in_tree[tour.steps[exits[v].back()].edge] = 1;
  }

  // Slot contents that do not depend on the choice of out-half-edges.
  std::vector<std::vector<int>> fixed(q);
  std::vector<std::vector<int>> occurrences(n);
  std::vector<int> seen(n, 0);
  for (int v = 0; v < q; ++v) {
    for (int k : exits[v]) {
      int e = tour.steps[k].edge;
      int slot = static_cast<int>(fixed[v].size());
      if (dir[e] == EdgeDirection::none) {
        auto [a, b] = g.edges[e];
        int half = a == b ? 2 * e + seen[e] : (v == a ? 2 * e : 2 * e + 1);
        fixed[v].push_back(half);
      } else {
        fixed[v].push_back(-1);
        occurrences[e].push_back(v * (2 * n + 1) + slot);
      }
      ++seen[e];
    }
  }
  auto tail_of = [&](int e) { return dir[e] == EdgeDirection::backward ? g.edges[e].second : g.edges[e].first; };
  auto head_of = [&](int e) { return dir[e] == EdgeDirection::backward ? g.edges[e].first : g.edges[e].second; };

  std::vector<int> free_edges;
  for (int e = 0; e < n; ++e)
    if (dir[e] != EdgeDirection::none && !edge_in_tree[e]) free_edges.push_back(e);

  std::vector<LabelledCompatibleMap> fiber;
  const unsigned long masks = 1UL << free_edges.size();
  for (unsigned long mask = 0; mask < masks; ++mask) {
    std::vector<int> o_slot(n, -1);
    for (int e = 0; e < n; ++e) {
      if (dir[e] == EdgeDirection::none) continue;
      int v = tail_of(e);
      int last = static_cast<int>(exits[v].size()) - 1;
      int s1 = occurrences[e][1] % (2 * n + 1);
      if (edge_in_tree[e]) {
        if (s1 != last) throw std::logic_error("tree exit is not the last exit");
        o_slot[e] = s1;
      }
    }
    for (std::size_t k = 0; k < free_edges.size(); ++k) {
      int e = free_edges[k];
      o_slot[e] = occurrences[e][(mask >> k) & 1UL] % (2 * n + 1);
    }
    std::vector<std::vector<int>> slots = fixed;
    for (int v = 0; v < q; ++v) {
      std::vector<int> ins, outs;
      for (int e = 0; e < n; ++e) {
        if (dir[e] == EdgeDirection::none) continue;
        if (head_of(e) == v) ins.push_back(e);
        if (tail_of(e) == v) outs.push_back(e);
      }
      std::sort(ins.begin(), ins.end(),
                [&](int a, int b) { return std::pair(tail_of(a), o_slot[a]) < std::pair(tail_of(b), o_slot[b]); });
      std::sort(outs.begin(), outs.end(), [&](int a, int b) { return o_slot[a] < o_slot[b]; });
      for (std::size_t k = 0; k < outs.size(); ++k) {
        int e = outs[k];
        int other = occurrences[e][0] % (2 * n + 1) == o_slot[e] ? occurrences[e][1] % (2 * n + 1)
                                                                 : occurrences[e][0] % (2 * n + 1);
        slots[v][o_slot[e]] = 2 * e;
        slots[v][other] = 2 * ins[k] + 1;
      }
    }
    std::vector<int> sigma(2 * n), alpha(2 * n);
    for (int v = 0; v < q; ++v)
      for (std::size_t k = 0; k < slots[v].size(); ++k) sigma[slots[v][k]] = slots[v][(k + 1) % slots[v].size()];
    for (int h = 0; h < 2 * n; ++h) alpha[h] = h ^ 1;
    RootedMap raw(sigma, alpha, slots[v0][0]);
    std::vector<int> labels(q);
    for (int v = 0; v < q; ++v) labels[raw.vertex_of(slots[v][0])] = v;
    std::vector<char> tree(2 * n, 0);
    PartialOrientation arrow(2 * n, Arrow::none);
    for (int e = 0; e < n; ++e) {
      tree[2 * e] = tree[2 * e + 1] = edge_in_tree[e];
      if (dir[e] != EdgeDirection::none) {
        arrow[2 * e] = Arrow::out;
        arrow[2 * e + 1] = Arrow::in;
      }
    }
    CompatiblyOrientedTreeRootedMap m{TreeRootedMap{raw, labels, tree}, arrow};
    auto lab = canonical_relabeling(raw.sigma(), raw.alpha(), raw.root());
    CompatiblyOrientedTreeRootedMap canon = canonicalize(m);
    auto eid = edge_ids(canon.base.map);
    std::vector<int> edge_labels(n);
    for (int e = 0; e < n; ++e) edge_labels[eid[lab[2 * e]]] = e;
    fiber.push_back({canon, edge_labels});
  }
  std::sort(fiber.begin(), fiber.end(), [](const auto& a, const auto& b) { return a.map < b.map; });
  return fiber;
}

ColoredUnicellularMap upsilon(const CompatiblyOrientedTreeRootedMap& m) {
  auto gt = theta(m);
  return xi_inverse(gt.graph, gt.tour).map;
}

std::vector<CompatiblyOrientedTreeRootedMap> upsilon_fiber(const ColoredUnicellularMap& u) {
  auto gt = xi(u);
  std::vector<CompatiblyOrientedTreeRootedMap> out;
  for (auto& lm : theta_fiber(gt.graph, gt.tour)) out.push_back(std::move(lm.map));
  return out;
}

int external_weight(const ColoredUnicellularMap& u) {
  auto gt = xi(u);
  auto dir = tour_orientation(gt.graph, gt.tour);
  auto at = tour_vertices(gt.graph, gt.tour);
  std::vector<int> last_exit(gt.graph.vertex_count, -1);
  for (std::size_t k = 0; k < gt.tour.steps.size(); ++k) last_exit[at[k]] = gt.tour.steps[k].edge;
  int w = 0;
  for (int e = 0; e < static_cast<int>(dir.size()); ++e) {
    if (dir[e] == EdgeDirection::none) continue;
    bool tree = false;
    for (int v = 0; v < gt.graph.vertex_count; ++v)
      if (v != gt.tour.origin && last_exit[v] == e) tree = true;
    if (!tree) ++w;
  }
  return w;
}

TreeRootedMap phi(const ColoredUnicellularMap& u) {
  if (!u.orientable()) throw std::invalid_argument("phi needs an orientable unicellular map");
  auto fiber = upsilon_fiber(u);
  if (fiber.size() != 1) throw std::logic_error("orientable map has a fiber of size other than one");
  return fiber.front().base;
}

ColoredUnicellularMap phi_inv(const TreeRootedMap& t) {
  validate_tree_rooted(t);
  return upsilon({t, PartialOrientation(t.map.half_edge_count(), Arrow::none)});
}

NearEulerianTreeRootedMap lambda_cut(const CompatiblyOrientedTreeRootedMap& m) {
  validate_compatible(m);
  const RootedMap& map = m.base.map;
  NearEulerianTreeRootedMap out{map.sigma(), map.alpha(), m.arrow, m.base.vertex_label, m.base.in_tree, map.root()};
  for (int h = 0; h < map.half_edge_count(); ++h)
    if (m.arrow[h] != Arrow::none && !m.base.in_tree[h]) out.alpha[h] = -1;
  return out;
}

NearEulerianTreeRootedMap canonicalize(const NearEulerianTreeRootedMap& t) {
  auto lab = canonical_relabeling(t.sigma, t.alpha, t.root);
  NearEulerianTreeRootedMap out{relabel_permutation(t.sigma, lab), relabel_permutation(t.alpha, lab),
                                relabel_values(t.arrow, lab), {}, relabel_values(t.in_tree, lab), 0};
  int nv = 0;
  auto before = orbit_ids(t.sigma, nv);
  auto after = orbit_ids(out.sigma, nv);
  out.vertex_label.assign(t.vertex_label.size(), -1);
  for (std::size_t h = 0; h < t.sigma.size(); ++h) out.vertex_label[after[lab[h]]] = t.vertex_label[before[h]];
  return out;
}

std::vector<int> vertex_degrees(const std::vector<int>& sigma) {
  int nv = 0;
  auto vid = orbit_ids(sigma, nv);
  std::vector<int> deg(nv, 0);
  for (int v : vid) ++deg[v];
  return deg;
}

std::vector<int> label_degrees(const RootedMap& map, const std::vector<int>& vertex_label) {
  std::vector<int> deg(map.vertex_count(), 0);
  for (int h = 0; h < map.half_edge_count(); ++h) ++deg[vertex_label[map.vertex_of(h)]];
  return deg;
}

std::vector<int> submap_face_index(const RootedMap& map, const std::vector<char>& in_submap, int& face_count) {
  SubmapFaces s = submap_faces(map, in_submap);
  face_count = s.face_count;
  std::vector<int> out(map.half_edge_count(), -1);
  for (std::size_t k = 0; k < s.view.back.size(); ++k) out[s.view.back[k]] = s.face[k];
  return out;
}

void validate_planar_rooted(const ExternallyLabelledPlanarRootedMap& p) {
  const RootedMap& map = p.map;
  require_label_permutation(p.vertex_label, map.vertex_count(), "vertex labels");
  if (static_cast<int>(p.in_submap.size()) != map.half_edge_count()) throw std::invalid_argument("submap flags size");
  std::vector<char> touched(map.vertex_count(), 0);
  int edges = 0;
  for (int h = 0; h < map.half_edge_count(); ++h) {
    if (p.in_submap[h] != p.in_submap[map.alpha(h)]) throw std::invalid_argument("submap flag differs on an edge");
    if (!p.in_submap[h]) continue;
    touched[map.vertex_of(h)] = 1;
    if (h < map.alpha(h)) ++edges;
  }
  if (edges == 0) {
    if (map.vertex_count() != 1 || p.labeling != std::vector<int>{0})
      throw std::invalid_argument("empty submap must be a single vertex with one face");
    return;
  }
  if (std::count(touched.begin(), touched.end(), 0) != 0) throw std::invalid_argument("submap is not spanning");
  SubmapFaces s = submap_faces(map, p.in_submap);
  if (map.vertex_count() - edges + s.face_count != 2) throw std::invalid_argument("submap is not planar");
  require_label_permutation(p.labeling, s.face_count, "face labeling");
}

ExternallyLabelledPlanarRootedMap psi_encode(const CompatiblyOrientedTreeRootedMap& m) {
  NearEulerianTreeRootedMap cut = lambda_cut(m);
  const RootedMap& map = m.base.map;
  const int nh = map.half_edge_count();
  std::vector<char> keep(nh, 0);
  for (int h = 0; h < nh; ++h) keep[h] = cut.in_tree[h] || cut.alpha[h] < 0;
  if (std::count(keep.begin(), keep.end(), 1) == 0)
    return canonicalize(ExternallyLabelledPlanarRootedMap{map, m.base.vertex_label, keep, {0}});

  Compressed view = compress(cut.sigma, cut.alpha, keep, map.root());
  PartialOrientation arrow;
  for (int h : view.back) arrow.push_back(cut.arrow[h]);
  NearEulerianTree tree{view.sigma, view.alpha, arrow, view.root};
  OrientedPlaneMap closed = closure_gamma(tree);

  std::vector<int> alpha = map.alpha();
  for (std::size_t k = 0; k < view.back.size(); ++k) alpha[view.back[k]] = view.back[closed.plane.map().alpha(k)];
  RootedMap joined(map.sigma(), alpha, map.root());
  SubmapFaces faces = submap_faces(joined, keep);
  int outer = faces.face[closed.plane.outer()];

  std::vector<int> out_buds;
  for (std::size_t k = 0; k < view.back.size(); ++k)
    if (view.alpha[k] < 0 && arrow[k] == Arrow::out) out_buds.push_back(static_cast<int>(k));
  std::sort(out_buds.begin(), out_buds.end(), [&](int a, int b) { return faces.canon[a] < faces.canon[b]; });
  std::vector<int> inner;
  for (int f = 0; f < faces.face_count; ++f)
    if (f != outer) inner.push_back(f);
  if (inner.size() != out_buds.size()) throw std::logic_error("closure face count differs from external weight");

  std::vector<int> labeling(faces.face_count, -1);
  labeling[outer] = 0;
  for (std::size_t k = 0; k < out_buds.size(); ++k) {
    int original = map.alpha(view.back[out_buds[k]]);
    for (std::size_t j = 0; j < out_buds.size(); ++j)
      if (alpha[view.back[out_buds[j]]] == original) labeling[inner[k]] = static_cast<int>(j) + 1;
  }
  return canonicalize(ExternallyLabelledPlanarRootedMap{joined, m.base.vertex_label, keep, labeling});
}

CompatiblyOrientedTreeRootedMap psi_decode(const ExternallyLabelledPlanarRootedMap& p) {
  validate_planar_rooted(p);
  const RootedMap& map = p.map;
  const int nh = map.half_edge_count();
  if (std::count(p.in_submap.begin(), p.in_submap.end(), 1) == 0)
    return canonicalize(CompatiblyOrientedTreeRootedMap{TreeRootedMap{map, p.vertex_label, p.in_submap},
                                                        PartialOrientation(nh, Arrow::none)});

  SubmapFaces faces = submap_faces(map, p.in_submap);
  const Compressed& view = faces.view;
  int outer_half = -1;
  for (std::size_t k = 0; k < view.back.size() && outer_half < 0; ++k)
    if (p.labeling[faces.face[k]] == 0) outer_half = static_cast<int>(k);
  NearEulerianTree tree = opening_delta(PlaneMap(RootedMap(view.sigma, view.alpha, view.root), outer_half));

  std::vector<int> out_buds;
  for (std::size_t k = 0; k < view.back.size(); ++k)
    if (tree.alpha[k] < 0 && tree.arrow[k] == Arrow::out) out_buds.push_back(static_cast<int>(k));
  std::sort(out_buds.begin(), out_buds.end(), [&](int a, int b) { return faces.canon[a] < faces.canon[b]; });
  std::vector<int> inner;
  for (int f = 0; f < faces.face_count; ++f)
    if (p.labeling[f] != 0) inner.push_back(f);

  std::vector<int> alpha = map.alpha();
  for (std::size_t k = 0; k < out_buds.size(); ++k) {
    int j = p.labeling[inner[k]] - 1;
    int o = view.back[out_buds[k]];
    int partner = map.alpha(view.back[out_buds[j]]);
    alpha[o] = partner;
    alpha[partner] = o;
  }
  std::vector<char> in_tree(nh, 0);
  PartialOrientation arrow(nh, Arrow::none);
  for (std::size_t k = 0; k < view.back.size(); ++k) {
    in_tree[view.back[k]] = tree.alpha[k] >= 0;
    arrow[view.back[k]] = tree.arrow[k];
  }
  CompatiblyOrientedTreeRootedMap m{TreeRootedMap{RootedMap(map.sigma(), alpha, map.root()), p.vertex_label, in_tree},
                                    arrow};
  validate_compatible(m);
  return canonicalize(m);
}

ColoredUnicellularMap psi(const ExternallyLabelledPlanarRootedMap& p) { return upsilon(psi_decode(p)); }

std::vector<ExternallyLabelledPlanarRootedMap> psi_fiber(const ColoredUnicellularMap& u) {
  std::vector<ExternallyLabelledPlanarRootedMap> out;
  for (const auto& m : upsilon_fiber(u)) out.push_back(psi_encode(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace unicell
