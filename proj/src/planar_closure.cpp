#include "unicell/planar_closure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace unicell {

namespace {

std::vector<int> bud_phi(const std::vector<int>& sigma, const std::vector<int>& alpha) {
  std::vector<int> phi(sigma.size());
  for (std::size_t h = 0; h < sigma.size(); ++h) phi[h] = alpha[h] >= 0 ? sigma[alpha[h]] : sigma[h];
  return phi;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct FaceData {
  std::vector<int> face_of;
  std::vector<std::vector<int>> orbits;
  std::vector<int> distance;
};

FaceData faces_with_distances(const std::vector<int>& sigma, const std::vector<int>& alpha, int marker) {
  FaceData fd;
  auto phi = bud_phi(sigma, alpha);
  int count = 0;
  fd.face_of = orbit_ids(phi, count);
  fd.orbits.resize(count);
  for (int s = 0; s < static_cast<int>(sigma.size()); ++s) {
    if (!fd.orbits[fd.face_of[s]].empty()) continue;
    for (int h = s;; h = phi[h]) {
      fd.orbits[fd.face_of[s]].push_back(h);
      if (phi[h] == s) break;
    }
  }
  std::vector<std::vector<int>> adj(count);
  for (std::size_t h = 0; h < sigma.size(); ++h)
    if (alpha[h] >= 0) adj[fd.face_of[h]].push_back(fd.face_of[alpha[h]]);
  fd.distance.assign(count, -1);
  std::deque<int> queue{fd.face_of[marker]};
  fd.distance[fd.face_of[marker]] = 0;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int g : adj[f])
      if (fd.distance[g] < 0) {
        fd.distance[g] = fd.distance[f] + 1;
        queue.push_back(g);
      }
  }
  return fd;
}

PartialOrientation orientation_from(const std::vector<int>& alpha, const FaceData& fd) {
  PartialOrientation arrow(alpha.size(), Arrow::none);
  for (std::size_t h = 0; h < alpha.size(); ++h) {
    if (alpha[h] < 0) continue;
    int mine = fd.distance[fd.face_of[h]], theirs = fd.distance[fd.face_of[alpha[h]]];
    if (theirs > mine) arrow[h] = Arrow::out;
    if (theirs < mine) arrow[h] = Arrow::in;
  }
  return arrow;
}

std::vector<int> breakable_in_round(const std::vector<int>& sigma, const std::vector<int>& alpha,
                                    const std::vector<int>& vertex_of, int vertex_count, int root,
                                    const FaceData& fd, int outer_face) {
  std::vector<int> cuts;
  for (int f = 0; f < static_cast<int>(fd.orbits.size()); ++f) {
    if (fd.distance[f] != 1) continue;
    std::set<int> outer_edges;
    for (int h : fd.orbits[f])
      if (alpha[h] >= 0 && fd.face_of[alpha[h]] == outer_face) outer_edges.insert(std::min(h, alpha[h]));
    UnionFind uf(vertex_count);
    for (int h = 0; h < static_cast<int>(sigma.size()); ++h)
      if (alpha[h] >= 0 && !outer_edges.count(std::min(h, alpha[h]))) uf.unite(vertex_of[h], vertex_of[alpha[h]]);
    int c = uf.find(vertex_of[root]);
    std::vector<int> candidates;
    for (int h : fd.orbits[f])
      if (alpha[h] >= 0 && outer_edges.count(std::min(h, alpha[h])) && uf.find(vertex_of[alpha[h]]) == c)
        candidates.push_back(h);
    if (candidates.size() != 1) throw std::logic_error("inner face has no unique breakable edge");
    cuts.push_back(candidates.front());
  }
  return cuts;
}

}  // namespace

int NearEulerianTree::external_weight() const {
  int w = 0;
  for (int h = 0; h < half_edge_count(); ++h)
    if (alpha[h] < 0 && arrow[h] == Arrow::out) ++w;
  return w;
}

bool is_balanced(const std::vector<int>& sigma, const PartialOrientation& arrow) {
  int count = 0;
  auto vid = orbit_ids(sigma, count);
  std::vector<int> excess(count, 0);
  for (std::size_t h = 0; h < sigma.size(); ++h) excess[vid[h]] += static_cast<int>(arrow[h]);
  return std::all_of(excess.begin(), excess.end(), [](int x) { return x == 0; });
}

void validate_near_eulerian(const NearEulerianTree& t) {
  const int n = t.half_edge_count();
  if (n < 2) throw std::invalid_argument("near-Eulerian tree needs at least two half-edges");
  if (static_cast<int>(t.alpha.size()) != n || static_cast<int>(t.arrow.size()) != n)
    throw std::invalid_argument("array sizes differ");
  if (t.root < 0 || t.root >= n) throw std::invalid_argument("root out of range");
  std::vector<char> seen(n, 0);
  for (int v : t.sigma) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("sigma is not a permutation");
    seen[v] = 1;
  }
  int edges = 0;
  for (int h = 0; h < n; ++h) {
    int a = t.alpha[h];
    if (a < 0) {
      if (t.arrow[h] == Arrow::none) throw std::invalid_argument("bud without direction");
      continue;
    }
    if (a >= n || a == h || t.alpha[a] != h) throw std::invalid_argument("alpha is not a partial involution");
    if (static_cast<int>(t.arrow[a]) != -static_cast<int>(t.arrow[h])) throw std::invalid_argument("edge arrows disagree");
    if (h < a) ++edges;
  }
  canonical_relabeling(t.sigma, t.alpha, t.root);
  int vertex_count = 0;
  auto vid = orbit_ids(t.sigma, vertex_count);
  if (vertex_count != edges + 1) throw std::invalid_argument("underlying graph is not a tree");
  std::vector<int> depth(vertex_count, -1);
  std::deque<int> queue{vid[t.root]};
  depth[vid[t.root]] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int h = 0; h < n; ++h) {
      if (vid[h] != v || t.alpha[h] < 0) continue;
      int u = vid[t.alpha[h]];
      if (depth[u] >= 0) continue;
      depth[u] = depth[v] + 1;
      queue.push_back(u);
      if (t.arrow[h] == Arrow::out) throw std::invalid_argument("oriented tree edge points away from the root");
    }
  }
  if (!is_balanced(t.sigma, t.arrow)) throw std::invalid_argument("orientation is not balanced");
}

NearEulerianTree canonicalize(const NearEulerianTree& t) {
  auto lab = canonical_relabeling(t.sigma, t.alpha, t.root);
  return NearEulerianTree{relabel_permutation(t.sigma, lab), relabel_permutation(t.alpha, lab),
                          relabel_values(t.arrow, lab), 0};
}

PlaneMap::PlaneMap(RootedMap map, int outer_half_edge) : map_(std::move(map)) {
  if (euler_data(map_).genus != 0) throw std::invalid_argument("plane map must have genus 0");
  if (outer_half_edge < 0 || outer_half_edge >= map_.half_edge_count())
    throw std::invalid_argument("outer half-edge out of range");
  std::vector<int> phi(map_.half_edge_count());
  for (int h = 0; h < map_.half_edge_count(); ++h) phi[h] = map_.phi(h);
  face_of_ = orbit_ids(phi, face_count_);
  outer_ = outer_half_edge;
  for (int h = 0; h < map_.half_edge_count(); ++h)
    if (face_of_[h] == face_of_[outer_half_edge]) {
      outer_ = h;
      break;
    }
}

OrientedPlaneMap closure_gamma(const NearEulerianTree& t) {
  validate_near_eulerian(t);
  const int n = t.half_edge_count();
  auto phi = bud_phi(t.sigma, t.alpha);
  std::vector<int> buds;
  for (int h = t.root, k = 0; k < n; ++k, h = phi[h])
    if (t.alpha[h] < 0) buds.push_back(h);
  std::vector<int> alpha = t.alpha;
  int outer = t.root;
  if (!buds.empty()) {
    int sum = 0, lowest = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < buds.size(); ++i) {
      sum += static_cast<int>(t.arrow[buds[i]]);
      if (sum < lowest) {
        lowest = sum;
        start = i + 1;
      }
    }
    std::vector<int> stack;
    int first_outer = -1;
    for (std::size_t i = 0; i < buds.size(); ++i) {
      int b = buds[(start + i) % buds.size()];
      if (t.arrow[b] == Arrow::out) {
        if (stack.empty() && first_outer < 0) first_outer = b;
        stack.push_back(b);
      } else {
        int o = stack.back();
        stack.pop_back();
        alpha[o] = b;
        alpha[b] = o;
      }
    }
    outer = first_outer;
  }
  RootedMap m(t.sigma, alpha, t.root);
  return OrientedPlaneMap{PlaneMap(std::move(m), outer), t.arrow};
}

std::vector<int> dual_distances(const PlaneMap& m) {
  return faces_with_distances(m.map().sigma(), m.map().alpha(), m.outer()).distance;
}

PartialOrientation dual_distance_orientation(const PlaneMap& m) {
  return orientation_from(m.map().alpha(), faces_with_distances(m.map().sigma(), m.map().alpha(), m.outer()));
}

std::vector<int> breakable_edges(const PlaneMap& m) {
  const RootedMap& map = m.map();
  FaceData fd = faces_with_distances(map.sigma(), map.alpha(), m.outer());
  return breakable_in_round(map.sigma(), map.alpha(), map.vertex_of(), map.vertex_count(), map.root(), fd,
                            fd.face_of[m.outer()]);
}

NearEulerianTree opening_delta(const PlaneMap& m) {
  const RootedMap& map = m.map();
  std::vector<int> alpha = map.alpha();
  PartialOrientation arrow = dual_distance_orientation(m);
  while (true) {
    FaceData fd = faces_with_distances(map.sigma(), alpha, m.outer());
    if (fd.orbits.size() == 1) break;
    auto cuts = breakable_in_round(map.sigma(), alpha, map.vertex_of(), map.vertex_count(), map.root(), fd,
                                   fd.face_of[m.outer()]);
    for (int h : cuts) {
      if (arrow[h] == Arrow::none) throw std::logic_error("breakable edge is not oriented");
      alpha[alpha[h]] = -1;
      alpha[h] = -1;
    }
  }
  return NearEulerianTree{map.sigma(), alpha, arrow, map.root()};
}

namespace {

class TreeSearch {
 public:
  TreeSearch(int slots, const std::function<void(const NearEulerianTree&)>& visit)
      : n_(slots), visit_(visit), sigma_(n_, -1), alpha_(n_, -1), sinv_(n_, -1), kind_(n_, Arrow::none),
        first_(n_, -1), created_by_alpha_(n_, 0) {}

  void run() {
    first_[0] = 0;
    label(0, 1);
  }

 private:
  void label(int i, int count) {
    if (i == count) {
      if (count == n_) orient();
      return;
    }
    if (created_by_alpha_[i]) {
      rotate(i, count);
      return;
    }
    if (count < n_) {
      alpha_[i] = count;
      alpha_[count] = i;
      created_by_alpha_[count] = 1;
      first_[count] = count;
      rotate(i, count + 1);
      created_by_alpha_[count] = 0;
      first_[count] = -1;
      alpha_[i] = alpha_[count] = -1;
    }
    for (Arrow k : {Arrow::out, Arrow::in}) {
      kind_[i] = k;
      rotate(i, count);
    }
    kind_[i] = Arrow::none;
  }

  void rotate(int i, int count) {
    int f = first_[i];
    if (sinv_[f] < 0) {
      sigma_[i] = f;
      sinv_[f] = i;
      label(i + 1, count);
      sinv_[f] = -1;
    }
    if (count < n_) {
      sigma_[i] = count;
      sinv_[count] = i;
      first_[count] = f;
      label(i + 1, count + 1);
      first_[count] = -1;
      sinv_[count] = -1;
    }
    sigma_[i] = -1;
  }

  void orient() {
    std::vector<int> children;
    for (int h = 0; h < n_; ++h)
      if (created_by_alpha_[h]) children.push_back(h);
    const unsigned long masks = 1UL << children.size();
    for (unsigned long mask = 0; mask < masks; ++mask) {
      PartialOrientation arrow = kind_;
      for (std::size_t k = 0; k < children.size(); ++k) {
        if (!((mask >> k) & 1UL)) continue;
        arrow[children[k]] = Arrow::out;
        arrow[alpha_[children[k]]] = Arrow::in;
      }
      if (!is_balanced(sigma_, arrow)) continue;
      visit_(NearEulerianTree{sigma_, alpha_, arrow, 0});
    }
  }

  int n_;
  const std::function<void(const NearEulerianTree&)>& visit_;
  std::vector<int> sigma_, alpha_, sinv_;
  PartialOrientation kind_;
  std::vector<int> first_;
  std::vector<char> created_by_alpha_;
};

}  // namespace

void for_each_near_eulerian_tree(int slots, const std::function<void(const NearEulerianTree&)>& visit) {
  if (slots < 1) throw std::invalid_argument("near-Eulerian trees need at least one half-edge slot");
  TreeSearch(slots, visit).run();
}

}  // namespace unicell
