#include "unicell/maps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace unicell {

namespace {

void require_permutation(std::span<const int> perm, const char* what) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v])
      throw std::invalid_argument(std::string(what) + " is not a permutation");
    seen[v] = 1;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<int> orbit_ids(std::span<const int> perm, int& orbit_count) {
  std::vector<int> id(perm.size(), -1);
  orbit_count = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (id[s] >= 0) continue;
    for (int h = static_cast<int>(s); id[h] < 0; h = perm[h]) id[h] = orbit_count;
    ++orbit_count;
  }
  return id;
}

RootedMap::RootedMap(std::vector<int> sigma, std::vector<int> alpha, int root)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), root_(root) {
  const int m2 = static_cast<int>(sigma_.size());
  if (m2 == 0 || m2 % 2 != 0) throw std::invalid_argument("half-edge count must be even and positive");
  if (static_cast<int>(alpha_.size()) != m2) throw std::invalid_argument("sigma and alpha sizes differ");
  require_permutation(sigma_, "sigma");
  for (int h = 0; h < m2; ++h) {
    int a = alpha_[h];
    if (a < 0 || a >= m2 || a == h || alpha_[a] != h)
      throw std::invalid_argument("alpha is not a fixed-point-free involution");
  }
  if (root_ < 0 || root_ >= m2) throw std::invalid_argument("root out of range");
  UnionFind uf(m2);
  for (int h = 0; h < m2; ++h) {
    uf.unite(h, sigma_[h]);
    uf.unite(h, alpha_[h]);
  }
  for (int h = 0; h < m2; ++h)
    if (uf.find(h) != 0) throw std::invalid_argument("map is not connected");
  vertex_of_ = orbit_ids(sigma_, vertex_count_);
}

int RootedMap::degree(int vertex) const {
  return static_cast<int>(std::count(vertex_of_.begin(), vertex_of_.end(), vertex));
}

std::vector<std::vector<int>> trace_faces(const RootedMap& map) {
  const int m2 = map.half_edge_count();
  std::vector<char> seen(m2, 0);
  std::vector<std::vector<int>> faces;
  for (int s = 0; s < m2; ++s) {
    if (seen[s]) continue;
    std::vector<int> face;
    for (int h = s; !seen[h]; h = map.phi(h)) {
      seen[h] = 1;
      face.push_back(h);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<int> face_of(const RootedMap& map) {
  std::vector<int> phi(map.half_edge_count());
  for (int h = 0; h < map.half_edge_count(); ++h) phi[h] = map.phi(h);
  int count = 0;
  return orbit_ids(phi, count);
}

EulerData euler_data(const RootedMap& map) {
  EulerData d{map.vertex_count(), map.edge_count(), static_cast<int>(trace_faces(map).size()), 0};
  int chi = d.vertices - d.edges + d.faces;
  if (chi > 2 || (2 - chi) % 2 != 0) throw std::logic_error("Euler characteristic of a rotation system is odd");
  d.genus = (2 - chi) / 2;
  return d;
}

std::vector<int> canonical_relabeling(std::span<const int> sigma, std::span<const int> alpha, int root) {
  const int m2 = static_cast<int>(sigma.size());
  std::vector<int> new_label(m2, -1);
  std::vector<int> order;
  order.reserve(m2);
  new_label[root] = 0;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int h = order[i];
    for (int next : {alpha[h], sigma[h]}) {
      if (next >= 0 && new_label[next] < 0) {
        new_label[next] = static_cast<int>(order.size());
        order.push_back(next);
      }
    }
  }
  if (static_cast<int>(order.size()) != m2) throw std::invalid_argument("structure is not connected");
  return new_label;
}

std::vector<int> relabel_permutation(std::span<const int> perm, std::span<const int> new_label) {
  std::vector<int> out(perm.size());
  for (std::size_t h = 0; h < perm.size(); ++h)
    out[new_label[h]] = perm[h] < 0 ? perm[h] : new_label[perm[h]];
  return out;
}

RootedMap relabel(const RootedMap& map, std::span<const int> new_label) {
  return RootedMap(relabel_permutation(map.sigma(), new_label), relabel_permutation(map.alpha(), new_label),
                   new_label[map.root()]);
}

RootedMap canonicalize(const RootedMap& map) {
  return relabel(map, canonical_relabeling(map.sigma(), map.alpha(), map.root()));
}

bool is_canonical(const RootedMap& map) {
  auto lab = canonical_relabeling(map.sigma(), map.alpha(), map.root());
  for (int h = 0; h < map.half_edge_count(); ++h)
    if (lab[h] != h) return false;
  return true;
}

PolygonGluing::PolygonGluing(int n, const std::vector<std::pair<int, int>>& pairs,
                             const std::vector<bool>& twisted)
    : n_(n), partner_(2 * std::max(n, 0), -1), pair_of_(2 * std::max(n, 0), -1) {
  if (n < 1) throw std::invalid_argument("gluing needs at least one edge");
  if (static_cast<int>(pairs.size()) != n || static_cast<int>(twisted.size()) != n)
    throw std::invalid_argument("gluing needs exactly n pairs and n twist flags");
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || a == b || partner_[a] >= 0 || partner_[b] >= 0)
      throw std::invalid_argument("pairs do not form a perfect matching of the sides");
    partner_[a] = b;
    partner_[b] = a;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::min(pairs[x].first, pairs[x].second) < std::min(pairs[y].first, pairs[y].second);
  });
  twisted_.assign(n, false);
  for (int idx = 0; idx < n; ++idx) {
    auto [a, b] = pairs[order[idx]];
    pair_of_[a] = pair_of_[b] = idx;
    twisted_[idx] = twisted[order[idx]];
  }
}

std::pair<int, int> PolygonGluing::pair(int index) const {
  for (int s = 0; s < 2 * n_; ++s)
    if (pair_of_[s] == index) return {s, partner_[s]};
  throw std::out_of_range("pair index");
}

std::vector<std::pair<int, int>> PolygonGluing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < 2 * n_; ++s)
    if (s < partner_[s]) out.emplace_back(s, partner_[s]);
  return out;
}

bool PolygonGluing::orientable() const {
  return std::none_of(twisted_.begin(), twisted_.end(), [](bool t) { return t; });
}

std::vector<std::vector<int>> GluedSkeleton::vertex_classes() const {
  std::vector<std::vector<int>> classes(vertex_count);
  for (std::size_t c = 0; c < vertex_of_corner.size(); ++c) classes[vertex_of_corner[c]].push_back(static_cast<int>(c));
  return classes;
}

GluedSkeleton glue_polygon(const PolygonGluing& gluing) {
  const int m2 = 2 * gluing.n();
  UnionFind uf(m2);
  for (int i = 0; i < m2; ++i) {
    int j = gluing.partner(i);
    if (i > j) continue;
    if (gluing.twisted_side(i)) {
      uf.unite(i, j);
      uf.unite((i + 1) % m2, (j + 1) % m2);
    } else {
      uf.unite(i, (j + 1) % m2);
      uf.unite((i + 1) % m2, j);
    }
  }
  GluedSkeleton sk{std::vector<int>(m2, -1), 0, gluing.orientable()};
  std::vector<int> id_of_root(m2, -1);
  for (int c = 0; c < m2; ++c) {
    int r = uf.find(c);
    if (id_of_root[r] < 0) id_of_root[r] = sk.vertex_count++;
    sk.vertex_of_corner[c] = id_of_root[r];
  }
  return sk;
}

RootedMap gluing_to_map(const PolygonGluing& gluing) {
  if (!gluing.orientable()) throw std::invalid_argument("only orientable gluings have a rotation system");
  const int m2 = 2 * gluing.n();
  std::vector<int> sigma(m2), alpha(gluing.partners());
  for (int h = 0; h < m2; ++h) sigma[h] = (alpha[h] + 1) % m2;
  return RootedMap(std::move(sigma), std::move(alpha), 0);
}

PolygonGluing map_to_gluing(const RootedMap& map) {
  const int m2 = map.half_edge_count();
  std::vector<int> side(m2, -1);
  int h = map.root();
  for (int k = 0; k < m2; ++k, h = map.phi(h)) {
    if (side[h] >= 0) throw std::invalid_argument("map has more than one face");
    side[h] = k;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < m2; ++x)
    if (side[x] < side[map.alpha(x)]) pairs.emplace_back(side[x], side[map.alpha(x)]);
  return PolygonGluing(map.edge_count(), pairs, std::vector<bool>(map.edge_count(), false));
}

ColoredUnicellularMap::ColoredUnicellularMap(PolygonGluing gluing, std::vector<int> colors, int q)
    : gluing_(std::move(gluing)), skeleton_(glue_polygon(gluing_)), colors_(std::move(colors)), q_(q) {
  if (q_ < 1) throw std::invalid_argument("need at least one color");
  if (static_cast<int>(colors_.size()) != skeleton_.vertex_count)
    throw std::invalid_argument("one color per vertex class required");
  std::vector<char> used(q_, 0);
  for (int c : colors_) {
    if (c < 0 || c >= q_) throw std::invalid_argument("color out of range");
    used[c] = 1;
  }
  if (std::count(used.begin(), used.end(), 0) != 0) throw std::invalid_argument("coloring is not surjective");
}

int ColoredUnicellularMap::corner_color(int corner) const {
  return colors_[skeleton_.vertex_of_corner[corner]];
}

std::vector<std::pair<int, int>> edge_color_pairs(const ColoredUnicellularMap& map) {
  std::vector<std::pair<int, int>> out;
  const int m2 = 2 * map.n();
  for (int s = 0; s < m2; ++s) {
    if (s > map.gluing().partner(s)) continue;
    int a = map.corner_color(s), b = map.corner_color((s + 1) % m2);
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> color_degree_sums(const ColoredUnicellularMap& map) {
  std::vector<int> out(map.q(), 0);
  for (int c = 0; c < 2 * map.n(); ++c) ++out[map.corner_color(c)];
  return out;
}

}  // namespace unicell
