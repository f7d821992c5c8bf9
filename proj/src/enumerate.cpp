#include "unicell/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace unicell {

ExactInteger CountTable::get(const Key& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? ExactInteger(0) : it->second;
}

void CountTable::add(const Key& key, const ExactInteger& value) {
  if (value == 0) return;
  entries_[key] += value;
}

void CountTable::set(const Key& key, const ExactInteger& value) {
  if (value == 0)
    entries_.erase(key);
  else
    entries_[key] = value;
}

void CountTable::merge(const CountTable& other) {
  for (const auto& [k, v] : other.entries_) add(k, v);
}

ExactInteger CountTable::total() const {
  ExactInteger t = 0;
  for (const auto& [k, v] : entries_) t += v;
  return t;
}

namespace {

constexpr int kSplitDepth = 2;

class GluingSearch {
 public:
  GluingSearch(int n, bool orientable_only, const GluingVisitor& visit, Partition part)
      : n_(n), orientable_only_(orientable_only), visit_(visit), part_(part),
        partner_(2 * n, -1) {}

  void run() { match(0, 0); }

 private:
  void match(int from, int depth) {
    if (depth == kSplitDepth || (depth < kSplitDepth && depth == n_)) {
      if (branch_++ % part_.count != part_.index) return;
    }
    int i = from;
    while (i < 2 * n_ && partner_[i] >= 0) ++i;
    if (i == 2 * n_) {
      emit();
      return;
    }
    for (int j = i + 1; j < 2 * n_; ++j) {
      if (partner_[j] >= 0) continue;
      partner_[i] = j;
      partner_[j] = i;
      match(i + 1, depth + 1);
      partner_[i] = partner_[j] = -1;
    }
  }

  void emit() {
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < 2 * n_; ++s)
      if (s < partner_[s]) pairs.emplace_back(s, partner_[s]);
    const unsigned long masks = orientable_only_ ? 1UL : (1UL << n_);
    std::vector<bool> twist(n_);
    for (unsigned long m = 0; m < masks; ++m) {
      for (int k = 0; k < n_; ++k) twist[k] = (m >> k) & 1UL;
      visit_(PolygonGluing(n_, pairs, twist));
    }
  }

  int n_;
  bool orientable_only_;
  const GluingVisitor& visit_;
  Partition part_;
  std::vector<int> partner_;
  long branch_ = 0;
};

class MapSearch {
 public:
  MapSearch(int e, const MapVisitor& visit, Partition part)
      : n2_(2 * e), visit_(visit), part_(part), alpha_(n2_, -1), sigma_(n2_, -1), sinv_(n2_, -1) {}

  void run() { label(0, 1); }

 private:
  void label(int i, int count) {
    if (i == kSplitDepth + 1 || (i <= kSplitDepth && i == count)) {
      if (branch_++ % part_.count != part_.index) return;
    }
    if (i == count) {
      if (count == n2_) visit_(RootedMap(sigma_, alpha_, 0));
      return;
    }
    if (alpha_[i] >= 0) {
      rotate(i, count);
      return;
    }
    for (int j = i + 1; j <= count && j < n2_; ++j) {
      if (j < count && alpha_[j] >= 0) continue;
      alpha_[i] = j;
      alpha_[j] = i;
      rotate(i, j == count ? count + 1 : count);
      alpha_[i] = alpha_[j] = -1;
    }
  }

  void rotate(int i, int count) {
    for (int j = 0; j <= count && j < n2_; ++j) {
      if (j < count && sinv_[j] >= 0) continue;
      sigma_[i] = j;
      sinv_[j] = i;
      label(i + 1, j == count ? count + 1 : count);
      sigma_[i] = sinv_[j] = -1;
    }
  }

  int n2_;
  const MapVisitor& visit_;
  Partition part_;
  std::vector<int> alpha_, sigma_, sinv_;
  long branch_ = 0;
};

template <class Work>
void run_partitioned(int threads, Work work) {
  threads = std::max(1, threads);
  if (threads == 1) {
    work(Partition{0, 1});
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back([&, t] { work(Partition{t, threads}); });
  for (auto& th : pool) th.join();
}

}  // namespace

void for_each_unicellular(int n, bool orientable_only, const GluingVisitor& visit, Partition part) {
  if (n < 1) throw std::invalid_argument("gluings need n >= 1");
  if (part.count < 1 || part.index < 0 || part.index >= part.count) throw std::invalid_argument("bad partition");
  GluingSearch(n, orientable_only, visit, part).run();
}

std::vector<PolygonGluing> gen_unicellular(int n, bool orientable_only) {
  std::vector<PolygonGluing> out;
  for_each_unicellular(n, orientable_only, [&](const PolygonGluing& g) { out.push_back(g); });
  return out;
}

CountTable vertex_profile(int n, bool orientable_only, int threads) {
  if (n < 1) throw std::invalid_argument("vertex profile needs n >= 1");
  CountTable merged;
  std::mutex mu;
  run_partitioned(threads, [&](Partition part) {
    std::vector<long> by_v(2 * n + 2, 0);
    for_each_unicellular(
        n, orientable_only, [&](const PolygonGluing& g) { ++by_v[glue_polygon(g).vertex_count]; }, part);
    CountTable local;
    for (int v = 0; v < static_cast<int>(by_v.size()); ++v) local.add({n, v}, by_v[v]);
    std::lock_guard lock(mu);
    merged.merge(local);
  });
  return merged;
}

CountTable unicellular_profiles(int n_max, bool orientable_only, int threads) {
  CountTable t;
  t.set({0, 1}, 1);
  for (int n = 1; n <= n_max; ++n) t.merge(vertex_profile(n, orientable_only, threads));
  return t;
}

void for_each_rooted_map(int e, const MapVisitor& visit, Partition part) {
  if (e < 1) throw std::invalid_argument("rooted maps need e >= 1");
  if (part.count < 1 || part.index < 0 || part.index >= part.count) throw std::invalid_argument("bad partition");
  MapSearch(e, visit, part).run();
}

std::vector<RootedMap> gen_rooted_orientable_maps(int e) {
  std::vector<RootedMap> out;
  for_each_rooted_map(e, [&](const RootedMap& m) { out.push_back(m); });
  return out;
}

ExactInteger PlanarCensus::count(int q, int r) const {
  if (q < 1 || r < 1) return 0;
  if (!covers(q, r)) throw std::out_of_range("planar census does not reach this (q, r)");
  return table.get({q, r});
}

PlanarCensus planar_census(int max_edges, int threads) {
  if (max_edges < 1) throw std::invalid_argument("planar census needs max_edges >= 1");
  PlanarCensus census;
  census.max_edges = max_edges;
  census.table.set({1, 1}, 1);
  std::mutex mu;
  for (int e = 1; e <= max_edges; ++e) {
    run_partitioned(threads, [&](Partition part) {
      std::map<std::pair<int, int>, long> local;
      for_each_rooted_map(
          e,
          [&](const RootedMap& m) {
            EulerData d = euler_data(m);
            if (d.genus == 0) ++local[{d.vertices, d.faces}];
          },
          part);
      std::lock_guard lock(mu);
      for (auto [k, v] : local) census.table.add({k.first, k.second}, v);
    });
  }
  return census;
}

std::vector<ExactInteger> planar_totals(const PlanarCensus& census) {
  std::vector<ExactInteger> totals(census.max_edges + 1, 0);
  for (const auto& [k, v] : census.table.entries()) {
    int e = k[0] + k[1] - 2;
    if (e >= 0 && e <= census.max_edges) totals[e] += v;
  }
  return totals;
}

void validate_tree_rooted(const TreeRootedMap& t) {
  const RootedMap& m = t.map;
  const int q = m.vertex_count();
  if (static_cast<int>(t.vertex_label.size()) != q) throw std::invalid_argument("one label per vertex required");
  std::vector<int> sorted = t.vertex_label;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < q; ++i)
    if (sorted[i] != i) throw std::invalid_argument("vertex labels are not a permutation");
  if (static_cast<int>(t.in_tree.size()) != m.half_edge_count()) throw std::invalid_argument("tree flags size");
  std::vector<int> parent(q);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int edges = 0;
  for (int h = 0; h < m.half_edge_count(); ++h) {
    if (t.in_tree[h] != t.in_tree[m.alpha(h)]) throw std::invalid_argument("tree flag differs on an edge");
    if (!t.in_tree[h] || h > m.alpha(h)) continue;
    int a = find(m.vertex_of(h)), b = find(m.vertex_of(m.alpha(h)));
    if (a == b) throw std::invalid_argument("tree contains a cycle");
    parent[a] = b;
    ++edges;
  }
  if (edges != q - 1) throw std::invalid_argument("tree is not spanning");
}

std::vector<std::vector<char>> spanning_trees(const RootedMap& map) {
  const int q = map.vertex_count();
  std::vector<int> edge_half;
  for (int h = 0; h < map.half_edge_count(); ++h)
    if (h < map.alpha(h) && map.vertex_of(h) != map.vertex_of(map.alpha(h))) edge_half.push_back(h);
  std::vector<std::vector<char>> out;
  std::vector<char> flags(map.half_edge_count(), 0);
  std::vector<int> comp(q);
  std::function<void(std::size_t, int)> go = [&](std::size_t k, int chosen) {
    if (chosen == q - 1) {
      out.push_back(flags);
      return;
    }
    if (k == edge_half.size() || static_cast<int>(edge_half.size() - k) < q - 1 - chosen) return;
    int h = edge_half[k];
    std::iota(comp.begin(), comp.end(), 0);
    for (int x = 0; x < map.half_edge_count(); ++x) {
      if (!flags[x] || x > map.alpha(x)) continue;
      int a = comp[map.vertex_of(x)], b = comp[map.vertex_of(map.alpha(x))];
      for (int& c : comp)
        if (c == a) c = b;
    }
    if (comp[map.vertex_of(h)] != comp[map.vertex_of(map.alpha(h))]) {
      flags[h] = flags[map.alpha(h)] = 1;
      go(k + 1, chosen + 1);
      flags[h] = flags[map.alpha(h)] = 0;
    }
    go(k + 1, chosen);
  };
  go(0, 0);
  return out;
}

void for_each_tree_rooted_map(int n, int q, const std::function<void(const TreeRootedMap&)>& visit) {
  if (n < 1 || q < 1 || q > n + 1) throw std::invalid_argument("tree-rooted maps need 1 <= q <= n+1");
  for_each_rooted_map(n, [&](const RootedMap& m) {
    if (m.vertex_count() != q) return;
    auto trees = spanning_trees(m);
    std::vector<int> labels(q);
    for (const auto& tree : trees) {
      std::iota(labels.begin(), labels.end(), 0);
      do {
        visit(TreeRootedMap{m, labels, tree});
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
  });
}

std::vector<TreeRootedMap> gen_tree_rooted_maps(int n, int q) {
  std::vector<TreeRootedMap> out;
  for_each_tree_rooted_map(n, q, [&](const TreeRootedMap& t) { out.push_back(t); });
  return out;
}

ExactInteger surjection_count(int v, int q) {
  if (v < 0 || q < 0) throw std::invalid_argument("surjection_count needs v, q >= 0");
  ExactInteger s = 0;
  for (int j = 0; j <= q; ++j) {
    ExactInteger term = binomial(q, j) * power(ExactInteger(q - j), static_cast<unsigned long>(v));
    if (j % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

void for_each_surjection(int v, int q, const std::function<void(const std::vector<int>&)>& visit) {
  if (v < 0 || q < 0) throw std::invalid_argument("for_each_surjection needs v, q >= 0");
  if (q > v || (q == 0 && v > 0)) return;
  std::vector<int> f(v, 0);
  std::vector<int> used(q, 0);
  std::function<void(int, int)> go = [&](int i, int missing) {
    if (v - i < missing) return;
    if (i == v) {
      visit(f);
      return;
    }
    for (int c = 0; c < q; ++c) {
      f[i] = c;
      int now_missing = missing - (used[c] == 0 ? 1 : 0);
      ++used[c];
      go(i + 1, now_missing);
      --used[c];
    }
  };
  go(0, q);
}

std::vector<ColoredUnicellularMap> gen_colored_unicellular(int n, int q, bool orientable_only) {
  std::vector<ColoredUnicellularMap> out;
  for_each_unicellular(n, orientable_only, [&](const PolygonGluing& g) {
    int v = glue_polygon(g).vertex_count;
    for_each_surjection(v, q, [&](const std::vector<int>& colors) { out.emplace_back(g, colors, q); });
  });
  return out;
}

}  // namespace unicell
