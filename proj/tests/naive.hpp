#pragma once

// Reference implementations kept deliberately close to the definitions, used
// to cross-check the optimized library code, plus small-graph corpora for
// exhaustive sweeps.  Test-only; nothing here is linked into the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bei/graph.hpp"

namespace naive {

using bei::Graph;
using bei::VertexSet;

// component count of g minus `removed`, by plain BFS on adjacency lists
inline int component_count_minus(const Graph& g, const VertexSet& removed) {
  std::vector<bool> banned(g.n + 1, false), seen(g.n + 1, false);
  for (int v : removed) banned[v] = true;
  int comps = 0;
  for (int s = 1; s <= g.n; ++s) {
    if (banned[s] || seen[s]) continue;
    ++comps;
    std::vector<int> q{s};
    seen[s] = true;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (int w : g.nbr[q[h] - 1])
        if (!banned[w] && !seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
  }
  return comps;
}

// literal definition: dropping any element of T must lower the component count
inline bool is_cutset_literal(const Graph& g, const VertexSet& t) {
  int ct = component_count_minus(g, t);
  for (int v : t) {
    VertexSet s;
    for (int u : t)
      if (u != v) s.push_back(u);
    if (!(ct > component_count_minus(g, s))) return false;
  }
  return true;
}

inline std::vector<VertexSet> cutsets_brute(const Graph& g) {
  std::vector<VertexSet> out;
  for (std::uint64_t m = 0; m < (1ull << g.n); ++m) {
    VertexSet t = bei::mask_vertices(m);
    if (is_cutset_literal(g, t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// smallest vertex set whose removal disconnects (n - 1 for complete graphs)
inline int connectivity_brute(const Graph& g) {
  bool complete = static_cast<int>(g.edges.size()) == g.n * (g.n - 1) / 2;
  if (complete) return g.n - 1;
  for (int k = 0; k < g.n; ++k)
    for (std::uint64_t m = 0; m < (1ull << g.n); ++m) {
      if (std::popcount(m) != k) continue;
      VertexSet t = bei::mask_vertices(m);
      if (static_cast<int>(t.size()) + 2 > g.n) continue;
      if (component_count_minus(g, t) > 1) return k;
    }
  return g.n - 1;
}

// ---- named graphs used throughout the tests ----

inline Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v) es.push_back({v, v + 1});
  es.push_back({n, 1});
  return bei::make_graph(n, es);
}

inline Graph make_complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) es.push_back({a, b});
  return bei::make_graph(n, es);
}

inline Graph make_path(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v) es.push_back({v, v + 1});
  return bei::make_graph(n, es);
}

// rim 1..n, hub n+1
inline Graph make_wheel(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v) es.push_back({v, v + 1});
  es.push_back({n, 1});
  for (int v = 1; v <= n; ++v) es.push_back({v, n + 1});
  return bei::make_graph(n + 1, es);
}

inline Graph make_complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> es;
  for (int x = 1; x <= a; ++x)
    for (int y = 1; y <= b; ++y) es.push_back({x, a + y});
  return bei::make_graph(a + b, es);
}

// the six-vertex tree with two adjacent branch vertices
inline Graph tree_two_centers() {
  return bei::make_graph(6, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
}

// cone over a claw: star center 1, leaves 2..4, apex 5 adjacent to everything
inline Graph claw_cone() {
  return bei::make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}

// two squares and a vertex adjacent to all eight
inline Graph cone_over_two_squares() {
  std::vector<std::pair<int, int>> es{{1, 2}, {2, 3}, {3, 4}, {4, 1},
                                      {5, 6}, {6, 7}, {7, 8}, {8, 5}};
  for (int v = 1; v <= 8; ++v) es.push_back({v, 9});
  return bei::make_graph(9, es);
}

inline Graph k24_with_whisker() {
  std::vector<std::pair<int, int>> es;
  for (int x : {1, 2})
    for (int y : {3, 4, 5, 6}) es.push_back({x, y});
  es.push_back({6, 7});
  return bei::make_graph(7, es);
}

// cliques of the given sizes glued at vertex 1 (sizes count the non-center
// vertices, so size k contributes a clique on k + 1 vertices)
inline Graph block_star(const std::vector<int>& sizes) {
  std::vector<std::pair<int, int>> es;
  int next = 2;
  for (int k : sizes) {
    std::vector<int> verts{1};
    for (int i = 0; i < k; ++i) verts.push_back(next++);
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b) es.push_back({verts[a], verts[b]});
  }
  return bei::make_graph(next - 1, es);
}

// apex n1+n2+1 over the disjoint union of two graphs
inline Graph make_cone_pair(const Graph& g1, const Graph& g2) {
  std::vector<std::pair<int, int>> es = g1.edges;
  for (auto [a, b] : g2.edges) es.push_back({a + g1.n, b + g1.n});
  int apex = g1.n + g2.n + 1;
  for (int v = 1; v < apex; ++v) es.push_back({v, apex});
  return bei::make_graph(apex, es);
}

// ---- corpora ----

namespace detail {

inline int pair_index(int i, int j, int n) {  // 0-based i < j, column-major like graph6
  (void)n;
  return j * (j - 1) / 2 + i;
}

inline std::vector<std::vector<int>> bit_permutations(int n) {
  const int bits = n * (n - 1) / 2;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> m(bits);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        int pi = perm[i], pj = perm[j];
        if (pi > pj) std::swap(pi, pj);
        m[pair_index(i, j, n)] = pair_index(pi, pj, n);
      }
    maps.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

inline std::uint64_t apply_map(std::uint64_t mask, const std::vector<int>& map) {
  std::uint64_t out = 0;
  for (std::size_t b = 0; b < map.size(); ++b)
    if (mask >> b & 1) out |= 1ull << map[b];
  return out;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> es;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> pair_index(i, j, n) & 1) es.push_back({i + 1, j + 1});
  return bei::make_graph(n, es);
}

inline bool mask_connected(int n, std::uint64_t mask) {
  return component_count_minus(graph_from_mask(n, mask), {}) == 1;
}

}  // namespace detail

// all connected graphs on n labeled vertices, one representative per
// isomorphism class (the minimum edge mask over vertex permutations)
inline std::vector<Graph> all_connected_graphs(int n) {
  if (n == 1) return {bei::make_graph(1, {})};
  auto maps = detail::bit_permutations(n);
  const int bits = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    bool rep = true;
    for (const auto& m : maps)
      if (detail::apply_map(mask, m) < mask) {
        rep = false;
        break;
      }
    if (!rep) continue;
    if (!detail::mask_connected(n, mask)) continue;
    out.push_back(detail::graph_from_mask(n, mask));
  }
  return out;
}

// trees up to isomorphism, from all labeled trees (Pruefer sequences)
inline std::vector<Graph> all_trees(int n) {
  if (n == 1) return {bei::make_graph(1, {})};
  if (n == 2) return {bei::make_graph(2, {{1, 2}})};
  auto maps = detail::bit_permutations(n);
  std::set<std::uint64_t> reps;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    // decode the Pruefer sequence
    std::vector<int> deg(n + 1, 1);
    for (int s : seq) deg[s + 1]++;
    std::uint64_t mask = 0;
    std::vector<int> work(seq.begin(), seq.end());
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1) leaves.insert(v);
    for (int s : work) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      int a = leaf - 1, b = s;
      if (a > b) std::swap(a, b);
      mask |= 1ull << detail::pair_index(a, b, n);
      if (--deg[s + 1] == 1) leaves.insert(s + 1);
    }
    int u = *leaves.begin(), v = *std::next(leaves.begin());
    int a = u - 1, b = v - 1;
    if (a > b) std::swap(a, b);
    mask |= 1ull << detail::pair_index(a, b, n);

    std::uint64_t canon = mask;
    for (const auto& m : maps) canon = std::min(canon, detail::apply_map(mask, m));
    reps.insert(canon);

    int k = n - 3;
    while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
    if (k < 0) break;
    seq[k]++;
  }
  std::vector<Graph> out;
  for (auto mask : reps) out.push_back(detail::graph_from_mask(n, mask));
  return out;
}

// all block stars on exactly n vertices: partitions of n-1 into at least two
// parts (sizes descending to avoid duplicates)
inline std::vector<Graph> block_stars_on(int n) {
  std::vector<Graph> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      if (parts.size() >= 2) out.push_back(block_star(parts));
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      parts.push_back(k);
      self(self, left - k, k);
      parts.pop_back();
    }
  };
  rec(rec, n - 1, n - 1);
  return out;
}

inline Graph random_connected(std::mt19937& rng, int n, double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    std::vector<std::pair<int, int>> es;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (coin(rng) < p) es.push_back({a, b});
    if (es.empty()) continue;
    Graph g = bei::make_graph(n, es);
    if (component_count_minus(g, {}) == 1) return g;
  }
}

}  // namespace naive
