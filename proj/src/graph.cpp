#include "bei/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>

namespace bei {

namespace {

std::uint64_t full_mask(int n) { return n >= 64 ? ~0ull : (1ull << n) - 1; }

void check_vertex(const Graph& g, int v) {
  if (v < 1 || v > g.n) throw invalid_input("vertex label out of range: " + std::to_string(v));
}

}  // namespace

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw invalid_input("graph needs at least one vertex");
  if (n > 62) throw invalid_input("vertex count exceeds supported maximum (62)");
  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  g.nbr.assign(n, {});
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b) throw invalid_input("bad edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  for (auto [a, b] : g.edges) {
    g.adj[a - 1] |= 1ull << (b - 1);
    g.adj[b - 1] |= 1ull << (a - 1);
    g.nbr[a - 1].push_back(b);
    g.nbr[b - 1].push_back(a);
  }
  for (auto& l : g.nbr) std::sort(l.begin(), l.end());
  return g;
}

std::uint64_t vertex_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= 1ull << (v - 1);
  return m;
}

VertexSet mask_vertices(std::uint64_t m) {
  VertexSet s;
  while (m) {
    int b = std::countr_zero(m);
    s.push_back(b + 1);
    m &= m - 1;
  }
  return s;
}

std::vector<std::uint64_t> component_masks(const Graph& g, std::uint64_t keep) {
  std::vector<std::uint64_t> comps;
  std::uint64_t left = keep;
  while (left) {
    std::uint64_t seed = left & (~left + 1);
    std::uint64_t comp = seed, frontier = seed;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.adj[v] & keep;
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

bool is_connected(const Graph& g) { return component_masks(g, full_mask(g.n)).size() == 1; }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  for (auto m : component_masks(g, full_mask(g.n))) out.push_back(mask_vertices(m));
  return out;
}

std::vector<VertexSet> connected_components_minus(const Graph& g, const VertexSet& removed) {
  for (int v : removed) check_vertex(g, v);
  std::uint64_t keep = full_mask(g.n) & ~vertex_mask(removed);
  std::vector<VertexSet> out;
  for (auto m : component_masks(g, keep)) out.push_back(mask_vertices(m));
  return out;
}

namespace {

bool is_cutset_mask(const Graph& g, std::uint64_t t) {
  std::uint64_t keep = full_mask(g.n) & ~t;
  auto comps = component_masks(g, keep);
  std::uint64_t tt = t;
  while (tt) {
    int v = std::countr_zero(tt);
    tt &= tt - 1;
    int touched = 0;
    for (auto c : comps)
      if (g.adj[v] & c) {
        if (++touched >= 2) break;
      }
    if (touched < 2) return false;
  }
  return true;
}

}  // namespace

bool is_cutset(const Graph& g, const VertexSet& t) {
  for (int v : t) check_vertex(g, v);
  return is_cutset_mask(g, vertex_mask(t));
}

std::vector<VertexSet> enumerate_cutsets_any(const Graph& g, int max_n) {
  if (g.n > max_n)
    throw size_limit("cutset enumeration limited to " + std::to_string(max_n) + " vertices");
  std::vector<VertexSet> out;
  const std::uint64_t top = 1ull << g.n;
  for (std::uint64_t t = 0; t < top; ++t)
    if (is_cutset_mask(g, t)) out.push_back(mask_vertices(t));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<VertexSet> enumerate_cutsets(const Graph& g, int max_n) {
  if (!is_connected(g)) throw invalid_input("cutset enumeration expects a connected graph");
  return enumerate_cutsets_any(g, max_n);
}

namespace {

// unit-capacity vertex flow: number of internally disjoint s-t paths
int vertex_flow(const Graph& g, int s, int t) {
  // node 2v = v_in, 2v+1 = v_out (0-based v); cap 1 on in->out except s,t
  const int N = 2 * g.n;
  std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
  for (int v = 0; v < g.n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? g.n : 1;
  for (auto [a, b] : g.edges) {
    cap[2 * (a - 1) + 1][2 * (b - 1)] = g.n;
    cap[2 * (b - 1) + 1][2 * (a - 1)] = g.n;
  }
  int flow = 0;
  while (true) {
    std::vector<int> prev(N, -1);
    std::vector<int> q{2 * s};
    prev[2 * s] = 2 * s;
    for (std::size_t h = 0; h < q.size(); ++h) {
      int u = q[h];
      for (int w = 0; w < N; ++w)
        if (cap[u][w] > 0 && prev[w] < 0) {
          prev[w] = u;
          q.push_back(w);
        }
    }
    if (prev[2 * t + 1] < 0) break;
    for (int w = 2 * t + 1; w != 2 * s; w = prev[w]) {
      cap[prev[w]][w] -= 1;
      cap[w][prev[w]] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  if (!is_connected(g)) throw invalid_input("vertex connectivity expects a connected graph");
  if (is_complete(g)) return g.n - 1;
  int best = g.n;
  for (int s = 1; s <= g.n; ++s)
    for (int t = s + 1; t <= g.n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, vertex_flow(g, s - 1, t - 1));
  return best;
}

BlockDecomposition blocks_and_cutpoints(const Graph& g) {
  if (!is_connected(g)) throw invalid_input("block decomposition expects a connected graph");
  BlockDecomposition out;
  if (g.n == 1) {
    out.blocks.push_back({1});
    return out;
  }
  std::vector<int> num(g.n + 1, 0), low(g.n + 1, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<bool> iscut(g.n + 1, false);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    num[v] = low[v] = ++timer;
    int children = 0;
    for (int w : g.nbr[v - 1]) {
      if (w == parent) continue;
      if (num[w] == 0) {
        ++children;
        stack.push_back({v, w});
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if ((parent == 0 && children > 1) || (parent != 0 && low[w] >= num[v])) iscut[v] = true;
        if (low[w] >= num[v]) {
          std::uint64_t bm = 0;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            bm |= vertex_mask({a, b});
            if (a == v && b == w) break;
          }
          out.blocks.push_back(mask_vertices(bm));
        }
      } else if (num[w] < num[v]) {
        stack.push_back({v, w});
        low[v] = std::min(low[v], num[w]);
      }
    }
  };
  dfs(1, 0);
  for (int v = 1; v <= g.n; ++v)
    if (iscut[v]) out.cutpoints.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

bool is_complete(const Graph& g) {
  return static_cast<int>(g.edges.size()) == g.n * (g.n - 1) / 2;
}

bool is_cycle(const Graph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  for (int v = 1; v <= g.n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::optional<int> wheel_hub(const Graph& g) {
  if (g.n < 4) return std::nullopt;
  for (int v = 1; v <= g.n; ++v) {
    if (g.degree(v) != g.n - 1) continue;
    auto sub = induced_subgraph(g, mask_vertices(full_mask(g.n) & ~(1ull << (v - 1))));
    if (is_cycle(sub.g)) return v;
  }
  return std::nullopt;
}

namespace {

bool clique_mask(const Graph& g, std::uint64_t m) {
  std::uint64_t mm = m;
  while (mm) {
    int v = std::countr_zero(mm);
    mm &= mm - 1;
    if ((g.adj[v] & m) != (m & ~(1ull << v))) return false;
  }
  return true;
}

}  // namespace

bool is_block_graph(const Graph& g) {
  for (const auto& b : blocks_and_cutpoints(g).blocks)
    if (!clique_mask(g, vertex_mask(b))) return false;
  return true;
}

std::optional<int> block_star_center(const Graph& g) {
  if (!is_block_graph(g)) return std::nullopt;
  auto bd = blocks_and_cutpoints(g);
  if (bd.cutpoints.size() != 1) return std::nullopt;
  return bd.cutpoints[0];
}

std::vector<std::pair<int, int>> cone_apexes(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= g.n; ++v)
    if (g.degree(v) == g.n - 1 && g.n > 1)
      out.push_back({v, static_cast<int>(component_masks(g, full_mask(g.n) & ~(1ull << (v - 1))).size())});
  return out;
}

std::optional<int> decomposition_vertex(const Graph& g) {
  for (int v = 1; v <= g.n; ++v) {
    auto comps = component_masks(g, full_mask(g.n) & ~(1ull << (v - 1)));
    if (comps.size() != 2) continue;
    bool ok = true;
    for (auto c : comps)
      if (!clique_mask(g, g.adj[v - 1] & c)) {
        ok = false;
        break;
      }
    if (ok) return v;
  }
  return std::nullopt;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  for (int v : keep) check_vertex(g, v);
  Subgraph s;
  s.labels = keep;
  std::vector<int> newlab(g.n + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) newlab[keep[i]] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edges)
    if (newlab[a] && newlab[b]) es.push_back({newlab[a], newlab[b]});
  s.g = make_graph(static_cast<int>(keep.size()), std::move(es));
  return s;
}

std::vector<Subgraph> decompose(const Graph& g) {
  if (!is_connected(g)) throw invalid_input("decompose expects a connected graph");
  std::vector<Subgraph> out;
  std::function<void(const Graph&, const std::vector<int>&)> go = [&](const Graph& h,
                                                                      const std::vector<int>& labels) {
    auto v = decomposition_vertex(h);
    if (!v) {
      out.push_back({h, labels});
      return;
    }
    auto comps = component_masks(h, full_mask(h.n) & ~(1ull << (*v - 1)));
    for (auto c : comps) {
      VertexSet keep = mask_vertices(c | (1ull << (*v - 1)));
      Subgraph side = induced_subgraph(h, keep);
      std::vector<int> fixed;  // side labels composed back to the original graph
      for (int x : keep) fixed.push_back(labels[x - 1]);
      go(side.g, fixed);
    }
  };
  std::vector<int> identity(g.n);
  for (int i = 0; i < g.n; ++i) identity[i] = i + 1;
  go(g, identity);
  std::sort(out.begin(), out.end(),
            [](const Subgraph& a, const Subgraph& b) { return a.labels < b.labels; });
  return out;
}

Graph add_clique(const Graph& g, const VertexSet& verts) {
  auto es = g.edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) es.push_back({verts[i], verts[j]});
  return make_graph(g.n, std::move(es));
}

Graph remove_vertex_keep_labels(const Graph& g, int v) {
  check_vertex(g, v);
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : g.edges)
    if (a != v && b != v) es.push_back({a, b});
  return make_graph(g.n, std::move(es));
}

std::pair<Graph, Graph> relative_graphs(const Graph& g, int v) {
  check_vertex(g, v);
  return {add_clique(g, g.nbr[v - 1]), remove_vertex_keep_labels(g, v)};
}

std::string family_name(FamilyTag::Kind k) {
  switch (k) {
    case FamilyTag::Kind::Complete: return "complete";
    case FamilyTag::Kind::Cycle: return "cycle";
    case FamilyTag::Kind::Wheel: return "wheel";
    case FamilyTag::Kind::BlockStar: return "block-star";
    case FamilyTag::Kind::BlockGraph: return "block-graph";
    case FamilyTag::Kind::Cone: return "cone";
    case FamilyTag::Kind::OneCutset: return "one-cutset";
    case FamilyTag::Kind::Decomposable: return "decomposable";
    case FamilyTag::Kind::Other: return "other";
  }
  return "?";
}

std::vector<FamilyTag> recognize(const Graph& g, int max_cutset_n) {
  if (!is_connected(g)) throw invalid_input("recognize expects a connected graph");
  std::vector<FamilyTag> tags;
  using K = FamilyTag::Kind;
  if (is_complete(g)) tags.push_back({K::Complete});
  if (is_cycle(g)) tags.push_back({K::Cycle});
  if (auto h = wheel_hub(g)) tags.push_back({K::Wheel, 0, 0, *h});
  if (auto c = block_star_center(g)) tags.push_back({K::BlockStar, 0, 0, *c});
  if (is_block_graph(g)) tags.push_back({K::BlockGraph});
  for (auto [apex, r] : cone_apexes(g)) tags.push_back({K::Cone, apex, r, 0});
  if (g.n <= max_cutset_n) {
    auto cs = enumerate_cutsets(g, max_cutset_n);
    if (cs.size() == 2) tags.push_back({K::OneCutset});
  }
  if (auto v = decomposition_vertex(g)) tags.push_back({K::Decomposable, 0, 0, *v});
  if (tags.empty()) tags.push_back({K::Other});
  return tags;
}

}  // namespace bei
