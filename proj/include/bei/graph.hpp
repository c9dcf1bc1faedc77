#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bei/errors.hpp"

namespace bei {

// Vertex subsets are sorted ascending; labels are 1-based and contiguous.
using VertexSet = std::vector<int>;

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, lexicographically sorted, unique
  std::vector<std::uint64_t> adj;          // adj[v-1] bit (u-1)
  std::vector<std::vector<int>> nbr;       // sorted neighbor lists

  bool has_edge(int u, int v) const {
    return u >= 1 && u <= n && v >= 1 && v <= n && u != v && ((adj[u - 1] >> (v - 1)) & 1u);
  }
  int degree(int v) const { return static_cast<int>(nbr[v - 1].size()); }
};

// Validates labels (1..n, i != j), dedups, sorts.  n is capped at 62 so that
// bitmask scratch and graph6 single-byte sizes always work.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

std::uint64_t vertex_mask(const VertexSet& s);
VertexSet mask_vertices(std::uint64_t m);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
// components of g minus `removed` (vertices validated)
std::vector<VertexSet> connected_components_minus(const Graph& g, const VertexSet& removed);
// fast variant used by enumeration: component masks of g restricted to `keep`
std::vector<std::uint64_t> component_masks(const Graph& g, std::uint64_t keep);

// T is a cutset iff removing any v in T would merge components, equivalently
// every v in T has neighbors in at least two components of g - T.
bool is_cutset(const Graph& g, const VertexSet& t);

// All cutsets of g ordered by (size, lex).  Requires a connected graph; the
// guard raises size_limit when n exceeds max_n.
std::vector<VertexSet> enumerate_cutsets(const Graph& g, int max_n = 24);
// same enumeration without the connectivity requirement (internal calculus
// on vertex-deleted graphs needs it)
std::vector<VertexSet> enumerate_cutsets_any(const Graph& g, int max_n = 24);

// Menger-style vertex connectivity via unit max-flow; complete graphs report
// n - 1 by convention.  Requires a connected graph.
int vertex_connectivity(const Graph& g);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // maximal 2-connected pieces (single edges allowed)
  VertexSet cutpoints;
};
BlockDecomposition blocks_and_cutpoints(const Graph& g);

bool is_complete(const Graph& g);
bool is_cycle(const Graph& g);
// hub of a wheel: a vertex adjacent to everything whose removal leaves a cycle
std::optional<int> wheel_hub(const Graph& g);
bool is_block_graph(const Graph& g);  // every block complete
// block graph with exactly one cutpoint; returns the center
std::optional<int> block_star_center(const Graph& g);
// every universal vertex with the component count of its removal
std::vector<std::pair<int, int>> cone_apexes(const Graph& g);

// Smallest vertex at which g splits into two subgraphs sharing only that
// vertex, free (simplicial) in both: a cut vertex leaving exactly two
// components, its neighborhood inside each being a clique.
std::optional<int> decomposition_vertex(const Graph& g);

struct Subgraph {
  Graph g;
  std::vector<int> labels;  // labels[new - 1] = original label
};
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// indecomposable summands after repeatedly splitting at free cut vertices;
// labels refer to the input graph
std::vector<Subgraph> decompose(const Graph& g);

Graph add_clique(const Graph& g, const VertexSet& verts);
Graph remove_vertex_keep_labels(const Graph& g, int v);
// (g with the neighborhood of v completed, g minus v with v kept isolated)
std::pair<Graph, Graph> relative_graphs(const Graph& g, int v);

struct FamilyTag {
  enum class Kind { Complete, Cycle, Wheel, BlockStar, BlockGraph, Cone, OneCutset, Decomposable, Other };
  Kind kind{};
  int apex = 0;    // Cone
  int r = 0;       // Cone: components after removing the apex
  int vertex = 0;  // Decomposable split vertex / BlockStar center / Wheel hub
};
std::string family_name(FamilyTag::Kind k);

// every tag that holds; OneCutset is only probed when n <= max_cutset_n
std::vector<FamilyTag> recognize(const Graph& g, int max_cutset_n = 24);

}  // namespace bei
