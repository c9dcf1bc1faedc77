#pragma once

#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// Edge-list inputs may use arbitrary non-negative integer labels; vertices
// are renumbered 1..n in increasing label order and the original labels kept
// for reporting.
struct ParsedGraph {
  Graph g;
  std::vector<int> original_labels;  // original_labels[i] = input label of vertex i+1
};

// one "i j" pair per line, '#' starts a comment, blank lines ignored
ParsedGraph parse_edge_list(const std::string& text);

// canonical ascii graph6, n <= 62 (single-byte header), optional >>graph6<< prefix
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

bool looks_like_graph6(const std::string& line);

// sniffs the format: graph6 token or edge-list text
ParsedGraph parse_graph_auto(const std::string& text);

}  // namespace bei
