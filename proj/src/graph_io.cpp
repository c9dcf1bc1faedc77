#include "bei/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace bei {

ParsedGraph parse_edge_list(const std::string& text) {
  std::vector<std::pair<long long, long long>> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) continue;  // blank or comment-only line
    if (!(ls >> b))
      throw invalid_input("edge list line " + std::to_string(lineno) + ": expected two labels");
    std::string trail;
    if (ls >> trail)
      throw invalid_input("edge list line " + std::to_string(lineno) + ": trailing tokens");
    if (a < 0 || b < 0)
      throw invalid_input("edge list line " + std::to_string(lineno) + ": negative label");
    if (a == b) throw invalid_input("edge list line " + std::to_string(lineno) + ": self-loop");
    raw.emplace_back(a, b);
  }
  if (raw.empty()) throw invalid_input("edge list contains no edges");

  std::map<long long, int> relabel;
  for (auto [a, b] : raw) {
    relabel.emplace(a, 0);
    relabel.emplace(b, 0);
  }
  if (relabel.size() > 62) throw size_limit("graphs are limited to 62 vertices");
  int next = 1;
  std::vector<int> labels;
  for (auto& [orig, id] : relabel) {
    id = next++;
    labels.push_back(static_cast<int>(orig));
  }

  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : raw) edges.emplace_back(relabel[a], relabel[b]);
  std::sort(edges.begin(), edges.end(), [](auto p, auto q) {
    auto np = std::minmax(p.first, p.second);
    auto nq = std::minmax(q.first, q.second);
    return np < nq;
  });
  return {make_graph(static_cast<int>(relabel.size()), edges), std::move(labels)};
}

static std::string strip_graph6_header(const std::string& line) {
  static const std::string header = ">>graph6<<";
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  s = s.substr(start);
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  return s;
}

bool looks_like_graph6(const std::string& line) {
  std::string s = strip_graph6_header(line);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < 63 || ch > 126) return false;
  int n = s[0] - 63;
  if (n > 62) return false;  // multi-byte sizes are not supported
  std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  return s.size() == 1 + need;
}

Graph parse_graph6(const std::string& line) {
  std::string s = strip_graph6_header(line);
  if (s.empty()) throw invalid_input("empty graph6 string");
  for (char ch : s)
    if (ch < 63 || ch > 126) throw invalid_input("graph6: byte out of range");
  int n = s[0] - 63;
  if (n == 63) throw size_limit("graph6: multi-byte vertex counts (n > 62) are not supported");
  std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (s.size() != 1 + need)
    throw invalid_input("graph6: expected " + std::to_string(1 + need) + " bytes, got " +
                        std::to_string(s.size()));
  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i, ++bit) {
      int byte = s[1 + bit / 6] - 63;
      if (byte >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
    }
  return make_graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  if (g.n > 62) throw size_limit("graph6 writer is limited to 62 vertices");
  std::string s(1 + (static_cast<std::size_t>(g.n) * (g.n - 1) / 2 + 5) / 6, char(63));
  s[0] = static_cast<char>(63 + g.n);
  std::size_t bit = 0;
  for (int j = 2; j <= g.n; ++j)
    for (int i = 1; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) s[1 + bit / 6] += char(1 << (5 - bit % 6));
  return s;
}

ParsedGraph parse_graph_auto(const std::string& text) {
  // first non-blank line decides the format
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string probe = line;
    if (auto pos = probe.find('#'); pos != std::string::npos) probe.resize(pos);
    bool blank = std::all_of(probe.begin(), probe.end(),
                             [](unsigned char c) { return std::isspace(c); });
    if (blank) continue;
    if (looks_like_graph6(probe)) {
      Graph g = parse_graph6(probe);
      std::vector<int> labels(g.n);
      for (int v = 1; v <= g.n; ++v) labels[v - 1] = v;
      return {std::move(g), std::move(labels)};
    }
    return parse_edge_list(text);
  }
  throw invalid_input("empty graph input");
}

}  // namespace bei
