#include "bei/cutsets.hpp"

#include <algorithm>

namespace bei {

std::vector<CutsetProfile> scene_profiles(const IdealScene& s, int max_cutset_n) {
  for (int v : s.killed)
    if (s.h.degree(v) != 0) throw invalid_input("killed vertex carries edges");
  const int live = s.h.n - static_cast<int>(s.killed.size());
  const auto killed_mask = vertex_mask(s.killed);
  std::vector<CutsetProfile> out;
  // cutsets of h live on the non-killed vertices; killed vertices are never
  // in a cutset (they are isolated, so they cannot merge components) but we
  // enumerate on h and filter to be safe
  for (const auto& t : enumerate_cutsets_any(s.h, max_cutset_n)) {
    if (vertex_mask(t) & killed_mask) continue;
    std::uint64_t keep = 0;
    for (int v = 1; v <= s.h.n; ++v) keep |= 1ull << (v - 1);
    keep &= ~vertex_mask(t) & ~killed_mask;
    int c = static_cast<int>(component_masks(s.h, keep).size());
    out.push_back({t, c, live - static_cast<int>(t.size()) + c});
  }
  return out;
}

std::vector<CutsetProfile> profiles(const Graph& g, int max_cutset_n) {
  if (!is_connected(g)) throw invalid_input("profiles expect a connected graph");
  return scene_profiles({g, {}}, max_cutset_n);
}

DimensionSpectrum spectrum(const std::vector<CutsetProfile>& ps) {
  if (ps.empty()) throw invalid_input("empty profile list");
  DimensionSpectrum s;
  for (const auto& p : ps) s.dims.push_back(p.prime_dim);
  std::sort(s.dims.begin(), s.dims.end());
  s.dims.erase(std::unique(s.dims.begin(), s.dims.end()), s.dims.end());
  s.krull_dim = s.dims.back();
  s.min_dim = s.dims.front();
  bool have = false;
  for (const auto& p : ps) {
    if (p.prime_dim != s.min_dim) continue;
    if (!have || p.t < s.witness) {
      s.witness = p.t;
      have = true;
    }
  }
  return s;
}

FiltrationLevel filtration_level(const std::vector<CutsetProfile>& ps, int i) {
  auto sp = spectrum(ps);
  if (i < -1 || i > sp.krull_dim) throw invalid_input("filtration level out of range");
  FiltrationLevel fl;
  fl.i = i;
  for (const auto& p : ps)
    if (p.prime_dim > i) fl.retained.push_back(p);
  return fl;
}

NecessaryCheck necessary_condition(const Graph& g, int max_cutset_n) {
  if (!is_connected(g)) throw invalid_input("necessary condition expects a connected graph");
  if (is_complete(g)) throw not_applicable("necessary condition does not apply to complete graphs");
  auto ps = profiles(g, max_cutset_n);
  auto sp = spectrum(ps);
  NecessaryCheck nc;
  nc.kappa = vertex_connectivity(g);
  nc.witness = sp.witness;
  for (const auto& p : ps)
    if (p.t == sp.witness) nc.c = p.c;
  nc.value = nc.kappa - static_cast<int>(nc.witness.size()) + nc.c;
  nc.passes = nc.value <= 2;
  return nc;
}

}  // namespace bei
