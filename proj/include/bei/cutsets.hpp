#pragma once

#include <vector>

#include "bei/graph.hpp"

namespace bei {

// One cutset T with its component count and the dimension of the quotient by
// the associated minimal prime: dim = (#live vertices) - |T| + c(T).
struct CutsetProfile {
  VertexSet t;
  int c = 0;
  int prime_dim = 0;
};

// Ideal shape "edge ideal of h plus the variables of killed vertices".
// `killed` vertices must be isolated in h; they carry no edges and do not
// count toward components or dimension.
struct IdealScene {
  Graph h;
  VertexSet killed;
};

std::vector<CutsetProfile> scene_profiles(const IdealScene& s, int max_cutset_n = 24);

// profiles of the binomial edge ideal of a connected graph
std::vector<CutsetProfile> profiles(const Graph& g, int max_cutset_n = 24);

struct DimensionSpectrum {
  std::vector<int> dims;  // distinct prime dimensions, ascending
  int krull_dim = 0;      // max
  int min_dim = 0;        // m(G)
  VertexSet witness;      // lexicographically smallest cutset attaining min_dim
};
DimensionSpectrum spectrum(const std::vector<CutsetProfile>& ps);

struct FiltrationLevel {
  int i = 0;
  std::vector<CutsetProfile> retained;  // profiles with prime_dim > i
};
// valid for -1 <= i <= krull_dim
FiltrationLevel filtration_level(const std::vector<CutsetProfile>& ps, int i);

// Connectivity obstruction: a sequentially Cohen-Macaulay binomial edge
// ideal forces kappa(G) - |T| + c(T) <= 2 at the smallest-dimension witness.
// Not applicable to complete graphs.
struct NecessaryCheck {
  bool passes = false;
  int kappa = 0;
  VertexSet witness;
  int c = 0;
  int value = 0;  // kappa - |witness| + c
};
NecessaryCheck necessary_condition(const Graph& g, int max_cutset_n = 24);

}  // namespace bei
