#pragma once

#include <algorithm>

#include "bei/cutsets.hpp"
#include "bei/ideal.hpp"

namespace bei::alg {

template <class F>
Ideal<F> unit_ideal(const Ring<F>& ring) {
  Vec<F> one{{mono_one(), 0, ring.field.one()}};
  return make_ideal(ring, {std::move(one)});
}

// edge binomials of the scene graph plus both variables of each killed vertex
template <class F>
Ideal<F> scene_ideal(const Ring<F>& ring, const IdealScene& s) {
  if (s.h.n != ring.n) throw invalid_input("scene size does not match the ring");
  for (int v : s.killed)
    if (s.h.degree(v) != 0) throw invalid_input("killed vertex carries edges");
  std::vector<Vec<F>> gens;
  for (auto [a, b] : s.h.edges) gens.push_back(edge_binomial(ring, a, b));
  for (int w : s.killed) {
    gens.push_back({{mono_var(ring.xvar(w)), 0, ring.field.one()}});
    gens.push_back({{mono_var(ring.yvar(w)), 0, ring.field.one()}});
  }
  return make_ideal(ring, std::move(gens));
}

// Killed vertices are isolated, so removing T together with them leaves the
// same components as removing T from the live part: the minimal prime of the
// scene at T is the plain prime at T + killed.
template <class F>
Ideal<F> scene_prime(const Ring<F>& ring, const IdealScene& s, const VertexSet& t) {
  VertexSet full = t;
  full.insert(full.end(), s.killed.begin(), s.killed.end());
  std::sort(full.begin(), full.end());
  full.erase(std::unique(full.begin(), full.end()), full.end());
  return cutset_prime(ring, s.h, full);
}

// deterministic fold order: large dimension first, then lexicographic cutset
inline void sort_for_intersection(std::vector<CutsetProfile>& ps) {
  std::sort(ps.begin(), ps.end(), [](const CutsetProfile& a, const CutsetProfile& b) {
    if (a.prime_dim != b.prime_dim) return a.prime_dim > b.prime_dim;
    return a.t < b.t;
  });
}

template <class F>
Ideal<F> intersect_primes(const Ring<F>& ring, const IdealScene& s,
                          std::vector<CutsetProfile> retained) {
  if (retained.empty()) return unit_ideal(ring);
  sort_for_intersection(retained);
  Ideal<F> acc = scene_prime(ring, s, retained.front().t);
  for (std::size_t k = 1; k < retained.size(); ++k)
    acc = ideal_intersect(acc, scene_prime(ring, s, retained[k].t));
  return acc;
}

// The ideal of the i-th slice: intersection of the minimal primes whose
// quotient dimension exceeds i.  When every prime survives the slice this is
// the full ideal itself (it is radical), which `radical_shortcut` exploits;
// pass false to force the literal intersection.
template <class F>
Ideal<F> materialize_filtration(const Ring<F>& ring, const IdealScene& s,
                                const std::vector<CutsetProfile>& ps, int i,
                                bool radical_shortcut = true) {
  auto fl = filtration_level(ps, i);
  if (fl.retained.empty()) return unit_ideal(ring);
  if (radical_shortcut && fl.retained.size() == ps.size()) return scene_ideal(ring, s);
  return intersect_primes(ring, s, fl.retained);
}

}  // namespace bei::alg
