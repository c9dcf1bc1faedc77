#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bei/errors.hpp"
#include "bei/vec.hpp"

namespace bei::alg {

// Work accounting shared by one top-level computation.  "steps" counts term
// merge operations; exceeding the limits raises resource_limit.
struct Budget {
  long long max_steps = 4'000'000'000LL;
  int max_basis = 200000;
  long long steps = 0;

  void charge(long long k) {
    steps += k;
    if (steps > max_steps) throw resource_limit("step budget exceeded");
  }
  void check_basis(std::size_t sz) {
    if (static_cast<int>(sz) > max_basis) throw resource_limit("basis size budget exceeded");
  }
};

// Fully reduces v modulo basis: no term of the result is divisible by any
// basis lead term (in the matching component).  If quots != nullptr, appends
// terms (m, k, c) meaning c * m * basis[k], so that
//   v = sum(quots) + result.
template <class F>
Vec<F> normal_form(Vec<F> v, const std::vector<Vec<F>>& basis, const ModuleOrder& mo,
                   const F& fld, Budget& bud, Vec<F>* quots = nullptr) {
  Vec<F> out;
  std::size_t start = 0;
  while (start < v.size()) {
    const VTerm<F>& lt = v[start];
    int pick = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& g = basis[k];
      if (!g.empty() && g.front().comp == lt.comp && mono_divides(g.front().m, lt.m)) {
        pick = static_cast<int>(k);
        break;
      }
    }
    if (pick < 0) {
      out.push_back(lt);
      ++start;
      continue;
    }
    const auto& g = basis[pick];
    auto q = fld.div(lt.c, g.front().c);
    fld.observe(q);
    Mono qm = mono_div(lt.m, g.front().m);
    Vec<F> tail(v.begin() + start, v.end());
    bud.charge(static_cast<long long>(tail.size() + g.size()));
    v = vec_axpy(tail, fld.neg(q), qm, g, mo, fld);
    start = 0;
    if (quots) quots->push_back({qm, pick, q});
    // the reduced lead cancels, so previously emitted terms stay irreducible
  }
  return out;
}

namespace detail {

template <class F>
struct GBPair {
  int i, j;
  Mono lcm;   // of the two lead monomials (components agree)
  Mono key;   // anchor-flattened lcm used for selection
  bool alive = true;
};

// Gebauer-Moeller pair update on appending basis element t.
// The coprime criterion only holds for ring elements (rank1).
template <class F>
void gm_add(std::vector<GBPair<F>>& pairs, const std::vector<Vec<F>>& basis, int t,
            const ModuleOrder& mo, bool rank1) {
  const auto& gt = basis[t];
  if (gt.empty()) return;
  const Mono& lt = gt.front().m;
  const int ct = gt.front().comp;

  auto flat = [&](const Mono& m, int c) { return mo.anchor ? mono_mul(m, (*mo.anchor)[c]) : m; };

  struct Cand {
    int i;
    Mono lcm;
    bool alive = true;
  };
  std::vector<Cand> cand;
  for (int i = 0; i < t; ++i) {
    if (basis[i].empty() || basis[i].front().comp != ct) continue;
    cand.push_back({i, mono_lcm(basis[i].front().m, lt), true});
  }
  // M criterion: drop (i,t) when another candidate lcm properly divides it
  for (auto& a : cand) {
    for (auto& b : cand) {
      if (!a.alive || !b.alive || a.i == b.i) continue;
      if (!(b.lcm == a.lcm) && mono_divides(b.lcm, a.lcm)) a.alive = false;
    }
  }
  // F criterion: one candidate per lcm value
  for (std::size_t x = 0; x < cand.size(); ++x)
    for (std::size_t y = x + 1; y < cand.size(); ++y)
      if (cand[x].alive && cand[y].alive && cand[x].lcm == cand[y].lcm) cand[y].alive = false;
  // B criterion (ring level only): coprime leads reduce to zero
  if (rank1)
    for (auto& a : cand)
      if (a.alive && mono_coprime(basis[a.i].front().m, lt)) a.alive = false;
  // old pairs killed by the new lead
  for (auto& p : pairs) {
    if (!p.alive) continue;
    if (basis[p.i].front().comp != ct) continue;
    if (!mono_divides(lt, p.lcm)) continue;
    Mono l1 = mono_lcm(basis[p.i].front().m, lt);
    Mono l2 = mono_lcm(basis[p.j].front().m, lt);
    if (!(l1 == p.lcm) && !(l2 == p.lcm)) p.alive = false;
  }
  for (auto& a : cand)
    if (a.alive) pairs.push_back({a.i, t, a.lcm, flat(a.lcm, ct), true});
}

// selection: smallest flattened lcm first (normal strategy)
template <class F>
int pop_pair(std::vector<GBPair<F>>& pairs, const Order& ord) {
  int best = -1;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!pairs[k].alive) continue;
    if (best < 0 || ord.cmp(pairs[k].key, pairs[best].key) < 0) best = static_cast<int>(k);
  }
  if (best >= 0) pairs[best].alive = false;
  return best;
}

}  // namespace detail

// s-vector of two elements whose leads share a component.  With uf/ug set,
// records s = uf * f + ug * g.
template <class F>
Vec<F> s_vector(const Vec<F>& f, const Vec<F>& g, const ModuleOrder& mo, const F& fld,
                Budget& bud, VTerm<F>* uf = nullptr, VTerm<F>* ug = nullptr) {
  assert(!f.empty() && !g.empty() && f.front().comp == g.front().comp);
  Mono l = mono_lcm(f.front().m, g.front().m);
  Mono mf = mono_div(l, f.front().m);
  Mono mg = mono_div(l, g.front().m);
  auto cf = g.front().c;
  auto cg = fld.neg(f.front().c);
  if (uf) *uf = {mf, 0, cf};
  if (ug) *ug = {mg, 0, cg};
  bud.charge(static_cast<long long>(f.size() + g.size()));
  Vec<F> sf = vec_scale(vec_mul_mono(f, mf), cf, fld);
  return vec_axpy(sf, cg, mg, g, mo, fld);
}

// Buchberger with the Gebauer-Moeller pair criteria.  Returns a (not yet
// reduced) basis extending the input generators.
template <class F>
std::vector<Vec<F>> buchberger(std::vector<Vec<F>> gens, const ModuleOrder& mo, const F& fld,
                               Budget& bud, bool rank1) {
  std::vector<Vec<F>> basis;
  std::vector<detail::GBPair<F>> pairs;
  for (auto& g : gens) {
    if (g.empty()) continue;
    basis.push_back(make_monic(std::move(g), fld));
    detail::gm_add(pairs, basis, static_cast<int>(basis.size()) - 1, mo, rank1);
  }
  while (true) {
    int k = detail::pop_pair(pairs, mo.ord);
    if (k < 0) break;
    const auto& p = pairs[k];
    Vec<F> s = s_vector(basis[p.i], basis[p.j], mo, fld, bud);
    Vec<F> h = normal_form(std::move(s), basis, mo, fld, bud);
    if (h.empty()) continue;
    basis.push_back(make_monic(std::move(h), fld));
    bud.check_basis(basis.size());
    detail::gm_add(pairs, basis, static_cast<int>(basis.size()) - 1, mo, rank1);
  }
  return basis;
}

// Minimal, tail-reduced, monic basis sorted by descending lead.  For a fixed
// order this is canonical, so equal ideals/modules give equal outputs.
template <class F>
std::vector<Vec<F>> reduced_basis(std::vector<Vec<F>> basis, const ModuleOrder& mo, const F& fld,
                                  Budget& bud) {
  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<bool> dead(basis.size(), false);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (dead[a] || basis[a].empty()) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b || dead[b] || basis[b].empty()) continue;
      if (basis[a].front().comp != basis[b].front().comp) continue;
      if (basis[b].front().m == basis[a].front().m) {
        if (b < a) {  // keep the earliest of equal leads
          dead[a] = true;
          break;
        }
      } else if (mono_divides(basis[b].front().m, basis[a].front().m)) {
        dead[a] = true;
        break;
      }
    }
  }
  std::vector<Vec<F>> kept;
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (!dead[a] && !basis[a].empty()) kept.push_back(std::move(basis[a]));
  // tail-reduce each element against the others until nothing moves
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < kept.size(); ++a) {
      Vec<F> self = std::move(kept[a]);
      kept[a].clear();  // empty elements are skipped by normal_form
      Vec<F> red = make_monic(normal_form(Vec<F>(self), kept, mo, fld, bud), fld);
      if (!vec_equal(red, self)) changed = true;
      kept[a] = std::move(red);
    }
  }
  std::sort(kept.begin(), kept.end(), [&](const Vec<F>& x, const Vec<F>& y) {
    return mo.cmp(x.front().m, x.front().comp, y.front().m, y.front().comp) > 0;
  });
  return kept;
}

// Convenience: canonical reduced basis of the span of gens.
template <class F>
std::vector<Vec<F>> reduced_groebner(std::vector<Vec<F>> gens, const ModuleOrder& mo, const F& fld,
                                     Budget& bud, bool rank1) {
  return reduced_basis(buchberger(std::move(gens), mo, fld, bud, rank1), mo, fld, bud);
}

}  // namespace bei::alg
