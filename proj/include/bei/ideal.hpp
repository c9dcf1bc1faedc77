#pragma once

#include <algorithm>
#include <bit>
#include <memory>
#include <string>
#include <vector>

#include "bei/graph.hpp"
#include "bei/resolution.hpp"

namespace bei::alg {

// Limits copied into a fresh Budget for each top-level computation.
struct BudgetSpec {
  long long max_steps = 4'000'000'000LL;
  int max_basis = 200000;
};

// Polynomial ring K[x_1..x_n, y_1..y_n].  Variable indices: x_i -> i-1,
// y_i -> n+i-1.  characteristic 0 pairs with QField, a prime with FpField.
template <class F>
struct Ring {
  int n = 0;
  long long characteristic = kDefaultCharacteristic;
  OrderKind order = OrderKind::degrevlex;
  F field{};
  BudgetSpec budget{};

  int nvars() const { return 2 * n; }
  Order ring_order() const { return {order, 2 * n}; }
  ModuleOrder module_order() const { return {ring_order(), nullptr}; }
  Budget fresh_budget() const { return {budget.max_steps, budget.max_basis, 0}; }
  int xvar(int i) const { return i - 1; }
  int yvar(int i) const { return n + i - 1; }
};

inline Ring<FpField> make_ring_fp(int n, long long p = kDefaultCharacteristic,
                                  OrderKind order = OrderKind::degrevlex) {
  if (2 * n + 1 > kMaxVars) throw invalid_input("too many variables for the algebra engine");
  if (!is_prime(p)) throw invalid_input("characteristic must be prime (or 0 for rationals)");
  return {n, p, order, FpField{p}, {}};
}

inline Ring<QField> make_ring_q(int n, OrderKind order = OrderKind::degrevlex) {
  if (2 * n + 1 > kMaxVars) throw invalid_input("too many variables for the algebra engine");
  return {n, 0, order, QField{}, {}};
}

// Ideal with a cached canonical reduced Groebner basis.  Treated as
// immutable once the cache fills; copies share the cache.
template <class F>
struct Ideal {
  Ring<F> ring;
  std::vector<Vec<F>> gens;
  mutable std::shared_ptr<const std::vector<Vec<F>>> gb_cache;

  const std::vector<Vec<F>>& groebner() const {
    if (!gb_cache) {
      Budget bud = ring.fresh_budget();
      auto gb = reduced_groebner(gens, ring.module_order(), ring.field, bud, /*rank1=*/true);
      gb_cache = std::make_shared<const std::vector<Vec<F>>>(std::move(gb));
    }
    return *gb_cache;
  }
};

// deterministic generator list: monic, sorted descending by lead, deduped
template <class F>
Ideal<F> make_ideal(const Ring<F>& ring, std::vector<Vec<F>> gens) {
  auto mo = ring.module_order();
  std::vector<Vec<F>> clean;
  for (auto& g : gens) {
    auto v = normalize_terms(std::move(g), mo, ring.field);
    if (!v.empty()) clean.push_back(make_monic(std::move(v), ring.field));
  }
  std::sort(clean.begin(), clean.end(), [&](const Vec<F>& a, const Vec<F>& b) {
    if (int k = mo.cmp(a.front().m, 0, b.front().m, 0)) return k > 0;
    return false;
  });
  clean.erase(std::unique(clean.begin(), clean.end(),
                          [](const Vec<F>& a, const Vec<F>& b) { return vec_equal(a, b); }),
              clean.end());
  return {ring, std::move(clean), nullptr};
}

// x_i y_j - x_j y_i for an edge {i, j}
template <class F>
Vec<F> edge_binomial(const Ring<F>& ring, int i, int j) {
  Vec<F> v;
  v.push_back({mono_mul(mono_var(ring.xvar(i)), mono_var(ring.yvar(j))), 0, ring.field.one()});
  v.push_back({mono_mul(mono_var(ring.xvar(j)), mono_var(ring.yvar(i))), 0,
               ring.field.neg(ring.field.one())});
  return normalize_terms(std::move(v), ring.module_order(), ring.field);
}

// J_g: one binomial per edge
template <class F>
Ideal<F> edge_ideal(const Ring<F>& ring, const Graph& g) {
  if (g.n != ring.n) throw invalid_input("graph size does not match the ring");
  std::vector<Vec<F>> gens;
  for (auto [a, b] : g.edges) gens.push_back(edge_binomial(ring, a, b));
  return make_ideal(ring, std::move(gens));
}

// P_T(g): the variables of T plus all 2x2 minors on each component of g - T
template <class F>
Ideal<F> cutset_prime(const Ring<F>& ring, const Graph& g, const VertexSet& t) {
  if (g.n != ring.n) throw invalid_input("graph size does not match the ring");
  std::vector<Vec<F>> gens;
  for (int v : t) {
    gens.push_back({{mono_var(ring.xvar(v)), 0, ring.field.one()}});
    gens.push_back({{mono_var(ring.yvar(v)), 0, ring.field.one()}});
  }
  for (const auto& comp : connected_components_minus(g, t))
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b)
        gens.push_back(edge_binomial(ring, comp[a], comp[b]));
  return make_ideal(ring, std::move(gens));
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  auto gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return make_ideal(a.ring, std::move(gens));
}

// I cap J through one auxiliary variable: eliminate t from t*I + (1-t)*J.
template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& a, const Ideal<F>& b) {
  const auto& ring = a.ring;
  const int nv = ring.nvars();
  Order eord{OrderKind::elim_last, nv + 1};
  ModuleOrder emo{eord, nullptr};
  const Mono t = mono_var(nv);
  std::vector<Vec<F>> gens;
  // terms must be re-sorted: the base order need not match the induced one
  for (const auto& f : a.gens)
    gens.push_back(normalize_terms(vec_mul_mono(f, t), emo, ring.field));
  for (const auto& f : b.gens) {
    // (1 - t) * f
    Vec<F> v = f;
    for (const auto& term : f) v.push_back({mono_mul(term.m, t), 0, ring.field.neg(term.c)});
    gens.push_back(normalize_terms(std::move(v), emo, ring.field));
  }
  Budget bud = ring.fresh_budget();
  auto gb = reduced_groebner(std::move(gens), emo, ring.field, bud, /*rank1=*/true);
  std::vector<Vec<F>> kept;
  for (auto& g : gb) {
    if (g.front().m.e[nv]) continue;  // lead contains t => the whole element does
    for (const auto& term : g)
      if (term.m.e[nv]) throw std::logic_error("elimination left a trailing auxiliary term");
    kept.push_back(std::move(g));
  }
  // The t-free elements generate the intersection and happen to be a basis
  // for the order induced on the small ring, but that induced order is not
  // the ring's own order in general, so recompute canonically.
  auto out = make_ideal(ring, std::move(kept));
  Budget bud2 = ring.fresh_budget();
  auto rgb = reduced_groebner(out.gens, ring.module_order(), ring.field, bud2, /*rank1=*/true);
  out.gens = rgb;
  out.gb_cache = std::make_shared<const std::vector<Vec<F>>>(std::move(rgb));
  return out;
}

template <class F>
Vec<F> normal_form_in(const Ideal<F>& a, const Vec<F>& f) {
  Budget bud = a.ring.fresh_budget();
  return normal_form(Vec<F>(f), a.groebner(), a.ring.module_order(), a.ring.field, bud);
}

template <class F>
bool ideal_contains(const Ideal<F>& a, const Vec<F>& f) {
  return normal_form_in(a, f).empty();
}

// reduced bases are canonical per (ideal, order), so equality is literal
template <class F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
  const auto& x = a.groebner();
  const auto& y = b.groebner();
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!vec_equal(x[k], y[k])) return false;
  return true;
}

template <class F>
bool is_zero_ideal(const Ideal<F>& a) {
  return a.groebner().empty();
}

template <class F>
bool is_unit_ideal(const Ideal<F>& a) {
  const auto& gb = a.groebner();
  return gb.size() == 1 && mono_is_one(gb.front().front().m);
}

namespace detail {

// smallest variable set meeting every support
inline int min_cover(std::vector<std::uint32_t> supports, int best_known) {
  if (supports.empty()) return 0;
  if (best_known <= 0) return 1 << 20;  // prune: cannot beat the incumbent
  // branch on the support with fewest variables
  std::uint32_t pick = supports.front();
  for (auto s : supports)
    if (std::popcount(s) < std::popcount(pick)) pick = s;
  int best = 1 << 20;
  for (std::uint32_t m = pick; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    std::vector<std::uint32_t> rest;
    for (auto s : supports)
      if (!(s >> v & 1u)) rest.push_back(s);
    int sub = min_cover(std::move(rest), std::min(best, best_known) - 1);
    best = std::min(best, 1 + sub);
  }
  return best;
}

}  // namespace detail

// Krull dimension of S/I from the initial ideal: 2n minus the smallest
// variable set meeting every lead support.  -1 for the unit ideal.
template <class F>
int krull_dim(const Ideal<F>& a) {
  if (is_unit_ideal(a)) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : a.groebner()) supports.push_back(g.front().m.mask);
  return a.ring.nvars() - detail::min_cover(std::move(supports), a.ring.nvars() + 1);
}

// depth of S/I via the length of the minimal free resolution
template <class F>
int depth_quotient(const Ideal<F>& a) {
  if (is_unit_ideal(a)) return kDepthInfinity;
  Budget bud = a.ring.fresh_budget();
  auto bt = minimal_betti(a.groebner(), a.ring.ring_order(), a.ring.field, bud);
  return a.ring.nvars() - bt.pd();
}

template <class F>
int projective_dimension(const Ideal<F>& a) {
  Budget bud = a.ring.fresh_budget();
  return minimal_betti(a.groebner(), a.ring.ring_order(), a.ring.field, bud).pd();
}

// human-readable polynomial (debugging and reports)
template <class F>
std::string poly_to_string(const Ring<F>& ring, const Vec<F>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& t : v) {
    if (!s.empty()) s += " + ";
    s += ring.field.to_string(t.c);
    for (int k = 0; k < ring.nvars(); ++k)
      for (int e = 0; e < t.m.e[k]; ++e)
        s += (k < ring.n ? "*x" + std::to_string(k + 1) : "*y" + std::to_string(k - ring.n + 1));
  }
  return s;
}

}  // namespace bei::alg
