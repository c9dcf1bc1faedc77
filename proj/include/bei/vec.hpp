#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bei/field.hpp"
#include "bei/monomial.hpp"

namespace bei::alg {

// Term of an element of a free module S^r.  Ring elements are the r = 1
// case with comp == 0 throughout.
template <class F>
struct VTerm {
  Mono m;
  std::int32_t comp = 0;
  typename F::elem c{};
};

// Terms sorted strictly descending under the governing ModuleOrder.
template <class F>
using Vec = std::vector<VTerm<F>>;

// Module order: components weighted by anchor monomials (Schreyer-style
// heuristic; any choice is a valid module order).  anchor == nullptr means
// every anchor is 1.  Ties between components break toward the smaller
// index, which makes the pair syzygy of generators i < j lead on e_i.
struct ModuleOrder {
  Order ord;
  const std::vector<Mono>* anchor = nullptr;

  int cmp(const Mono& m1, int c1, const Mono& m2, int c2) const {
    int k = anchor ? ord.cmp(mono_mul(m1, (*anchor)[c1]), mono_mul(m2, (*anchor)[c2]))
                   : ord.cmp(m1, m2);
    if (k) return k;
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return 0;
  }
};

// Sorts arbitrary terms, merges duplicates, drops zeros.
template <class F>
Vec<F> normalize_terms(Vec<F> t, const ModuleOrder& mo, const F& fld) {
  std::sort(t.begin(), t.end(), [&](const VTerm<F>& a, const VTerm<F>& b) {
    return mo.cmp(a.m, a.comp, b.m, b.comp) > 0;
  });
  Vec<F> out;
  out.reserve(t.size());
  for (auto& x : t) {
    if (!out.empty() && out.back().comp == x.comp && out.back().m == x.m) {
      out.back().c = fld.add(out.back().c, x.c);
      if (fld.is_zero(out.back().c)) out.pop_back();
    } else if (!fld.is_zero(x.c)) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

// a + c * m * b  (the workhorse of division and pivoting)
template <class F>
Vec<F> vec_axpy(const Vec<F>& a, const typename F::elem& c, const Mono& m, const Vec<F>& b,
                const ModuleOrder& mo, const F& fld) {
  Vec<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Mono bm = mono_mul(m, b[j].m);
    int k = mo.cmp(a[i].m, a[i].comp, bm, b[j].comp);
    if (k > 0) {
      out.push_back(a[i++]);
    } else if (k < 0) {
      auto cc = fld.mul(c, b[j].c);
      if (!fld.is_zero(cc)) out.push_back({bm, b[j].comp, cc});
      ++j;
    } else {
      auto cc = fld.add(a[i].c, fld.mul(c, b[j].c));
      if (!fld.is_zero(cc)) out.push_back({a[i].m, a[i].comp, cc});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    auto cc = fld.mul(c, b[j].c);
    if (!fld.is_zero(cc)) out.push_back({mono_mul(m, b[j].m), b[j].comp, cc});
  }
  return out;
}

template <class F>
Vec<F> vec_scale(Vec<F> a, const typename F::elem& c, const F& fld) {
  for (auto& t : a) t.c = fld.mul(t.c, c);
  return a;
}

template <class F>
Vec<F> vec_mul_mono(Vec<F> a, const Mono& m) {
  for (auto& t : a) t.m = mono_mul(t.m, m);
  return a;
}

// rank-1 product
template <class F>
Vec<F> poly_mul(const Vec<F>& a, const Vec<F>& b, const ModuleOrder& mo, const F& fld) {
  Vec<F> out;
  for (const auto& t : a) out = vec_axpy(out, t.c, t.m, b, mo, fld);
  return out;
}

template <class F>
Vec<F> make_monic(Vec<F> v, const F& fld) {
  if (v.empty()) return v;
  auto inv = fld.inv(v.front().c);
  for (auto& t : v) t.c = fld.mul(t.c, inv);
  return v;
}

// true iff all terms share one total degree (ring-level homogeneity)
template <class F>
bool vec_homogeneous(const Vec<F>& v) {
  for (const auto& t : v)
    if (t.m.deg != v.front().m.deg) return false;
  return true;
}

template <class F>
bool vec_equal(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].comp != b[i].comp || !(a[i].m == b[i].m) || !(a[i].c == b[i].c)) return false;
  return true;
}

}  // namespace bei::alg
