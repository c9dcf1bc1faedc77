#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "bei/groebner.hpp"

namespace bei::alg {

// Generating set of the syzygy module of gb (which must be a Groebner basis
// in its ambient order): every same-component pair contributes the relation
// recorded while its s-vector reduces to zero.  Columns live in S^|gb| and
// are interreduced on the fly under the Schreyer-style order induced by
// flat_anchor (the anchor monomials of the new components), which discards
// most of the redundant pair relations immediately.
template <class F>
std::vector<Vec<F>> syzygy_generators(const std::vector<Vec<F>>& gb, const ModuleOrder& ambient,
                                      const std::vector<Mono>& flat_anchor, const F& fld,
                                      Budget& bud) {
  ModuleOrder syzmo{ambient.ord, &flat_anchor};
  struct P {
    int i, j;
    Mono key;
  };
  std::vector<P> todo;
  for (int i = 0; i < static_cast<int>(gb.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(gb.size()); ++j) {
      if (gb[i].front().comp != gb[j].front().comp) continue;
      Mono l = mono_lcm(gb[i].front().m, gb[j].front().m);
      todo.push_back({i, j, ambient.anchor ? mono_mul(l, (*ambient.anchor)[gb[i].front().comp]) : l});
    }
  std::sort(todo.begin(), todo.end(),
            [&](const P& a, const P& b) { return ambient.ord.cmp(a.key, b.key) < 0; });

  std::vector<Vec<F>> kept;
  for (const auto& p : todo) {
    VTerm<F> ui, uj;
    Vec<F> s = s_vector(gb[p.i], gb[p.j], ambient, fld, bud, &ui, &uj);
    Vec<F> quots;
    Vec<F> rem = normal_form(std::move(s), gb, ambient, fld, bud, &quots);
    if (!rem.empty()) throw std::logic_error("s-vector of a Groebner basis did not reduce to zero");
    Vec<F> col;
    col.reserve(quots.size() + 2);
    col.push_back({ui.m, p.i, ui.c});
    col.push_back({uj.m, p.j, uj.c});
    for (auto& q : quots) col.push_back({q.m, q.comp, fld.neg(q.c)});
    col = normalize_terms(std::move(col), syzmo, fld);
    col = normal_form(std::move(col), kept, syzmo, fld, bud);
    if (!col.empty()) kept.push_back(make_monic(std::move(col), fld));
  }
  return kept;
}

// Removes the split-exact part of a presentation: a constant entry in a
// column certifies that generator (row) as redundant.  Columns must be
// homogeneous, so a constant entry is the whole entry of its row.  Rows and
// columns are eliminated in place; component indices are renumbered to the
// surviving rows.  Returns the surviving row indices in ascending order.
template <class F>
std::vector<int> prune_units(std::vector<Vec<F>>& cols, int nrows, const ModuleOrder& mo,
                             const F& fld, Budget& bud) {
  std::vector<bool> row_dead(nrows, false);
  std::vector<bool> col_dead(cols.size(), false);
  while (true) {
    int pj = -1, pr = -1;
    typename F::elem pc{};
    for (std::size_t j = 0; j < cols.size() && pj < 0; ++j) {
      if (col_dead[j]) continue;
      for (const auto& t : cols[j]) {
        if (mono_is_one(t.m)) {
          pj = static_cast<int>(j);
          pr = t.comp;
          pc = t.c;
          break;
        }
      }
    }
    if (pj < 0) break;
    // homogeneity: the pivot column may not carry other terms in this row
    for (const auto& t : cols[pj])
      if (t.comp == pr && !mono_is_one(t.m))
        throw std::logic_error("non-constant entry sharing a pivot row (input not homogeneous?)");
    auto pinv = fld.inv(pc);
    for (std::size_t j2 = 0; j2 < cols.size(); ++j2) {
      if (col_dead[j2] || j2 == static_cast<std::size_t>(pj)) continue;
      while (true) {
        const VTerm<F>* hit = nullptr;
        for (const auto& t : cols[j2])
          if (t.comp == pr) {
            hit = &t;
            break;
          }
        if (!hit) break;
        auto cc = fld.neg(fld.mul(hit->c, pinv));
        Mono hm = hit->m;
        bud.charge(static_cast<long long>(cols[j2].size() + cols[pj].size()));
        cols[j2] = vec_axpy(cols[j2], cc, hm, cols[pj], mo, fld);
      }
    }
    col_dead[pj] = true;
    cols[pj].clear();
    row_dead[pr] = true;
  }
  std::vector<int> alive;
  std::vector<int> remap(nrows, -1);
  for (int r = 0; r < nrows; ++r)
    if (!row_dead[r]) {
      remap[r] = static_cast<int>(alive.size());
      alive.push_back(r);
    }
  std::vector<Vec<F>> out;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (col_dead[j] || cols[j].empty()) continue;
    for (auto& t : cols[j]) {
      assert(remap[t.comp] >= 0);
      t.comp = remap[t.comp];
    }
    out.push_back(std::move(cols[j]));
  }
  cols = std::move(out);
  return alive;
}

struct BettiTable {
  std::vector<int> ranks;  // ranks[k] = rank of F_k in the minimal resolution of S/I
  int pd() const { return static_cast<int>(ranks.size()) - 1; }
};

// Minimal free resolution ranks of S/I, built level by level: Groebner basis
// of the current syzygy module, pair syzygies, then pruning of unit entries
// (so each recorded rank is the minimal generator count of that syzygy
// module).  Input: the reduced Groebner basis of I; the zero ideal yields
// {1}.  The unit ideal is not a valid input.
template <class F>
BettiTable minimal_betti(const std::vector<Vec<F>>& ideal_gb, const Order& ord, const F& fld,
                         Budget& bud) {
  BettiTable bt;
  bt.ranks.push_back(1);
  if (ideal_gb.empty()) return bt;  // S/0 = S is free
  if (mono_is_one(ideal_gb.front().front().m))
    throw std::invalid_argument("minimal_betti: unit ideal");
  for (const auto& g : ideal_gb)
    if (!vec_homogeneous(g)) throw std::invalid_argument("minimal_betti: input not homogeneous");

  ModuleOrder ambient{ord, nullptr};
  std::vector<Vec<F>> gb = ideal_gb;
  std::vector<Mono> anchors;
  for (const auto& g : gb) anchors.push_back(g.front().m);
  std::vector<Vec<F>> cols = syzygy_generators(gb, ambient, anchors, fld, bud);
  bt.ranks.push_back(static_cast<int>(gb.size()));

  int level = 1;
  while (true) {
    ModuleOrder next_mo{ord, &anchors};
    std::vector<int> alive = prune_units(cols, bt.ranks[level], next_mo, fld, bud);
    bt.ranks[level] = static_cast<int>(alive.size());
    if (bt.ranks[level] == 0) throw std::logic_error("syzygy module lost all generators");
    std::vector<Mono> kept_anchors;
    for (int r : alive) kept_anchors.push_back(anchors[r]);
    anchors = std::move(kept_anchors);
    if (cols.empty()) break;  // the previous module was free: resolution ends here
    if (level > ord.nvars + 1) throw std::logic_error("resolution exceeds the syzygy bound");

    ModuleOrder mo{ord, &anchors};
    gb = reduced_groebner(std::move(cols), mo, fld, bud, /*rank1=*/false);
    std::vector<Mono> next_anchors;
    for (const auto& g : gb)
      next_anchors.push_back(mono_mul(g.front().m, anchors[g.front().comp]));
    cols = syzygy_generators(gb, mo, next_anchors, fld, bud);
    bt.ranks.push_back(static_cast<int>(gb.size()));
    anchors = std::move(next_anchors);
    ++level;
  }
  return bt;
}

inline constexpr int kDepthInfinity = 1 << 29;

}  // namespace bei::alg
