#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "bei/cutsets.hpp"
#include "bei/filtration.hpp"
#include "bei/graph.hpp"
#include "bei/graph_io.hpp"
#include "bei/ideal.hpp"

namespace bei {

enum class Status { SCM, NotSCM, Unknown };

const char* status_name(Status s);

// one certified filtration slice: the quotient of dimension `dim` is
// Cohen-Macaulay iff the ideal at `level` = dim-1 has depth exactly `dim`
struct OracleLevel {
  int dim = 0;
  int level = 0;
  int depth = 0;
  bool ok = false;
};

struct Verdict {
  Status status = Status::Unknown;
  std::string rule;  // which decision produced the status
  std::map<std::string, std::string> params;
  std::vector<OracleLevel> transcript;  // present for oracle verdicts
  std::vector<Verdict> parts;           // present for recursive rules
  std::string fingerprint;              // graph6 of the graph this verdict judges
  std::string note;                     // reason when status == Unknown
};

struct ClassifyOptions {
  int max_cutset_n = 20;  // rules needing cutset enumeration are skipped above this
};

// Rule-based decision, cheapest and most specific first.  Decisive verdicts
// cite the rule and its parameters; recursion (components, decompositions,
// cones) fills `parts`.  Pure graph combinatorics: no field involved.
Verdict classify(const Graph& g, const ClassifyOptions& opt = {});

// SCM(G) <=> every part SCM; NotSCM dominates, Unknown otherwise
Status combine_all(const std::vector<Verdict>& parts);

// depth S/J_G = n - |T| + 2 for graphs whose only nonempty cutset is T
int depth_formula_onecut(const Graph& g, int max_cutset_n = 20);

struct OracleOptions {
  int max_vars = 16;            // refuse rings with more than this many variables
  bool radical_shortcut = true; // bottom slice is the (radical) ideal itself
  int max_cutset_n = 20;
};

struct IdentityLevelResult {
  int i = 0;
  bool holds = false;
};

struct IdentityReport {
  int vertex = 0;
  int max_i = 0;                           // window checked is 0..max_i
  std::vector<IdentityLevelResult> levels;
  int first_failure = -1;                  // -1 when the identity holds throughout
  bool holds = false;
  bool unknown = false;                    // budget ran out before a verdict
  std::string note;
};

namespace detail {

// filtration slice that tolerates i past the top dimension (empty slice)
template <class F>
alg::Ideal<F> slice_ideal(const alg::Ring<F>& ring, const IdealScene& s,
                          const std::vector<CutsetProfile>& ps, int i, bool shortcut) {
  if (i < -1) i = -1;
  if (i > spectrum(ps).krull_dim) return alg::unit_ideal(ring);
  return alg::materialize_filtration(ring, s, ps, i, shortcut);
}

// memoizes slices per retained-profile signature: consecutive levels often
// retain the same primes, and intersections are the expensive part
template <class F>
struct SliceCache {
  const alg::Ring<F>& ring;
  IdealScene scene;
  std::vector<CutsetProfile> ps;
  bool shortcut;
  std::map<std::vector<int>, alg::Ideal<F>> memo;

  SliceCache(const alg::Ring<F>& r, IdealScene s, int max_cutset_n, bool sc)
      : ring(r), scene(std::move(s)), ps(scene_profiles(scene, max_cutset_n)), shortcut(sc) {}

  int krull() const { return spectrum(ps).krull_dim; }

  const alg::Ideal<F>& at(int i) {
    std::vector<int> key;
    for (int k = 0; k < static_cast<int>(ps.size()); ++k)
      if (ps[k].prime_dim > i) key.push_back(k);
    auto it = memo.find(key);
    if (it == memo.end())
      it = memo.emplace(key, slice_ideal(ring, scene, ps, i, shortcut)).first;
    return it->second;
  }
};

}  // namespace detail

// Certifies SCM through the dimension filtration: for every distinct minimal
// prime dimension d, the slice ideal one below d must have depth exactly d.
// The transcript records every (d, depth) pair even after a failure.
template <class F>
Verdict oracle_scm(const Graph& g, const alg::Ring<F>& ring, const OracleOptions& opt = {}) {
  if (!is_connected(g)) throw invalid_input("oracle expects a connected graph");
  if (g.n != ring.n) throw invalid_input("graph size does not match the ring");
  Verdict v;
  v.rule = "oracle";
  v.fingerprint = write_graph6(g);
  if (2 * g.n > opt.max_vars) {
    v.status = Status::Unknown;
    v.note = "resource-limit: " + std::to_string(2 * g.n) + " variables exceed the oracle budget of " +
             std::to_string(opt.max_vars);
    return v;
  }
  try {
    detail::SliceCache<F> cache(ring, IdealScene{g, {}}, opt.max_cutset_n, opt.radical_shortcut);
    auto sp = spectrum(cache.ps);
    bool all_ok = true;
    for (int d : sp.dims) {
      const auto& slice = cache.at(d - 1);
      int depth = alg::depth_quotient(slice);
      bool ok = depth == d;
      all_ok = all_ok && ok;
      v.transcript.push_back({d, d - 1, depth, ok});
    }
    v.status = all_ok ? Status::SCM : Status::NotSCM;
    v.params["dims"] = [&] {
      std::string s;
      for (int d : sp.dims) s += (s.empty() ? "" : ",") + std::to_string(d);
      return s;
    }();
  } catch (const resource_limit& e) {
    v.status = Status::Unknown;
    v.transcript.clear();
    v.note = std::string("resource-limit: ") + e.what();
  } catch (const size_limit& e) {
    v.status = Status::Unknown;
    v.transcript.clear();
    v.note = std::string("size-limit: ") + e.what();
  }
  return v;
}

// Checks, at a cutpoint v and for every level i in the window, whether the
// slice of the clique-completed graph plus the slice of the ideal with v
// deleted together equal the slice one level down of the completed graph
// with v deleted.  Failures are reported with the smallest failing i.
template <class F>
IdentityReport check_filtration_identity(const Graph& g, int v, const alg::Ring<F>& ring,
                                         const OracleOptions& opt = {}) {
  if (!is_connected(g)) throw invalid_input("identity check expects a connected graph");
  if (g.n != ring.n) throw invalid_input("graph size does not match the ring");
  auto bd = blocks_and_cutpoints(g);
  if (!std::count(bd.cutpoints.begin(), bd.cutpoints.end(), v))
    throw invalid_input("identity check expects a cutpoint");
  IdentityReport rep;
  rep.vertex = v;
  if (2 * g.n > opt.max_vars) {
    rep.unknown = true;
    rep.note = "resource-limit: " + std::to_string(2 * g.n) + " variables exceed the oracle budget of " +
               std::to_string(opt.max_vars);
    return rep;
  }
  auto [completed, dropped] = relative_graphs(g, v);
  try {
    detail::SliceCache<F> full(ring, IdealScene{completed, {}}, opt.max_cutset_n,
                               opt.radical_shortcut);
    detail::SliceCache<F> minus(ring, IdealScene{dropped, {v}}, opt.max_cutset_n,
                                opt.radical_shortcut);
    Graph completed_minus = remove_vertex_keep_labels(completed, v);
    detail::SliceCache<F> target(ring, IdealScene{completed_minus, {v}}, opt.max_cutset_n,
                                 opt.radical_shortcut);
    rep.max_i = std::max({full.krull(), minus.krull(), target.krull() + 1});
    rep.holds = true;
    for (int i = 0; i <= rep.max_i; ++i) {
      auto lhs = alg::ideal_sum(full.at(i), minus.at(i));
      bool eq = alg::ideal_equal(lhs, target.at(i - 1));
      rep.levels.push_back({i, eq});
      if (!eq && rep.first_failure < 0) {
        rep.first_failure = i;
        rep.holds = false;
      }
    }
  } catch (const resource_limit& e) {
    rep.unknown = true;
    rep.holds = false;
    rep.note = std::string("resource-limit: ") + e.what();
  }
  return rep;
}

}  // namespace bei
