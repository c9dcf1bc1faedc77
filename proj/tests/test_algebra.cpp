#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bei/filtration.hpp"
#include "bei/ideal.hpp"
#include "doctest.h"
#include "naive.hpp"

using namespace bei;
using namespace bei::alg;

namespace {

using Fp = FpField;
using VF = Vec<Fp>;

Mono rand_mono(std::mt19937& rng, int nv, int maxe) {
  Mono m = mono_one();
  for (int i = 0; i < nv; ++i) {
    int e = static_cast<int>(rng() % (maxe + 1));
    if (e) m = mono_mul(m, mono_var(i, e));
  }
  return m;
}

VF rand_poly(std::mt19937& rng, const Ring<Fp>& ring, int terms, int maxe) {
  VF v;
  for (int t = 0; t < terms; ++t)
    v.push_back({rand_mono(rng, ring.nvars(), maxe), 0,
                 ring.field.from_int(1 + static_cast<long long>(rng() % 50))});
  return normalize_terms(std::move(v), ring.module_order(), ring.field);
}

// fold the cutset primes of g into one intersection
Ideal<Fp> intersect_all_primes(const Ring<Fp>& ring, const Graph& g) {
  return intersect_primes(ring, IdealScene{g, {}}, profiles(g));
}

}  // namespace

TEST_CASE("term orders") {
  Order grevlex{OrderKind::degrevlex, 4};
  auto x = [](int i, int e = 1) { return mono_var(i, e); };

  // degree dominates
  CHECK(grevlex.cmp(x(0, 2), x(1)) > 0);
  // variable 0 is the largest
  CHECK(grevlex.cmp(x(0), x(1)) > 0);
  CHECK(grevlex.cmp(x(2), x(3)) > 0);
  // classic grevlex tie: among equal degrees the smaller last exponent wins
  CHECK(grevlex.cmp(x(1, 2), mono_mul(x(0), x(2))) > 0);
  CHECK(grevlex.cmp(mono_mul(x(0), x(1)), x(1, 2)) > 0);

  Order lex{OrderKind::lex, 4};
  CHECK(lex.cmp(x(0), x(1, 5)) > 0);
  CHECK(lex.cmp(mono_mul(x(0), x(3)), mono_mul(x(0), x(2))) < 0);

  Order elim{OrderKind::elim_last, 3};
  // the last variable dominates everything else
  CHECK(elim.cmp(x(2), x(0, 9)) > 0);
  CHECK(elim.cmp(mono_mul(x(2), x(1)), x(2)) > 0);
  // without it, degrevlex on the rest
  CHECK(elim.cmp(x(0), x(1)) > 0);

  CHECK(order_name(OrderKind::degrevlex) == "degrevlex");
  CHECK(order_name(OrderKind::lex) == "lex");

  // multiplicativity: a < b implies ac < bc
  std::mt19937 rng(3);
  for (const auto& ord : {grevlex, lex}) {
    for (int rep = 0; rep < 400; ++rep) {
      Mono a = rand_mono(rng, 4, 3), b = rand_mono(rng, 4, 3), c = rand_mono(rng, 4, 3);
      int k = ord.cmp(a, b);
      CHECK(ord.cmp(mono_mul(a, c), mono_mul(b, c)) == k);
      if (!mono_is_one(c)) CHECK(ord.cmp(mono_mul(a, c), a) > 0);
    }
  }
}

TEST_CASE("monomial arithmetic") {
  Mono a = mono_mul(mono_var(0, 2), mono_var(3));
  Mono b = mono_var(0);
  CHECK(mono_divides(b, a));
  CHECK(!mono_divides(a, b));
  Mono q = mono_div(a, b);
  CHECK(q == mono_mul(mono_var(0), mono_var(3)));
  CHECK(mono_lcm(a, mono_var(3, 2)) == mono_mul(mono_var(0, 2), mono_var(3, 2)));
  CHECK(mono_coprime(mono_var(1), mono_var(2)));
  CHECK(!mono_coprime(a, b));
  CHECK(mono_mul(a, b).deg == 4);
  CHECK_THROWS_AS(mono_mul(mono_var(0, 250), mono_var(0, 250)), resource_limit);
}

TEST_CASE("prime field arithmetic") {
  FpField f{13};
  for (long long a = 1; a < 13; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.add(a, f.neg(a)) == 0);
  }
  CHECK(f.from_int(-1) == 12);
  CHECK(f.from_int(27) == 1);
  CHECK(is_prime(32003));
  CHECK(!is_prime(32001));
  CHECK(!is_prime(1));
}

TEST_CASE("rational field with a coefficient bit budget") {
  QField q;
  auto a = q.div(q.from_int(22), q.from_int(7));
  CHECK(q.to_string(a) == "22/7");
  CHECK(q.is_zero(q.sub(a, a)));
  q.observe(a);  // small, fine

  QField tiny{16};
  QField::elem big = 1;
  for (int i = 0; i < 5; ++i) big *= 1000000;
  CHECK_THROWS_AS(tiny.observe(big), resource_limit);
}

TEST_CASE("term vectors") {
  Ring<Fp> ring = make_ring_fp(2, 13);
  auto mo = ring.module_order();
  const Fp& f = ring.field;

  // merge and cancel
  VF v{{mono_var(0), 0, 5}, {mono_var(1), 0, 1}, {mono_var(0), 0, 8}};
  v = normalize_terms(std::move(v), mo, f);
  REQUIRE(v.size() == 1);
  CHECK(v[0].m == mono_var(1));

  std::mt19937 rng(9);
  for (int rep = 0; rep < 100; ++rep) {
    VF a = rand_poly(rng, ring, 5, 2), b = rand_poly(rng, ring, 5, 2);
    // axpy against explicit term-by-term construction
    Mono m = rand_mono(rng, ring.nvars(), 2);
    VF direct = a;
    for (const auto& t : b) direct.push_back({mono_mul(m, t.m), 0, f.mul(7, t.c)});
    direct = normalize_terms(std::move(direct), mo, f);
    CHECK(vec_equal(vec_axpy(a, f.from_int(7), m, b, mo, f), direct));
    // product commutes
    CHECK(vec_equal(poly_mul(a, b, mo, f), poly_mul(b, a, mo, f)));
  }
}

TEST_CASE("groebner bases of edge ideals") {
  // a lone binomial is its own reduced basis, normalized to a monic lead
  Ring<Fp> r2 = make_ring_fp(2);
  auto k2 = edge_ideal(r2, naive::make_complete(2));
  REQUIRE(k2.groebner().size() == 1);
  CHECK(vec_equal(k2.groebner()[0], make_monic(edge_binomial(r2, 1, 2), r2.field)));

  // the three 2x2 minors on a triangle already form a reduced basis
  Ring<Fp> r3 = make_ring_fp(3);
  auto k3 = edge_ideal(r3, naive::make_complete(3));
  CHECK(k3.groebner().size() == 3);
  for (auto [a, b] : naive::make_complete(3).edges)
    CHECK(ideal_contains(k3, edge_binomial(r3, a, b)));

  // membership goldens on the square: the long diagonal minor is not inside
  Ring<Fp> r4 = make_ring_fp(4);
  auto c4 = edge_ideal(r4, naive::make_cycle(4));
  CHECK(ideal_contains(c4, edge_binomial(r4, 1, 2)));
  CHECK(!ideal_contains(c4, edge_binomial(r4, 1, 3)));
  VF x1{{mono_var(r4.xvar(1)), 0, 1}};
  CHECK(!ideal_contains(c4, x1));

  // path of length two: the end-to-end minor is not a member either
  auto p3 = edge_ideal(r3, naive::make_path(3));
  CHECK(!ideal_contains(p3, edge_binomial(r3, 1, 3)));
}

TEST_CASE("buchberger fixpoint and canonical reduced bases") {
  std::mt19937 rng(17);
  for (OrderKind ord : {OrderKind::degrevlex, OrderKind::lex}) {
    for (int rep = 0; rep < 12; ++rep) {
      Graph g = naive::random_connected(rng, 3 + rep % 3, 0.6);
      Ring<Fp> ring = make_ring_fp(g.n, kDefaultCharacteristic, ord);
      auto ideal = edge_ideal(ring, g);
      const auto& gb = ideal.groebner();
      auto mo = ring.module_order();
      Budget bud = ring.fresh_budget();

      // every s-vector reduces to zero and every generator is a member
      for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
          auto s = s_vector(gb[i], gb[j], mo, ring.field, bud);
          CHECK(normal_form(std::move(s), gb, mo, ring.field, bud).empty());
        }
      for (const auto& gen : ideal.gens) CHECK(ideal_contains(ideal, gen));

      // interreduced: no lead divides another lead, tails irreducible
      for (std::size_t i = 0; i < gb.size(); ++i) {
        CHECK(gb[i].front().c == ring.field.one());
        for (std::size_t j = 0; j < gb.size(); ++j) {
          if (i == j) continue;
          CHECK(!mono_divides(gb[j].front().m, gb[i].front().m));
          for (std::size_t t = 1; t < gb[i].size(); ++t)
            CHECK(!mono_divides(gb[j].front().m, gb[i][t].m));
        }
      }

      // generator order cannot influence the reduced basis
      auto shuffled = ideal.gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      std::reverse(shuffled.begin(), shuffled.end());
      auto again = make_ideal(ring, std::move(shuffled));
      CHECK(ideal_equal(ideal, again));
    }
  }
}

TEST_CASE("division records reconstruct the input") {
  Ring<Fp> ring = make_ring_fp(3);
  auto mo = ring.module_order();
  auto ideal = edge_ideal(ring, naive::make_complete(3));
  const auto& gb = ideal.groebner();
  std::mt19937 rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    VF v = rand_poly(rng, ring, 6, 2);
    Budget bud = ring.fresh_budget();
    VF quots;
    VF rem = normal_form(VF(v), gb, mo, ring.field, bud, &quots);
    VF rebuilt = rem;
    for (const auto& q : quots)
      rebuilt = vec_axpy(rebuilt, q.c, q.m, gb[q.comp], mo, ring.field);
    CHECK(vec_equal(rebuilt, v));
    // remainder is fully reduced
    for (const auto& t : rem)
      for (const auto& g : gb) CHECK(!mono_divides(g.front().m, t.m));
  }
}

TEST_CASE("ideal sum, intersection, and equality") {
  Ring<Fp> r1 = make_ring_fp(1);
  VF x{{mono_var(0), 0, 1}};
  VF y{{mono_var(1), 0, 1}};
  auto ix = make_ideal(r1, {x});
  auto iy = make_ideal(r1, {y});
  auto meet = ideal_intersect(ix, iy);
  REQUIRE(meet.groebner().size() == 1);
  CHECK(meet.groebner()[0][0].m == mono_mul(mono_var(0), mono_var(1)));

  auto join = ideal_sum(ix, iy);
  CHECK(krull_dim(join) == 0);
  CHECK(ideal_contains(join, x));
  CHECK(ideal_contains(join, y));

  // intersections are contained in both sides; products land inside
  std::mt19937 rng(23);
  for (int rep = 0; rep < 8; ++rep) {
    Graph g = naive::random_connected(rng, 4, 0.5);
    Ring<Fp> ring = make_ring_fp(4);
    auto cuts = enumerate_cutsets(g);
    auto a = cutset_prime(ring, g, cuts.back());
    auto b = cutset_prime(ring, g, cuts.front());
    auto m = ideal_intersect(a, b);
    for (const auto& f : m.groebner()) {
      CHECK(ideal_contains(a, f));
      CHECK(ideal_contains(b, f));
    }
    auto mo = ring.module_order();
    for (const auto& fa : a.gens)
      for (const auto& fb : b.gens)
        CHECK(ideal_contains(m, poly_mul(fa, fb, mo, ring.field)));
  }
}

TEST_CASE("edge ideals are the intersection of their cutset primes") {
  // square, both orders
  for (OrderKind ord : {OrderKind::degrevlex, OrderKind::lex}) {
    Ring<Fp> ring = make_ring_fp(4, kDefaultCharacteristic, ord);
    Graph g = naive::make_cycle(4);
    CHECK(ideal_equal(edge_ideal(ring, g), intersect_all_primes(ring, g)));
  }
  // two-center tree: four primes in twelve variables
  {
    Graph g = naive::tree_two_centers();
    Ring<Fp> ring = make_ring_fp(g.n);
    CHECK(ideal_equal(edge_ideal(ring, g), intersect_all_primes(ring, g)));
  }
  // and the radical shortcut of the slice machinery agrees with the fold
  {
    Graph g = naive::claw_cone();
    Ring<Fp> ring = make_ring_fp(g.n);
    auto ps = profiles(g);
    auto direct = materialize_filtration(ring, {g, {}}, ps, -1, true);
    auto folded = materialize_filtration(ring, {g, {}}, ps, -1, false);
    CHECK(ideal_equal(direct, folded));
  }
}

TEST_CASE("krull dimension") {
  Ring<Fp> r2 = make_ring_fp(2);
  CHECK(krull_dim(edge_ideal(r2, naive::make_complete(2))) == 3);
  // no edges: the zero ideal has the full ring dimension
  auto zero = edge_ideal(r2, make_graph(2, {}));
  CHECK(is_zero_ideal(zero));
  CHECK(krull_dim(zero) == 4);
  CHECK(krull_dim(unit_ideal(r2)) == -1);
  CHECK(is_unit_ideal(unit_ideal(r2)));

  Ring<Fp> r4 = make_ring_fp(4);
  CHECK(krull_dim(edge_ideal(r4, naive::make_cycle(4))) == 5);
  Ring<Fp> r5 = make_ring_fp(5);
  CHECK(krull_dim(edge_ideal(r5, naive::make_complete(5))) == 6);
  CHECK(krull_dim(edge_ideal(r5, naive::claw_cone())) == 6);
  Ring<Fp> r6 = make_ring_fp(6);
  CHECK(krull_dim(edge_ideal(r6, naive::tree_two_centers())) == 8);

  // one principal binomial cuts dimension by one
  VF xy{{mono_mul(mono_var(0), mono_var(1)), 0, 1}};
  CHECK(krull_dim(make_ideal(r2, {xy})) == 3);
}

TEST_CASE("combinatorial and algebraic dimensions agree on small graphs") {
  for (int n = 2; n <= 5; ++n) {
    Ring<Fp> ring = make_ring_fp(n);
    for (const auto& g : naive::all_connected_graphs(n)) {
      auto sp = spectrum(profiles(g));
      CHECK(krull_dim(edge_ideal(ring, g)) == sp.krull_dim);
    }
  }
  // spot check over the rationals
  Ring<QField> rq = make_ring_q(4);
  CHECK(krull_dim(edge_ideal(rq, naive::make_cycle(4))) == 5);
}

TEST_CASE("budget exhaustion raises resource_limit") {
  Ring<Fp> ring = make_ring_fp(4);
  ring.budget.max_steps = 5;
  auto ideal = edge_ideal(ring, naive::make_cycle(4));
  CHECK_THROWS_AS(ideal.groebner(), resource_limit);
}

TEST_CASE("ring construction guards") {
  CHECK_THROWS_AS(make_ring_fp(12), invalid_input);   // 25 variables with the eliminator
  CHECK_THROWS_AS(make_ring_fp(3, 32001), invalid_input);
  CHECK_THROWS_AS(make_ring_q(12), invalid_input);
  Ring<Fp> ring = make_ring_fp(11);
  CHECK(ring.nvars() == 22);
  CHECK(ring.xvar(1) == 0);
  CHECK(ring.yvar(1) == 11);
}
