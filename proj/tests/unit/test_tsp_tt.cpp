#include <random>

#include "doctest.h"
#include "rotaplex/linalg.hpp"
#include "rotaplex/verify.hpp"

using namespace rotaplex;

namespace {

RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

RationalVector cycle5(const EdgeIndex& E) {
  RationalVector x = zero_vector(E.size());
  for (std::size_t i = 0; i < 5; ++i) x[E.index(i, (i + 1) % 5)] = 1;
  return x;
}

RationalVector a_prime(const EdgeIndex& E) { return ratio(2, 5) * cycle5(E) - ratio(1, 5) * ones(E.size()); }

// the edge of C opposite to u: joins the two vertices at cycle distance 2 from u
std::size_t far_edge(const EdgeIndex& E, std::size_t u) { return E.index((u + 2) % 5, (u + 3) % 5); }

const RotationContext& tsp5() {
  static const RotationContext ctx = tsp_context(5);
  return ctx;
}

}  // namespace

TEST_CASE("triangle slack") {
  EdgeIndex E(5);
  RootedTriangle t = make_triangle(E, 0, E.index(2, 3));
  CHECK(triangle_slack(E, zero_vector(10), t) == 0);
  RationalVector chi_vw = zero_vector(10);
  chi_vw[E.index(2, 3)] = 1;
  CHECK(triangle_slack(E, chi_vw, t) == -1);
  CHECK(triangle_slack(E, cycle5(E), t) == -1);  // edges 20, 03 are chords, 23 is on C
  CHECK_THROWS(make_triangle(E, 2, E.index(2, 3)));
}

TEST_CASE("metric and TT") {
  EdgeIndex E(5);
  CHECK(is_metric(E, ones(10)));
  CHECK_FALSE(is_TT(E, ones(10)));
  CHECK(is_TT(E, cycle5(E) + ones(10)));
  CHECK_FALSE(is_metric(E, cycle5(E)));
}

TEST_CASE("lambda and theta") {
  DegreeStructure ds(5);
  const EdgeIndex& E = ds.E;
  CHECK(lambda(E, cycle5(E) + ones(10)) == zero_vector(5));
  CHECK(lambda(E, cycle5(E)) == RationalVector(5, Rational(-1)));
  CHECK(lambda(E, a_prime(E)) == RationalVector(5, ratio(-3, 5)));

  RationalVector tt = cycle5(E) + ones(10);
  CHECK(theta(ds, tt) == tt);
  CHECK(theta(ds, cycle5(E)) == cycle5(E) + ones(10));

  // coset invariance
  std::minstd_rand rng(11);
  for (int s = 0; s < 50; ++s) {
    RationalVector a(10), xi(5);
    for (auto& x : a) x = ratio(static_cast<long>(rng() % 41) - 20, static_cast<unsigned long>(1 + rng() % 7));
    for (auto& x : xi) x = ratio(static_cast<long>(rng() % 41) - 20, static_cast<unsigned long>(1 + rng() % 5));
    CHECK(theta(ds, a + ds.transpose_apply(xi)) == theta(ds, a));
  }
}

TEST_CASE("gamma, c and phi") {
  DegreeStructure ds(5);
  const EdgeIndex& E = ds.E;
  auto [g0, c0] = gamma_c(ds, zero_vector(10));
  CHECK(g0 == -1);
  CHECK(c0 == zero_vector(10));

  RationalVector a = a_prime(E);
  auto [g, c] = gamma_c(ds, a);
  CHECK(g == 2);
  CHECK(c == ratio(2, 5) * (cycle5(E) + ones(10)));
  CHECK(phi(ds, a) == ratio(1, 5) * (cycle5(E) + ones(10)));

  // positive homogeneity of a -> a - D^T lambda(a) and a -> a.z + 1.lambda(a)
  for (Rational eta : {ratio(1, 3), Rational(2), ratio(7, 2)}) {
    RationalVector b = eta * a;
    CHECK(b - ds.transpose_apply(lambda(E, b)) == eta * (a - ds.transpose_apply(lambda(E, a))));
    Rational h2b = dot(b, ds.z), h2a = dot(a, ds.z);
    for (const auto& l : lambda(E, b)) h2b += l;
    for (const auto& l : lambda(E, a)) h2a += l;
    CHECK(h2b == eta * h2a);
  }

  // (chi^C + 1).chi^C' = |C cap C'| + 5 >= 5 on all tours
  for (const auto& t : hamiltonian_cycles(5)) {
    Rational common = dot(cycle5(E), t);
    CHECK(dot(cycle5(E) + ones(10), t) == common + 5);
    CHECK(common >= 0);
  }

  CHECK_THROWS(gamma_c(ds, ones(10)));  // not in ker D
  CHECK_THROWS(phi(ds, zero_vector(10)));
}

TEST_CASE("phi is injective on sampled admissible points") {
  const RotationContext& ctx = tsp5();
  DegreeStructure ds(5);
  FaceLattice del = del_N(ctx);
  auto pts = sample_points(ctx, del, 60, 5);
  std::set<std::string> seen;
  std::size_t distinct = 0;
  std::set<std::string> inputs;
  for (const auto& a : pts) {
    if (!inputs.insert(to_string(a)).second) continue;
    ++distinct;
    seen.insert(to_string(phi(ds, a)));
  }
  CHECK(seen.size() == distinct);
}

TEST_CASE("E_u signatures") {
  EdgeIndex E(5);
  EuSignature zero = E_u_signature(E, zero_vector(10));
  for (std::size_t u = 0; u < 5; ++u) CHECK(zero[u].size() == 6);  // binom(4,2)

  EuSignature s = E_u_signature(E, a_prime(E));
  for (std::size_t u = 0; u < 5; ++u) CHECK(s[u] == std::vector<std::size_t>{far_edge(E, u)});
  // root 0: the six slacks of a'
  RationalVector a = a_prime(E);
  std::vector<Rational> slacks;
  for (std::size_t e = 0; e < 10; ++e) {
    auto [v, w] = E.pair(e);
    if (v != 0 && w != 0) slacks.push_back(triangle_slack(E, a, {0, e}));
  }
  std::sort(slacks.begin(), slacks.end());
  CHECK(slacks[0] == ratio(-3, 5));
  CHECK(slacks[1] > slacks[0]);
}

TEST_CASE("TT fan membership") {
  EdgeIndex E(5);
  CHECK_FALSE(tt_fan_membership(E, ones(10)));
  auto m = tt_fan_membership(E, cycle5(E) + ones(10));
  REQUIRE(m);
  std::set<RootedTriangle> want;
  for (std::size_t u = 0; u < 5; ++u) want.insert({u, far_edge(E, u)});
  CHECK(*m == want);
  auto z = tt_fan_membership(E, zero_vector(10));
  REQUIRE(z);
  CHECK(z->size() == 30);  // 5 roots x 6 opposite edges
}

TEST_CASE("flat TT fan") {
  DegreeStructure ds(5);
  Fan fan = flat_tt_fan(ds);
  CHECK(fan.complete);
  RationalVector a = a_prime(ds.E);
  std::size_t containing = 0;
  for (const auto& c : fan.cones) {
    if (!c.geometry.contains(a)) continue;
    ++containing;
    CHECK(c.geometry.dim() == 5);
    CHECK(c.label == to_string(E_u_signature(ds.E, a)));
  }
  CHECK(containing == 1);  // all argmins unique, so a' is interior to one cone

  // theta maps L to the TT points, and p undoes it
  auto L = kernel_basis(ds.D, 10);
  std::minstd_rand rng(3);
  for (int s = 0; s < 30; ++s) {
    RationalVector x = zero_vector(10);
    for (const auto& b : L) x += ratio(static_cast<long>(rng() % 21) - 10, 1 + rng() % 4) * b;
    RationalVector t = theta(ds, x);
    CHECK(is_TT(ds.E, t));
    CHECK(orth_project(L, t) == x);
    CHECK(theta(ds, orth_project(L, t)) == t);
  }
}

TEST_CASE("shortcuts") {
  EdgeIndex E(5);
  RationalVector s = shortcut(E, {0, E.index(2, 3)});
  Rational sum = 0;
  for (const auto& x : s) sum += x;
  CHECK(sum == -1);

  const RotationContext& ctx = tsp5();
  DegreeStructure ds(5);
  // with I = [n], the face of P defined by phi(a) has feasible shortcuts
  // the union of the E_u(a), for points a of |del(N)|
  FaceLattice del = del_N(ctx);
  for (const auto& a : sample_points(ctx, del, 6, 17)) {
    RationalVector b = phi(ds, a);
    IndexSet g = ctx.P_pair->tight_primal_generators(b);
    REQUIRE(is_good_face(ctx, g));
    std::set<RootedTriangle> want;
    EuSignature sig = E_u_signature(E, a);
    for (std::size_t u = 0; u < 5; ++u)
      for (auto e : sig[u]) want.insert({u, e});
    CHECK(feasible_shortcuts(ctx, E, g) == want);
  }

  // S itself: no feasible shortcuts
  CHECK(feasible_shortcuts(ctx, E, ctx.S_generators).empty());
}

TEST_CASE("nonnegativity vertices and the admissible subcomplex") {
  const RotationContext& ctx = tsp5();
  IndexSet N = nonnegativity_vertices(ctx);
  CHECK(N.count() == 10);  // one per edge: x_e >= 0 cuts a facet of S
  FaceLattice del = del_N(ctx);
  for (std::size_t f = 0; f < del.size(); ++f)
    for (auto v : del.face(f).vertex_indices) CHECK_FALSE(N.contains(v));
  DegreeStructure ds(5);
  CHECK(ctx.S_polar.contains(a_prime(ds.E)));

  // a' is tight on S only at the tour edge-disjoint from C, which has x_e = 0 on
  // the edges of C. So a' lies inside a facet of the polar carrying nonnegativity
  // vertices, and not in |del(N)|.
  RationalVector a = a_prime(ds.E);
  std::size_t tight = 0;
  for (const auto& t : hamiltonian_cycles(5)) {
    Rational v = dot(a, t);
    CHECK(v >= -1);
    if (v == -1) {
      ++tight;
      CHECK(dot(cycle5(ds.E), t) == 0);
    }
  }
  CHECK(tight == 1);
  CHECK_FALSE(carrier_face(del, ctx.S_polar, a).has_value());

  // every sampled point of |del(N)| has 2^n rotated faces
  for (const auto& b : sample_points(ctx, del, 4, 23)) CHECK(frak_F(ctx, b).size() == 32);
}
