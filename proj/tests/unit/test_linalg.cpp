#include "doctest.h"
#include "rotaplex/linalg.hpp"
#include "rotaplex/lp.hpp"
#include "rotaplex/tsp_tt.hpp"

using namespace rotaplex;

namespace {

RationalMatrix identity(std::size_t n) {
  RationalMatrix m(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// D^T as an explicit |E| x n matrix.
RationalMatrix degree_transpose(const DegreeStructure& ds) {
  RationalMatrix t(ds.E.size(), zero_vector(ds.n));
  for (std::size_t u = 0; u < ds.n; ++u)
    for (std::size_t e = 0; e < ds.E.size(); ++e) t[e][u] = ds.D[u][e];
  return t;
}

// 5-cycle 0-1-2-3-4-0 as an edge vector.
RationalVector cycle5(const EdgeIndex& E) {
  RationalVector x = zero_vector(E.size());
  for (std::size_t i = 0; i < 5; ++i) x[E.index(i, (i + 1) % 5)] = 1;
  return x;
}

RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

}  // namespace

TEST_CASE("rational fractions are canonical") {
  CHECK(ratio(2, 4) == Rational(1, 2));
  CHECK(to_string(ratio(-3, 6)) == "-1/2");
  CHECK(parse_rational("6/8") == ratio(3, 4));
  CHECK_THROWS(ratio(1, 0));
}

TEST_CASE("rank") {
  CHECK(rank(identity(3)) == 3);
  CHECK(rank(RationalMatrix(2, zero_vector(4))) == 0);
  // degree rows of K_5 are independent: a vanishing combination sum xi_u delta_u
  // has (xi_u + xi_v)/2 = 0 on every edge, and odd triangles force xi = 0
  DegreeStructure ds(5);
  CHECK(rank(ds.D) == 5);
}

TEST_CASE("solve") {
  RationalVector b = {Rational(1), Rational(-2), ratio(3, 7)};
  auto x = solve(identity(3), b);
  REQUIRE(x);
  CHECK(*x == b);

  RationalMatrix bad = {{Rational(0)}};
  CHECK_FALSE(solve(bad, {Rational(1)}));

  DegreeStructure ds(5);
  auto xi = solve(degree_transpose(ds), ones(10));
  REQUIRE(xi);
  CHECK(*xi == ones(5));
  // direct check: each edge entry of D^T 1 is 1/2 + 1/2
  CHECK(ds.transpose_apply(ones(5)) == ones(10));
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(identity(2)).empty());
  auto k = kernel_basis(RationalMatrix{{Rational(1), Rational(1)}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(sgn(k[0][0]) != 0);

  DegreeStructure ds(5);
  auto L = kernel_basis(ds.D, 10);
  CHECK(L.size() == 10 - 5);
  for (const auto& v : L)
    for (const auto& row : ds.D) CHECK(sgn(dot(row, v)) == 0);
  CHECK(rank(L) == L.size());
}

TEST_CASE("orth_project") {
  std::vector<RationalVector> span = {{Rational(1), Rational(0)}};
  CHECK(orth_project(span, {Rational(1), Rational(1)}) == RationalVector{Rational(1), Rational(0)});
  RationalVector in = {Rational(5, 3), Rational(0)};
  CHECK(orth_project(span, in) == in);

  DegreeStructure ds(5);
  auto L = kernel_basis(ds.D, 10);
  RationalVector chi = cycle5(ds.E);
  RationalVector a = ratio(2, 5) * chi - ratio(1, 5) * ones(10);
  RationalVector phi_a = ratio(1, 5) * (chi + ones(10));
  // phi(a') - a'/2 = (3/10) 1, which is D^T of (3/10) 1_V
  RationalVector diff = phi_a - ratio(1, 2) * a;
  CHECK(diff == ratio(3, 10) * ones(10));
  auto xi = solve(degree_transpose(ds), diff);
  REQUIRE(xi);
  CHECK(*xi == ratio(3, 10) * ones(5));
  CHECK(orth_project(L, phi_a) == ratio(1, 2) * a);
}

TEST_CASE("orthogonal complement and affine dimension") {
  auto c = orthogonal_complement({{Rational(1), Rational(1), Rational(0)}}, 3);
  CHECK(c.size() == 2);
  for (const auto& v : c) CHECK(sgn(v[0] + v[1]) == 0);
  std::vector<RationalVector> pts = {{Rational(0), Rational(0)}, {Rational(1), Rational(1)},
                                     {Rational(2), Rational(2)}};
  CHECK(affine_dimension(pts) == 1);
}

TEST_CASE("lp feasibility") {
  RationalVector e = {Rational(1)};
  CHECK_FALSE(lp_feasible({{e, Rational(1), Rel::LE}, {e, Rational(2), Rel::GE}}));
  CHECK(lp_feasible({{e, Rational(0), Rel::EQ}}));
  auto r = lp_solve(2, {{{Rational(1), Rational(1)}, Rational(4), Rel::LE},
                        {{Rational(1), Rational(0)}, Rational(0), Rel::GE},
                        {{Rational(0), Rational(1)}, Rational(0), Rel::GE}},
                    {Rational(1), Rational(2)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 8);
}
