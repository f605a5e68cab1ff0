#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "rotaplex/families.hpp"
#include "rotaplex/linalg.hpp"

using namespace rotaplex;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

// Matchings of K_{n,n} by brute force over edge subsets.
std::size_t count_matchings(std::size_t n) {
  std::size_t count = 0;
  const std::size_t m = n * n;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> row(n, 0), col(n, 0);
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e)
      if (mask >> e & 1) ok = ++row[e / n] == 1 && ++col[e % n] == 1;
    count += ok;
  }
  return count;
}

std::set<std::string> keys(const std::vector<RationalVector>& pts) {
  std::set<std::string> s;
  for (const auto& p : pts) s.insert(to_string(p));
  return s;
}

}  // namespace

TEST_CASE("Birkhoff polytopes") {
  Polyhedron b1 = birkhoff(1);
  CHECK(b1.vertices().size() == 1);
  CHECK(b1.dim() == 0);
  Polyhedron b2 = birkhoff(2);
  CHECK(b2.vertices().size() == 2);
  CHECK(b2.dim() == 1);
  Polyhedron b3 = birkhoff(3);
  CHECK(b3.vertices().size() == 6);
  // (n-1)^2: n^2 coordinates minus 2n - 1 independent equations
  CHECK(b3.dim() == 4);
  CHECK_THROWS_AS(birkhoff(0), FamilyError);
}

TEST_CASE("matching polytopes") {
  Polyhedron m1 = matching_polytope(1);
  CHECK(keys(m1.vertices()) == keys({vec({0}), vec({1})}));
  CHECK(matching_polytope(2).vertices().size() == count_matchings(2));
  CHECK(count_matchings(2) == 7);
  CHECK(matching_polytope(3).vertices().size() == count_matchings(3));
  CHECK(count_matchings(3) == 34);
}

TEST_CASE("orbit polytopes and onion weights") {
  CHECK(orbit_polytope(vec({1, 2, 3})).vertices().size() == 6);
  CHECK(onion_weights(3, 3) == vec({1, 2, 3}));
  CHECK(onion_weights(3, 1) == vec({-1, 3, 4}));
  CHECK(onion_weights(3, 2) == vec({1, 1, 4}));
  CHECK(orbit_polytope(onion_weights(3, 2)).vertices().size() == 3);
  Polyhedron o1 = orbit_polytope(onion_weights(3, 1));
  CHECK(o1.vertices().size() == 6);
  for (std::size_t r = 1; r <= 4; ++r) {
    Rational s = 0;
    for (const auto& x : onion_weights(4, r)) s += x;
    CHECK(s == 10);
  }
  CHECK_NOTHROW(check_orbit_weight(vec({3, 2, 1})));
  CHECK_THROWS_AS(check_orbit_weight(vec({2, 2, 2})), FamilyError);
  CHECK_THROWS_AS(check_orbit_weight(vec({1, 2, 4})), FamilyError);
}

TEST_CASE("permutahedron face context") {
  RotationContext ctx = permutahedron_face_context(3);
  CHECK(ctx.P.vertices().size() == 24);
  CHECK(ctx.S.vertices().size() == 6);
  for (const auto& v : ctx.S.vertices()) CHECK(v[3] == 4);
  // x_4 <= 4 is valid for P: brute force over the permutations of (1,2,3,4)
  std::vector<int> p = {1, 2, 3, 4};
  do {
    CHECK(p[3] <= 4);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(max_over(ctx.P, vec({0, 0, 0, 1})) == Rational(4));

  // maximizer characterization: a is maximized at the vertex placing the largest
  // entries of (1..n+1) on the largest entries of a
  RationalVector a = vec({3, -1, 7, 2});
  RationalVector best = vec({3, 1, 4, 2});
  CHECK(max_over(ctx.P, a) == dot(a, best));
}

TEST_CASE("symmetric TSP polytopes") {
  Polyhedron s3 = stsp(3);
  CHECK(s3.vertices().size() == 1);
  Polyhedron s5 = stsp(5);
  CHECK(s5.vertices().size() == 12);  // (5-1)!/2
  CHECK(s5.dim() == 5);               // binom(5,2) - 5
  CHECK(hamiltonian_cycles(5).size() == 12);
  for (const auto& v : s5.vertices()) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    CHECK(s == 5);
  }
}

TEST_CASE("graphical TSP polyhedra") {
  Polyhedron g3 = gtsp(3);
  CHECK(g3.contains(vec({1, 1, 1})));
  CHECK(g3.rays().size() == 3);

  Polyhedron g5 = gtsp(5);
  EdgeIndex E(5);
  // sum x_e >= n is valid, and tight exactly at Hamiltonian cycles
  auto cycles = keys(hamiltonian_cycles(5));
  for (const auto& v : g5.vertices()) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    CHECK(s >= 5);
    CHECK((s == 5) == (cycles.count(to_string(v)) == 1));
  }
  // degree inequalities are facets
  for (std::size_t u = 0; u < 5; ++u) {
    RationalVector d = zero_vector(10);
    for (std::size_t e = 0; e < 10; ++e)
      if (E.pair(e).first == u || E.pair(e).second == u) d[e] = 1;
    std::vector<RationalVector> tight;
    for (const auto& v : g5.vertices())
      if (dot(d, v) == 2) tight.push_back(v);
    std::vector<RationalVector> dirs;
    for (const auto& r : g5.rays())
      if (sgn(dot(d, r)) == 0) dirs.push_back(r);
    CHECK(affine_dimension(tight, dirs) == 9);
  }
  CHECK_THROWS_AS(gtsp(2), FamilyError);
}

TEST_CASE("edge index") {
  EdgeIndex E(4);
  CHECK(E.size() == 6);
  CHECK(E.index(0, 1) == 0);
  CHECK(E.index(1, 0) == 0);
  CHECK(E.index(2, 3) == 5);
  CHECK(E.pair(3) == std::pair<std::size_t, std::size_t>{1, 2});
}
