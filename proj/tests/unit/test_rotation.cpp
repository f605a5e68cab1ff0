#include <algorithm>
#include <set>

#include "doctest.h"
#include "rotaplex/tsp_tt.hpp"

using namespace rotaplex;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

const RotationContext& tsp5() {
  static const RotationContext ctx = tsp_context(5);
  return ctx;
}

RationalVector cycle5(const EdgeIndex& E) {
  RationalVector x = zero_vector(E.size());
  for (std::size_t i = 0; i < 5; ++i) x[E.index(i, (i + 1) % 5)] = 1;
  return x;
}

RationalVector a_prime(const EdgeIndex& E) {
  return ratio(2, 5) * cycle5(E) - ratio(1, 5) * RationalVector(E.size(), Rational(1));
}

// The faces met by a set that touches |D| in one point are exactly the faces
// containing that point: one member lies in all others.
bool is_upset_of_one(const FaceSetSignature& s) {
  for (const auto& m : s) {
    bool below_all = true;
    for (const auto& o : s)
      if (!std::includes(o.begin(), o.end(), m.begin(), m.end())) below_all = false;
    if (below_all) return true;
  }
  return false;
}

std::size_t nonempty(const FaceSetSignature& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](const auto& f) { return !f.empty(); }));
}

}  // namespace

TEST_CASE("context of an edge of the square") {
  Polyhedron sq = dd_convert(Polyhedron::from_vertices(2, {vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})}));
  RotationContext ctx = make_context(sq, {vec({0, 0}), vec({1, 0})}, PolarConvention::StandardLe);
  CHECK(ctx.L_basis.size() == 1);
  CHECK(ctx.Lperp_basis.size() == 1);
  CHECK(ctx.z == RationalVector{ratio(1, 2), Rational(0)});
  CHECK(ctx.S_polar.dim() == 1);
  // the edge is a facet, so the rotation complex is the image of a single segment
  // per neighbouring facet; pi is injective
  PolyhedralComplex rc = rotation_complex(ctx);
  CHECK(rc.maximal_cells().size() == 2);

  CHECK_THROWS_AS(make_context(sq, {vec({0, 0}), vec({1, 1})}, PolarConvention::StandardLe), RotationError);
}

TEST_CASE("contexts of the families") {
  RotationContext b = birkhoff_context(3);
  RationalVector bary = zero_vector(9);
  for (auto i : b.S_generators.to_vector()) bary += b.P.vertices()[i];
  CHECK(b.z == ratio(1, 6) * bary);
  CHECK(b.S.vertices().size() == 6);
  CHECK(b.L_basis.size() == 4);

  const RotationContext& t = tsp5();
  CHECK(t.z == RationalVector(10, ratio(1, 2)));
  CHECK(t.convention == PolarConvention::BlockingGe);
  CHECK(t.S.vertices().size() == 12);
}

TEST_CASE("rotated inequalities for a facet are unique") {
  RotationContext ctx = permutahedron_face_context(3);
  auto lat = face_lattice(ctx.S_polar);
  REQUIRE(lat.top());
  RationalVector a = relint_point(lat.face(*lat.top()), ctx.S_polar);
  // L^perp is a line: the valid q form a half-line, strict inside, tight at its end
  Polyhedron q = rotated_inequality_set(ctx, a);
  CHECK(ctx.Lperp_basis.size() == 1);
  CHECK(q.dim() == 1);
  CHECK(nonempty(frak_F(ctx, a)) == 1);
  CHECK(is_upset_of_one(fiber_signature(ctx, a)));
}

TEST_CASE("rotation at a' for TSP n=5") {
  const RotationContext& ctx = tsp5();
  DegreeStructure ds(5);
  RationalVector a = a_prime(ds.E);
  REQUIRE(ctx.S_polar.contains(a));
  // the conjugates of members of F lying in D are the faces met by the fiber
  CHECK(fiber_signature(ctx, a) == fiber_signature_dd(ctx, a));

  RationalVector phi_a = ratio(1, 5) * (cycle5(ds.E) + RationalVector(10, Rational(1)));
  CHECK(dot(phi_a, ctx.z) == ratio(3, 2));
  CHECK(ctx.project(phi_a) == ratio(1, 2) * a);
  CHECK(pi(ctx, phi_a) == a);

  // the TT choice q = -D^T lambda(a') gives a valid rotated inequality: c(a') x >= gamma(a') on P
  auto [g, c] = gamma_c(ds, a);
  for (const auto& v : ctx.P.vertices()) CHECK(dot(c, v) >= g);
  for (const auto& r : ctx.P.rays()) CHECK(sgn(dot(c, r)) >= 0);
}

TEST_CASE("fiber at a vertex of the Birkhoff polar") {
  RotationContext ctx = birkhoff_context(3);
  for (const auto& v : ctx.S_polar.vertices()) {
    // D is one 8-simplex; a vertex lies in 2^8 of its faces
    FaceSetSignature s = fiber_signature(ctx, v);
    CHECK(is_upset_of_one(s));
    CHECK(s.size() == 256);
    CHECK(std::any_of(s.begin(), s.end(), [](const auto& f) { return f.size() == 1; }));
  }
}

TEST_CASE("pi rejects points of the conjugate face") {
  const RotationContext& ctx = tsp5();
  DegreeStructure ds(5);
  CHECK(in_S_diamond(ctx, ds.D[0]));
  CHECK_THROWS(pi(ctx, ds.D[0]));
}

TEST_CASE("two definitions and z independence") {
  RotationContext ctx = birkhoff_context(3);
  CHECK(verify_two_definitions(ctx, 0, 1).ok);
  CHECK(verify_two_definitions(ctx, 20, 3).ok);
  CHECK(verify_z_independence(ctx, ctx.z));
  CHECK(z_transfer(ctx, ctx.z, ctx.S_polar.vertices()[0]) == ctx.S_polar.vertices()[0]);

  // weighted barycenter with weight 2 on the identity matrix
  RationalVector z2 = zero_vector(9);
  RationalVector id = zero_vector(9);
  for (int i = 0; i < 3; ++i) id[4 * i] = 1;
  Rational total = 0;
  for (const auto& v : ctx.S.vertices()) {
    Rational w = v == id ? 2 : 1;
    z2 += w * v;
    total += w;
  }
  z2 = Rational(1) / total * z2;
  std::string why;
  CHECK_MESSAGE(verify_z_independence(ctx, z2, &why), why);
}

TEST_CASE("z independence for the permutahedron pair") {
  RotationContext ctx = permutahedron_face_context(3);
  RationalVector z2 = ratio(4, 5) * ctx.z + ratio(1, 5) * ctx.S.vertices()[0];
  std::string why;
  CHECK_MESSAGE(verify_z_independence(ctx, z2, &why), why);
}
