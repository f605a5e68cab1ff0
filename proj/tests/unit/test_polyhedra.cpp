#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "doctest.h"
#include "rotaplex/families.hpp"
#include "rotaplex/json_io.hpp"
#include "rotaplex/linalg.hpp"
#include "rotaplex/tsp_tt.hpp"

using namespace rotaplex;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

Polyhedron square() {  // [-1,1]^2
  return dd_convert(Polyhedron::from_vertices(2, {vec({-1, -1}), vec({1, -1}), vec({1, 1}), vec({-1, 1})}));
}

std::map<int, std::size_t> faces_by_dim(const FaceLattice& lat) {
  std::map<int, std::size_t> out;
  for (const auto& f : lat.faces()) ++out[f.dim];
  return out;
}

std::set<std::string> keys(const std::vector<RationalVector>& pts) {
  std::set<std::string> s;
  for (const auto& p : pts) s.insert(to_string(p));
  return s;
}

}  // namespace

TEST_CASE("dd_convert on small inputs") {
  SUBCASE("standard triangle V to H") {
    Polyhedron t = dd_convert(Polyhedron::from_vertices(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}));
    CHECK(t.dim() == 2);
    CHECK(t.equations().size() == 1);
    CHECK(t.inequalities().size() == 3);
    // rows are only defined modulo the equation; each facet is an edge, tight at two vertices
    std::set<std::string> edges;
    for (const auto& row : t.inequalities()) {
      LinearConstraint h = as_le(row);
      std::string tight;
      for (const auto& v : t.vertices()) {
        CHECK(dot(h.a, v) <= h.b);
        tight += dot(h.a, v) == h.b ? '1' : '0';
      }
      CHECK(std::count(tight.begin(), tight.end(), '1') == 2);
      edges.insert(tight);
    }
    CHECK(edges.size() == 3);
    CHECK(t.contains({ratio(1, 3), ratio(1, 3), ratio(1, 3)}));
    CHECK_FALSE(t.contains({ratio(1, 2), ratio(1, 2), ratio(1, 2)}));
    CHECK_FALSE(t.contains({Rational(2), Rational(-1), Rational(0)}));
  }
  SUBCASE("quadrant H to V") {
    Polyhedron q = dd_convert(Polyhedron::from_hrep(2, {{vec({1, 0}), Rational(0), Rel::GE},
                                                        {vec({0, 1}), Rational(0), Rel::GE}}));
    CHECK(keys(q.vertices()) == keys({vec({0, 0})}));
    CHECK(keys(q.rays()) == keys({vec({1, 0}), vec({0, 1})}));
  }
  SUBCASE("Birkhoff n=3 from H-rep gives the permutation matrices") {
    std::vector<RationalVector> perms;
    std::vector<int> s = {0, 1, 2};
    do {
      RationalVector m = zero_vector(9);
      for (int i = 0; i < 3; ++i) m[3 * i + s[i]] = 1;
      perms.push_back(m);
    } while (std::next_permutation(s.begin(), s.end()));
    Polyhedron b = birkhoff(3);
    CHECK(keys(b.vertices()) == keys(perms));
    CHECK(b.rays().empty());
  }
  SUBCASE("empty H-rep is reported") {
    Polyhedron e = Polyhedron::from_hrep(1, {{vec({1}), Rational(0), Rel::LE}, {vec({1}), Rational(1), Rel::GE}});
    CHECK_FALSE(dd_convert_nonempty(e));
  }
}

TEST_CASE("face lattices") {
  auto sq = face_lattice(square());
  CHECK(sq.size() == 10);
  auto simplex = face_lattice(dd_convert(Polyhedron::from_vertices(
      3, {vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})})));
  CHECK(simplex.size() == 16);

  Polyhedron hex = permutahedron(3);
  auto lat = face_lattice(hex);
  auto by = faces_by_dim(lat);
  CHECK(by[0] == 6);
  CHECK(by[1] == 6);
  // each edge lies on exactly one face sum_{k in A} x_k = 1 + ... + |A|, A a
  // nonempty proper subset, and distinct edges give distinct A
  std::set<int> masks;
  for (const auto& f : lat.faces()) {
    if (f.dim != 1) continue;
    std::vector<int> hit;
    for (int mask = 1; mask < 7; ++mask) {
      int size = std::popcount(static_cast<unsigned>(mask));
      bool on = true;
      for (auto v : f.vertex_indices) {
        Rational s = 0;
        for (int k = 0; k < 3; ++k)
          if (mask >> k & 1) s += hex.vertices()[v][k];
        on = on && s == size * (size + 1) / 2;
      }
      if (on) hit.push_back(mask);
    }
    REQUIRE(hit.size() == 1);
    masks.insert(hit[0]);
  }
  CHECK(masks.size() == 6);
}

TEST_CASE("relint points") {
  auto sq = square();
  auto lat = face_lattice(sq);
  for (const auto& f : lat.faces())
    if (f.dim == 0) CHECK(relint_point(f, sq) == sq.vertices()[f.vertex_indices[0]]);
  Polyhedron seg = dd_convert(Polyhedron::from_vertices(1, {vec({0}), vec({1})}));
  CHECK(relint_point(seg) == RationalVector{ratio(1, 2)});

  Polyhedron s5 = stsp(5);
  auto l5 = face_lattice(s5);
  REQUIRE(l5.top());
  CHECK(relint_point(l5.face(*l5.top()), s5) == RationalVector(10, ratio(1, 2)));
}

TEST_CASE("polars") {
  Polyhedron cross = dd_convert(Polyhedron::from_vertices(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}));
  CHECK(polar(square(), PolarConvention::StandardLe, zero_vector(2)).same_point_set(cross));

  Polyhedron hex = permutahedron(3);
  Polyhedron hp = polar(hex, PolarConvention::StandardLe, relint_point(hex));
  CHECK(hp.vertices().size() == 6);
  CHECK(hp.dim() == 2);

  // blocking polar of the graphical TSP polyhedron: the degree vectors are vertices
  Polyhedron g = gtsp(5);
  Polyhedron gp = polar(g, PolarConvention::BlockingGe, zero_vector(10));
  DegreeStructure ds(5);
  auto vk = keys(gp.vertices());
  for (const auto& d : ds.D) CHECK(vk.count(to_string(d)) == 1);
}

TEST_CASE("conjugate faces") {
  auto sq = square();
  PolarPair pair(sq, PolarConvention::StandardLe, zero_vector(2));
  auto lat = face_lattice(sq);
  for (std::size_t f = 0; f < lat.size(); ++f) {
    IndexSet c = pair.conjugate_of_primal(lat.generators(f));
    if (lat.face(f).dim == 1) CHECK(c.count() == 1);
    if (lat.face(f).dim == 2) CHECK(c.empty());
  }

  RotationContext ctx = tsp_context(5);
  DegreeStructure ds(5);
  CHECK(ctx.S_diamond.count() == 5);
  std::vector<RationalVector> sd;
  for (auto i : ctx.S_diamond.to_vector()) {
    REQUIRE(i < ctx.P_polar().vertices().size());
    sd.push_back(ctx.P_polar().vertices()[i]);
  }
  CHECK(keys(sd) == keys(ds.D));
  CHECK(affine_dimension(sd) == 4);
}

TEST_CASE("deletion and bounded subcomplex") {
  Polyhedron tri = dd_convert(Polyhedron::from_vertices(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})}));
  auto lat = face_lattice(tri);
  auto del = deletion(lat, IndexSet::of(3, {0}));
  // the opposite edge, its two ends and the empty face
  CHECK(del.size() == 4);
  auto by = faces_by_dim(del);
  CHECK(by[1] == 1);
  CHECK(by[0] == 2);

  CHECK(bounded_subcomplex(lat).size() == lat.size());
  Polyhedron quad = dd_convert(Polyhedron::from_hrep(2, {{vec({1, 0}), Rational(0), Rel::GE},
                                                         {vec({0, 1}), Rational(0), Rel::GE}}));
  CHECK(bounded_subcomplex(face_lattice(quad)).size() == 2);

  // Birkhoff pair: the deletion complex is one simplex of dimension n^2 - 1
  RotationContext ctx = birkhoff_context(3);
  auto mf = ctx.D->maximal_faces();
  REQUIRE(mf.size() == 1);
  const Face& F = ctx.D->face(mf[0]);
  CHECK(F.dim == 8);
  CHECK(F.vertex_indices.size() == 9);
}

TEST_CASE("json round trip") {
  Polyhedron b = birkhoff(3);
  Polyhedron c = polyhedron_from_json(polyhedron_to_json(b));
  CHECK(dd_convert(c).same_point_set(b));
}
