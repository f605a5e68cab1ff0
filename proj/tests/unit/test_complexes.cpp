#include "doctest.h"
#include "rotaplex/complex.hpp"
#include "rotaplex/families.hpp"
#include "rotaplex/json_io.hpp"

using namespace rotaplex;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

Polyhedron hull(std::size_t d, std::vector<RationalVector> pts) {
  return dd_convert(Polyhedron::from_vertices(d, std::move(pts)));
}

Polyhedron square() { return hull(2, {vec({-1, -1}), vec({1, -1}), vec({1, 1}), vec({-1, 1})}); }

Polyhedron quadrant(long sx, long sy) {
  return dd_convert(Polyhedron::from_vrep(2, VRep{{vec({0, 0})}, {vec({sx, 0}), vec({0, sy})}, {}}));
}

PolyhedralComplex one_cell(const Polyhedron& p) { return PolyhedralComplex::from_maximal(p.ambient_dim(), {{p, ""}}); }

PolyhedralComplex split_square() {
  return PolyhedralComplex::from_maximal(
      2, {{hull(2, {vec({-1, -1}), vec({1, -1}), vec({1, 1})}), "lo"},
          {hull(2, {vec({-1, -1}), vec({1, 1}), vec({-1, 1})}), "hi"}});
}

}  // namespace

TEST_CASE("common refinement") {
  SUBCASE("square by the coordinate fan") {
    auto fan = PolyhedralComplex::from_maximal(
        2, {{quadrant(1, 1), ""}, {quadrant(-1, 1), ""}, {quadrant(-1, -1), ""}, {quadrant(1, -1), ""}});
    auto r = common_refinement(square(), {fan});
    CHECK(r.maximal_cells().size() == 4);
    for (auto i : r.maximal_cells()) CHECK(r.cells()[i].geometry.vertices().size() == 4);
  }
  SUBCASE("segment by two half lines") {
    auto seg = hull(1, {vec({-1}), vec({1})});
    auto left = dd_convert(Polyhedron::from_hrep(1, {{vec({1}), Rational(0), Rel::LE}}));
    auto right = dd_convert(Polyhedron::from_hrep(1, {{vec({1}), Rational(0), Rel::GE}}));
    auto r = common_refinement(seg, {PolyhedralComplex::from_maximal(1, {{left, ""}, {right, ""}})});
    CHECK(r.maximal_cells().size() == 2);
  }
}

TEST_CASE("cells by signature") {
  LinearConstraint diag{vec({1, -1}), Rational(0), Rel::LE};
  auto two = cells_by_signature(square(), {diag}, [](const RationalVector& x) {
    return std::string(x[0] <= x[1] ? "up" : "down");
  });
  CHECK(two.maximal_cells().size() == 2);
  auto one = cells_by_signature(square(), {diag}, [](const RationalVector&) { return std::string("same"); });
  CHECK(one.maximal_cells().size() == 1);
}

TEST_CASE("cells by regions") {
  // two overlapping triangles in a square: regions are the pieces of the overlap pattern
  auto t1 = hull(2, {vec({-1, -1}), vec({1, -1}), vec({1, 1})});
  auto t2 = hull(2, {vec({-1, -1}), vec({1, -1}), vec({-1, 1})});
  auto c = cells_by_regions(square(), {t1, t2}, [](const std::vector<std::size_t>& idx) {
    return std::to_string(idx.size());
  });
  // in both: triangle below the two diagonals; in one: two side triangles; in none: top triangle
  CHECK(c.maximal_cells().size() == 4);
}

TEST_CASE("complex equality and posets") {
  auto a = split_square();
  CHECK(complex_equal(a, a));
  CHECK_FALSE(complex_equal(one_cell(square()), a));

  auto shifted = PolyhedralComplex::from_maximal(
      2, {{translate(a.cells()[a.maximal_cells()[0]].geometry, vec({5, 7})), ""},
          {translate(a.cells()[a.maximal_cells()[1]].geometry, vec({5, 7})), ""}});
  CHECK(poset_isomorphic(a, shifted) == Tristate::True);
  CHECK(poset_isomorphic(a, shifted, PointMap([](const RationalVector& x) { return x + vec({5, 7}); })) ==
        Tristate::True);

  auto seg2 = PolyhedralComplex::from_maximal(1, {{hull(1, {vec({0}), vec({1})}), ""}, {hull(1, {vec({1}), vec({2})}), ""}});
  auto seg3 = PolyhedralComplex::from_maximal(
      1, {{hull(1, {vec({0}), vec({1})}), ""}, {hull(1, {vec({1}), vec({2})}), ""}, {hull(1, {vec({2}), vec({3})}), ""}});
  CHECK(poset_isomorphic(seg2, seg3) == Tristate::False);
}

TEST_CASE("convex lifting") {
  CHECK(convex_lifting(split_square()).has_value());

  // Outer triangle with a concentric homothetic inner triangle, quadrilaterals
  // split by diagonals turning the same way: the classical non-regular triangulation.
  RationalVector A = vec({0, 0}), B = vec({4, 0}), C = vec({0, 4});
  RationalVector a = vec({1, 1}), b = vec({2, 1}), c = vec({1, 2});
  auto twisted = PolyhedralComplex::from_maximal(
      2, {{hull(2, {A, B, b}), ""}, {hull(2, {A, b, a}), ""}, {hull(2, {B, C, c}), ""},
          {hull(2, {B, c, b}), ""}, {hull(2, {C, A, a}), ""}, {hull(2, {C, a, c}), ""},
          {hull(2, {a, b, c}), ""}});
  CHECK(twisted.is_face_to_face());
  CHECK_FALSE(convex_lifting(twisted).has_value());

  // Same points, regular coning from the inner triangle: lift by a convex function
  auto coned = PolyhedralComplex::from_maximal(
      2, {{hull(2, {A, B, b, a}), ""}, {hull(2, {B, C, c, b}), ""}, {hull(2, {C, A, a, c}), ""},
          {hull(2, {a, b, c}), ""}});
  CHECK(convex_lifting(coned).has_value());
}

TEST_CASE("split face fans") {
  auto sq = split_face_fan(square());
  CHECK(sq.maximal_cells().size() == 8);
  std::size_t bounded = 0;
  for (auto i : sq.maximal_cells()) bounded += sq.cells()[i].geometry.is_bounded();
  CHECK(bounded == 4);

  Polyhedron hex = permutahedron(3);
  Polyhedron hp = polar(hex, PolarConvention::StandardLe, relint_point(hex));
  CHECK(split_face_fan(hp).maximal_cells().size() == 12);
}

TEST_CASE("complex json round trip") {
  auto a = split_square();
  CHECK(complex_equal(complex_from_json(complex_to_json(a)), a));
}
