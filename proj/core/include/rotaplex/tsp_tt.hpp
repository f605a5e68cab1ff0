#ifndef ROTAPLEX_TSP_TT_HPP
#define ROTAPLEX_TSP_TT_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rotaplex/families.hpp"

namespace rotaplex {

// Root u with opposite edge vw (u not an endpoint).
struct RootedTriangle {
  std::size_t u;
  std::size_t vw;  // EdgeIndex position
  auto operator<=>(const RootedTriangle&) const = default;
};

RootedTriangle make_triangle(const EdgeIndex& E, std::size_t u, std::size_t vw);

struct DegreeStructure {
  explicit DegreeStructure(std::size_t n);
  std::size_t n;
  EdgeIndex E;
  RationalMatrix D;  // rows delta_u
  RationalVector z;  // (2/(n-1)) 1
  const RationalVector& delta(std::size_t u) const { return D.at(u); }
  // D^T xi
  RationalVector transpose_apply(const RationalVector& xi) const;
};

// a_vu + a_uw - a_vw
Rational triangle_slack(const EdgeIndex& E, const RationalVector& a, const RootedTriangle& t);
bool is_metric(const EdgeIndex& E, const RationalVector& a);
bool is_TT(const EdgeIndex& E, const RationalVector& a);

RationalVector lambda(const EdgeIndex& E, const RationalVector& a);
RationalVector theta(const DegreeStructure& ds, const RationalVector& a);
std::pair<Rational, RationalVector> theta_tilde(const DegreeStructure& ds, const Rational& alpha,
                                                const RationalVector& a);
// (gamma(a), c(a)) for a in ker D.
std::pair<Rational, RationalVector> gamma_c(const DegreeStructure& ds, const RationalVector& a);
// c(a)/gamma(a); throws when gamma(a) <= 0.
RationalVector phi(const DegreeStructure& ds, const RationalVector& a);

// Per root, the sorted edges minimizing the triangle slack.
using EuSignature = std::vector<std::vector<std::size_t>>;
EuSignature E_u_signature(const EdgeIndex& E, const RationalVector& a);
std::string to_string(const EuSignature& s);

// Tight triangles when d is metric with a tight triangle at every root.
std::optional<std::set<RootedTriangle>> tt_fan_membership(const EdgeIndex& E, const RationalVector& d);

// Cones of L = ker D on which each root has a fixed unique minimizing edge.
Fan flat_tt_fan(const DegreeStructure& ds);

RationalVector shortcut(const EdgeIndex& E, const RootedTriangle& t);
// Shortcuts s with a.s = 0 for a relint point a of the conjugate face of F.
std::set<RootedTriangle> feasible_shortcuts(const RotationContext& ctx, const EdgeIndex& E,
                                            const IndexSet& face_generators);
// Face of P (as generator set) contained in no nonnegativity facet.
bool is_good_face(const Polyhedron& P, const IndexSet& face_generators);
bool is_good_face(const RotationContext& ctx, const IndexSet& face_generators);

// Vertices of S^polar whose facet of S is S cut by x_e = 0.
IndexSet nonnegativity_vertices(const RotationContext& ctx);
// Faces of S^polar avoiding those vertices.
FaceLattice del_N(const RotationContext& ctx);

}  // namespace rotaplex

#endif
