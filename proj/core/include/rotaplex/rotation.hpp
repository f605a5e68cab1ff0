#ifndef ROTAPLEX_ROTATION_HPP
#define ROTAPLEX_ROTATION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rotaplex/complex.hpp"
#include "rotaplex/polar.hpp"

namespace rotaplex {

class RotationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A set of faces, each given by its sorted generator index set.
using FaceSetSignature = std::set<std::vector<std::size_t>>;
std::string to_string(const FaceSetSignature& s);

// Face S of P, center z in relint S, and everything derived from them.
// StandardLe: P bounded, polars b.(x - c) <= 1 with c = center of P, and
// S^polar = {a in L : a.(x - z) <= 1}. BlockingGe: P with recession cone the
// nonnegative orthant, P^polar = {b : b.x >= 1}, S^polar = {a in L : a.(x - z) >= -1}.
struct RotationContext {
  Polyhedron P;
  Polyhedron S;
  IndexSet S_generators;  // generators of P lying in S
  RationalVector z;
  RationalVector center;  // center of P (StandardLe only)
  PolarConvention convention = PolarConvention::StandardLe;

  std::vector<RationalVector> L_basis;      // direc S
  std::vector<RationalVector> Lperp_basis;  // complement of L inside direc P
  RationalMatrix projection;                // orthogonal projection onto L

  Polyhedron S_polar;
  std::shared_ptr<const PolarPair> P_pair;
  std::shared_ptr<const FaceLattice> P_polar_lattice;
  IndexSet S_diamond;  // polar generators of the conjugate face of S
  std::shared_ptr<const FaceLattice> D;  // deletion complex

  std::size_t ambient_dim() const { return P.ambient_dim(); }
  const Polyhedron& P_polar() const { return P_pair->polar(); }
  RationalVector project(const RationalVector& x) const { return mat_vec(projection, x); }
};

// S given by the vertices of P it contains, or by a valid inequality of P.
RotationContext make_context(const Polyhedron& P, const std::vector<RationalVector>& S_vertices,
                             PolarConvention convention,
                             std::optional<RationalVector> z = std::nullopt,
                             std::optional<RationalVector> center = std::nullopt);
RotationContext make_context(const Polyhedron& P, const LinearConstraint& S_inequality,
                             PolarConvention convention,
                             std::optional<RationalVector> z = std::nullopt,
                             std::optional<RationalVector> center = std::nullopt);

// Generators of P tight on all the given generators' common face (the
// smallest face of P containing them).
IndexSet face_closure(const Polyhedron& P, const IndexSet& generators);

// Valid q in Lperp coordinates y (q = sum y_i Lperp_basis[i]).
Polyhedron rotated_inequality_set(const RotationContext& ctx, const RationalVector& a);
// Faces of P defined by rotated inequalities of a.
FaceSetSignature frak_F(const RotationContext& ctx, const RationalVector& a);
// The same faces as polar generator sets (conjugates in P^polar).
FaceSetSignature frak_F_conjugates(const RotationContext& ctx, const RationalVector& a);

// Faces of D met by the fiber of a, one LP per undecided face.
FaceSetSignature fiber_signature(const RotationContext& ctx, const RationalVector& a);
// The same set from one double-description run on fiber and P^polar.
FaceSetSignature fiber_signature_dd(const RotationContext& ctx, const RationalVector& a);
// All faces of P^polar met by the fiber (not only those of D).
FaceSetSignature fiber_faces_all(const RotationContext& ctx, const RationalVector& a);

bool in_S_diamond(const RotationContext& ctx, const RationalVector& b);
RationalVector pi(const RotationContext& ctx, const RationalVector& b);

// Images pi(F) for every face F of D, with both representations.
struct ImageComplex {
  std::vector<IndexSet> faces;  // D faces as polar generator sets
  std::vector<int> dims;
  std::vector<Polyhedron> images;
  FaceSetSignature signature(const RationalVector& a) const;
};
ImageComplex image_complex(const RotationContext& ctx);

// Hyperplanes of L (as rows a.x = b with a in L) supporting the images.
std::vector<LinearConstraint> image_hyperplanes(const RotationContext& ctx, const ImageComplex& ic);

// The rotation complex of S^polar, or of |restrict_to| (a subcomplex of
// the face lattice of ctx.S_polar) when given.
PolyhedralComplex rotation_complex(const RotationContext& ctx,
                                   const FaceLattice* restrict_to = nullptr);
PolyhedralComplex rotation_complex(const RotationContext& ctx, const ImageComplex& ic,
                                   const FaceLattice* restrict_to = nullptr);

struct TwoDefinitionsResult {
  bool ok = true;
  std::size_t pairs = 0;
  std::size_t equal_pairs = 0;  // pairs with equal signatures
  std::string witness;
};

// Sample points for a context: relint points of faces of region (all of
// S^polar when region is null).
std::vector<RationalVector> sample_points(const RotationContext& ctx, const FaceLattice& region,
                                          std::size_t count, std::uint64_t seed);

TwoDefinitionsResult verify_two_definitions(const RotationContext& ctx, std::size_t samples,
                                            std::uint64_t seed,
                                            const FaceLattice* region = nullptr);

// Canonical projective isomorphism S^polar(z) -> S^polar(z2).
RationalVector z_transfer(const RotationContext& ctx, const RationalVector& z2,
                          const RationalVector& a);
bool verify_z_independence(const RotationContext& ctx, const RationalVector& z2,
                           std::string* witness = nullptr);

}  // namespace rotaplex

#endif
