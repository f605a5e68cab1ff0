#ifndef ROTAPLEX_POLAR_HPP
#define ROTAPLEX_POLAR_HPP

#include "rotaplex/face_lattice.hpp"

namespace rotaplex {

// StandardLe: {b in direc p : b.(x - c) <= 1}; StandardGe: the same set
// written as {b : b.(x - c) >= -1} (i.e. its negative); BlockingGe:
// {a : a.x >= 1 for vertices, a.r >= 0 for rays}.
enum class PolarConvention { StandardLe, StandardGe, BlockingGe };

std::string to_string(PolarConvention c);
PolarConvention parse_convention(const std::string& s);

class PolarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polar with both representations. Center is ignored for BlockingGe.
Polyhedron polar(const Polyhedron& p, PolarConvention convention, const RationalVector& center);

// Relative-interior test with both representations present.
bool in_relint(const Polyhedron& p, const RationalVector& x);

// Slice of the polar cone {(alpha, A) : alpha + A.x <= 0 on p} by the
// hyperplane slice.(alpha, A) = 1, in R^{1+m}. Throws PolarError when the
// hyperplane does not meet every nonzero ray of the cone positively.
Polyhedron polar_cone_slice(const Polyhedron& p, const RationalVector& slice);

// A polyhedron together with its polar and the generator incidence between them.
class PolarPair {
 public:
  PolarPair(const Polyhedron& primal, PolarConvention convention, RationalVector center);

  const Polyhedron& primal() const { return primal_; }
  const Polyhedron& polar() const { return polar_; }
  PolarConvention convention() const { return convention_; }
  const RationalVector& center() const { return center_; }

  // Is the polar point/direction b tight on primal generator g?
  bool tight(const RationalVector& b, bool b_is_ray, std::size_t primal_generator) const;
  // Polar generators tight on all given primal generators, and vice versa.
  IndexSet conjugate_of_primal(const IndexSet& primal_generators) const;
  IndexSet conjugate_of_polar(const IndexSet& polar_generators) const;
  // Primal generators on which the polar point b is tight.
  IndexSet tight_primal_generators(const RationalVector& b) const;
  // For BlockingGe: is the primal generator set an intersection of
  // non-negativity facets x_e >= 0 (including p itself)?
  bool in_nonnegativity_closure(const IndexSet& primal_generators) const;

 private:
  Polyhedron primal_;
  Polyhedron polar_;
  PolarConvention convention_;
  RationalVector center_;
  std::vector<IndexSet> incidence_;  // per polar generator: tight primal generators
  std::vector<IndexSet> nonneg_rows_;
};

// Conjugate face F^<> in the polar (for faces of the primal) with its dimension.
Face conjugate_face(const Face& f, const FaceLattice& primal_lattice, const PolarPair& pair);

}  // namespace rotaplex

#endif
