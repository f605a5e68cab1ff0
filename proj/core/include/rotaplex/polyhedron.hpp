#ifndef ROTAPLEX_POLYHEDRON_HPP
#define ROTAPLEX_POLYHEDRON_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotaplex/constraint.hpp"
#include "rotaplex/rational.hpp"

namespace rotaplex {

struct VRep {
  std::vector<RationalVector> vertices;
  std::vector<RationalVector> rays;
  std::vector<RationalVector> lineality;
};

class EmptyPolyhedronError : public std::runtime_error {
 public:
  EmptyPolyhedronError() : std::runtime_error("polyhedron is empty") {}
};

class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_hrep(std::size_t ambient_dim, std::vector<LinearConstraint> rows,
                              std::string name = {});
  static Polyhedron from_vrep(std::size_t ambient_dim, VRep v, std::string name = {});
  static Polyhedron from_vertices(std::size_t ambient_dim, std::vector<RationalVector> vertices,
                                  std::string name = {});
  // Both representations, assumed consistent and canonical (used by dd_convert).
  static Polyhedron from_both(std::size_t ambient_dim, std::vector<LinearConstraint> rows, VRep v,
                              std::string name = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  bool has_hrep() const { return has_h_; }
  bool has_vrep() const { return has_v_; }
  const std::vector<LinearConstraint>& hrep() const;
  const VRep& vrep() const;
  const std::vector<RationalVector>& vertices() const { return vrep().vertices; }
  const std::vector<RationalVector>& rays() const { return vrep().rays; }
  std::size_t num_generators() const { return vrep().vertices.size() + vrep().rays.size(); }

  // Affine dimension (-1 when empty); requires the V-representation.
  int dim() const;
  bool is_bounded() const;
  bool is_pointed() const { return vrep().lineality.empty(); }
  bool contains(const RationalVector& x) const;

  // Equation rows / inequality rows of the H-representation.
  std::vector<LinearConstraint> equations() const;
  std::vector<LinearConstraint> inequalities() const;

  const std::string& name() const { return name_; }
  Polyhedron with_name(std::string name) const;

  // Exact point-set equality via canonical V-representations (both need V).
  bool same_point_set(const Polyhedron& o) const;

 private:
  std::size_t ambient_dim_ = 0;
  bool has_h_ = false;
  bool has_v_ = false;
  std::vector<LinearConstraint> h_;
  VRep v_;
  int dim_ = -1;
  std::string name_;
};

// Canonical V-representation: lineality in reduced echelon form, rays reduced
// modulo lineality and scaled to leading |1|, all lists sorted and deduplicated.
VRep canonical_vrep(std::size_t ambient_dim, VRep v);

// Irredundant canonical H-representation of conv(V) from candidate
// inequalities known to be valid and to include all facets.
std::vector<LinearConstraint> irredundant_hrep(std::size_t ambient_dim, const VRep& v,
                                               const std::vector<LinearConstraint>& candidates);

// Converts to a polyhedron carrying both irredundant representations.
// Throws EmptyPolyhedronError for empty input.
Polyhedron dd_convert(const Polyhedron& p);
std::optional<Polyhedron> dd_convert_nonempty(const Polyhedron& p);

// K (both representations, pointed) intersected with extra rows; nullopt when empty.
std::optional<Polyhedron> intersect(const Polyhedron& k, const std::vector<LinearConstraint>& rows);
std::optional<Polyhedron> intersect(const Polyhedron& a, const Polyhedron& b);

Polyhedron translate(const Polyhedron& p, const RationalVector& shift);

// Average of the vertices plus sum of the rays.
RationalVector relint_point(const Polyhedron& p);

// Lift-free maximization of c over the generators (nullopt if unbounded).
std::optional<Rational> max_over(const Polyhedron& p, const RationalVector& c);

}  // namespace rotaplex

#endif
