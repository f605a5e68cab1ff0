#ifndef ROTAPLEX_COMPLEX_HPP
#define ROTAPLEX_COMPLEX_HPP

#include <functional>
#include <optional>
#include <string>

#include "rotaplex/face_lattice.hpp"

namespace rotaplex {

struct Cell {
  Polyhedron geometry;  // both representations
  std::string label;
};

// String key of a canonical V-representation; equal keys mean equal point sets.
std::string point_set_key(const Polyhedron& p);

class PolyhedralComplex {
 public:
  PolyhedralComplex() = default;
  PolyhedralComplex(std::size_t ambient_dim, std::vector<Cell> cells, std::vector<bool> maximal);
  static PolyhedralComplex from_maximal(std::size_t ambient_dim, std::vector<Cell> cells);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool is_maximal(std::size_t i) const { return maximal_.at(i); }
  std::vector<std::size_t> maximal_cells() const;
  std::vector<std::size_t> canonical_order() const;

  // Complex containing every nonempty face of every maximal cell.
  PolyhedralComplex with_all_faces() const;
  // Every pairwise intersection of maximal cells is a face of both.
  bool is_face_to_face() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Cell> cells_;
  std::vector<bool> maximal_;
};

struct Fan {
  std::vector<Cell> cones;
  bool complete = false;
  PolyhedralComplex as_complex(std::size_t ambient_dim) const;
};

class MergeConvexityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SignatureFn = std::function<std::string(const RationalVector&)>;

// Cells of the common refinement of region with each piece (full-dimensional
// relative to region), labels joined with '|'.
PolyhedralComplex common_refinement(const Polyhedron& region,
                                    const std::vector<PolyhedralComplex>& pieces);

// Arrangement of hyperplanes (a.x = b, any rel) inside region, evaluated with sig
// at a relative-interior point per cell, adjacent cells with equal signatures merged.
PolyhedralComplex cells_by_signature(const Polyhedron& region,
                                     const std::vector<LinearConstraint>& hyperplanes,
                                     const SignatureFn& sig);

// Subdivision of region by the generic incidence pattern of pieces: cells are
// split only by facets of pieces that cut them, then cells with the same set of
// containing pieces are merged (each class must be convex). Pieces whose
// intersection with region is lower-dimensional are ignored. label receives the
// sorted indices of the containing pieces.
using IndexLabelFn = std::function<std::string(const std::vector<std::size_t>&)>;
PolyhedralComplex cells_by_regions(const Polyhedron& region, const std::vector<Polyhedron>& pieces,
                                   const IndexLabelFn& label);

// Heights on the vertices of a bounded complex exhibiting it as the projection
// of the lower faces of a convex lifted polytope (a regular subdivision), or
// nullopt when no such lifting exists.
std::optional<std::vector<std::pair<RationalVector, Rational>>> convex_lifting(
    const PolyhedralComplex& c);

bool complex_equal(const PolyhedralComplex& c1, const PolyhedralComplex& c2);

// Face poset of a complex: all nonempty faces of maximal cells with covers.
struct FacePoset {
  std::vector<std::string> keys;            // point_set_key of each element
  std::vector<Polyhedron> geometry;
  std::vector<int> dims;
  std::vector<std::vector<std::size_t>> children;
  std::optional<std::size_t> find(const std::string& key) const;
  std::unordered_map<std::string, std::size_t> index;
};
FacePoset face_poset(const PolyhedralComplex& c);

enum class Tristate { False, True, Unknown };
std::string to_string(Tristate t);

using PointMap = std::function<RationalVector(const RationalVector&)>;

// With a vertex map (extended to faces by mapping vertex sets), checks that it
// induces a containment-preserving bijection of face posets. Without a map,
// compares graded invariants and searches for an isomorphism with a budget.
Tristate poset_isomorphic(const PolyhedralComplex& c1, const PolyhedralComplex& c2,
                          const std::optional<PointMap>& candidate_map = std::nullopt);
Tristate poset_isomorphic(const FacePoset& p1, const FacePoset& p2,
                          const std::optional<PointMap>& candidate_map = std::nullopt);

}  // namespace rotaplex

#endif
