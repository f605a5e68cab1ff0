#ifndef ROTAPLEX_FAMILIES_HPP
#define ROTAPLEX_FAMILIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "rotaplex/complex.hpp"
#include "rotaplex/rotation.hpp"

namespace rotaplex {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two-element subsets {u,v} of {0..n-1} in lexicographic order.
class EdgeIndex {
 public:
  explicit EdgeIndex(std::size_t n);
  std::size_t n() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  std::size_t index(std::size_t u, std::size_t v) const;
  std::pair<std::size_t, std::size_t> pair(std::size_t i) const { return pairs_.at(i); }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> lookup_;
};

// Doubly stochastic matrices, flattened row-major into R^{n^2}.
Polyhedron birkhoff(std::size_t n);
// Row and column sums at most 1, nonnegative entries.
Polyhedron matching_polytope(std::size_t n);

// Entries not all equal, sum equal to binom(len+1, 2).
void check_orbit_weight(const RationalVector& w);
Polyhedron orbit_polytope(const RationalVector& w);
// (1, ..., r-1, 2r-n, r+2, ..., n+1).
RationalVector onion_weights(std::size_t n, std::size_t r);
// Orbit of (1, ..., n) in R^n.
Polyhedron permutahedron(std::size_t n);

// Face fan of a polytope with the origin in its interior, each cone cut into
// the part inside the polytope and the unbounded rest.
PolyhedralComplex split_face_fan(const Polyhedron& polytope);

// Hamiltonian cycle indicators over EdgeIndex(n).
Polyhedron stsp(std::size_t n);
std::vector<RationalVector> hamiltonian_cycles(std::size_t n);
// Connected Eulerian multigraphs plus the nonnegative orthant.
Polyhedron gtsp(std::size_t n);

// Matching polytope with S the Birkhoff face, center J/(n+1), z = J/n.
RotationContext birkhoff_context(std::size_t n);
// S = Pi^{n-1} (orbit of 1..n, last coordinate n+1) as a facet of Pi^n.
RotationContext permutahedron_face_context(std::size_t n);
// Blocking context of STSP inside GTSP with z = (2/(n-1)) 1.
RotationContext tsp_context(std::size_t n);

// Polar of the onion skin S_r (embedded like S) inside L, centered at z.
Polyhedron onion_polar(const RotationContext& ctx, std::size_t n, std::size_t r);

}  // namespace rotaplex

#endif
