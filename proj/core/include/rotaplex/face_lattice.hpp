#ifndef ROTAPLEX_FACE_LATTICE_HPP
#define ROTAPLEX_FACE_LATTICE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "rotaplex/index_set.hpp"
#include "rotaplex/polyhedron.hpp"

namespace rotaplex {

struct Face {
  std::vector<std::size_t> vertex_indices;
  std::vector<std::size_t> ray_indices;
  int dim = -1;

  bool empty() const { return vertex_indices.empty(); }
  bool bounded() const { return ray_indices.empty(); }
  bool operator==(const Face& o) const {
    return vertex_indices == o.vertex_indices && ray_indices == o.ray_indices;
  }
};

class FaceLimitError : public std::runtime_error {
 public:
  explicit FaceLimitError(std::size_t limit)
      : std::runtime_error("face lattice exceeds ROTAPLEX_MAX_FACES=" + std::to_string(limit)) {}
};

// Limit from ROTAPLEX_MAX_FACES (default 200000).
std::size_t max_faces_limit();

// Faces of a polyhedron (or a subcomplex of them) as generator incidence sets.
// Generators are numbered vertices first, then rays.
class FaceLattice {
 public:
  const Polyhedron& polyhedron() const { return *poly_; }
  std::size_t size() const { return faces_.size(); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t i) const { return faces_.at(i); }
  const IndexSet& generators(std::size_t i) const { return gens_.at(i); }
  // Cover relations inside this (sub)complex.
  const std::vector<std::size_t>& children(std::size_t i) const { return children_.at(i); }
  const std::vector<std::size_t>& parents(std::size_t i) const { return parents_.at(i); }
  std::optional<std::size_t> find(const IndexSet& generators) const;
  std::optional<std::size_t> top() const;
  std::optional<std::size_t> bottom() const;
  std::vector<std::size_t> maximal_faces() const;
  std::size_t num_vertices() const { return nv_; }
  std::size_t num_generators() const { return nv_ + nr_; }

  // Incidence of the parent's inequality rows (in hrep order, equations skipped).
  const std::vector<IndexSet>& row_incidence() const { return rows_; }
  // Smallest face of the parent polyhedron containing the given generators.
  IndexSet closure(const IndexSet& generators) const;
  // Inequality rows (indices into row_incidence) tight on face i.
  std::vector<std::size_t> tight_rows(std::size_t i) const;

  Face make_face(const IndexSet& generators, int dim) const;
  IndexSet to_generators(const Face& f) const;

  FaceLattice subcomplex(const std::function<bool(std::size_t)>& keep) const;

  friend FaceLattice face_lattice(const Polyhedron& p, std::size_t max_faces);

 private:
  std::shared_ptr<const Polyhedron> poly_;
  std::size_t nv_ = 0, nr_ = 0;
  std::vector<IndexSet> rows_;
  std::vector<Face> faces_;
  std::vector<IndexSet> gens_;
  std::vector<std::vector<std::size_t>> children_, parents_;
  std::unordered_map<IndexSet, std::size_t, IndexSetHash> index_;

  void rebuild_index();
};

FaceLattice face_lattice(const Polyhedron& p, std::size_t max_faces = max_faces_limit());

RationalVector relint_point(const Face& f, const Polyhedron& parent);
// The face as a polyhedron carrying both representations.
Polyhedron face_polyhedron(const Face& f, const Polyhedron& parent);

FaceLattice deletion(const FaceLattice& lattice, const IndexSet& forbidden_vertices);
FaceLattice deletion(const FaceLattice& lattice, const Face& forbidden);
FaceLattice bounded_subcomplex(const FaceLattice& lattice);

}  // namespace rotaplex

#endif
