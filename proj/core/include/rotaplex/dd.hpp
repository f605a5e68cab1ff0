#ifndef ROTAPLEX_DD_HPP
#define ROTAPLEX_DD_HPP

#include <vector>

#include "rotaplex/index_set.hpp"
#include "rotaplex/rational.hpp"

namespace rotaplex::dd {

// Generators of a polyhedral cone {y : A y >= 0, E y = 0} as primitive
// integer vectors.
struct ConeGenerators {
  std::vector<IntVector> rays;       // extreme rays of the pointed part
  std::vector<IntVector> lineality;  // basis of the lineality space
};

ConeGenerators cone_generators(std::size_t dim, const std::vector<IntVector>& ineq,
                               const std::vector<IntVector>& eq);

// Incremental state for cutting a known pointed cone by further halfspaces.
class State {
 public:
  // rows: inequality rows already satisfied by all rays (row . ray >= 0),
  // defining the cone together with implicit equations.
  State(std::size_t dim, std::vector<IntVector> rows, std::vector<IntVector> rays,
        std::size_t cone_dim, std::size_t total_rows);

  void add_row(const IntVector& row);

  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IndexSet>& zero_sets() const { return zero_; }
  const std::vector<IntVector>& rows() const { return rows_; }
  std::size_t cone_dim() const { return cone_dim_; }

 private:
  std::size_t dim_;
  std::size_t total_;
  std::vector<IntVector> rows_;
  std::vector<IntVector> rays_;
  std::vector<IndexSet> zero_;
  std::size_t cone_dim_;
};

Integer idot(const IntVector& a, const IntVector& b);
void make_primitive(IntVector& v);

}  // namespace rotaplex::dd

#endif
