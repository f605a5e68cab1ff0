#ifndef ROTAPLEX_LINALG_HPP
#define ROTAPLEX_LINALG_HPP

#include <optional>

#include "rotaplex/rational.hpp"

namespace rotaplex {

// Rank over Q by fraction-free (Bareiss) elimination. `cols` is needed for
// matrices with no rows.
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const std::vector<IntVector>& m);

struct Rref {
  RationalMatrix rows;               // nonzero rows only, leading entries 1
  std::vector<std::size_t> pivots;   // pivot column of each row
};
Rref rref(const RationalMatrix& m, std::size_t cols);

// One solution of M x = b with every free variable set to 0, or nullopt.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b,
                                    std::size_t cols);
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

// Basis of {x : M x = 0}, one vector per free column in increasing order,
// with a 1 in that column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m, std::size_t cols);
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Orthogonal projection of x onto span(basis). Throws on a dependent basis.
RationalVector orth_project(const std::vector<RationalVector>& basis, const RationalVector& x);

// Matrix of the orthogonal projection onto span(basis) (cols x cols).
RationalMatrix projection_matrix(const std::vector<RationalVector>& basis, std::size_t cols);

// Canonical basis of the orthogonal complement of span(vectors) in Q^cols.
std::vector<RationalVector> orthogonal_complement(const std::vector<RationalVector>& vectors,
                                                  std::size_t cols);

// Affine dimension of a point set together with direction vectors; -1 if empty.
int affine_dimension(const std::vector<RationalVector>& points,
                     const std::vector<RationalVector>& directions = {});

}  // namespace rotaplex

#endif
