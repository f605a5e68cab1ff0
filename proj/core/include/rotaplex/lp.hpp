#ifndef ROTAPLEX_LP_HPP
#define ROTAPLEX_LP_HPP

#include <optional>
#include <vector>

#include "rotaplex/constraint.hpp"

namespace rotaplex {

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;        // optimum (Optimal only)
  RationalVector point;  // a feasible point (Optimal, or Unbounded feasible point)
};

// Exact simplex over free variables x in Q^dim with Bland's rule.
// Maximizes objective . x subject to the constraints; an empty objective means
// feasibility only.
LpResult lp_solve(std::size_t dim, const std::vector<LinearConstraint>& constraints,
                  const RationalVector& objective = {});

bool lp_feasible(const std::vector<LinearConstraint>& constraints);
bool lp_feasible(std::size_t dim, const std::vector<LinearConstraint>& constraints);
std::optional<RationalVector> lp_feasible_point(std::size_t dim,
                                                const std::vector<LinearConstraint>& constraints);

}  // namespace rotaplex

#endif
