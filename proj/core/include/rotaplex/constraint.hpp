#ifndef ROTAPLEX_CONSTRAINT_HPP
#define ROTAPLEX_CONSTRAINT_HPP

#include <string>

#include "rotaplex/rational.hpp"

namespace rotaplex {

enum class Rel { LE, GE, EQ };

std::string to_string(Rel r);
Rel parse_rel(const std::string& s);

// a . x rel b
struct LinearConstraint {
  RationalVector a;
  Rational b;
  Rel rel = Rel::LE;

  bool satisfied_by(const RationalVector& x) const;
  // Value of the homogenized row on a direction: satisfied iff the recession
  // condition holds (a.r <= 0 for LE, >= 0 for GE, = 0 for EQ).
  bool satisfied_by_direction(const RationalVector& r) const;
  bool tight_at(const RationalVector& x) const { return dot(a, x) == b; }
  bool operator==(const LinearConstraint& o) const { return rel == o.rel && b == o.b && a == o.a; }
};

// Scale by a positive factor so the first nonzero of a is +-1; EQ rows are
// additionally sign-normalized to a leading +1.
LinearConstraint canonical(const LinearConstraint& c);
// Same inequality written as a . x <= b (GE rows are negated); EQ unchanged.
LinearConstraint as_le(const LinearConstraint& c);
bool constraint_less(const LinearConstraint& x, const LinearConstraint& y);

}  // namespace rotaplex

#endif
