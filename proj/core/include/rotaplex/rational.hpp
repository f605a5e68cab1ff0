#ifndef ROTAPLEX_RATIONAL_HPP
#define ROTAPLEX_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotaplex {

// Arithmetic results are canonical; the two-argument mpq_class constructor is
// not, so build fractions through ratio().
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntVector = std::vector<Integer>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);
Rational parse_rational(const std::string& s);
Rational ratio(const Integer& num, const Integer& den);

RationalVector zero_vector(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector operator*(const Rational& s, const RationalVector& v);
RationalVector& operator+=(RationalVector& a, const RationalVector& b);
RationalVector& operator-=(RationalVector& a, const RationalVector& b);

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& x);
RationalMatrix transpose(const RationalMatrix& m, std::size_t cols);
RationalMatrix transpose(const RationalMatrix& m);

// Smallest positive multiple of v with integer entries and gcd 1.
IntVector primitive_integer(const RationalVector& v);
RationalVector to_rational(const IntVector& v);
// Scale v by a positive factor so the first nonzero entry has absolute value 1.
RationalVector normalize_direction(const RationalVector& v);

// Lexicographic comparison, used for canonical orderings.
bool lex_less(const RationalVector& a, const RationalVector& b);
int lex_compare(const RationalVector& a, const RationalVector& b);

struct RationalVectorHash {
  std::size_t operator()(const RationalVector& v) const;
};

}  // namespace rotaplex

#endif
