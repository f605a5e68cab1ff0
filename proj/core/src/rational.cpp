#include "rotaplex/rational.hpp"

#include <algorithm>

namespace rotaplex {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
  if (t.empty() || q.set_str(t, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n, Rational(0)); }

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

static void check_same(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector dimension mismatch");
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  check_same(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  RationalVector r = a;
  r += b;
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  RationalVector r = a;
  r -= b;
  return r;
}

RationalVector operator-(const RationalVector& a) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RationalVector& operator+=(RationalVector& a, const RationalVector& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

RationalVector& operator-=(RationalVector& a, const RationalVector& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& x) {
  RationalVector r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
  return r;
}

RationalMatrix transpose(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix t(cols, RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols) throw DimensionError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

RationalMatrix transpose(const RationalMatrix& m) {
  return transpose(m, m.empty() ? 0 : m[0].size());
}

IntVector primitive_integer(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector r(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

RationalVector normalize_direction(const RationalVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      Rational s = abs(x);
      RationalVector r(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / s;
      return r;
    }
  }
  return v;
}

int lex_compare(const RationalVector& a, const RationalVector& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

bool lex_less(const RationalVector& a, const RationalVector& b) { return lex_compare(a, b) < 0; }

std::size_t RationalVectorHash::operator()(const RationalVector& v) const {
  std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
  for (const auto& x : v) {
    std::size_t k = mpz_get_ui(x.get_num_mpz_t()) * 31 + mpz_get_ui(x.get_den_mpz_t());
    if (sgn(x) < 0) k = ~k;
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace rotaplex
