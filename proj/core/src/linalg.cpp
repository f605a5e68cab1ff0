#include "rotaplex/linalg.hpp"

namespace rotaplex {

std::size_t rank(const std::vector<IntVector>& input) {
  if (input.empty()) return 0;
  std::vector<IntVector> a = input;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<IntVector> a;
  a.reserve(m.size());
  for (const auto& row : m) a.push_back(primitive_integer(row));
  return rank(a);
}

Rref rref(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix a = m;
  for (const auto& row : a) {
    if (row.size() != cols) throw DimensionError("rref: ragged matrix");
  }
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b,
                                    std::size_t cols) {
  if (m.size() != b.size()) throw DimensionError("solve: row count differs from rhs size");
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw DimensionError("solve: ragged matrix");
    aug[i].push_back(b[i]);
  }
  Rref r = rref(aug, cols + 1);
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (r.pivots[i] == cols) return std::nullopt;
    x[r.pivots[i]] = r.rows[i][cols];
  }
  return x;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  return solve(m, b, m.empty() ? 0 : m[0].size());
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m, std::size_t cols) {
  Rref r = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -r.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  if (m.empty()) throw DimensionError("kernel_basis: column count unknown for empty matrix");
  return kernel_basis(m, m[0].size());
}

RationalMatrix projection_matrix(const std::vector<RationalVector>& basis, std::size_t cols) {
  const std::size_t k = basis.size();
  RationalMatrix out(cols, RationalVector(cols, Rational(0)));
  if (k == 0) return out;
  RationalMatrix gram(k, RationalVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
  // Invert the Gram matrix column by column.
  RationalMatrix inv(k, RationalVector(k));
  for (std::size_t j = 0; j < k; ++j) {
    auto col = solve(gram, unit_vector(k, j), k);
    if (!col || rank(gram) < k) throw std::invalid_argument("orth_project: dependent basis");
    for (std::size_t i = 0; i < k; ++i) inv[i][j] = (*col)[i];
  }
  // P = B^T G^{-1} B
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(inv[i][j]) == 0) continue;
      for (std::size_t r = 0; r < cols; ++r) {
        if (sgn(basis[i][r]) == 0) continue;
        Rational f = basis[i][r] * inv[i][j];
        for (std::size_t c = 0; c < cols; ++c) {
          if (sgn(basis[j][c]) != 0) out[r][c] += f * basis[j][c];
        }
      }
    }
  }
  return out;
}

RationalVector orth_project(const std::vector<RationalVector>& basis, const RationalVector& x) {
  const std::size_t k = basis.size();
  if (k == 0) return zero_vector(x.size());
  RationalMatrix gram(k, RationalVector(k));
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], x);
  }
  if (rank(gram) < k) throw std::invalid_argument("orth_project: dependent basis");
  auto y = solve(gram, rhs, k);
  RationalVector out = zero_vector(x.size());
  for (std::size_t i = 0; i < k; ++i) out += (*y)[i] * basis[i];
  return out;
}

std::vector<RationalVector> orthogonal_complement(const std::vector<RationalVector>& vectors,
                                                  std::size_t cols) {
  if (vectors.empty()) {
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < cols; ++i) out.push_back(unit_vector(cols, i));
    return out;
  }
  return kernel_basis(vectors, cols);
}

int affine_dimension(const std::vector<RationalVector>& points,
                     const std::vector<RationalVector>& directions) {
  if (points.empty()) return -1;
  RationalMatrix m;
  for (std::size_t i = 1; i < points.size(); ++i) m.push_back(points[i] - points[0]);
  for (const auto& d : directions) m.push_back(d);
  return static_cast<int>(rank(m));
}

}  // namespace rotaplex
