#include "rotaplex/dd.hpp"

#include <stdexcept>

#include "rotaplex/linalg.hpp"

namespace rotaplex::dd {

Integer idot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

static std::size_t int_rank(const std::vector<IntVector>& m) { return rank(m); }

State::State(std::size_t dim, std::vector<IntVector> rows, std::vector<IntVector> rays,
             std::size_t cone_dim, std::size_t total_rows)
    : dim_(dim), total_(total_rows), rows_(std::move(rows)), rays_(std::move(rays)),
      cone_dim_(cone_dim) {
  if (total_ < rows_.size()) total_ = rows_.size();
  zero_.reserve(rays_.size());
  for (const auto& r : rays_) {
    IndexSet z(total_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      int s = sgn(idot(rows_[i], r));
      if (s < 0) throw std::logic_error("dd::State: ray violates a seed row");
      if (s == 0) z.insert(i);
    }
    zero_.push_back(std::move(z));
  }
}

void State::add_row(const IntVector& row) {
  const std::size_t idx = rows_.size();
  if (idx >= total_) {
    // Grow the universe of every zero set.
    std::size_t nt = total_ * 2 + 8;
    for (auto& z : zero_) {
      IndexSet g(nt);
      for (auto i : z.to_vector()) g.insert(i);
      z = std::move(g);
    }
    total_ = nt;
  }
  rows_.push_back(row);
  std::vector<Integer> val(rays_.size());
  std::vector<std::size_t> pos, neg, zer;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    val[i] = idot(row, rays_[i]);
    int s = sgn(val[i]);
    if (s > 0)
      pos.push_back(i);
    else if (s < 0)
      neg.push_back(i);
    else
      zer.push_back(i);
  }
  if (neg.empty()) {
    for (auto i : zer) zero_[i].insert(idx);
    return;
  }
  std::vector<IntVector> new_rays;
  std::vector<IndexSet> new_zero;
  for (auto i : pos) {
    new_rays.push_back(rays_[i]);
    new_zero.push_back(zero_[i]);
  }
  for (auto i : zer) {
    new_rays.push_back(rays_[i]);
    IndexSet z = zero_[i];
    z.insert(idx);
    new_zero.push_back(std::move(z));
  }
  const std::size_t need = cone_dim_ >= 2 ? cone_dim_ - 2 : 0;
  for (auto p : pos) {
    for (auto q : neg) {
      IndexSet z = zero_[p] & zero_[q];
      if (z.count() < need) continue;
      bool adjacent = true;
      for (std::size_t r = 0; r < rays_.size() && adjacent; ++r) {
        if (r == p || r == q) continue;
        if (z.subset_of(zero_[r])) adjacent = false;
      }
      if (!adjacent) continue;
      IntVector nr(dim_);
      Integer vp = val[p];
      Integer vq = -val[q];
      for (std::size_t k = 0; k < dim_; ++k) nr[k] = vp * rays_[q][k] + vq * rays_[p][k];
      make_primitive(nr);
      z.insert(idx);
      new_rays.push_back(std::move(nr));
      new_zero.push_back(std::move(z));
    }
  }
  rays_ = std::move(new_rays);
  zero_ = std::move(new_zero);
  if (pos.empty()) cone_dim_ = int_rank(rays_);
}

ConeGenerators cone_generators(std::size_t dim, const std::vector<IntVector>& ineq,
                               const std::vector<IntVector>& eq) {
  ConeGenerators out;
  // Parametrize {E y = 0} as y = K w.
  std::vector<RationalVector> kbasis;
  if (eq.empty()) {
    for (std::size_t i = 0; i < dim; ++i) kbasis.push_back(unit_vector(dim, i));
  } else {
    RationalMatrix em;
    for (const auto& r : eq) em.push_back(to_rational(r));
    kbasis = kernel_basis(em, dim);
  }
  std::vector<IntVector> K;
  for (const auto& v : kbasis) K.push_back(primitive_integer(v));
  const std::size_t k = K.size();
  if (k == 0) return out;

  // Rows in w coordinates.
  std::vector<IntVector> A;
  for (const auto& r : ineq) {
    IntVector w(k);
    bool nz = false;
    for (std::size_t j = 0; j < k; ++j) {
      w[j] = idot(r, K[j]);
      if (sgn(w[j]) != 0) nz = true;
    }
    if (!nz) continue;
    make_primitive(w);
    A.push_back(std::move(w));
  }
  auto lift = [&](const IntVector& w, const std::vector<IntVector>& basis) {
    IntVector y(basis.empty() ? 0 : basis[0].size(), Integer(0));
    for (std::size_t j = 0; j < w.size(); ++j)
      if (sgn(w[j]) != 0)
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += w[j] * basis[j][i];
    return y;
  };

  // Lineality in w-space: ker A.
  std::vector<RationalVector> lin_w;
  if (A.empty()) {
    for (std::size_t i = 0; i < k; ++i) lin_w.push_back(unit_vector(k, i));
  } else {
    RationalMatrix am;
    for (const auto& r : A) am.push_back(to_rational(r));
    lin_w = kernel_basis(am, k);
  }
  for (const auto& l : lin_w) {
    IntVector y = lift(primitive_integer(l), K);
    make_primitive(y);
    out.lineality.push_back(std::move(y));
  }
  // Complement of the lineality inside w-space: w = W u.
  std::vector<RationalVector> wbasis = orthogonal_complement(lin_w, k);
  if (lin_w.empty()) {
    wbasis.clear();
    for (std::size_t i = 0; i < k; ++i) wbasis.push_back(unit_vector(k, i));
  }
  std::vector<IntVector> W;
  for (const auto& v : wbasis) W.push_back(primitive_integer(v));
  const std::size_t u = W.size();
  if (u == 0) return out;
  std::vector<IntVector> Au;
  for (const auto& r : A) {
    IntVector x(u);
    bool nz = false;
    for (std::size_t j = 0; j < u; ++j) {
      x[j] = idot(r, W[j]);
      if (sgn(x[j]) != 0) nz = true;
    }
    if (!nz) continue;
    make_primitive(x);
    Au.push_back(std::move(x));
  }
  // Pointed cone {u : Au u >= 0} of full rank u: start from a simplicial cone.
  std::vector<std::size_t> basis_rows;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < Au.size() && basis_rows.size() < u; ++i) {
    chosen.push_back(Au[i]);
    if (int_rank(chosen) == chosen.size()) {
      basis_rows.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (basis_rows.size() != u) throw std::logic_error("dd: pointed cone without full rank rows");
  RationalMatrix B;
  for (auto i : basis_rows) B.push_back(to_rational(Au[i]));
  std::vector<IntVector> rays;
  for (std::size_t j = 0; j < u; ++j) {
    auto col = solve(B, unit_vector(u, j), u);
    rays.push_back(primitive_integer(*col));
  }
  std::vector<IntVector> seed_rows;
  for (auto i : basis_rows) seed_rows.push_back(Au[i]);
  State st(u, seed_rows, rays, u, Au.size());
  std::vector<bool> used(Au.size(), false);
  for (auto i : basis_rows) used[i] = true;
  for (std::size_t i = 0; i < Au.size(); ++i) {
    if (!used[i]) st.add_row(Au[i]);
  }
  for (const auto& r : st.rays()) {
    IntVector w = lift(r, W);
    IntVector y = lift(w, K);
    make_primitive(y);
    out.rays.push_back(std::move(y));
  }
  return out;
}

}  // namespace rotaplex::dd
