#include "rotaplex/families.hpp"

#include <algorithm>
#include <numeric>

#include "rotaplex/polar.hpp"

namespace rotaplex {

EdgeIndex::EdgeIndex(std::size_t n) : n_(n), lookup_(n * n, 0) {
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      lookup_[u * n + v] = lookup_[v * n + u] = pairs_.size();
      pairs_.emplace_back(u, v);
    }
}

std::size_t EdgeIndex::index(std::size_t u, std::size_t v) const {
  if (u == v || u >= n_ || v >= n_) throw FamilyError("EdgeIndex: not an edge");
  return lookup_[u * n_ + v];
}

namespace {

std::vector<LinearConstraint> line_sums(std::size_t n, Rel rel) {
  std::vector<LinearConstraint> rows;
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector r = zero_vector(n * n), c = zero_vector(n * n);
    for (std::size_t l = 0; l < n; ++l) {
      r[k * n + l] = 1;
      c[l * n + k] = 1;
    }
    rows.push_back({r, Rational(1), rel});
    rows.push_back({c, Rational(1), rel});
  }
  for (std::size_t i = 0; i < n * n; ++i) rows.push_back({unit_vector(n * n, i), Rational(0), Rel::GE});
  return rows;
}

}  // namespace

Polyhedron birkhoff(std::size_t n) {
  if (n == 0) throw FamilyError("birkhoff: n >= 1");
  return dd_convert(Polyhedron::from_hrep(n * n, line_sums(n, Rel::EQ), "birkhoff"));
}

Polyhedron matching_polytope(std::size_t n) {
  if (n == 0) throw FamilyError("matching: n >= 1");
  return dd_convert(Polyhedron::from_hrep(n * n, line_sums(n, Rel::LE), "matching"));
}

void check_orbit_weight(const RationalVector& w) {
  if (w.empty()) throw FamilyError("orbit weight: empty");
  if (std::all_of(w.begin(), w.end(), [&](const Rational& x) { return x == w[0]; }))
    throw FamilyError("orbit weight: entries all equal");
  Rational s = 0;
  for (const auto& x : w) s += x;
  const std::size_t n = w.size();
  if (s != Rational(static_cast<long>(n * (n + 1) / 2)))
    throw FamilyError("orbit weight: entries must sum to binom(n+1,2)");
}

Polyhedron orbit_polytope(const RationalVector& w) {
  check_orbit_weight(w);
  RationalVector s = w;
  std::sort(s.begin(), s.end());
  std::vector<RationalVector> pts;
  do pts.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return dd_convert(Polyhedron::from_vertices(w.size(), std::move(pts), "orbit"));
}

RationalVector onion_weights(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw FamilyError("onion_weights: need 1 <= r <= n");
  RationalVector w;
  for (std::size_t k = 1; k < r; ++k) w.emplace_back(static_cast<long>(k));
  w.emplace_back(2 * static_cast<long>(r) - static_cast<long>(n));
  for (std::size_t k = r + 2; k <= n + 1; ++k) w.emplace_back(static_cast<long>(k));
  return w;
}

Polyhedron permutahedron(std::size_t n) {
  if (n < 2) throw FamilyError("permutahedron: n >= 2");
  RationalVector w;
  for (std::size_t k = 1; k <= n; ++k) w.emplace_back(static_cast<long>(k));
  return orbit_polytope(w).with_name("permutahedron");
}

PolyhedralComplex split_face_fan(const Polyhedron& q) {
  if (!q.is_bounded()) throw FamilyError("split_face_fan: polytope expected");
  const std::size_t m = q.ambient_dim();
  const RationalVector o = zero_vector(m);
  if (!in_relint(q, o)) throw FamilyError("split_face_fan: origin not in the relative interior");
  std::vector<Cell> cells;
  std::size_t k = 0;
  for (const auto& row : q.inequalities()) {
    LinearConstraint h = as_le(row);
    std::vector<RationalVector> fv;
    for (const auto& v : q.vertices())
      if (h.tight_at(v)) fv.push_back(v);
    std::vector<RationalVector> inner = fv;
    inner.push_back(o);
    cells.push_back({dd_convert(Polyhedron::from_vertices(m, inner)), "in" + std::to_string(k)});
    cells.push_back({dd_convert(Polyhedron::from_vrep(m, VRep{fv, fv, {}})), "out" + std::to_string(k)});
    ++k;
  }
  return PolyhedralComplex::from_maximal(m, std::move(cells));
}

std::vector<RationalVector> hamiltonian_cycles(std::size_t n) {
  if (n < 3) throw FamilyError("hamiltonian_cycles: n >= 3");
  EdgeIndex E(n);
  std::vector<std::size_t> p(n - 1);
  std::iota(p.begin(), p.end(), 1);
  std::vector<RationalVector> out;
  do {
    if (p.front() > p.back()) continue;  // each cycle once per orientation
    RationalVector x = zero_vector(E.size());
    std::size_t prev = 0;
    for (auto v : p) {
      x[E.index(prev, v)] = 1;
      prev = v;
    }
    x[E.index(prev, 0)] = 1;
    out.push_back(std::move(x));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Polyhedron stsp(std::size_t n) {
  return dd_convert(Polyhedron::from_vertices(EdgeIndex(n).size(), hamiltonian_cycles(n), "stsp"));
}

namespace {

bool connected_support(const EdgeIndex& E, const std::vector<int>& x) {
  const std::size_t n = E.n();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::size_t comps = n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    auto [u, v] = E.pair(i);
    auto a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace

Polyhedron gtsp(std::size_t n) {
  if (n < 3 || n > 7) throw FamilyError("gtsp: n must be in 3..7");
  EdgeIndex E(n);
  const std::size_t m = E.size();
  // For each vertex, the last edge index incident to it: parity is fixed there.
  std::vector<std::size_t> last(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    auto [u, v] = E.pair(i);
    last[u] = std::max(last[u], i);
    last[v] = std::max(last[v], i);
  }
  std::vector<std::vector<int>> found;
  std::vector<int> x(m, 0), deg(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      if (connected_support(E, x)) found.push_back(x);
      return;
    }
    auto [u, v] = E.pair(i);
    for (int val = 0; val <= 2; ++val) {
      x[i] = val;
      deg[u] += val;
      deg[v] += val;
      bool ok = !(last[u] == i && deg[u] % 2) && !(last[v] == i && deg[v] % 2);
      if (ok) self(self, i + 1);
      deg[u] -= val;
      deg[v] -= val;
    }
    x[i] = 0;
  };
  rec(rec, 0);
  // Keep componentwise-minimal points; the others are dominated via the rays.
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  std::vector<std::vector<int>> minimal;
  for (const auto& p : found) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const auto& y) {
      for (std::size_t i = 0; i < m; ++i)
        if (y[i] > p[i]) return false;
      return true;
    });
    if (!dominated) minimal.push_back(p);
  }
  VRep v;
  for (const auto& p : minimal) {
    RationalVector r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = p[i];
    v.vertices.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < m; ++i) v.rays.push_back(unit_vector(m, i));
  return dd_convert(Polyhedron::from_vrep(m, std::move(v), "gtsp"));
}

RotationContext birkhoff_context(std::size_t n) {
  if (n < 2) throw FamilyError("birkhoff_context: n >= 2");
  Polyhedron P = matching_polytope(n);
  Polyhedron B = birkhoff(n);
  RationalVector c(n * n, ratio(1, static_cast<unsigned long>(n + 1)));
  RationalVector z(n * n, ratio(1, static_cast<unsigned long>(n)));
  return make_context(P, B.vertices(), PolarConvention::StandardLe, z, c);
}

RotationContext permutahedron_face_context(std::size_t n) {
  if (n < 2) throw FamilyError("permutahedron_face_context: n >= 2");
  Polyhedron P = permutahedron(n + 1);
  std::vector<RationalVector> sv;
  for (const auto& v : P.vertices())
    if (v.back() == Rational(static_cast<long>(n + 1))) sv.push_back(v);
  return make_context(P, sv, PolarConvention::StandardLe);
}

RotationContext tsp_context(std::size_t n) {
  Polyhedron P = gtsp(n);
  RationalVector z(EdgeIndex(n).size(), ratio(2, static_cast<unsigned long>(n - 1)));
  return make_context(P, hamiltonian_cycles(n), PolarConvention::BlockingGe, z);
}

Polyhedron onion_polar(const RotationContext& ctx, std::size_t n, std::size_t r) {
  Polyhedron s = orbit_polytope(onion_weights(n, r));
  std::vector<RationalVector> pts;
  for (auto v : s.vertices()) {
    v.emplace_back(static_cast<long>(n + 1));
    pts.push_back(std::move(v));
  }
  Polyhedron emb = dd_convert(Polyhedron::from_vertices(n + 1, std::move(pts)));
  return polar(emb, PolarConvention::StandardLe, ctx.z);
}

}  // namespace rotaplex
