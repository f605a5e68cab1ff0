#include "rotaplex/polyhedron.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "rotaplex/dd.hpp"
#include "rotaplex/linalg.hpp"

namespace rotaplex {

namespace {

void check_dim(const RationalVector& v, std::size_t d, const char* what) {
  if (v.size() != d) throw DimensionError(std::string(what) + ": dimension mismatch");
}

// Reduce v modulo an echelon basis (leading 1 at the pivot column).
void reduce_mod(RationalVector& v, const RationalMatrix& ech, const std::vector<std::size_t>& piv) {
  for (std::size_t i = 0; i < ech.size(); ++i) {
    Rational f = v[piv[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(ech[i][j]) != 0) v[j] -= f * ech[i][j];
  }
}

void sort_unique(std::vector<RationalVector>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<IntVector> homogenized_generators(const VRep& v) {
  std::vector<IntVector> g;
  for (const auto& x : v.vertices) {
    RationalVector h;
    h.reserve(x.size() + 1);
    h.push_back(1);
    h.insert(h.end(), x.begin(), x.end());
    g.push_back(primitive_integer(h));
  }
  for (const auto& r : v.rays) {
    RationalVector h;
    h.push_back(0);
    h.insert(h.end(), r.begin(), r.end());
    g.push_back(primitive_integer(h));
  }
  return g;
}

// Row a.x <= b as homogenized (b, -a) >= 0.
IntVector homogenized_row(const LinearConstraint& c) {
  LinearConstraint le = as_le(c);
  RationalVector h;
  h.push_back(le.b);
  for (const auto& x : le.a) h.push_back(-x);
  return primitive_integer(h);
}

}  // namespace

Polyhedron Polyhedron::from_hrep(std::size_t ambient_dim, std::vector<LinearConstraint> rows,
                                 std::string name) {
  for (const auto& r : rows) check_dim(r.a, ambient_dim, "from_hrep");
  Polyhedron p;
  p.ambient_dim_ = ambient_dim;
  p.has_h_ = true;
  p.h_ = std::move(rows);
  p.name_ = std::move(name);
  return p;
}

Polyhedron Polyhedron::from_vrep(std::size_t ambient_dim, VRep v, std::string name) {
  for (const auto& x : v.vertices) check_dim(x, ambient_dim, "from_vrep");
  for (const auto& x : v.rays) check_dim(x, ambient_dim, "from_vrep");
  for (const auto& x : v.lineality) check_dim(x, ambient_dim, "from_vrep");
  Polyhedron p;
  p.ambient_dim_ = ambient_dim;
  p.has_v_ = true;
  p.v_ = std::move(v);
  std::vector<RationalVector> dirs = p.v_.rays;
  dirs.insert(dirs.end(), p.v_.lineality.begin(), p.v_.lineality.end());
  p.dim_ = affine_dimension(p.v_.vertices, dirs);
  p.name_ = std::move(name);
  return p;
}

Polyhedron Polyhedron::from_vertices(std::size_t ambient_dim, std::vector<RationalVector> vertices,
                                     std::string name) {
  VRep v;
  v.vertices = std::move(vertices);
  return from_vrep(ambient_dim, std::move(v), std::move(name));
}

Polyhedron Polyhedron::from_both(std::size_t ambient_dim, std::vector<LinearConstraint> rows,
                                 VRep v, std::string name) {
  Polyhedron p = from_vrep(ambient_dim, std::move(v), std::move(name));
  for (const auto& r : rows) check_dim(r.a, ambient_dim, "from_both");
  p.has_h_ = true;
  p.h_ = std::move(rows);
  return p;
}

const std::vector<LinearConstraint>& Polyhedron::hrep() const {
  if (!has_h_) throw std::logic_error("polyhedron has no H-representation (call dd_convert)");
  return h_;
}

const VRep& Polyhedron::vrep() const {
  if (!has_v_) throw std::logic_error("polyhedron has no V-representation (call dd_convert)");
  return v_;
}

int Polyhedron::dim() const {
  vrep();
  return dim_;
}

bool Polyhedron::is_bounded() const { return vrep().rays.empty() && vrep().lineality.empty(); }

bool Polyhedron::contains(const RationalVector& x) const {
  check_dim(x, ambient_dim_, "contains");
  for (const auto& r : hrep())
    if (!r.satisfied_by(x)) return false;
  return true;
}

std::vector<LinearConstraint> Polyhedron::equations() const {
  std::vector<LinearConstraint> out;
  for (const auto& r : hrep())
    if (r.rel == Rel::EQ) out.push_back(r);
  return out;
}

std::vector<LinearConstraint> Polyhedron::inequalities() const {
  std::vector<LinearConstraint> out;
  for (const auto& r : hrep())
    if (r.rel != Rel::EQ) out.push_back(r);
  return out;
}

Polyhedron Polyhedron::with_name(std::string name) const {
  Polyhedron p = *this;
  p.name_ = std::move(name);
  return p;
}

bool Polyhedron::same_point_set(const Polyhedron& o) const {
  if (ambient_dim_ != o.ambient_dim_) return false;
  VRep a = canonical_vrep(ambient_dim_, vrep());
  VRep b = canonical_vrep(ambient_dim_, o.vrep());
  return a.vertices == b.vertices && a.rays == b.rays && a.lineality == b.lineality;
}

VRep canonical_vrep(std::size_t d, VRep v) {
  VRep out;
  Rref lin = rref(v.lineality, d);
  out.lineality = lin.rows;
  for (auto r : v.rays) {
    reduce_mod(r, lin.rows, lin.pivots);
    if (is_zero(r)) continue;
    out.rays.push_back(normalize_direction(r));
  }
  for (auto x : v.vertices) {
    reduce_mod(x, lin.rows, lin.pivots);
    out.vertices.push_back(std::move(x));
  }
  sort_unique(out.rays);
  sort_unique(out.vertices);
  return out;
}

std::vector<LinearConstraint> irredundant_hrep(std::size_t d, const VRep& v,
                                               const std::vector<LinearConstraint>& candidates) {
  std::vector<LinearConstraint> out;
  if (v.vertices.empty()) {
    out.push_back(LinearConstraint{zero_vector(d), Rational(-1), Rel::LE});
    return out;
  }
  // Equations: (c, c0) with c.x = c0 on vertices, c.r = 0 on rays/lineality.
  RationalMatrix gm;
  for (const auto& x : v.vertices) {
    RationalVector row = x;
    row.push_back(-1);
    gm.push_back(std::move(row));
  }
  for (const auto* list : {&v.rays, &v.lineality}) {
    for (const auto& r : *list) {
      RationalVector row = r;
      row.push_back(0);
      gm.push_back(std::move(row));
    }
  }
  Rref eqs = rref(kernel_basis(gm, d + 1), d + 1);
  for (const auto& e : eqs.rows) {
    RationalVector a(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(d));
    out.push_back(LinearConstraint{a, e[d], Rel::EQ});
  }
  // Inequalities: keep facet-defining rows.
  std::vector<IntVector> gens = homogenized_generators(v);
  std::vector<IntVector> lin;
  for (const auto& l : v.lineality) {
    RationalVector h;
    h.push_back(0);
    h.insert(h.end(), l.begin(), l.end());
    lin.push_back(primitive_integer(h));
  }
  std::vector<IntVector> all = gens;
  all.insert(all.end(), lin.begin(), lin.end());
  const std::size_t cone_dim = rank(all);
  std::set<std::vector<std::size_t>> seen;
  std::vector<LinearConstraint> ineq;
  for (const auto& c : candidates) {
    if (c.rel == Rel::EQ) continue;
    IntVector h = homogenized_row(c);
    std::vector<std::size_t> tight;
    std::vector<IntVector> tg = lin;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int s = sgn(dd::idot(h, gens[i]));
      if (s < 0) throw std::logic_error("irredundant_hrep: candidate row violated by a generator");
      if (s == 0) {
        tight.push_back(i);
        tg.push_back(gens[i]);
      }
    }
    if (tight.size() == gens.size()) continue;
    if (rank(tg) + 1 != cone_dim) continue;
    if (!seen.insert(tight).second) continue;
    LinearConstraint le = as_le(c);
    RationalVector ab = le.a;
    ab.push_back(-le.b);
    // Reduce (a, -b) modulo equation rows (c, -c0) to get a unique representative.
    RationalMatrix ech;
    for (const auto& e : eqs.rows) {
      RationalVector row(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(d));
      row.push_back(-e[d]);
      ech.push_back(std::move(row));
    }
    reduce_mod(ab, ech, eqs.pivots);
    LinearConstraint r{RationalVector(ab.begin(), ab.begin() + static_cast<std::ptrdiff_t>(d)),
                       -ab[d], Rel::LE};
    ineq.push_back(canonical(r));
  }
  std::sort(ineq.begin(), ineq.end(), constraint_less);
  out.insert(out.end(), ineq.begin(), ineq.end());
  return out;
}

namespace {

VRep vrep_from_cone(std::size_t d, const dd::ConeGenerators& g) {
  VRep v;
  for (const auto& r : g.rays) {
    if (sgn(r[0]) > 0) {
      RationalVector x(d);
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = Rational(r[i + 1], r[0]);
        x[i].canonicalize();
      }
      v.vertices.push_back(std::move(x));
    } else {
      RationalVector x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = Rational(r[i + 1]);
      v.rays.push_back(std::move(x));
    }
  }
  for (const auto& l : g.lineality) {
    RationalVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = Rational(l[i + 1]);
    v.lineality.push_back(std::move(x));
  }
  return v;
}

std::optional<Polyhedron> h_to_both(const Polyhedron& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<IntVector> ineq, eq;
  for (const auto& c : p.hrep()) {
    if (c.rel == Rel::EQ) {
      RationalVector h;
      h.push_back(-c.b);
      h.insert(h.end(), c.a.begin(), c.a.end());
      eq.push_back(primitive_integer(h));
    } else {
      ineq.push_back(homogenized_row(c));
    }
  }
  IntVector t(d + 1, Integer(0));
  t[0] = 1;
  ineq.push_back(t);
  VRep v = vrep_from_cone(d, dd::cone_generators(d + 1, ineq, eq));
  if (v.vertices.empty()) return std::nullopt;
  v = canonical_vrep(d, std::move(v));
  auto rows = irredundant_hrep(d, v, p.hrep());
  return Polyhedron::from_both(d, std::move(rows), std::move(v), p.name());
}

Polyhedron v_to_both(const Polyhedron& p) {
  const std::size_t d = p.ambient_dim();
  VRep v = canonical_vrep(d, p.vrep());
  if (v.vertices.empty()) throw EmptyPolyhedronError();
  std::vector<IntVector> gens = homogenized_generators(v);
  std::vector<IntVector> lin;
  for (const auto& l : v.lineality) {
    RationalVector h;
    h.push_back(0);
    h.insert(h.end(), l.begin(), l.end());
    lin.push_back(primitive_integer(h));
  }
  dd::ConeGenerators dual = dd::cone_generators(d + 1, gens, lin);
  // Drop generators that are not extreme: the tight dual rays plus the dual
  // lineality must have rank d - dim(lineality).
  {
    const std::size_t target = d - v.lineality.size();
    VRep kept;
    kept.lineality = v.lineality;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<IntVector> tight = dual.lineality;
      for (const auto& h : dual.rays)
        if (sgn(dd::idot(h, gens[i])) == 0) tight.push_back(h);
      if (rank(tight) != target) continue;
      if (i < v.vertices.size()) kept.vertices.push_back(v.vertices[i]);
      else kept.rays.push_back(v.rays[i - v.vertices.size()]);
    }
    v = std::move(kept);
  }
  std::vector<LinearConstraint> facets;
  for (const auto& h : dual.rays) {
    RationalVector a(d);
    bool nz = false;
    for (std::size_t i = 0; i < d; ++i) {
      a[i] = Rational(-h[i + 1]);
      if (sgn(a[i]) != 0) nz = true;
    }
    if (!nz) continue;
    facets.push_back(LinearConstraint{a, Rational(h[0]), Rel::LE});
  }
  // Extreme rays of the dual cone are exactly the facets; irredundant_hrep
  // then only canonicalizes them and adds equations.
  auto rows = irredundant_hrep(d, v, facets);
  return Polyhedron::from_both(d, std::move(rows), std::move(v), p.name());
}

}  // namespace

std::optional<Polyhedron> dd_convert_nonempty(const Polyhedron& p) {
  if (p.has_vrep()) {
    if (p.vrep().vertices.empty()) return std::nullopt;
    if (p.has_hrep()) return p;
    return v_to_both(p);
  }
  return h_to_both(p);
}

Polyhedron dd_convert(const Polyhedron& p) {
  auto r = dd_convert_nonempty(p);
  if (!r) throw EmptyPolyhedronError();
  return *r;
}

std::optional<Polyhedron> intersect(const Polyhedron& k, const std::vector<LinearConstraint>& rows) {
  const std::size_t d = k.ambient_dim();
  for (const auto& r : rows) check_dim(r.a, d, "intersect");
  if (!k.has_vrep() || !k.has_hrep() || !k.is_pointed()) {
    std::vector<LinearConstraint> all = k.hrep();
    all.insert(all.end(), rows.begin(), rows.end());
    return dd_convert_nonempty(Polyhedron::from_hrep(d, all, k.name()));
  }
  if (k.vertices().empty()) return std::nullopt;
  // Quick exits: all generators satisfy every new row, or some row cuts off everything.
  bool all_ok = true;
  for (const auto& r : rows) {
    bool below = false, above = false, on = false;
    for (const auto& x : k.vertices()) {
      int c = cmp(dot(r.a, x), r.b);
      (c < 0 ? below : (c > 0 ? above : on)) = true;
    }
    bool ray_down = false, ray_up = false;
    for (const auto& ray : k.rays()) {
      int s = sgn(dot(r.a, ray));
      if (s < 0) ray_down = true;
      if (s > 0) ray_up = true;
    }
    bool reach_le = below || on || ray_down;
    bool reach_ge = above || on || ray_up;
    bool reach = r.rel == Rel::LE ? reach_le : (r.rel == Rel::GE ? reach_ge : (reach_le && reach_ge));
    if (!reach) return std::nullopt;
    bool keeps = r.rel == Rel::LE ? !(above || ray_up)
                                  : (r.rel == Rel::GE ? !(below || ray_down)
                                                      : !(above || below || ray_up || ray_down));
    if (!keeps) all_ok = false;
  }
  if (all_ok) return k;

  std::vector<IntVector> seed;
  for (const auto& c : k.hrep())
    if (c.rel != Rel::EQ) seed.push_back(homogenized_row(c));
  IntVector t(d + 1, Integer(0));
  t[0] = 1;
  seed.push_back(t);
  std::vector<IntVector> gens = homogenized_generators(k.vrep());
  std::size_t extra = 0;
  for (const auto& r : rows) extra += (r.rel == Rel::EQ) ? 2 : 1;
  dd::State st(d + 1, seed, gens, static_cast<std::size_t>(k.dim() + 1), seed.size() + extra);
  std::vector<LinearConstraint> candidates = k.hrep();
  for (const auto& r : rows) {
    if (r.rel == Rel::EQ) {
      st.add_row(homogenized_row(LinearConstraint{r.a, r.b, Rel::LE}));
      st.add_row(homogenized_row(LinearConstraint{r.a, r.b, Rel::GE}));
    } else {
      st.add_row(homogenized_row(r));
      candidates.push_back(r);
    }
  }
  dd::ConeGenerators g;
  g.rays = st.rays();
  VRep v = vrep_from_cone(d, g);
  if (v.vertices.empty()) return std::nullopt;
  v = canonical_vrep(d, std::move(v));
  auto h = irredundant_hrep(d, v, candidates);
  return Polyhedron::from_both(d, std::move(h), std::move(v), k.name());
}

std::optional<Polyhedron> intersect(const Polyhedron& a, const Polyhedron& b) {
  return intersect(a, b.hrep());
}

Polyhedron translate(const Polyhedron& p, const RationalVector& shift) {
  check_dim(shift, p.ambient_dim(), "translate");
  std::optional<VRep> v;
  std::optional<std::vector<LinearConstraint>> h;
  if (p.has_vrep()) {
    VRep nv = p.vrep();
    for (auto& x : nv.vertices) x += shift;
    v = std::move(nv);
  }
  if (p.has_hrep()) {
    std::vector<LinearConstraint> rows;
    for (const auto& c : p.hrep()) rows.push_back(canonical({c.a, c.b + dot(c.a, shift), c.rel}));
    h = std::move(rows);
  }
  if (v && h) return Polyhedron::from_both(p.ambient_dim(), *h, canonical_vrep(p.ambient_dim(), *v), p.name());
  if (v) return Polyhedron::from_vrep(p.ambient_dim(), *v, p.name());
  return Polyhedron::from_hrep(p.ambient_dim(), *h, p.name());
}

RationalVector relint_point(const Polyhedron& p) {
  const auto& v = p.vrep();
  if (v.vertices.empty()) throw EmptyPolyhedronError();
  RationalVector x = zero_vector(p.ambient_dim());
  for (const auto& y : v.vertices) x += y;
  x = ratio(1, static_cast<unsigned long>(v.vertices.size())) * x;
  for (const auto& r : v.rays) x += r;
  return x;
}

std::optional<Rational> max_over(const Polyhedron& p, const RationalVector& c) {
  const auto& v = p.vrep();
  for (const auto& r : v.rays)
    if (sgn(dot(c, r)) > 0) return std::nullopt;
  for (const auto& l : v.lineality)
    if (sgn(dot(c, l)) != 0) return std::nullopt;
  if (v.vertices.empty()) throw EmptyPolyhedronError();
  Rational best = dot(c, v.vertices[0]);
  for (const auto& x : v.vertices) best = std::max(best, Rational(dot(c, x)));
  return best;
}

}  // namespace rotaplex
