#include "rotaplex/polar.hpp"

#include "rotaplex/linalg.hpp"

namespace rotaplex {

std::string to_string(PolarConvention c) {
  switch (c) {
    case PolarConvention::StandardLe: return "STANDARD_LE";
    case PolarConvention::StandardGe: return "STANDARD_GE";
    case PolarConvention::BlockingGe: return "BLOCKING_GE";
  }
  return "?";
}

PolarConvention parse_convention(const std::string& s) {
  if (s == "STANDARD_LE") return PolarConvention::StandardLe;
  if (s == "STANDARD_GE") return PolarConvention::StandardGe;
  if (s == "BLOCKING_GE") return PolarConvention::BlockingGe;
  throw std::invalid_argument("unknown polar convention '" + s + "'");
}

bool in_relint(const Polyhedron& p, const RationalVector& x) {
  for (const auto& c : p.hrep()) {
    if (c.rel == Rel::EQ) {
      if (!c.satisfied_by(x)) return false;
    } else {
      LinearConstraint le = as_le(c);
      if (dot(le.a, x) >= le.b) return false;
    }
  }
  return true;
}

static bool is_nonneg_orthant_ray_set(const Polyhedron& p) {
  const std::size_t d = p.ambient_dim();
  if (!p.vrep().lineality.empty()) return false;
  std::vector<bool> seen(d, false);
  for (const auto& r : p.rays()) {
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (sgn(r[i]) != 0) {
        ++nz;
        at = i;
      }
    if (nz != 1 || sgn(r[at]) < 0) return false;
    seen[at] = true;
  }
  for (bool s : seen)
    if (!s) return false;
  for (const auto& v : p.vertices())
    for (const auto& x : v)
      if (sgn(x) < 0) return false;
  return true;
}

Polyhedron polar(const Polyhedron& p0, PolarConvention convention, const RationalVector& center) {
  Polyhedron p = dd_convert(p0);
  const std::size_t d = p.ambient_dim();
  std::vector<LinearConstraint> rows;
  if (convention == PolarConvention::BlockingGe) {
    if (!is_nonneg_orthant_ray_set(p))
      throw PolarError("blocking polar requires recession cone equal to the nonnegative orthant");
    for (const auto& v : p.vertices()) rows.push_back({v, Rational(1), Rel::GE});
    for (const auto& r : p.rays()) rows.push_back({r, Rational(0), Rel::GE});
  } else {
    if (!p.is_bounded()) throw PolarError("standard polar requires a bounded polyhedron");
    if (center.size() != d) throw DimensionError("polar: center dimension");
    if (!in_relint(p, center)) throw PolarError("polar: center not in the relative interior");
    for (const auto& v : p.vertices()) {
      RationalVector a = v - center;
      if (convention == PolarConvention::StandardLe)
        rows.push_back({a, Rational(1), Rel::LE});
      else
        rows.push_back({a, Rational(-1), Rel::GE});
    }
    for (const auto& e : p.equations()) rows.push_back({e.a, Rational(0), Rel::EQ});
  }
  std::string name = p.name().empty() ? "polar" : p.name() + "^polar";
  return dd_convert(Polyhedron::from_hrep(d, rows, name));
}

Polyhedron polar_cone_slice(const Polyhedron& p0, const RationalVector& slice) {
  Polyhedron p = dd_convert(p0);
  const std::size_t m = p.ambient_dim();
  if (slice.size() != m + 1) throw DimensionError("polar_cone_slice: slice dimension");
  std::vector<LinearConstraint> cone;
  for (const auto& v : p.vertices()) {
    RationalVector a;
    a.push_back(1);
    a.insert(a.end(), v.begin(), v.end());
    cone.push_back({a, Rational(0), Rel::LE});
  }
  for (const auto& r : p.rays()) {
    RationalVector a;
    a.push_back(0);
    a.insert(a.end(), r.begin(), r.end());
    cone.push_back({a, Rational(0), Rel::LE});
  }
  // Check the slice against the cone's generators.
  Polyhedron c = dd_convert(Polyhedron::from_hrep(m + 1, cone));
  for (const auto& r : c.rays())
    if (sgn(dot(slice, r)) <= 0)
      throw PolarError("polar_cone_slice: hyperplane misses a ray of the polar cone");
  for (const auto& l : c.vrep().lineality)
    if (sgn(dot(slice, l)) != 0)
      throw PolarError("polar_cone_slice: hyperplane not transversal to the lineality space");
  cone.push_back({slice, Rational(1), Rel::EQ});
  return dd_convert(Polyhedron::from_hrep(m + 1, cone, "polar_slice"));
}

PolarPair::PolarPair(const Polyhedron& primal, PolarConvention convention, RationalVector center)
    : primal_(dd_convert(primal)), convention_(convention), center_(std::move(center)) {
  if (convention_ == PolarConvention::BlockingGe && center_.empty())
    center_ = zero_vector(primal_.ambient_dim());
  polar_ = rotaplex::polar(primal_, convention_, center_);
  const auto& pv = polar_.vrep();
  const std::size_t ng = primal_.num_generators();
  for (const auto& b : pv.vertices) {
    IndexSet s(ng);
    for (std::size_t g = 0; g < ng; ++g)
      if (tight(b, false, g)) s.insert(g);
    incidence_.push_back(std::move(s));
  }
  for (const auto& b : pv.rays) {
    IndexSet s(ng);
    for (std::size_t g = 0; g < ng; ++g)
      if (tight(b, true, g)) s.insert(g);
    incidence_.push_back(std::move(s));
  }
  if (convention_ == PolarConvention::BlockingGe) {
    const std::size_t d = primal_.ambient_dim();
    for (std::size_t e = 0; e < d; ++e) {
      IndexSet s(ng);
      for (std::size_t i = 0; i < primal_.vertices().size(); ++i)
        if (sgn(primal_.vertices()[i][e]) == 0) s.insert(i);
      for (std::size_t i = 0; i < primal_.rays().size(); ++i)
        if (sgn(primal_.rays()[i][e]) == 0) s.insert(primal_.vertices().size() + i);
      nonneg_rows_.push_back(std::move(s));
    }
  }
}

bool PolarPair::tight(const RationalVector& b, bool b_is_ray, std::size_t g) const {
  const std::size_t nv = primal_.vertices().size();
  const bool g_is_ray = g >= nv;
  const RationalVector& x = g_is_ray ? primal_.rays()[g - nv] : primal_.vertices()[g];
  switch (convention_) {
    case PolarConvention::StandardLe:
    case PolarConvention::StandardGe: {
      Rational val = b_is_ray || g_is_ray ? dot(b, x) : dot(b, x - center_);
      if (b_is_ray || g_is_ray) return sgn(val) == 0;
      return val == (convention_ == PolarConvention::StandardLe ? 1 : -1);
    }
    case PolarConvention::BlockingGe: {
      Rational val = dot(b, x);
      if (b_is_ray || g_is_ray) return sgn(val) == 0;
      return val == 1;
    }
  }
  return false;
}

IndexSet PolarPair::conjugate_of_primal(const IndexSet& pg) const {
  IndexSet out(incidence_.size());
  for (std::size_t j = 0; j < incidence_.size(); ++j)
    if (pg.subset_of(incidence_[j])) out.insert(j);
  // A face of the polar must contain a vertex.
  bool has_vertex = false;
  for (std::size_t j = 0; j < polar_.vertices().size(); ++j)
    if (out.contains(j)) has_vertex = true;
  if (!has_vertex) return IndexSet(incidence_.size());
  return out;
}

IndexSet PolarPair::conjugate_of_polar(const IndexSet& qg) const {
  IndexSet out = IndexSet::full(primal_.num_generators());
  for (auto j : qg.to_vector()) out &= incidence_[j];
  bool has_vertex = false;
  for (std::size_t i = 0; i < primal_.vertices().size(); ++i)
    if (out.contains(i)) has_vertex = true;
  if (!has_vertex) return IndexSet(primal_.num_generators());
  return out;
}

IndexSet PolarPair::tight_primal_generators(const RationalVector& b) const {
  IndexSet s(primal_.num_generators());
  for (std::size_t g = 0; g < primal_.num_generators(); ++g)
    if (tight(b, false, g)) s.insert(g);
  return s;
}

bool PolarPair::in_nonnegativity_closure(const IndexSet& pg) const {
  IndexSet c = IndexSet::full(primal_.num_generators());
  for (const auto& r : nonneg_rows_)
    if (pg.subset_of(r)) c &= r;
  return c == pg;
}

Face conjugate_face(const Face& f, const FaceLattice& primal_lattice, const PolarPair& pair) {
  IndexSet pg = primal_lattice.to_generators(f);
  if (pair.convention() == PolarConvention::BlockingGe && pair.in_nonnegativity_closure(pg))
    throw PolarError("conjugate_face: face is an intersection of non-negativity facets");
  IndexSet q = pair.conjugate_of_primal(pg);
  Face out;
  const std::size_t nv = pair.polar().vertices().size();
  std::vector<RationalVector> pts, dirs;
  for (auto j : q.to_vector()) {
    if (j < nv) {
      out.vertex_indices.push_back(j);
      pts.push_back(pair.polar().vertices()[j]);
    } else {
      out.ray_indices.push_back(j - nv);
      dirs.push_back(pair.polar().rays()[j - nv]);
    }
  }
  out.dim = affine_dimension(pts, dirs);
  return out;
}

}  // namespace rotaplex
