#include "rotaplex/rotation.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "rotaplex/linalg.hpp"
#include "rotaplex/lp.hpp"

namespace rotaplex {

std::string to_string(const FaceSetSignature& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& f : s) {
    if (!first) out += ",";
    first = false;
    out += "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(f[i]);
    }
    out += "}";
  }
  return out + "]";
}

IndexSet face_closure(const Polyhedron& P, const IndexSet& g) {
  const std::size_t nv = P.vertices().size();
  const std::size_t ng = P.num_generators();
  IndexSet out = IndexSet::full(ng);
  for (const auto& c : P.hrep()) {
    if (c.rel == Rel::EQ) continue;
    LinearConstraint le = as_le(c);
    IndexSet inc(ng);
    for (std::size_t i = 0; i < nv; ++i)
      if (dot(le.a, P.vertices()[i]) == le.b) inc.insert(i);
    for (std::size_t i = 0; i < P.rays().size(); ++i)
      if (sgn(dot(le.a, P.rays()[i])) == 0) inc.insert(nv + i);
    if (g.subset_of(inc)) out &= inc;
  }
  return out;
}

namespace {

RationalVector barycenter(const std::vector<RationalVector>& pts) {
  RationalVector c = zero_vector(pts.at(0).size());
  for (const auto& p : pts) c += p;
  return ratio(1, static_cast<unsigned long>(pts.size())) * c;
}

bool is_ge(const RotationContext& ctx) { return ctx.convention == PolarConvention::BlockingGe; }

// Offset used in the rotated inequality: (a+q).(x - z) <= 1 or >= -1.
Rational rhs_sign(const RotationContext& ctx) { return is_ge(ctx) ? Rational(-1) : Rational(1); }

}  // namespace

RotationContext make_context(const Polyhedron& P0, const std::vector<RationalVector>& S_vertices,
                             PolarConvention convention, std::optional<RationalVector> z,
                             std::optional<RationalVector> center) {
  if (convention == PolarConvention::StandardGe)
    throw RotationError("make_context: use STANDARD_LE or BLOCKING_GE for P");
  if (S_vertices.empty()) throw RotationError("make_context: S is empty");
  RotationContext ctx;
  ctx.P = dd_convert(P0);
  ctx.convention = convention;
  const std::size_t m = ctx.P.ambient_dim();
  const std::size_t ng = ctx.P.num_generators();
  IndexSet sg(ng);
  for (const auto& v : S_vertices) {
    auto it = std::find(ctx.P.vertices().begin(), ctx.P.vertices().end(), v);
    if (it == ctx.P.vertices().end())
      throw RotationError("make_context: S vertex " + to_string(v) + " is not a vertex of P");
    sg.insert(static_cast<std::size_t>(it - ctx.P.vertices().begin()));
  }
  if (face_closure(ctx.P, sg) != sg) throw RotationError("make_context: S is not a face of P");
  if (sg.count() == ng) throw RotationError("make_context: S must be a proper face");
  ctx.S_generators = sg;
  std::vector<RationalVector> sv;
  for (auto i : sg.to_vector()) sv.push_back(ctx.P.vertices()[i]);
  ctx.S = dd_convert(Polyhedron::from_vertices(m, sv, "S"));
  ctx.z = z ? *z : barycenter(sv);
  if (ctx.z.size() != m) throw DimensionError("make_context: z dimension");
  if (!in_relint(ctx.S, ctx.z)) throw RotationError("make_context: z is not in relint S");
  if (convention == PolarConvention::StandardLe) {
    if (!ctx.P.is_bounded()) throw RotationError("make_context: STANDARD_LE needs a bounded P");
    ctx.center = center ? *center : barycenter(ctx.P.vertices());
    if (!in_relint(ctx.P, ctx.center))
      throw RotationError("make_context: center is not in relint P");
  } else {
    ctx.center = zero_vector(m);
  }

  std::vector<RationalVector> diffs;
  for (const auto& v : sv) diffs.push_back(v - sv[0]);
  ctx.L_basis = rref(diffs, m).rows;
  std::vector<RationalVector> span = ctx.L_basis;
  for (const auto& e : ctx.P.equations()) span.push_back(e.a);
  ctx.Lperp_basis = orthogonal_complement(span, m);
  ctx.projection = projection_matrix(ctx.L_basis, m);

  ctx.S_polar = polar(ctx.S,
                      convention == PolarConvention::BlockingGe ? PolarConvention::StandardGe
                                                                : PolarConvention::StandardLe,
                      ctx.z);
  ctx.P_pair = std::make_shared<const PolarPair>(ctx.P, convention, ctx.center);
  ctx.P_polar_lattice = std::make_shared<const FaceLattice>(face_lattice(ctx.P_pair->polar()));
  ctx.S_diamond = ctx.P_pair->conjugate_of_primal(sg);
  const FaceLattice& pl = *ctx.P_polar_lattice;
  IndexSet forbidden(pl.num_vertices());
  for (auto j : ctx.S_diamond.to_vector())
    if (j < pl.num_vertices()) forbidden.insert(j);
  FaceLattice d = deletion(pl, forbidden);
  if (convention == PolarConvention::BlockingGe) d = bounded_subcomplex(d);
  ctx.D = std::make_shared<const FaceLattice>(std::move(d));
  return ctx;
}

RotationContext make_context(const Polyhedron& P0, const LinearConstraint& ineq,
                             PolarConvention convention, std::optional<RationalVector> z,
                             std::optional<RationalVector> center) {
  Polyhedron P = dd_convert(P0);
  if (!P.is_bounded() && convention != PolarConvention::BlockingGe)
    throw RotationError("make_context: unbounded P needs BLOCKING_GE");
  std::vector<RationalVector> sv;
  for (const auto& v : P.vertices()) {
    if (!ineq.satisfied_by(v)) throw RotationError("make_context: inequality not valid for P");
    if (ineq.tight_at(v)) sv.push_back(v);
  }
  for (const auto& r : P.rays()) {
    if (!ineq.satisfied_by_direction(r))
      throw RotationError("make_context: inequality not valid for P");
    if (ineq.rel != Rel::EQ && sgn(dot(ineq.a, r)) == 0)
      throw RotationError("make_context: the face is unbounded");
  }
  return make_context(P, sv, convention, std::move(z), std::move(center));
}

Polyhedron rotated_inequality_set(const RotationContext& ctx, const RationalVector& a) {
  if (!ctx.S_polar.contains(a)) throw RotationError("rotated_inequality_set: a is not in S^polar");
  const std::size_t k = ctx.Lperp_basis.size();
  const Rational s = rhs_sign(ctx);
  const Rel rel = is_ge(ctx) ? Rel::GE : Rel::LE;
  std::vector<LinearConstraint> rows;
  for (const auto& v : ctx.P.vertices()) {
    RationalVector d = v - ctx.z;
    RationalVector coef(k);
    for (std::size_t i = 0; i < k; ++i) coef[i] = dot(ctx.Lperp_basis[i], d);
    rows.push_back({coef, s - dot(a, d), rel});
  }
  for (const auto& r : ctx.P.rays()) {
    RationalVector coef(k);
    for (std::size_t i = 0; i < k; ++i) coef[i] = dot(ctx.Lperp_basis[i], r);
    rows.push_back({coef, -dot(a, r), rel});
  }
  return dd_convert(Polyhedron::from_hrep(k, rows, "rotated"));
}

namespace {

RationalVector lift_q(const RotationContext& ctx, const RationalVector& y) {
  RationalVector q = zero_vector(ctx.ambient_dim());
  for (std::size_t i = 0; i < y.size(); ++i)
    if (sgn(y[i]) != 0) q += y[i] * ctx.Lperp_basis[i];
  return q;
}

std::vector<std::size_t> tight_P_generators(const RotationContext& ctx, const RationalVector& lhs) {
  std::vector<std::size_t> out;
  const Rational s = rhs_sign(ctx);
  const auto& V = ctx.P.vertices();
  for (std::size_t i = 0; i < V.size(); ++i)
    if (dot(lhs, V[i] - ctx.z) == s) out.push_back(i);
  for (std::size_t i = 0; i < ctx.P.rays().size(); ++i)
    if (sgn(dot(lhs, ctx.P.rays()[i])) == 0) out.push_back(V.size() + i);
  return out;
}

}  // namespace

FaceSetSignature frak_F(const RotationContext& ctx, const RationalVector& a) {
  Polyhedron Q = rotated_inequality_set(ctx, a);
  FaceLattice lat = face_lattice(Q);
  FaceSetSignature out;
  for (std::size_t f = 0; f < lat.size(); ++f) {
    if (lat.face(f).empty()) continue;
    RationalVector y = relint_point(lat.face(f), Q);
    out.insert(tight_P_generators(ctx, a + lift_q(ctx, y)));
  }
  return out;
}

FaceSetSignature frak_F_conjugates(const RotationContext& ctx, const RationalVector& a) {
  FaceSetSignature out;
  const std::size_t ng = ctx.P.num_generators();
  for (const auto& t : frak_F(ctx, a)) {
    IndexSet g = IndexSet::of(ng, t);
    out.insert(ctx.P_pair->conjugate_of_primal(g).to_vector());
  }
  return out;
}

namespace {

// Equations of the fiber of a, as rows over b in R^m.
std::vector<LinearConstraint> fiber_rows(const RotationContext& ctx, const RationalVector& a) {
  std::vector<LinearConstraint> rows;
  const RationalVector zc = ctx.z - ctx.center;
  for (const auto& l : ctx.L_basis) {
    Rational la = dot(l, a);
    if (is_ge(ctx)) rows.push_back({l - la * ctx.z, -la, Rel::EQ});
    else rows.push_back({l + la * zc, la, Rel::EQ});
  }
  return rows;
}

}  // namespace

FaceSetSignature fiber_signature(const RotationContext& ctx, const RationalVector& a) {
  const FaceLattice& D = *ctx.D;
  const Polyhedron& Q = ctx.P_polar();
  auto rows = fiber_rows(ctx, a);
  std::vector<char> met(D.size(), 0);
  FaceSetSignature out;
  // D is sorted by dimension, so children are decided first.
  for (std::size_t f = 0; f < D.size(); ++f) {
    const Face& F = D.face(f);
    if (F.empty()) continue;
    bool hit = false;
    for (auto c : D.children(f))
      if (met[c]) {
        hit = true;
        break;
      }
    if (!hit) {
      const std::size_t k = F.vertex_indices.size();
      std::vector<LinearConstraint> lp;
      RationalVector ones(k, Rational(1));
      lp.push_back({ones, Rational(1), Rel::EQ});
      for (std::size_t j = 0; j < k; ++j) lp.push_back({unit_vector(k, j), Rational(0), Rel::GE});
      for (const auto& r : rows) {
        RationalVector coef(k);
        for (std::size_t j = 0; j < k; ++j) coef[j] = dot(r.a, Q.vertices()[F.vertex_indices[j]]);
        lp.push_back({coef, r.b, Rel::EQ});
      }
      hit = lp_feasible(k, lp);
    }
    if (hit) {
      met[f] = 1;
      out.insert(D.generators(f).to_vector());
    }
  }
  return out;
}

namespace {

std::vector<IndexSet> fiber_carriers(const RotationContext& ctx, const RationalVector& a) {
  auto R = intersect(ctx.P_polar(), fiber_rows(ctx, a));
  std::vector<IndexSet> carriers;
  if (!R) return carriers;
  for (const auto& v : R->vertices())
    carriers.push_back(ctx.P_pair->conjugate_of_primal(ctx.P_pair->tight_primal_generators(v)));
  return carriers;
}

FaceSetSignature up_closure(const FaceLattice& lat, const std::vector<IndexSet>& carriers) {
  FaceSetSignature out;
  for (std::size_t f = 0; f < lat.size(); ++f) {
    if (lat.face(f).empty()) continue;
    for (const auto& c : carriers)
      if (c.subset_of(lat.generators(f))) {
        out.insert(lat.generators(f).to_vector());
        break;
      }
  }
  return out;
}

}  // namespace

FaceSetSignature fiber_signature_dd(const RotationContext& ctx, const RationalVector& a) {
  return up_closure(*ctx.D, fiber_carriers(ctx, a));
}

FaceSetSignature fiber_faces_all(const RotationContext& ctx, const RationalVector& a) {
  return up_closure(*ctx.P_polar_lattice, fiber_carriers(ctx, a));
}

bool in_S_diamond(const RotationContext& ctx, const RationalVector& b) {
  if (!ctx.P_polar().contains(b)) return false;
  for (auto i : ctx.S_generators.to_vector())
    if (dot(b, ctx.P.vertices()[i] - ctx.center) != 1) return false;
  return true;
}

RationalVector pi(const RotationContext& ctx, const RationalVector& b) {
  Rational den = is_ge(ctx) ? Rational(dot(b, ctx.z) - 1) : Rational(1 - dot(b, ctx.z - ctx.center));
  if (sgn(den) == 0) throw RotationError("pi: undefined on the conjugate face of S");
  return Rational(1) / den * ctx.project(b);
}

FaceSetSignature ImageComplex::signature(const RationalVector& a) const {
  FaceSetSignature out;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i].contains(a)) out.insert(faces[i].to_vector());
  return out;
}

ImageComplex image_complex(const RotationContext& ctx) {
  ImageComplex ic;
  const FaceLattice& D = *ctx.D;
  const Polyhedron& Q = ctx.P_polar();
  std::vector<RationalVector> vimg(Q.vertices().size());
  std::vector<char> have(Q.vertices().size(), 0);
  for (std::size_t f = 0; f < D.size(); ++f) {
    const Face& F = D.face(f);
    if (F.empty()) continue;
    std::vector<RationalVector> pts;
    for (auto v : F.vertex_indices) {
      if (!have[v]) {
        vimg[v] = pi(ctx, Q.vertices()[v]);
        have[v] = 1;
      }
      pts.push_back(vimg[v]);
    }
    ic.faces.push_back(D.generators(f));
    ic.dims.push_back(F.dim);
    ic.images.push_back(dd_convert(Polyhedron::from_vertices(ctx.ambient_dim(), pts)));
  }
  return ic;
}

std::vector<LinearConstraint> image_hyperplanes(const RotationContext& ctx, const ImageComplex& ic) {
  std::vector<LinearConstraint> out;
  std::unordered_set<std::string> seen;
  auto add = [&](const LinearConstraint& row) {
    RationalVector pa = ctx.project(row.a);
    if (is_zero(pa)) return;
    LinearConstraint h = canonical(LinearConstraint{pa, row.b, Rel::EQ});
    std::string key = to_string(h.a) + "=" + to_string(h.b);
    if (seen.insert(key).second) out.push_back(h);
  };
  for (const auto& img : ic.images)
    for (const auto& row : img.hrep()) add(row);
  for (const auto& row : ctx.S_polar.hrep()) add(row);
  std::sort(out.begin(), out.end(), constraint_less);
  return out;
}

PolyhedralComplex rotation_complex(const RotationContext& ctx, const FaceLattice* restrict_to) {
  return rotation_complex(ctx, image_complex(ctx), restrict_to);
}

PolyhedralComplex rotation_complex(const RotationContext& ctx, const ImageComplex& ic,
                                   const FaceLattice* restrict_to) {
  std::vector<Polyhedron> regions;
  if (restrict_to) {
    for (auto f : restrict_to->maximal_faces())
      if (!restrict_to->face(f).empty())
        regions.push_back(face_polyhedron(restrict_to->face(f), ctx.S_polar));
  } else {
    regions.push_back(ctx.S_polar);
  }
  IndexLabelFn label = [&](const std::vector<std::size_t>& idx) {
    FaceSetSignature sig;
    for (auto i : idx) sig.insert(ic.faces[i].to_vector());
    return to_string(sig);
  };
  std::vector<Cell> cells;
  std::unordered_set<std::string> seen;
  for (const auto& region : regions) {
    PolyhedralComplex part = cells_by_regions(region, ic.images, label);
    for (const auto& c : part.cells())
      if (seen.insert(point_set_key(c.geometry)).second) cells.push_back(c);
  }
  PolyhedralComplex c = PolyhedralComplex::from_maximal(ctx.ambient_dim(), std::move(cells));
  std::vector<Cell> sorted;
  for (auto i : c.canonical_order()) sorted.push_back(c.cells()[i]);
  return PolyhedralComplex::from_maximal(ctx.ambient_dim(), std::move(sorted));
}

namespace {

std::vector<std::size_t> nonempty_faces(const FaceLattice& region) {
  std::vector<std::size_t> faces;
  for (std::size_t f = 0; f < region.size(); ++f)
    if (!region.face(f).empty()) faces.push_back(f);
  if (faces.empty()) throw RotationError("sample_points: empty region");
  return faces;
}

RationalVector sample_in_face(const RotationContext& ctx, const Face& F, std::minstd_rand& rng) {
  const auto& V = ctx.S_polar.vertices();
  RationalVector x = zero_vector(ctx.ambient_dim());
  Integer total = 0;
  for (auto v : F.vertex_indices) {
    unsigned long w = 1 + rng() % 97;
    x += Rational(w) * V[v];
    total += w;
  }
  return Rational(1) / Rational(total) * x;
}

}  // namespace

std::vector<RationalVector> sample_points(const RotationContext& ctx, const FaceLattice& region,
                                          std::size_t count, std::uint64_t seed) {
  std::minstd_rand rng(static_cast<std::uint_fast32_t>(seed % 2147483646u + 1));
  auto faces = nonempty_faces(region);
  std::vector<RationalVector> out;
  for (std::size_t s = 0; s < count; ++s)
    out.push_back(sample_in_face(ctx, region.face(faces[rng() % faces.size()]), rng));
  return out;
}

namespace {

// Faces of P^polar (as generator sets) contained in S^diamond, including the empty face.
std::vector<IndexSet> S_diamond_faces(const RotationContext& ctx) {
  const FaceLattice& pl = *ctx.P_polar_lattice;
  std::vector<IndexSet> out;
  for (std::size_t f = 0; f < pl.size(); ++f)
    if (pl.generators(f).subset_of(ctx.S_diamond)) out.push_back(pl.generators(f));
  return out;
}

// Check of the join rule: F'(a) is recovered from F'(a) ∩ D by joining with
// faces of S^diamond.
bool joins_reconstruct(const RotationContext& ctx, const FaceSetSignature& conj,
                       const std::vector<IndexSet>& sd_faces, std::string* why) {
  const FaceLattice& pl = *ctx.P_polar_lattice;
  const std::size_t ng = pl.num_generators();
  std::vector<IndexSet> in_d;
  for (const auto& g : conj) {
    IndexSet s = IndexSet::of(ng, g);
    auto f = ctx.D->find(s);
    if (f) in_d.push_back(s);
  }
  FaceSetSignature rebuilt;
  for (const auto& g : in_d)
    for (const auto& h : sd_faces) rebuilt.insert(pl.closure(g | h).to_vector());
  if (rebuilt != conj) {
    if (why) *why = "joins " + to_string(rebuilt) + " vs conjugates " + to_string(conj);
    return false;
  }
  return true;
}

}  // namespace

TwoDefinitionsResult verify_two_definitions(const RotationContext& ctx, std::size_t samples,
                                            std::uint64_t seed, const FaceLattice* region) {
  TwoDefinitionsResult res;
  if (samples == 0) return res;
  std::unique_ptr<FaceLattice> own;
  if (!region) {
    own = std::make_unique<FaceLattice>(face_lattice(ctx.S_polar));
    region = own.get();
  }
  // The region need not be convex: derived points stay in the face of a.
  std::minstd_rand rng(static_cast<std::uint_fast32_t>(seed % 2147483646u + 1));
  auto faces = nonempty_faces(*region);
  auto sd_faces = S_diamond_faces(ctx);
  for (std::size_t s = 0; s < samples; ++s) {
    const Face& Fa_region = region->face(faces[rng() % faces.size()]);
    RationalVector a = sample_in_face(ctx, Fa_region, rng);
    RationalVector b;
    switch (rng() % 3) {
      case 0: b = sample_in_face(ctx, region->face(faces[rng() % faces.size()]), rng); break;
      case 1: b = a; break;
      default: {
        // a nearby point of the same face
        const Rational eps = ratio(1, 1000);
        b = (Rational(1) - eps) * a + eps * sample_in_face(ctx, Fa_region, rng);
        if (rng() % 2) b = Rational(1, 2) * (a + b);
        break;
      }
    }
    FaceSetSignature Fa = frak_F_conjugates(ctx, a), Fb = frak_F_conjugates(ctx, b);
    FaceSetSignature Sa = fiber_signature(ctx, a), Sb = fiber_signature(ctx, b);
    ++res.pairs;
    if (Fa == Fb) ++res.equal_pairs;
    if ((Fa == Fb) != (Sa == Sb)) {
      res.ok = false;
      res.witness = "a=" + to_string(a) + " b=" + to_string(b);
      return res;
    }
    std::string why;
    for (const auto* x : {&a, &b}) {
      const auto& F = (x == &a) ? Fa : Fb;
      if (!joins_reconstruct(ctx, F, sd_faces, &why)) {
        res.ok = false;
        res.witness = "join rule fails at " + to_string(*x) + ": " + why;
        return res;
      }
      // Faces of D in F'(a) are met by the fiber; minimal met faces lie in F'(a).
      const auto& S = (x == &a) ? Sa : Sb;
      for (const auto& g : F)
        if (ctx.D->find(IndexSet::of(ctx.P_polar_lattice->num_generators(), g)) && !S.count(g)) {
          res.ok = false;
          res.witness = "fiber misses a face of F'(a) at " + to_string(*x);
          return res;
        }
    }
  }
  return res;
}

RationalVector z_transfer(const RotationContext& ctx, const RationalVector& z2,
                          const RationalVector& a) {
  Rational t = dot(a, ctx.z - z2);
  Rational den = is_ge(ctx) ? Rational(1 - t) : Rational(1 + t);
  return Rational(1) / den * a;
}

bool verify_z_independence(const RotationContext& ctx, const RationalVector& z2,
                           std::string* witness) {
  std::vector<RationalVector> sv;
  for (auto i : ctx.S_generators.to_vector()) sv.push_back(ctx.P.vertices()[i]);
  RotationContext ctx2 = make_context(ctx.P, sv, ctx.convention, z2,
                                      is_ge(ctx) ? std::nullopt
                                                 : std::optional<RationalVector>(ctx.center));
  PolyhedralComplex c1 = rotation_complex(ctx);
  PolyhedralComplex c2 = rotation_complex(ctx2);
  std::vector<Cell> mapped;
  for (auto i : c1.maximal_cells()) {
    const Polyhedron& g = c1.cells()[i].geometry;
    std::vector<RationalVector> pts;
    for (const auto& v : g.vertices()) pts.push_back(z_transfer(ctx, z2, v));
    mapped.push_back(Cell{dd_convert(Polyhedron::from_vertices(ctx.ambient_dim(), pts)),
                          c1.cells()[i].label});
  }
  PolyhedralComplex m = PolyhedralComplex::from_maximal(ctx.ambient_dim(), std::move(mapped));
  bool ok = complex_equal(m, c2);
  if (!ok && witness)
    *witness = "cell counts " + std::to_string(m.cells().size()) + " vs " +
               std::to_string(c2.cells().size());
  return ok;
}

}  // namespace rotaplex
