#include "rotaplex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "json.hpp"
#include "rotaplex/linalg.hpp"

#ifndef ROTAPLEX_VERSION
#define ROTAPLEX_VERSION "0.0.0"
#endif

namespace rotaplex {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "VERIFIED";
    case Verdict::Falsified: return "FALSIFIED";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

std::string tool_version() { return ROTAPLEX_VERSION; }

std::string version_hash() {
  std::string s = "rotaplex-" + tool_version();
  for (const auto& c : known_claims()) s += "/" + c;
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> known_claims() {
  return {"birkhoff",  "permutahedron", "pi-injective",   "tsp-global",    "tsp-local",
          "tsp-homeo", "tsp-lemmas",    "two-defs",       "z-independence", "infrastructure"};
}

std::size_t default_n(const std::string& claim) {
  if (claim.rfind("tsp", 0) == 0 || claim == "infrastructure") return 5;
  return 3;
}

std::optional<std::size_t> carrier_cell(const PolyhedralComplex& c, const RationalVector& x) {
  for (std::size_t i = 0; i < c.cells().size(); ++i)
    if (in_relint(c.cells()[i].geometry, x)) return i;
  return std::nullopt;
}

std::optional<std::size_t> carrier_face(const FaceLattice& lat, const Polyhedron& parent,
                                        const RationalVector& x) {
  if (!parent.contains(x)) return std::nullopt;
  const auto& V = parent.vertices();
  const auto& R = parent.rays();
  // Generators lying on every inequality tight at x.
  IndexSet tight = IndexSet::full(lat.num_generators());
  for (const auto& row : parent.inequalities()) {
    LinearConstraint h = as_le(row);
    if (!h.tight_at(x)) continue;
    IndexSet inc(lat.num_generators());
    for (std::size_t i = 0; i < V.size(); ++i)
      if (h.tight_at(V[i])) inc.insert(i);
    for (std::size_t i = 0; i < R.size(); ++i)
      if (sgn(dot(h.a, R[i])) == 0) inc.insert(V.size() + i);
    tight &= inc;
  }
  return lat.find(tight);
}

std::vector<Polyhedron> full_simplices(const Polyhedron& p) {
  const auto& V = p.vertices();
  const int k = p.dim();
  std::vector<Polyhedron> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == k + 1) {
      std::vector<RationalVector> pts;
      for (auto i : pick) pts.push_back(V[i]);
      if (affine_dimension(pts) == k)
        out.push_back(dd_convert(Polyhedron::from_vertices(p.ambient_dim(), pts)));
      return;
    }
    for (std::size_t i = start; i < V.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
  std::string witness;
};

void require(bool ok, const std::string& witness) {
  if (!ok) throw Failure{witness};
}

std::minstd_rand make_rng(std::uint64_t seed) {
  return std::minstd_rand(static_cast<std::uint_fast32_t>(seed % 2147483646u + 1));
}

RationalVector random_combination(std::minstd_rand& rng, const std::vector<RationalVector>& pts) {
  RationalVector x = zero_vector(pts.at(0).size());
  Integer total = 0;
  for (const auto& p : pts) {
    unsigned long w = 1 + rng() % 97;
    x += Rational(w) * p;
    total += w;
  }
  return Rational(1) / Rational(total) * x;
}

std::vector<Polyhedron> face_fan_cones(const Polyhedron& q, std::vector<LinearConstraint>* rows) {
  const std::size_t m = q.ambient_dim();
  std::vector<Polyhedron> cones;
  for (const auto& row : q.inequalities()) {
    LinearConstraint h = as_le(row);
    std::vector<RationalVector> fv;
    for (const auto& v : q.vertices())
      if (h.tight_at(v)) fv.push_back(v);
    cones.push_back(dd_convert(Polyhedron::from_vrep(m, VRep{{zero_vector(m)}, fv, {}})));
    if (rows) rows->push_back(h);
  }
  return cones;
}

// ---- claims ----

void claim_birkhoff(const VerifyParams& p, VerificationReport& r) {
  RotationContext ctx = birkhoff_context(p.n);
  PolyhedralComplex rc = rotation_complex(ctx);
  auto simplices = full_simplices(ctx.S_polar);
  PolyhedralComplex oracle =
      cells_by_regions(ctx.S_polar, simplices, [](const std::vector<std::size_t>& idx) {
        return std::to_string(idx.size());
      });
  r.details["cells"] = std::to_string(rc.maximal_cells().size());
  r.details["oracle_cells"] = std::to_string(oracle.maximal_cells().size());
  r.details["simplices"] = std::to_string(simplices.size());
  require(complex_equal(rc, oracle), "rotation complex differs from the chamber complex of vertex simplices");
  std::set<std::string> v1, v2;
  for (const auto& c : rc.cells())
    for (const auto& v : c.geometry.vertices()) v1.insert(to_string(v));
  for (const auto& v : ctx.S_polar.vertices()) v2.insert(to_string(v));
  r.details["complex_vertices"] = std::to_string(v1.size());
  require(v1 == v2, "vertex set of the complex differs from the vertices of S^polar");
}

}  // namespace

PolyhedralComplex onion_cells(const RotationContext& ctx, std::size_t n, bool down, std::string* note) {
  const std::size_t m = ctx.ambient_dim();
  const int k = ctx.S_polar.dim();
  std::vector<Polyhedron> Q(n + 2);
  for (std::size_t r = 1; r <= n; ++r) Q[r] = dd_convert(onion_polar(ctx, n, r));
  std::vector<LinearConstraint> facet_rows;
  auto cones = face_fan_cones(ctx.S_polar, &facet_rows);
  std::vector<Cell> cells;
  std::set<std::string> seen;
  auto add = [&](std::optional<Polyhedron> c, const std::string& label) {
    if (!c || c->dim() != k) return;
    if (seen.insert(point_set_key(*c)).second) cells.push_back({std::move(*c), label});
  };
  // The facet of Q[j] whose cone contains the cone C, if unique.
  auto facet_over = [&](const Polyhedron& C, std::size_t j) -> std::optional<LinearConstraint> {
    std::vector<LinearConstraint> rows;
    auto qc = face_fan_cones(Q[j], &rows);
    std::optional<LinearConstraint> hit;
    int count = 0;
    for (std::size_t i = 0; i < qc.size(); ++i) {
      bool inside = std::all_of(C.rays().begin(), C.rays().end(),
                                [&](const RationalVector& v) { return qc[i].contains(v); });
      if (inside) {
        hit = rows[i];
        ++count;
      }
    }
    if (count != 1) {
      if (note) *note += "cone not inside a single cone of the face fan of S_" + std::to_string(j) + "; ";
      return std::nullopt;
    }
    return hit;
  };
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const Polyhedron& C = cones[c];
    for (std::size_t r = 1; r <= n; ++r) {
      auto base = intersect(C, Q[r]);
      if (!base) continue;
      std::size_t j = down ? r - 1 : r + 1;
      std::string label = "C" + std::to_string(c) + "r" + std::to_string(r);
      if (j < 1 || j > n) {
        add(base, label);
        continue;
      }
      auto h = facet_over(C, j);
      if (!h) continue;
      add(intersect(*base, {LinearConstraint{h->a, h->b, Rel::GE}}), label);
    }
  }
  return PolyhedralComplex::from_maximal(m, std::move(cells));
}

namespace {

void claim_permutahedron(const VerifyParams& p, VerificationReport& r) {
  const std::size_t n = p.n;
  RotationContext ctx = permutahedron_face_context(n);
  const std::size_t m = ctx.ambient_dim();
  PolyhedralComplex rc = rotation_complex(ctx);
  r.details["cells"] = std::to_string(rc.maximal_cells().size());
  const bool regular = convex_lifting(rc).has_value();
  r.details["diagram"] = regular ? "true" : "false";
  require(regular, "rotation complex admits no convex lifting");

  // onion chain S_j inside S_{j-1}, so the polars grow with j
  for (std::size_t j = 2; j <= n; ++j) {
    Polyhedron a = orbit_polytope(onion_weights(n, j)), b = orbit_polytope(onion_weights(n, j - 1));
    for (const auto& v : a.vertices()) require(b.contains(v), "onion chain fails at j=" + std::to_string(j));
  }
  Polyhedron Sn = dd_convert(onion_polar(ctx, n, n));
  require(Sn.same_point_set(ctx.S_polar), "S_n^polar differs from S^polar");

  // brute force: refinement by the face fan and the split face fans
  std::vector<PolyhedralComplex> pieces;
  {
    std::vector<Cell> fan;
    for (auto& c : face_fan_cones(ctx.S_polar, nullptr)) fan.push_back({c, "fan"});
    pieces.push_back(PolyhedralComplex::from_maximal(m, std::move(fan)));
  }
  for (std::size_t j = 1; j <= n; ++j) pieces.push_back(split_face_fan(dd_convert(onion_polar(ctx, n, j))));
  PolyhedralComplex brute = common_refinement(ctx.S_polar, pieces);
  r.details["brute_force_cells"] = std::to_string(brute.maximal_cells().size());
  require(complex_equal(rc, brute), "rotation complex differs from the common refinement");

  std::string note_up, note_down;
  bool up = complex_equal(onion_cells(ctx, n, false, &note_up), rc);
  bool down = complex_equal(onion_cells(ctx, n, true, &note_down), rc);
  r.details["onion_orientation_up"] = up ? "matches" : "no match";
  r.details["onion_orientation_down"] = down ? "matches" : "no match";
  if (!note_down.empty()) r.details["onion_note"] = note_down;
  require(up || down, "no orientation of the onion-skin description matches");

  // local description on seeded pairs
  std::minstd_rand rng = make_rng(p.seed);
  std::vector<RationalVector> W;
  for (std::size_t j = 1; j <= n; ++j) {
    RationalVector w = onion_weights(n, j);
    std::sort(w.begin(), w.end());
    W.push_back(w);
  }
  std::vector<std::vector<RationalVector>> facets;
  for (const auto& row : ctx.S_polar.inequalities()) {
    LinearConstraint h = as_le(row);
    std::vector<RationalVector> fv{zero_vector(m)};
    for (const auto& v : ctx.S_polar.vertices())
      if (h.tight_at(v)) fv.push_back(v);
    facets.push_back(fv);
  }
  auto describe = [&](const RationalVector& a) -> std::optional<std::vector<int>> {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });
    std::vector<int> key;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (a[order[i]] == a[order[i + 1]]) return std::nullopt;
    }
    for (auto o : order) key.push_back(static_cast<int>(o));
    for (const auto& w : W) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += w[k] * a[order[k]];
      // a lies in L, so a.z = 0 and the facet test needs no centering
      int c = cmp(s, Rational(1));
      if (c == 0) return std::nullopt;
      key.push_back(c);
    }
    return key;
  };
  auto cell_of = [&](const RationalVector& a) -> std::optional<std::size_t> {
    std::optional<std::size_t> hit;
    for (auto i : rc.maximal_cells())
      if (rc.cells()[i].geometry.contains(a)) {
        if (hit) return std::nullopt;
        hit = i;
      }
    return hit;
  };
  std::size_t used = 0, same = 0, attempts = 0;
  const std::size_t want = 500;
  while (used < want && attempts < 20 * want) {
    ++attempts;
    const auto& F = facets[rng() % facets.size()];
    RationalVector a = random_combination(rng, F);
    RationalVector b;
    switch (rng() % 3) {
      case 0: b = random_combination(rng, facets[rng() % facets.size()]); break;
      case 1: b = random_combination(rng, F); break;
      default: {
        RationalVector t = random_combination(rng, facets[rng() % facets.size()]);
        b = Rational(49, 50) * a + Rational(1, 50) * t;
      }
    }
    auto da = describe(a), db = describe(b);
    auto ca = cell_of(a), cb = cell_of(b);
    if (!da || !db || !ca || !cb) continue;
    ++used;
    bool same_cell = *ca == *cb;
    if (same_cell) ++same;
    require(same_cell == (*da == *db),
            "local description disagrees at a=" + to_string(a) + " b=" + to_string(b));
  }
  r.details["local_pairs"] = std::to_string(used);
  r.details["local_same_cell_pairs"] = std::to_string(same);
  require(used == want, "too many boundary samples");
}

void claim_pi_injective(const VerifyParams& p, VerificationReport& r) {
  RotationContext ctx = permutahedron_face_context(p.n);
  const FaceLattice& D = *ctx.D;
  std::minstd_rand rng = make_rng(p.seed);
  std::map<RationalVector, RationalVector> seen;  // image -> preimage
  std::size_t count = 0;
  for (std::size_t f = 0; f < D.size(); ++f) {
    const Face& F = D.face(f);
    if (F.empty()) continue;
    std::vector<RationalVector> pts;
    for (auto v : F.vertex_indices) pts.push_back(ctx.P_polar().vertices()[v]);
    const std::size_t per_face = F.dim == 0 ? 1 : 8;
    for (std::size_t s = 0; s < per_face; ++s) {
      RationalVector b = s == 0 ? relint_point(F, ctx.P_polar()) : random_combination(rng, pts);
      RationalVector a = pi(ctx, b);
      auto [it, fresh] = seen.emplace(a, b);
      require(fresh || it->second == b, "pi(" + to_string(b) + ") = pi(" + to_string(it->second) + ")");
      ++count;
    }
  }
  r.details["samples"] = std::to_string(count);
  ImageComplex ic = image_complex(ctx);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < ic.images.size(); ++i)
    for (std::size_t j = i + 1; j < ic.images.size(); ++j) {
      auto I = intersect(ic.images[i], ic.images[j]);
      if (!I) continue;
      ++pairs;
      RationalVector x = relint_point(*I);
      bool overlap = in_relint(ic.images[i], x) && in_relint(ic.images[j], x);
      require(!overlap, "images of faces " + ic.faces[i].to_string() + " and " + ic.faces[j].to_string() +
                            " overlap in their relative interiors");
    }
  r.details["intersecting_image_pairs"] = std::to_string(pairs);
}

PolyhedralComplex tt_refinement(const RotationContext& ctx, const FaceLattice& del, const Fan& fan) {
  PolyhedralComplex fc = fan.as_complex(ctx.ambient_dim());
  std::vector<Cell> cells;
  std::set<std::string> seen;
  for (auto f : del.maximal_faces()) {
    if (del.face(f).empty()) continue;
    auto part = common_refinement(face_polyhedron(del.face(f), ctx.S_polar), {fc});
    for (const auto& c : part.cells())
      if (seen.insert(point_set_key(c.geometry)).second) cells.push_back(c);
  }
  return PolyhedralComplex::from_maximal(ctx.ambient_dim(), std::move(cells));
}

void claim_tsp_global(const VerifyParams& p, VerificationReport& r) {
  RotationContext ctx = tsp_context(p.n);
  DegreeStructure ds(p.n);
  FaceLattice del = del_N(ctx);
  PolyhedralComplex rc = rotation_complex(ctx, &del);
  Fan fan = flat_tt_fan(ds);
  r.details["fan_cones"] = std::to_string(fan.cones.size());
  r.details["fan_complete"] = fan.complete ? "true" : "false";
  require(fan.complete, "flat TT-fan is not complete");
  PolyhedralComplex ref = tt_refinement(ctx, del, fan);
  r.details["cells"] = std::to_string(rc.maximal_cells().size());
  r.details["refinement_cells"] = std::to_string(ref.maximal_cells().size());
  require(complex_equal(rc, ref), "restricted rotation complex differs from the refinement by the flat TT-fan");
}

void claim_tsp_local(const VerifyParams& p, VerificationReport& r) {
  RotationContext ctx = tsp_context(p.n);
  DegreeStructure ds(p.n);
  FaceLattice del = del_N(ctx);
  FaceLattice slat = face_lattice(ctx.S_polar);
  PolyhedralComplex all = rotation_complex(ctx, &del).with_all_faces();
  std::minstd_rand rng = make_rng(p.seed);
  std::vector<std::size_t> faces;
  for (std::size_t f = 0; f < del.size(); ++f)
    if (!del.face(f).empty()) faces.push_back(f);
  auto sample = [&](std::size_t f) {
    std::vector<RationalVector> pts;
    for (auto v : del.face(f).vertex_indices) pts.push_back(ctx.S_polar.vertices()[v]);
    return random_combination(rng, pts);
  };
  const std::size_t want = 500;
  std::size_t same = 0;
  for (std::size_t s = 0; s < want; ++s) {
    std::size_t fa = faces[rng() % faces.size()];
    RationalVector a = sample(fa);
    RationalVector b = rng() % 2 ? sample(fa) : sample(faces[rng() % faces.size()]);
    auto ca = carrier_cell(all, a), cb = carrier_cell(all, b);
    auto sa = carrier_face(slat, ctx.S_polar, a), sb = carrier_face(slat, ctx.S_polar, b);
    require(ca && cb && sa && sb, "sample outside the complex");
    bool same_cell = *ca == *cb;
    bool predicted = *sa == *sb && E_u_signature(ds.E, a) == E_u_signature(ds.E, b);
    if (same_cell) ++same;
    require(same_cell == predicted, "local description disagrees at a=" + to_string(a) + " b=" + to_string(b));
  }
  r.details["pairs"] = std::to_string(want);
  r.details["same_cell_pairs"] = std::to_string(same);
}

void claim_tsp_homeo(const VerifyParams& p, VerificationReport& r) {
  RotationContext ctx = tsp_context(p.n);
  DegreeStructure ds(p.n);
  const FaceLattice& D = *ctx.D;
  FaceLattice del = del_N(ctx);
  std::size_t checks = 0;
  auto check_b = [&](const RationalVector& b) {
    RationalVector a = pi(ctx, b);
    auto [g, c] = gamma_c(ds, a);
    require(sgn(g) > 0, "gamma not positive at " + to_string(a));
    require(phi(ds, a) == b, "phi(pi(b)) != b for b=" + to_string(b));
    ++checks;
  };
  auto check_a = [&](const RationalVector& a) {
    auto [g, c] = gamma_c(ds, a);
    require(sgn(g) > 0, "gamma not positive at " + to_string(a));
    RationalVector b = phi(ds, a);
    require(ctx.P_polar().contains(b), "phi(a) outside the polar for a=" + to_string(a));
    require(pi(ctx, b) == a, "pi(phi(a)) != a for a=" + to_string(a));
    ++checks;
  };
  for (std::size_t f = 0; f < D.size(); ++f)
    if (!D.face(f).empty()) check_b(relint_point(D.face(f), ctx.P_polar()));
  for (std::size_t f = 0; f < del.size(); ++f)
    if (!del.face(f).empty()) check_a(relint_point(del.face(f), ctx.S_polar));
  r.details["identity_checks"] = std::to_string(checks);

  std::vector<Cell> c1, c2;
  for (auto f : D.maximal_faces()) c1.push_back({face_polyhedron(D.face(f), ctx.P_polar()), ""});
  for (auto f : del.maximal_faces()) c2.push_back({face_polyhedron(del.face(f), ctx.S_polar), ""});
  auto K1 = PolyhedralComplex::from_maximal(ctx.ambient_dim(), std::move(c1));
  auto K2 = PolyhedralComplex::from_maximal(ctx.ambient_dim(), std::move(c2));
  Tristate iso = poset_isomorphic(K1, K2, PointMap([&](const RationalVector& b) { return pi(ctx, b); }));
  r.details["poset_isomorphic"] = to_string(iso);
  require(iso == Tristate::True, "pi does not induce an isomorphism of face posets");
}

bool in_degree_facet(const RotationContext& ctx, const DegreeStructure& ds, const IndexSet& g,
                     std::size_t u) {
  const auto& V = ctx.P.vertices();
  const auto& R = ctx.P.rays();
  for (auto i : g.to_vector()) {
    if (i < V.size()) {
      if (dot(ds.delta(u), V[i]) != 1) return false;
    } else if (sgn(dot(ds.delta(u), R[i - V.size()])) != 0) {
      return false;
    }
  }
  return true;
}

int generated_dim(const RotationContext& ctx, const IndexSet& g) {
  VRep v;
  for (auto i : g.to_vector()) {
    if (i < ctx.P.vertices().size()) v.vertices.push_back(ctx.P.vertices()[i]);
    else v.rays.push_back(ctx.P.rays()[i - ctx.P.vertices().size()]);
  }
  if (v.vertices.empty()) return -1;
  return dd_convert(Polyhedron::from_vrep(ctx.ambient_dim(), v)).dim();
}

void claim_tsp_lemmas(const VerifyParams& p, VerificationReport& r) {
  const std::size_t n = p.n;
  RotationContext ctx = tsp_context(n);
  DegreeStructure ds(n);
  const EdgeIndex& E = ds.E;
  const std::size_t m = E.size();
  std::minstd_rand rng = make_rng(p.seed);
  const auto& PV = ctx.P.vertices();
  const auto& PR = ctx.P.rays();
  const auto& SV = ctx.S.vertices();

  // (a) metric and valid for S implies valid for P
  for (int s = 0; s < 200; ++s) {
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, 0));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) d[u][v] = d[v][u] = Rational(static_cast<long>(1 + rng() % 20));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], Rational(d[i][k] + d[k][j]));
    RationalVector a(m);
    for (std::size_t e = 0; e < m; ++e) a[e] = d[E.pair(e).first][E.pair(e).second];
    require(is_metric(E, a), "shortest-path weights not metric");
    Rational alpha = dot(a, SV[0]);
    for (const auto& x : SV) alpha = std::min(alpha, dot(a, x));
    for (const auto& x : PV) require(dot(a, x) >= alpha, "metric inequality valid for S but not for P: " + to_string(a));
    for (const auto& x : PR) require(sgn(dot(a, x)) >= 0, "metric inequality not valid on a ray");
  }
  r.details["lemma_a_samples"] = "200";

  // (b), (c), (d) over bounded faces of the polar
  const FaceLattice& pl = *ctx.P_polar_lattice;
  std::size_t bounded = 0;
  for (std::size_t f = 0; f < pl.size(); ++f) {
    const Face& G = pl.face(f);
    if (G.empty() || !G.bounded()) continue;
    ++bounded;
    RationalVector b = relint_point(G, ctx.P_polar());
    IndexSet F = ctx.P_pair->conjugate_of_polar(pl.generators(f));
    require(is_good_face(ctx, F), "bounded polar face with a face that is not good: " + pl.generators(f).to_string());
    require(is_metric(E, b), "good face defined by a non-metric inequality: " + to_string(b));
    bool in_degree = false;
    for (std::size_t u = 0; u < n && !in_degree; ++u) in_degree = in_degree_facet(ctx, ds, F, u);
    require(!in_degree == is_TT(E, b), "TT criterion fails at " + to_string(b));
    IndexSet SF = F & ctx.S_generators;
    if (!SF.empty()) {
      for (std::size_t e = 0; e < m; ++e) {
        bool all_zero = true;
        for (auto i : SF.to_vector())
          if (sgn(PV[i][e]) != 0) all_zero = false;
        require(!all_zero, "S cut by a good face is not good: " + F.to_string());
      }
    }
  }
  r.details["bounded_polar_faces"] = std::to_string(bounded);

  // (e) codimensions over faces of D
  const int dimS = ctx.S.dim(), dimP = ctx.P.dim();
  for (std::size_t f = 0; f < ctx.D->size(); ++f) {
    const Face& G = ctx.D->face(f);
    if (G.empty()) continue;
    RationalVector b = relint_point(G, ctx.P_polar());
    require(is_TT(E, b), "face of D with a non-TT relint point");
    IndexSet Fp = ctx.P_pair->tight_primal_generators(b);
    IndexSet Fs = Fp & ctx.S_generators;
    int cs = dimS - generated_dim(ctx, Fs), cp = dimP - generated_dim(ctx, Fp);
    require(cp <= cs, "codimension in P exceeds codimension in S at " + to_string(b));
  }

  // (f) normal form
  for (int s = 0; s < 50; ++s) {
    RationalVector a(m), xi(n);
    for (auto& x : a) x = ratio(static_cast<long>(rng() % 41) - 20, static_cast<unsigned long>(1 + rng() % 7));
    for (auto& x : xi) x = ratio(static_cast<long>(rng() % 41) - 20, static_cast<unsigned long>(1 + rng() % 5));
    RationalVector t = theta(ds, a);
    require(is_TT(E, t), "theta(a) is not TT");
    require(theta(ds, t) == t, "theta is not idempotent");
    require(theta(ds, a + ds.transpose_apply(xi)) == t, "theta is not constant on cosets");
  }

  // facets of P through S, and good facets of S
  std::vector<LinearConstraint> Prows;
  for (const auto& row : ctx.P.inequalities()) Prows.push_back(canonical(as_le(row)));
  auto tight_on = [&](const LinearConstraint& h, const std::vector<std::size_t>& verts) {
    for (auto i : verts)
      if (!h.tight_at(PV[i])) return false;
    return true;
  };
  std::vector<std::size_t> sidx = ctx.S_generators.to_vector();
  std::set<std::string> through_S, degree;
  for (const auto& h : Prows)
    if (tight_on(h, sidx)) through_S.insert(to_string(h.a) + to_string(h.b));
  for (std::size_t u = 0; u < n; ++u) {
    LinearConstraint h = canonical(as_le(LinearConstraint{ds.delta(u), Rational(1), Rel::GE}));
    degree.insert(to_string(h.a) + to_string(h.b));
  }
  require(through_S == degree, "facets of P containing S are not the degree facets");
  std::size_t good_facets = 0;
  for (const auto& row : ctx.S.inequalities()) {
    LinearConstraint h = as_le(row);
    std::vector<std::size_t> fv;
    for (auto i : sidx)
      if (h.tight_at(PV[i])) fv.push_back(i);
    bool nonneg = false;
    for (std::size_t e = 0; e < m && !nonneg; ++e) {
      std::vector<std::size_t> zs;
      for (auto i : sidx)
        if (sgn(PV[i][e]) == 0) zs.push_back(i);
      nonneg = zs == fv;
    }
    if (nonneg) continue;
    ++good_facets;
    std::size_t containing = 0, exact = 0;
    for (const auto& g : Prows) {
      if (!tight_on(g, fv)) continue;
      ++containing;
      std::vector<std::size_t> gs;
      for (auto i : sidx)
        if (g.tight_at(PV[i])) gs.push_back(i);
      if (gs == fv) ++exact;
    }
    require(exact == 1, "good facet of S without a unique facet G of P with F = G cap S");
    require(containing == n + 1, "good facet of S in " + std::to_string(containing) + " facets of P");
  }
  r.details["good_facets_of_S"] = std::to_string(good_facets);
}

RotationContext context_for(const std::string& family, std::size_t n) {
  if (family == "birkhoff") return birkhoff_context(n);
  if (family == "permutahedron") return permutahedron_face_context(n);
  if (family == "tsp") return tsp_context(n);
  throw std::invalid_argument("unknown family '" + family + "'");
}

void claim_two_defs(const VerifyParams& p, VerificationReport& r) {
  RotationContext ctx = context_for(p.family, p.n);
  std::optional<FaceLattice> del;
  if (p.family == "tsp") del = del_N(ctx);
  TwoDefinitionsResult t = verify_two_definitions(ctx, p.samples, p.seed, del ? &*del : nullptr);
  r.details["pairs"] = std::to_string(t.pairs);
  r.details["equal_pairs"] = std::to_string(t.equal_pairs);
  require(t.ok, t.witness);
}

void claim_z_independence(const VerifyParams& p, VerificationReport& r) {
  RotationContext ctx = p.family.empty() ? birkhoff_context(p.n) : context_for(p.family, p.n);
  // perturbed center of S: move towards one vertex of S
  std::vector<RationalVector> sv;
  for (auto i : ctx.S_generators.to_vector()) sv.push_back(ctx.P.vertices()[i]);
  RationalVector z2 = Rational(6, 7) * ctx.z + Rational(1, 7) * sv[0];
  r.details["z2"] = to_string(z2);
  std::string w;
  require(verify_z_independence(ctx, z2, &w), w);
}

void claim_infrastructure(const VerifyParams& p, VerificationReport& r) {
  std::vector<std::pair<std::string, Polyhedron>> fams;
  for (std::size_t k = 1; k <= 3; ++k) fams.emplace_back("birkhoff" + std::to_string(k), birkhoff(k));
  for (std::size_t k = 1; k <= 3; ++k) fams.emplace_back("matching" + std::to_string(k), matching_polytope(k));
  for (std::size_t k = 2; k <= 4; ++k) fams.emplace_back("permutahedron" + std::to_string(k), permutahedron(k));
  for (std::size_t j = 1; j <= 3; ++j) fams.emplace_back("onion3_" + std::to_string(j), orbit_polytope(onion_weights(3, j)));
  for (std::size_t k = 3; k <= 5; ++k) fams.emplace_back("stsp" + std::to_string(k), stsp(k));
  for (std::size_t k = 3; k <= std::min<std::size_t>(p.n, 5); ++k) fams.emplace_back("gtsp" + std::to_string(k), gtsp(k));
  for (const auto& [name, P] : fams) {
    const std::size_t m = P.ambient_dim();
    Polyhedron h = dd_convert(Polyhedron::from_hrep(m, P.hrep()));
    Polyhedron v = dd_convert(Polyhedron::from_vrep(m, P.vrep()));
    require(h.same_point_set(P) && v.same_point_set(P), name + ": round trip changed the polyhedron");
    if (P.is_bounded()) {
      if (P.dim() < 1) continue;
      RationalVector c = relint_point(P);
      Polyhedron q = polar(P, PolarConvention::StandardLe, c);
      Polyhedron back = translate(polar(q, PolarConvention::StandardLe, zero_vector(m)), c);
      require(back.same_point_set(P), name + ": bipolar identity fails");
    } else {
      Polyhedron q = polar(P, PolarConvention::BlockingGe, zero_vector(m));
      Polyhedron back = polar(q, PolarConvention::BlockingGe, zero_vector(m));
      require(back.same_point_set(P), name + ": blocking bipolar identity fails");
    }
  }
  r.details["families"] = std::to_string(fams.size());

  // conjugation between good faces of P and bounded faces of the blocking polar
  Polyhedron G = gtsp(p.n);
  PolarPair pair(G, PolarConvention::BlockingGe, zero_vector(G.ambient_dim()));
  FaceLattice plat = face_lattice(G);
  FaceLattice qlat = face_lattice(pair.polar());
  std::size_t good = 0, bounded = 0;
  for (std::size_t f = 0; f < plat.size(); ++f) {
    const IndexSet& gen = plat.generators(f);
    if (plat.face(f).empty() || gen.count() == plat.num_generators() || !is_good_face(G, gen)) continue;
    ++good;
    IndexSet c = pair.conjugate_of_primal(plat.generators(f));
    auto g = qlat.find(c);
    require(g && qlat.face(*g).bounded() && !qlat.face(*g).empty(),
            "good face " + plat.generators(f).to_string() + " has no bounded conjugate");
    require(pair.conjugate_of_polar(c) == plat.generators(f), "conjugation is not involutive");
  }
  for (std::size_t f = 0; f < qlat.size(); ++f) {
    if (qlat.face(f).empty() || !qlat.face(f).bounded()) continue;
    ++bounded;
    IndexSet c = pair.conjugate_of_polar(qlat.generators(f));
    auto g = plat.find(c);
    require(g && is_good_face(G, c), "bounded polar face without a good conjugate");
    require(pair.conjugate_of_primal(c) == qlat.generators(f), "conjugation is not involutive");
  }
  r.details["good_faces"] = std::to_string(good);
  r.details["bounded_polar_faces"] = std::to_string(bounded);
  require(good == bounded, "good faces and bounded polar faces differ in number");
}

}  // namespace

VerificationReport verify_claim(const std::string& claim, const VerifyParams& params) {
  VerificationReport r;
  r.claim = claim;
  r.params = params;
  if (r.params.n == 0) r.params.n = r.params.family == "tsp" ? 5 : default_n(claim);
  const std::size_t n = r.params.n;
  auto t0 = Clock::now();
  using Fn = std::function<void(const VerifyParams&, VerificationReport&)>;
  Fn fn;
  if (claim == "birkhoff") fn = claim_birkhoff;
  else if (claim == "permutahedron") fn = claim_permutahedron;
  else if (claim == "pi-injective") fn = claim_pi_injective;
  else if (claim == "tsp-global") fn = claim_tsp_global;
  else if (claim == "tsp-local") fn = claim_tsp_local;
  else if (claim == "tsp-homeo") fn = claim_tsp_homeo;
  else if (claim == "tsp-lemmas") fn = claim_tsp_lemmas;
  else if (claim == "two-defs") fn = claim_two_defs;
  else if (claim == "z-independence") fn = claim_z_independence;
  else if (claim == "infrastructure") fn = claim_infrastructure;
  else throw std::invalid_argument("unknown claim '" + claim + "'");
  if (claim == "two-defs" && r.params.family.empty()) r.params.family = "birkhoff";
  if (claim.rfind("tsp", 0) == 0 && (n < 4 || n > 6))
    throw std::invalid_argument(claim + ": n must be in 4..6");
  if ((claim == "birkhoff" || claim == "permutahedron" || claim == "pi-injective") && n < 2)
    throw std::invalid_argument(claim + ": n >= 2");
  try {
    fn(r.params, r);
    r.verdict = Verdict::Verified;
  } catch (const Failure& f) {
    r.verdict = Verdict::Falsified;
    r.witness = f.witness.empty() ? "(no witness)" : f.witness;
  } catch (const FaceLimitError& e) {
    r.verdict = Verdict::Skipped;
    r.witness = e.what();
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

std::string report_to_json(const VerificationReport& r, int indent) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["params"] = {{"n", r.params.n}, {"seed", r.params.seed}, {"samples", r.params.samples}};
  if (!r.params.family.empty()) j["params"]["family"] = r.params.family;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness;
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.details) d[k] = v;
  j["details"] = d;
  j["timing_ms"] = r.timing_ms;
  j["tool_version"] = tool_version();
  j["version_hash"] = version_hash();
  return j.dump(indent);
}

}  // namespace rotaplex
