// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "rotaplex/linalg.hpp"
#include "rotaplex/verify.hpp"

using namespace rotaplex;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
  void claim(const std::string& id, VerifyParams p = {}) {
    VerificationReport r = verify_claim(id, p);
    require(r.verdict == Verdict::Verified, id + ": " + to_string(r.verdict) + " " + r.witness);
  }
};

std::set<std::string> vertex_keys(const PolyhedralComplex& c) {
  std::set<std::string> s;
  for (const auto& cell : c.cells())
    for (const auto& v : cell.geometry.vertices()) s.insert(to_string(v));
  return s;
}

RationalVector barycenter(const std::vector<RationalVector>& pts) {
  RationalVector x = zero_vector(pts.at(0).size());
  for (const auto& p : pts) x += p;
  return ratio(1, static_cast<unsigned long>(pts.size())) * x;
}

RationalVector random_point(std::minstd_rand& rng, const std::vector<RationalVector>& pts) {
  RationalVector x = zero_vector(pts.at(0).size());
  Integer total = 0;
  for (const auto& p : pts) {
    unsigned long w = 1 + rng() % 1000;
    x += Rational(w) * p;
    total += w;
  }
  return Rational(1) / Rational(total) * x;
}

// 1. Birkhoff: chamber complex of vertex simplices, and no new vertices.
void check_birkhoff(Outcome& o) {
  RotationContext ctx = birkhoff_context(3);
  PolyhedralComplex rc = rotation_complex(ctx);
  const auto& V = ctx.S_polar.vertices();
  const int k = ctx.S_polar.dim();
  const std::size_t m = ctx.ambient_dim();

  // all full-dimensional simplices on vertex subsets
  std::vector<Polyhedron> simplices;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == k + 1) {
      std::vector<RationalVector> pts;
      for (auto i : pick) pts.push_back(V[i]);
      if (affine_dimension(pts) == k) simplices.push_back(dd_convert(Polyhedron::from_vertices(m, pts)));
      return;
    }
    for (std::size_t i = start; i < V.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);

  auto pattern_of_point = [&](const RationalVector& x) {
    std::vector<bool> in;
    for (const auto& t : simplices) in.push_back(t.contains(x));
    return in;
  };
  std::vector<std::vector<bool>> patterns;
  std::vector<std::size_t> maxi = rc.maximal_cells();
  for (auto i : maxi) {
    const Polyhedron& C = rc.cells()[i].geometry;
    o.require(C.dim() == k, "cell of lower dimension");
    std::vector<bool> pat;
    for (const auto& t : simplices) {
      bool inside = true;
      for (const auto& v : C.vertices()) inside = inside && t.contains(v);
      if (!inside) {
        auto x = intersect(C, t);
        o.require(!x || x->dim() < k, "a cell is cut by a vertex simplex");
      }
      pat.push_back(inside);
    }
    patterns.push_back(pat);
  }
  std::set<std::vector<bool>> distinct(patterns.begin(), patterns.end());
  o.require(distinct.size() == patterns.size(), "two cells share a containment pattern");

  // random points of S^polar off every simplex wall lie in exactly one open cell,
  // with the matching pattern; points on a wall lie in some closed cell
  std::minstd_rand rng(2024);
  int generic = 0;
  for (int s = 0; s < 300; ++s) {
    RationalVector x = random_point(rng, V);
    bool on_wall = false;
    for (const auto& t : simplices) on_wall = on_wall || (t.contains(x) && !in_relint(t, x));
    std::size_t hits = 0, closed = 0, which = 0;
    for (std::size_t j = 0; j < maxi.size(); ++j) {
      closed += rc.cells()[maxi[j]].geometry.contains(x);
      if (in_relint(rc.cells()[maxi[j]].geometry, x)) {
        ++hits;
        which = j;
      }
    }
    o.require(closed >= 1, "random point in no cell");
    if (on_wall) continue;
    ++generic;
    o.require(hits == 1, "generic random point not in exactly one open cell");
    if (hits == 1) o.require(pattern_of_point(x) == patterns[which], "cell pattern differs from point pattern");
  }
  o.require(generic >= 250, "too few generic random points");

  std::set<std::string> sv;
  for (const auto& v : V) sv.insert(to_string(v));
  auto cv = vertex_keys(rc);
  std::ostringstream w;
  w << "vrt of complex has " << cv.size() << " points, vrt S^polar has " << sv.size();
  o.require(cv == sv, w.str());
  std::ostringstream n;
  n << maxi.size() << " cells, " << simplices.size() << " vertex simplices";
  if (o.pass) o.note = n.str();
}

// 2. Permutahedron: brute-force refinement built here, plus the claim.
void check_permutahedron(Outcome& o) {
  RotationContext ctx = permutahedron_face_context(3);
  const std::size_t m = ctx.ambient_dim();
  PolyhedralComplex rc = rotation_complex(ctx);

  auto facets_of = [&](const Polyhedron& q) {
    std::vector<std::vector<RationalVector>> out;
    for (const auto& row : q.inequalities()) {
      LinearConstraint h = as_le(row);
      std::vector<RationalVector> fv;
      for (const auto& v : q.vertices())
        if (h.tight_at(v)) fv.push_back(v);
      out.push_back(fv);
    }
    return out;
  };
  std::vector<PolyhedralComplex> pieces;
  std::vector<Cell> fan;
  for (const auto& fv : facets_of(ctx.S_polar))
    fan.push_back({dd_convert(Polyhedron::from_vrep(m, VRep{{zero_vector(m)}, fv, {}})), ""});
  pieces.push_back(PolyhedralComplex::from_maximal(m, fan));
  for (std::size_t r = 1; r <= 3; ++r) {
    Polyhedron q = dd_convert(onion_polar(ctx, 3, r));
    std::vector<Cell> split;
    for (const auto& fv : facets_of(q)) {
      std::vector<RationalVector> in = fv;
      in.push_back(zero_vector(m));
      split.push_back({dd_convert(Polyhedron::from_vertices(m, in)), "in"});
      split.push_back({dd_convert(Polyhedron::from_vrep(m, VRep{fv, fv, {}})), "out"});
    }
    pieces.push_back(PolyhedralComplex::from_maximal(m, split));
  }
  PolyhedralComplex brute = common_refinement(ctx.S_polar, pieces);
  o.require(complex_equal(rc, brute), "rotation complex differs from the brute-force refinement");
  VerificationReport r = verify_claim("permutahedron", {});
  o.require(r.verdict == Verdict::Verified, "claim: " + r.witness);
  if (o.pass)
    o.note = std::to_string(rc.maximal_cells().size()) + " cells; onion up " + r.details["onion_orientation_up"] +
             ", down " + r.details["onion_orientation_down"] + "; diagram " + r.details["diagram"];
}

// 3. pi injective for a facet.
void check_pi_injective(Outcome& o) {
  RotationContext ctx = permutahedron_face_context(3);
  const FaceLattice& D = *ctx.D;
  std::minstd_rand rng(99);
  std::set<std::string> images;
  std::size_t count = 0;
  std::vector<Polyhedron> maximal_images;
  for (std::size_t f = 0; f < D.size(); ++f) {
    const Face& F = D.face(f);
    if (F.empty()) continue;
    std::vector<RationalVector> pts;
    for (auto v : F.vertex_indices) pts.push_back(ctx.P_polar().vertices()[v]);
    std::vector<RationalVector> samples = {barycenter(pts)};
    for (int s = 0; s < 8; ++s) samples.push_back(random_point(rng, pts));
    std::set<std::string> local;
    for (const auto& b : samples)
      if (local.insert(to_string(b)).second) {
        images.insert(to_string(pi(ctx, b)));
        ++count;
      }
  }
  o.require(images.size() == count, "two samples of D share a pi image");
  for (auto f : D.maximal_faces()) {
    std::vector<RationalVector> img;
    for (auto v : D.face(f).vertex_indices) img.push_back(pi(ctx, ctx.P_polar().vertices()[v]));
    maximal_images.push_back(dd_convert(Polyhedron::from_vertices(ctx.ambient_dim(), img)));
  }
  const int k = ctx.S_polar.dim();
  for (std::size_t i = 0; i < maximal_images.size(); ++i)
    for (std::size_t j = i + 1; j < maximal_images.size(); ++j) {
      auto x = intersect(maximal_images[i], maximal_images[j]);
      o.require(!x || x->dim() < k, "two image cells overlap");
    }
  o.claim("pi-injective");
  if (o.pass) o.note = std::to_string(count) + " samples, " + std::to_string(maximal_images.size()) + " image cells";
}

// 4. TSP global description.
void check_tsp_global(Outcome& o) {
  RotationContext ctx = tsp_context(5);
  DegreeStructure ds(5);
  FaceLattice del = del_N(ctx);
  PolyhedralComplex rc = rotation_complex(ctx, &del);
  std::set<std::pair<std::size_t, std::string>> keys;
  for (auto i : rc.maximal_cells()) {
    const Polyhedron& C = rc.cells()[i].geometry;
    RationalVector x = barycenter(C.vertices());
    EuSignature sig = E_u_signature(ds.E, x);
    auto face = carrier_face(del, ctx.S_polar, x);
    o.require(face.has_value(), "cell not inside del(N)");
    if (!face) continue;
    // relative interior points carry one face of del(N) and one cone of the flat
    // TT fan (cells on the boundary of S^polar may sit in lower cones, with ties)
    for (const auto& v : C.vertices()) {
      RationalVector y = ratio(9, 10) * x + ratio(1, 10) * v;
      o.require(E_u_signature(ds.E, y) == sig, "signature not constant inside a cell");
      o.require(carrier_face(del, ctx.S_polar, y) == face, "face not constant inside a cell");
      // the vertex lies in the closed cone: the argmins of x stay minimal at v
      for (std::size_t u = 0; u < 5; ++u) {
        Rational best = triangle_slack(ds.E, v, {u, sig[u][0]});
        for (auto e : sig[u]) o.require(triangle_slack(ds.E, v, {u, e}) == best, "cell leaves its flat TT cone");
        for (std::size_t e = 0; e < ds.E.size(); ++e) {
          auto [p, q] = ds.E.pair(e);
          if (p != u && q != u) o.require(best <= triangle_slack(ds.E, v, {u, e}), "cell leaves its flat TT cone");
        }
      }
    }
    o.require(keys.insert({*face, to_string(sig)}).second, "two cells with the same face and signature");
  }
  // the cells cover del(N)
  for (const auto& y : sample_points(ctx, del, 200, 31)) {
    bool covered = false;
    for (auto i : rc.maximal_cells()) covered = covered || rc.cells()[i].geometry.contains(y);
    o.require(covered, "point of del(N) in no cell");
  }
  o.claim("tsp-global");
  if (o.pass) o.note = std::to_string(rc.maximal_cells().size()) + " cells";
}

void check_tsp_homeo(Outcome& o) {
  RotationContext ctx = tsp_context(5);
  DegreeStructure ds(5);
  RationalVector chi = zero_vector(10), one(10, Rational(1));
  for (std::size_t i = 0; i < 5; ++i) chi[ds.E.index(i, (i + 1) % 5)] = 1;
  RationalVector a = ratio(2, 5) * chi - ratio(1, 5) * one;
  RationalVector b = ratio(1, 5) * (chi + one);
  o.require(phi(ds, a) == b, "phi(a') != (chi^C + 1)/5");
  o.require(pi(ctx, b) == a, "pi((chi^C + 1)/5) != a'");
  o.claim("tsp-homeo");
}

void check_two_defs(Outcome& o) {
  VerifyParams p;
  p.samples = 100;
  p.family = "birkhoff";
  p.n = 3;
  o.claim("two-defs", p);
  p.family = "tsp";
  p.n = 5;
  o.claim("two-defs", p);
  o.claim("z-independence");
  RotationContext ctx = birkhoff_context(3);
  RationalVector z2 = zero_vector(9), id = zero_vector(9);
  for (int i = 0; i < 3; ++i) id[4 * i] = 1;
  Rational total = 0;
  for (const auto& v : ctx.S.vertices()) {
    Rational w = v == id ? 2 : 1;
    z2 += w * v;
    total += w;
  }
  std::string why;
  o.require(verify_z_independence(ctx, Rational(1) / total * z2, &why), "weighted barycenter: " + why);
}

struct Criterion {
  int id;
  const char* name;
  double target_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> all = {
      {1, "Birkhoff rotation complex", 120, check_birkhoff},
      {2, "permutahedron rotation complex", 120, check_permutahedron},
      {3, "pi injective for a facet", 60, check_pi_injective},
      {4, "TSP global description", 600, check_tsp_global},
      {5, "TSP local description", 300, [](Outcome& o) { o.claim("tsp-local"); }},
      {6, "TSP homeomorphism", 600, check_tsp_homeo},
      {7, "TSP lemma suite", 600, [](Outcome& o) { o.claim("tsp-lemmas"); }},
      {8, "two definitions and z independence", 300, check_two_defs},
      {9, "infrastructure", 300, [](Outcome& o) { o.claim("infrastructure"); }},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && s > c.target_s) {
      o.pass = false;
      o.note = "over time target";
    }
    failed += !o.pass;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs / %.0fs", s, c.target_s);
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << buf << "]"
              << (o.note.empty() ? "" : "  " + o.note) << std::endl;
  }
  std::cout << (9 - failed) << "/9 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
