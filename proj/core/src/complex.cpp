#include "rotaplex/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "rotaplex/linalg.hpp"
#include "rotaplex/lp.hpp"

namespace rotaplex {

namespace {

std::string vrep_key(const VRep& v) {
  std::string s = "V";
  for (const auto& x : v.vertices) s += to_string(x);
  s += "R";
  for (const auto& x : v.rays) s += to_string(x);
  s += "L";
  for (const auto& x : v.lineality) s += to_string(x);
  return s;
}

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::string point_set_key(const Polyhedron& p) {
  return vrep_key(canonical_vrep(p.ambient_dim(), p.vrep()));
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "?";
}

PolyhedralComplex::PolyhedralComplex(std::size_t ambient_dim, std::vector<Cell> cells,
                                     std::vector<bool> maximal)
    : dim_(ambient_dim), cells_(std::move(cells)), maximal_(std::move(maximal)) {
  if (maximal_.size() != cells_.size()) throw std::invalid_argument("maximal flags size");
  for (const auto& c : cells_)
    if (c.geometry.ambient_dim() != dim_) throw DimensionError("cell ambient dimension");
}

PolyhedralComplex PolyhedralComplex::from_maximal(std::size_t ambient_dim, std::vector<Cell> cells) {
  std::vector<bool> m(cells.size(), true);
  return PolyhedralComplex(ambient_dim, std::move(cells), std::move(m));
}

std::vector<std::size_t> PolyhedralComplex::maximal_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (maximal_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> PolyhedralComplex::canonical_order() const {
  std::vector<std::string> keys;
  for (const auto& c : cells_) keys.push_back(point_set_key(c.geometry));
  std::vector<std::size_t> order(cells_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int da = cells_[a].geometry.dim(), db = cells_[b].geometry.dim();
    if (da != db) return da > db;
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return cells_[a].label < cells_[b].label;
  });
  return order;
}

PolyhedralComplex PolyhedralComplex::with_all_faces() const {
  std::vector<Cell> out;
  std::vector<bool> maximal;
  std::unordered_map<std::string, std::size_t> seen;
  for (auto i : maximal_cells()) {
    const Polyhedron& g = cells_[i].geometry;
    FaceLattice L = face_lattice(g);
    for (std::size_t f = 0; f < L.size(); ++f) {
      if (L.face(f).empty()) continue;
      Polyhedron fp = face_polyhedron(L.face(f), g);
      std::string key = point_set_key(fp);
      bool is_top = L.face(f).dim == g.dim();
      auto it = seen.find(key);
      if (it != seen.end()) {
        if (is_top) maximal[it->second] = true;
        continue;
      }
      seen.emplace(key, out.size());
      out.push_back(Cell{fp, is_top ? cells_[i].label : std::string()});
      maximal.push_back(is_top);
    }
  }
  return PolyhedralComplex(dim_, std::move(out), std::move(maximal));
}

bool PolyhedralComplex::is_face_to_face() const {
  auto mc = maximal_cells();
  std::vector<FaceLattice> lat;
  std::vector<std::unordered_map<std::string, std::size_t>> vid(mc.size());
  for (std::size_t k = 0; k < mc.size(); ++k) {
    const auto& g = cells_[mc[k]].geometry;
    lat.push_back(face_lattice(g));
    for (std::size_t v = 0; v < g.vertices().size(); ++v) vid[k][to_string(g.vertices()[v])] = v;
  }
  auto is_face_of = [&](const Polyhedron& inter, std::size_t k) {
    const auto& g = cells_[mc[k]].geometry;
    const std::size_t nv = g.vertices().size();
    IndexSet gens(g.num_generators());
    for (const auto& x : inter.vertices()) {
      auto it = vid[k].find(to_string(x));
      if (it == vid[k].end()) return false;
      gens.insert(it->second);
    }
    for (const auto& r : inter.rays()) {
      bool found = false;
      for (std::size_t j = 0; j < g.rays().size(); ++j)
        if (normalize_direction(g.rays()[j]) == normalize_direction(r)) {
          gens.insert(nv + j);
          found = true;
        }
      if (!found) return false;
    }
    return lat[k].closure(gens) == gens;
  };
  for (std::size_t a = 0; a < mc.size(); ++a) {
    for (std::size_t b = a + 1; b < mc.size(); ++b) {
      auto inter = intersect(cells_[mc[a]].geometry, cells_[mc[b]].geometry);
      if (!inter) continue;
      if (!is_face_of(*inter, a) || !is_face_of(*inter, b)) return false;
    }
  }
  return true;
}

PolyhedralComplex Fan::as_complex(std::size_t ambient_dim) const {
  return PolyhedralComplex::from_maximal(ambient_dim, cones);
}

PolyhedralComplex common_refinement(const Polyhedron& region0,
                                    const std::vector<PolyhedralComplex>& pieces) {
  Polyhedron region = dd_convert(region0);
  if (!region.is_bounded()) throw std::invalid_argument("common_refinement: region must be bounded");
  const int k = region.dim();
  std::vector<Cell> cells{Cell{region, std::string()}};
  for (const auto& piece : pieces) {
    std::vector<Cell> next;
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& K : cells) {
      for (auto m : piece.maximal_cells()) {
        const Cell& M = piece.cells()[m];
        auto I = intersect(K.geometry, M.geometry.hrep());
        if (!I || I->dim() != k) continue;
        std::string key = point_set_key(*I);
        if (seen.count(key)) continue;
        seen.emplace(key, next.size());
        std::string label = K.label.empty() ? M.label : K.label + "|" + M.label;
        next.push_back(Cell{*I, label});
      }
    }
    cells = std::move(next);
  }
  PolyhedralComplex c = PolyhedralComplex::from_maximal(region.ambient_dim(), std::move(cells));
  std::vector<Cell> sorted;
  for (auto i : c.canonical_order()) sorted.push_back(c.cells()[i]);
  return PolyhedralComplex::from_maximal(region.ambient_dim(), std::move(sorted));
}

PolyhedralComplex cells_by_signature(const Polyhedron& region0,
                                     const std::vector<LinearConstraint>& hyperplanes,
                                     const SignatureFn& sig) {
  Polyhedron region = dd_convert(region0);
  if (!region.is_bounded()) throw std::invalid_argument("cells_by_signature: region must be bounded");
  const std::size_t d = region.ambient_dim();

  // Deduplicate hyperplanes (as EQ rows in canonical form) and sort them.
  std::vector<LinearConstraint> hs;
  for (const auto& h : hyperplanes) {
    if (is_zero(h.a)) continue;
    hs.push_back(canonical(LinearConstraint{h.a, h.b, Rel::EQ}));
  }
  std::sort(hs.begin(), hs.end(), constraint_less);
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  std::vector<Polyhedron> cells{region};
  for (const auto& h : hs) {
    std::vector<Polyhedron> next;
    for (auto& K : cells) {
      bool pos = false, neg = false;
      for (const auto& v : K.vertices()) {
        int c = cmp(dot(h.a, v), h.b);
        if (c > 0) pos = true;
        if (c < 0) neg = true;
      }
      if (!(pos && neg)) {
        next.push_back(std::move(K));
        continue;
      }
      auto lo = intersect(K, {LinearConstraint{h.a, h.b, Rel::LE}});
      auto hi = intersect(K, {LinearConstraint{h.a, h.b, Rel::GE}});
      next.push_back(std::move(*lo));
      next.push_back(std::move(*hi));
    }
    cells = std::move(next);
  }

  // Global vertex pool and facet keys.
  std::unordered_map<RationalVector, std::size_t, RationalVectorHash> pool;
  std::vector<RationalVector> pool_pts;
  auto vid = [&](const RationalVector& x) {
    auto it = pool.find(x);
    if (it != pool.end()) return it->second;
    pool.emplace(x, pool_pts.size());
    pool_pts.push_back(x);
    return pool_pts.size() - 1;
  };
  const std::size_t n = cells.size();
  std::vector<std::vector<std::vector<std::size_t>>> facets(n);
  std::vector<std::string> sigs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& K = cells[i];
    std::vector<std::size_t> ids;
    for (const auto& v : K.vertices()) ids.push_back(vid(v));
    for (const auto& row : K.hrep()) {
      if (row.rel == Rel::EQ) continue;
      std::vector<std::size_t> f;
      for (std::size_t j = 0; j < K.vertices().size(); ++j)
        if (dot(row.a, K.vertices()[j]) == row.b) f.push_back(ids[j]);
      std::sort(f.begin(), f.end());
      facets[i].push_back(std::move(f));
    }
    sigs[i] = sig(relint_point(K));
  }
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_facet;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& f : facets[i]) by_facet[f].push_back(i);
  UnionFind uf(n);
  for (const auto& [f, cs] : by_facet) {
    if (cs.size() == 2 && sigs[cs[0]] == sigs[cs[1]]) uf.unite(cs[0], cs[1]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

  std::vector<Cell> out;
  for (const auto& [root, members] : groups) {
    if (members.size() == 1) {
      out.push_back(Cell{cells[members[0]], sigs[members[0]]});
      continue;
    }
    std::set<std::size_t> vs;
    std::map<std::vector<std::size_t>, int> fcount;
    for (auto i : members) {
      for (const auto& v : cells[i].vertices()) vs.insert(vid(v));
      for (const auto& f : facets[i]) fcount[f]++;
    }
    std::vector<RationalVector> pts;
    for (auto v : vs) pts.push_back(pool_pts[v]);
    Polyhedron merged = dd_convert(Polyhedron::from_vertices(d, pts));
    // Every facet not shared inside the group must lie on the hull boundary.
    for (const auto& [f, cnt] : fcount) {
      if (cnt > 2) throw MergeConvexityError("cells_by_signature: facet shared by more than two cells");
      if (cnt == 2) continue;
      bool on_boundary = false;
      for (const auto& row : merged.hrep()) {
        if (row.rel == Rel::EQ) continue;
        bool all = true;
        for (auto v : f)
          if (dot(row.a, pool_pts[v]) != row.b) {
            all = false;
            break;
          }
        if (all) {
          on_boundary = true;
          break;
        }
      }
      if (!on_boundary)
        throw MergeConvexityError("cells_by_signature: merged region with signature '" +
                                  sigs[members[0]] + "' is not convex");
    }
    out.push_back(Cell{merged, sigs[members[0]]});
  }
  PolyhedralComplex c = PolyhedralComplex::from_maximal(d, std::move(out));
  std::vector<Cell> sorted;
  for (auto i : c.canonical_order()) sorted.push_back(c.cells()[i]);
  return PolyhedralComplex::from_maximal(d, std::move(sorted));
}

namespace {

struct RegionPiece {
  std::size_t index;
  std::vector<LinearConstraint> rows;  // inequalities as <=
};

// -1: interiors disjoint, 1: cell inside, 0: some row cuts the cell (returned in cut).
int classify(const Polyhedron& cell, const RegionPiece& p, const LinearConstraint** cut) {
  const LinearConstraint* cand = nullptr;
  bool outside = false;
  for (const auto& r : p.rows) {
    bool lt = false, gt = false;
    for (const auto& v : cell.vertices()) {
      int c = cmp(dot(r.a, v), r.b);
      if (c < 0) lt = true;
      else if (c > 0) gt = true;
      if (lt && gt) break;
    }
    if (!lt) return -1;
    if (gt) {
      outside = true;
      if (!cand) cand = &r;
    }
  }
  if (!outside) return 1;
  *cut = cand;
  return 0;
}

bool interiors_meet(const Polyhedron& a, const Polyhedron& b, int dim) {
  auto sep = [](const Polyhedron& x, const Polyhedron& y) {
    for (const auto& row : x.hrep()) {
      if (row.rel == Rel::EQ) continue;
      LinearConstraint r = as_le(row);
      bool all_ge = true;
      for (const auto& v : y.vertices())
        if (cmp(dot(r.a, v), r.b) < 0) {
          all_ge = false;
          break;
        }
      if (all_ge) return true;
    }
    return false;
  };
  if (sep(a, b) || sep(b, a)) return false;
  auto c = intersect(a, b);
  return c && c->dim() == dim;
}

}  // namespace

PolyhedralComplex cells_by_regions(const Polyhedron& region0, const std::vector<Polyhedron>& pieces,
                                   const IndexLabelFn& label) {
  Polyhedron region = dd_convert(region0);
  if (!region.is_bounded()) throw std::invalid_argument("cells_by_regions: region must be bounded");
  const std::size_t d = region.ambient_dim();
  const int k = region.dim();
  std::vector<RegionPiece> ps;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto j = intersect(region, pieces[i]);
    if (!j || j->dim() != k) continue;
    RegionPiece rp{i, {}};
    for (const auto& row : j->inequalities()) rp.rows.push_back(as_le(row));
    ps.push_back(std::move(rp));
  }

  struct Work {
    Polyhedron cell;
    std::vector<std::size_t> active;  // undecided pieces (positions in ps)
    std::vector<std::size_t> inside;  // piece indices known to contain the cell
  };
  std::vector<Polyhedron> cells;
  std::vector<std::vector<std::size_t>> sigs;
  std::vector<Work> stack;
  {
    std::vector<std::size_t> all(ps.size());
    std::iota(all.begin(), all.end(), 0);
    stack.push_back({region, std::move(all), {}});
  }
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    const LinearConstraint* cut = nullptr;
    std::vector<std::size_t> rest;
    std::size_t pos = 0;
    for (; pos < w.active.size(); ++pos) {
      const auto& p = ps[w.active[pos]];
      int c = classify(w.cell, p, &cut);
      if (c == 1) w.inside.push_back(p.index);
      else if (c == 0) break;
    }
    if (pos == w.active.size()) {
      std::sort(w.inside.begin(), w.inside.end());
      cells.push_back(std::move(w.cell));
      sigs.push_back(std::move(w.inside));
      continue;
    }
    std::vector<std::size_t> active(w.active.begin() + static_cast<std::ptrdiff_t>(pos), w.active.end());
    LinearConstraint h = *cut;
    auto lo = intersect(w.cell, {LinearConstraint{h.a, h.b, Rel::LE}});
    auto hi = intersect(w.cell, {LinearConstraint{h.a, h.b, Rel::GE}});
    stack.push_back({std::move(*hi), active, w.inside});
    stack.push_back({std::move(*lo), std::move(active), std::move(w.inside)});
  }

  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) groups[sigs[i]].push_back(i);
  std::vector<Cell> out;
  for (const auto& [sig, members] : groups) {
    if (members.size() == 1) {
      out.push_back(Cell{cells[members[0]], label(sig)});
      continue;
    }
    std::vector<RationalVector> pts;
    for (auto i : members)
      for (const auto& v : cells[i].vertices()) pts.push_back(v);
    Polyhedron merged = dd_convert(Polyhedron::from_vertices(d, pts));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (sigs[i] == sig) continue;
      if (interiors_meet(merged, cells[i], k))
        throw MergeConvexityError("cells_by_regions: class '" + label(sig) + "' is not convex");
    }
    out.push_back(Cell{merged, label(sig)});
  }
  PolyhedralComplex c = PolyhedralComplex::from_maximal(d, std::move(out));
  std::vector<Cell> sorted;
  for (auto i : c.canonical_order()) sorted.push_back(c.cells()[i]);
  return PolyhedralComplex::from_maximal(d, std::move(sorted));
}

std::optional<std::vector<std::pair<RationalVector, Rational>>> convex_lifting(
    const PolyhedralComplex& c) {
  std::vector<std::size_t> cells = c.maximal_cells();
  std::map<RationalVector, std::size_t> vid;
  std::vector<RationalVector> verts;
  for (auto i : cells) {
    if (!c.cells()[i].geometry.is_bounded())
      throw std::invalid_argument("convex_lifting: bounded cells expected");
    for (const auto& v : c.cells()[i].geometry.vertices())
      if (vid.emplace(v, verts.size()).second) verts.push_back(v);
  }
  const std::size_t d = c.ambient_dim(), nv = verts.size();
  // variables: heights h_v, then per cell an affine function (coef[d], const)
  const std::size_t dim = nv + cells.size() * (d + 1);
  std::vector<LinearConstraint> rows;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Polyhedron& g = c.cells()[cells[k]].geometry;
    std::set<std::size_t> own;
    for (const auto& v : g.vertices()) own.insert(vid.at(v));
    for (std::size_t j = 0; j < nv; ++j) {
      RationalVector r = zero_vector(dim);
      const std::size_t off = nv + k * (d + 1);
      for (std::size_t t = 0; t < d; ++t) r[off + t] = verts[j][t];
      r[off + d] = 1;
      r[j] = -1;
      // f_k(v) = h_v on the cell, f_k(v) <= h_v - 1 elsewhere
      if (own.count(j)) rows.push_back({r, Rational(0), Rel::EQ});
      else rows.push_back({r, Rational(-1), Rel::LE});
    }
  }
  auto sol = lp_feasible_point(dim, rows);
  if (!sol) return std::nullopt;
  std::vector<std::pair<RationalVector, Rational>> out;
  for (std::size_t j = 0; j < nv; ++j) out.emplace_back(verts[j], (*sol)[j]);
  return out;
}

bool complex_equal(const PolyhedralComplex& c1, const PolyhedralComplex& c2) {
  if (c1.ambient_dim() != c2.ambient_dim()) return false;
  std::vector<std::string> k1, k2;
  for (auto i : c1.maximal_cells()) k1.push_back(point_set_key(c1.cells()[i].geometry));
  for (auto i : c2.maximal_cells()) k2.push_back(point_set_key(c2.cells()[i].geometry));
  std::sort(k1.begin(), k1.end());
  std::sort(k2.begin(), k2.end());
  return k1 == k2;
}

std::optional<std::size_t> FacePoset::find(const std::string& key) const {
  auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

FacePoset face_poset(const PolyhedralComplex& c) {
  FacePoset P;
  for (auto i : c.maximal_cells()) {
    const Polyhedron& g = c.cells()[i].geometry;
    FaceLattice L = face_lattice(g);
    std::vector<std::size_t> local(L.size(), SIZE_MAX);
    for (std::size_t f = 0; f < L.size(); ++f) {
      if (L.face(f).empty()) continue;
      Polyhedron fp = face_polyhedron(L.face(f), g);
      std::string key = point_set_key(fp);
      auto it = P.index.find(key);
      if (it == P.index.end()) {
        it = P.index.emplace(key, P.keys.size()).first;
        P.keys.push_back(key);
        P.geometry.push_back(fp);
        P.dims.push_back(L.face(f).dim);
        P.children.emplace_back();
      }
      local[f] = it->second;
    }
    for (std::size_t f = 0; f < L.size(); ++f) {
      if (local[f] == SIZE_MAX) continue;
      for (auto ch : L.children(f)) {
        if (local[ch] == SIZE_MAX) continue;
        auto& kids = P.children[local[f]];
        if (std::find(kids.begin(), kids.end(), local[ch]) == kids.end()) kids.push_back(local[ch]);
      }
    }
  }
  for (auto& k : P.children) std::sort(k.begin(), k.end());
  return P;
}

namespace {

// Iterated colour refinement on the cover graph; returns per-element colours.
std::vector<std::size_t> refine_colours(const FacePoset& p,
                                        std::map<std::vector<std::size_t>, std::size_t>& palette) {
  const std::size_t n = p.keys.size();
  std::vector<std::vector<std::size_t>> parents(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto c : p.children[i]) parents[c].push_back(i);
  std::vector<std::size_t> col(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> sig{static_cast<std::size_t>(p.dims[i] + 1), p.children[i].size(),
                                 parents[i].size()};
    col[i] = palette.emplace(sig, palette.size()).first->second;
  }
  for (int round = 0; round < 8; ++round) {
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig{col[i], SIZE_MAX};
      std::vector<std::size_t> a, b;
      for (auto c : p.children[i]) a.push_back(col[c]);
      for (auto q : parents[i]) b.push_back(col[q]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      sig.insert(sig.end(), a.begin(), a.end());
      sig.push_back(SIZE_MAX - 1);
      sig.insert(sig.end(), b.begin(), b.end());
      next[i] = palette.emplace(sig, palette.size()).first->second;
    }
    col = std::move(next);
  }
  return col;
}

}  // namespace

Tristate poset_isomorphic(const FacePoset& p1, const FacePoset& p2,
                          const std::optional<PointMap>& candidate_map) {
  const std::size_t n = p1.keys.size();
  if (n != p2.keys.size()) return Tristate::False;
  if (candidate_map) {
    std::vector<std::size_t> m(n, SIZE_MAX);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const Polyhedron& g = p1.geometry[i];
      if (!g.rays().empty()) throw std::invalid_argument("poset_isomorphic: point maps need bounded cells");
      std::vector<RationalVector> imgs;
      for (const auto& v : g.vertices()) imgs.push_back((*candidate_map)(v));
      VRep v;
      v.vertices = imgs;
      std::string key = point_set_key(Polyhedron::from_vrep(g.ambient_dim(), v));
      auto j = p2.find(key);
      if (!j || hit[*j]) return Tristate::False;
      m[i] = *j;
      hit[*j] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> mapped;
      for (auto c : p1.children[i]) mapped.push_back(m[c]);
      std::sort(mapped.begin(), mapped.end());
      if (mapped != p2.children[m[i]]) return Tristate::False;
    }
    return Tristate::True;
  }
  std::map<std::vector<std::size_t>, std::size_t> palette;
  auto c1 = refine_colours(p1, palette);
  auto c2 = refine_colours(p2, palette);
  auto h1 = c1, h2 = c2;
  std::sort(h1.begin(), h1.end());
  std::sort(h2.begin(), h2.end());
  if (h1 != h2) return Tristate::False;
  // Backtracking search over colour classes with a step budget.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p1.dims[a] != p1.dims[b] ? p1.dims[a] < p1.dims[b] : a < b;
  });
  std::vector<std::vector<std::size_t>> parents1(n), parents2(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto c : p1.children[i]) parents1[c].push_back(i);
    for (auto c : p2.children[i]) parents2[c].push_back(i);
  }
  std::vector<std::size_t> m(n, SIZE_MAX), inv(n, SIZE_MAX);
  std::size_t budget = 200000;
  std::function<int(std::size_t)> rec = [&](std::size_t k) -> int {
    if (k == n) return 1;
    if (budget-- == 0) return -1;
    std::size_t i = order[k];
    for (std::size_t j = 0; j < n; ++j) {
      if (inv[j] != SIZE_MAX || c2[j] != c1[i]) continue;
      bool ok = true;
      for (auto c : p1.children[i]) {
        if (m[c] == SIZE_MAX) continue;
        if (!std::binary_search(p2.children[j].begin(), p2.children[j].end(), m[c])) ok = false;
      }
      if (!ok) continue;
      m[i] = j;
      inv[j] = i;
      int r = rec(k + 1);
      if (r != 0) return r;
      m[i] = SIZE_MAX;
      inv[j] = SIZE_MAX;
    }
    return 0;
  };
  int r = rec(0);
  if (r == 1) return Tristate::True;
  if (r == 0) return Tristate::False;
  return Tristate::Unknown;
}

Tristate poset_isomorphic(const PolyhedralComplex& c1, const PolyhedralComplex& c2,
                          const std::optional<PointMap>& candidate_map) {
  return poset_isomorphic(face_poset(c1), face_poset(c2), candidate_map);
}

}  // namespace rotaplex
