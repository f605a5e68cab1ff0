#include "rotaplex/face_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <memory>
#include <numeric>

namespace rotaplex {

std::size_t max_faces_limit() {
  if (const char* s = std::getenv("ROTAPLEX_MAX_FACES")) {
    try {
      long long v = std::stoll(s);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return 200000;
}

std::optional<std::size_t> FaceLattice::find(const IndexSet& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FaceLattice::top() const {
  return find(IndexSet::full(nv_ + nr_));
}

std::optional<std::size_t> FaceLattice::bottom() const { return find(IndexSet(nv_ + nr_)); }

std::vector<std::size_t> FaceLattice::maximal_faces() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (parents_[i].empty() && !faces_[i].empty()) out.push_back(i);
  if (out.empty() && !faces_.empty()) out.push_back(0);
  return out;
}

IndexSet FaceLattice::closure(const IndexSet& g) const {
  IndexSet c = IndexSet::full(nv_ + nr_);
  for (const auto& r : rows_)
    if (g.subset_of(r)) c &= r;
  return c;
}

std::vector<std::size_t> FaceLattice::tight_rows(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (gens_[i].subset_of(rows_[r])) out.push_back(r);
  return out;
}

Face FaceLattice::make_face(const IndexSet& g, int dim) const {
  Face f;
  for (auto i : g.to_vector()) {
    if (i < nv_) f.vertex_indices.push_back(i);
    else f.ray_indices.push_back(i - nv_);
  }
  f.dim = dim;
  return f;
}

IndexSet FaceLattice::to_generators(const Face& f) const {
  IndexSet g(nv_ + nr_);
  for (auto i : f.vertex_indices) g.insert(i);
  for (auto i : f.ray_indices) g.insert(nv_ + i);
  return g;
}

void FaceLattice::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < gens_.size(); ++i) index_.emplace(gens_[i], i);
}

FaceLattice FaceLattice::subcomplex(const std::function<bool(std::size_t)>& keep) const {
  FaceLattice out;
  out.poly_ = poly_;
  out.nv_ = nv_;
  out.nr_ = nr_;
  out.rows_ = rows_;
  std::vector<std::size_t> map(faces_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (!keep(i)) continue;
    map[i] = out.faces_.size();
    out.faces_.push_back(faces_[i]);
    out.gens_.push_back(gens_[i]);
  }
  out.children_.resize(out.faces_.size());
  out.parents_.resize(out.faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (map[i] == SIZE_MAX) continue;
    for (auto c : children_[i])
      if (map[c] != SIZE_MAX) out.children_[map[i]].push_back(map[c]);
    for (auto p : parents_[i])
      if (map[p] != SIZE_MAX) out.parents_[map[i]].push_back(map[p]);
  }
  out.rebuild_index();
  return out;
}

FaceLattice face_lattice(const Polyhedron& p, std::size_t max_faces) {
  FaceLattice L;
  L.poly_ = std::make_shared<const Polyhedron>(p);
  const auto& v = p.vrep();
  L.nv_ = v.vertices.size();
  L.nr_ = v.rays.size();
  const std::size_t ng = L.nv_ + L.nr_;
  for (const auto& c : p.hrep()) {
    if (c.rel == Rel::EQ) continue;
    LinearConstraint le = as_le(c);
    IndexSet inc(ng);
    for (std::size_t i = 0; i < L.nv_; ++i)
      if (dot(le.a, v.vertices[i]) == le.b) inc.insert(i);
    for (std::size_t i = 0; i < L.nr_; ++i)
      if (sgn(dot(le.a, v.rays[i])) == 0) inc.insert(L.nv_ + i);
    L.rows_.push_back(std::move(inc));
  }
  IndexSet vertex_mask(ng);
  for (std::size_t i = 0; i < L.nv_; ++i) vertex_mask.insert(i);

  std::vector<IndexSet> gens;
  std::vector<int> dims;
  std::vector<std::vector<std::size_t>> children;
  std::unordered_map<IndexSet, std::size_t, IndexSetHash> index;
  auto add = [&](const IndexSet& g, int d) {
    auto it = index.find(g);
    if (it != index.end()) return std::make_pair(it->second, false);
    if (gens.size() >= max_faces) throw FaceLimitError(max_faces);
    index.emplace(g, gens.size());
    gens.push_back(g);
    dims.push_back(d);
    children.emplace_back();
    return std::make_pair(gens.size() - 1, true);
  };
  if (L.nv_ == 0) throw EmptyPolyhedronError();
  const IndexSet empty(ng);
  add(IndexSet::full(ng), p.dim());
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t f = queue.front();
    queue.pop_front();
    const IndexSet F = gens[f];
    if (F.empty()) continue;
    std::vector<IndexSet> cand;
    for (const auto& r : L.rows_) {
      IndexSet g = F & r;
      if (g == F || !g.intersects(vertex_mask)) continue;
      cand.push_back(std::move(g));
    }
    std::sort(cand.begin(), cand.end(), [](const IndexSet& a, const IndexSet& b) {
      return a.count() > b.count();
    });
    std::vector<IndexSet> maximal;
    for (const auto& g : cand) {
      bool dominated = false;
      for (const auto& m : maximal)
        if (g.subset_of(m)) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(g);
    }
    if (maximal.empty()) maximal.push_back(empty);
    for (const auto& g : maximal) {
      auto [idx, fresh] = add(g, g.empty() ? -1 : dims[f] - 1);
      children[f].push_back(idx);
      if (fresh) queue.push_back(idx);
    }
  }
  // Canonical order: by dimension, then by generator list.
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> keys(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) keys[i] = gens[i].to_vector();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dims[a] != dims[b]) return dims[a] < dims[b];
    return keys[a] < keys[b];
  });
  std::vector<std::size_t> pos(gens.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  L.faces_.resize(gens.size());
  L.gens_.resize(gens.size());
  L.children_.assign(gens.size(), {});
  L.parents_.assign(gens.size(), {});
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t j = pos[i];
    L.gens_[j] = gens[i];
    L.faces_[j] = L.make_face(gens[i], dims[i]);
    for (auto c : children[i]) {
      L.children_[j].push_back(pos[c]);
      L.parents_[pos[c]].push_back(j);
    }
  }
  for (auto& c : L.children_) std::sort(c.begin(), c.end());
  for (auto& c : L.parents_) std::sort(c.begin(), c.end());
  L.rebuild_index();
  return L;
}

RationalVector relint_point(const Face& f, const Polyhedron& parent) {
  if (f.vertex_indices.empty()) throw std::invalid_argument("relint_point: empty face");
  const auto& v = parent.vrep();
  RationalVector x = zero_vector(parent.ambient_dim());
  for (auto i : f.vertex_indices) x += v.vertices.at(i);
  x = ratio(1, static_cast<unsigned long>(f.vertex_indices.size())) * x;
  for (auto i : f.ray_indices) x += v.rays.at(i);
  return x;
}

Polyhedron face_polyhedron(const Face& f, const Polyhedron& parent) {
  if (f.vertex_indices.empty()) throw EmptyPolyhedronError();
  VRep v;
  for (auto i : f.vertex_indices) v.vertices.push_back(parent.vrep().vertices.at(i));
  for (auto i : f.ray_indices) v.rays.push_back(parent.vrep().rays.at(i));
  v.lineality = parent.vrep().lineality;
  v = canonical_vrep(parent.ambient_dim(), std::move(v));
  std::vector<LinearConstraint> cand;
  for (const auto& c : parent.hrep()) {
    if (c.rel == Rel::EQ) {
      cand.push_back(c);
      continue;
    }
    bool tight = true;
    for (const auto& x : v.vertices)
      if (dot(c.a, x) != c.b) tight = false;
    for (const auto& r : v.rays)
      if (sgn(dot(c.a, r)) != 0) tight = false;
    cand.push_back(tight ? LinearConstraint{c.a, c.b, Rel::EQ} : c);
  }
  auto rows = irredundant_hrep(parent.ambient_dim(), v, cand);
  return Polyhedron::from_both(parent.ambient_dim(), std::move(rows), std::move(v));
}

FaceLattice deletion(const FaceLattice& lattice, const IndexSet& forbidden) {
  return lattice.subcomplex([&](std::size_t i) {
    for (auto v : lattice.face(i).vertex_indices)
      if (v < forbidden.universe() && forbidden.contains(v)) return false;
    return true;
  });
}

FaceLattice deletion(const FaceLattice& lattice, const Face& forbidden) {
  IndexSet s(lattice.num_vertices());
  for (auto v : forbidden.vertex_indices) s.insert(v);
  return deletion(lattice, s);
}

FaceLattice bounded_subcomplex(const FaceLattice& lattice) {
  return lattice.subcomplex([&](std::size_t i) { return lattice.face(i).ray_indices.empty(); });
}

}  // namespace rotaplex
