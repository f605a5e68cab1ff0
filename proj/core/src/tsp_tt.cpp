#include "rotaplex/tsp_tt.hpp"

#include <algorithm>
#include <functional>

#include "rotaplex/linalg.hpp"
#include "rotaplex/lp.hpp"

namespace rotaplex {

RootedTriangle make_triangle(const EdgeIndex& E, std::size_t u, std::size_t vw) {
  if (u >= E.n() || vw >= E.size()) throw std::invalid_argument("rooted triangle: out of range");
  auto [v, w] = E.pair(vw);
  if (u == v || u == w) throw std::invalid_argument("rooted triangle: root on the edge");
  return {u, vw};
}

DegreeStructure::DegreeStructure(std::size_t n_) : n(n_), E(n_) {
  if (n < 3) throw std::invalid_argument("DegreeStructure: n >= 3");
  D.assign(n, zero_vector(E.size()));
  for (std::size_t i = 0; i < E.size(); ++i) {
    auto [u, v] = E.pair(i);
    D[u][i] = Rational(1, 2);
    D[v][i] = Rational(1, 2);
  }
  z.assign(E.size(), ratio(2, static_cast<unsigned long>(n - 1)));
}

RationalVector DegreeStructure::transpose_apply(const RationalVector& xi) const {
  RationalVector out(E.size());
  for (std::size_t i = 0; i < E.size(); ++i) {
    auto [u, v] = E.pair(i);
    out[i] = (xi.at(u) + xi.at(v)) / 2;
  }
  return out;
}

Rational triangle_slack(const EdgeIndex& E, const RationalVector& a, const RootedTriangle& t) {
  if (a.size() != E.size()) throw DimensionError("triangle_slack: dimension");
  auto [v, w] = E.pair(t.vw);
  if (t.u == v || t.u == w) throw std::invalid_argument("triangle_slack: malformed triangle");
  return a[E.index(v, t.u)] + a[E.index(t.u, w)] - a[t.vw];
}

namespace {

template <class F>
void for_each_opposite(const EdgeIndex& E, std::size_t u, F&& f) {
  for (std::size_t e = 0; e < E.size(); ++e) {
    auto [v, w] = E.pair(e);
    if (v != u && w != u) f(e);
  }
}

void require_n4(const EdgeIndex& E, const char* what) {
  if (E.n() < 4) throw std::invalid_argument(std::string(what) + ": needs n >= 4");
}

}  // namespace

bool is_metric(const EdgeIndex& E, const RationalVector& a) {
  for (std::size_t u = 0; u < E.n(); ++u) {
    bool ok = true;
    for_each_opposite(E, u, [&](std::size_t e) {
      if (sgn(triangle_slack(E, a, {u, e})) < 0) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

RationalVector lambda(const EdgeIndex& E, const RationalVector& a) {
  require_n4(E, "lambda");
  RationalVector out(E.n());
  for (std::size_t u = 0; u < E.n(); ++u) {
    bool first = true;
    for_each_opposite(E, u, [&](std::size_t e) {
      Rational t = triangle_slack(E, a, {u, e});
      if (first || t < out[u]) out[u] = t;
      first = false;
    });
  }
  return out;
}

bool is_TT(const EdgeIndex& E, const RationalVector& a) {
  if (!is_metric(E, a)) return false;
  for (const auto& l : lambda(E, a))
    if (sgn(l) != 0) return false;
  return true;
}

RationalVector theta(const DegreeStructure& ds, const RationalVector& a) {
  return a - ds.transpose_apply(lambda(ds.E, a));
}

std::pair<Rational, RationalVector> theta_tilde(const DegreeStructure& ds, const Rational& alpha,
                                                const RationalVector& a) {
  RationalVector l = lambda(ds.E, a);
  Rational s = 0;
  for (const auto& x : l) s += x;
  return {alpha - s, a - ds.transpose_apply(l)};
}

std::pair<Rational, RationalVector> gamma_c(const DegreeStructure& ds, const RationalVector& a) {
  for (const auto& row : ds.D)
    if (sgn(dot(row, a)) != 0) throw std::invalid_argument("gamma_c: a is not in ker D");
  return theta_tilde(ds, Rational(-1) + dot(a, ds.z), a);
}

RationalVector phi(const DegreeStructure& ds, const RationalVector& a) {
  auto [g, c] = gamma_c(ds, a);
  if (sgn(g) <= 0)
    throw std::invalid_argument("phi: gamma(a) = " + g.get_str() +
                                " is not positive; a lies outside the admissible subcomplex");
  return Rational(1) / g * c;
}

EuSignature E_u_signature(const EdgeIndex& E, const RationalVector& a) {
  require_n4(E, "E_u_signature");
  RationalVector l = lambda(E, a);
  EuSignature out(E.n());
  for (std::size_t u = 0; u < E.n(); ++u)
    for_each_opposite(E, u, [&](std::size_t e) {
      if (triangle_slack(E, a, {u, e}) == l[u]) out[u].push_back(e);
    });
  return out;
}

std::string to_string(const EuSignature& s) {
  std::string out;
  for (std::size_t u = 0; u < s.size(); ++u) {
    if (u) out += ";";
    for (std::size_t i = 0; i < s[u].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[u][i]);
    }
  }
  return out;
}

std::optional<std::set<RootedTriangle>> tt_fan_membership(const EdgeIndex& E,
                                                          const RationalVector& d) {
  if (!is_metric(E, d)) return std::nullopt;
  std::set<RootedTriangle> tight;
  for (std::size_t u = 0; u < E.n(); ++u) {
    bool any = false;
    for_each_opposite(E, u, [&](std::size_t e) {
      if (sgn(triangle_slack(E, d, {u, e})) == 0) {
        tight.insert({u, e});
        any = true;
      }
    });
    if (!any) return std::nullopt;
  }
  return tight;
}

namespace {

// t_{u,e}(a) - t_{u,f}(a) as a linear form.
RationalVector slack_difference(const EdgeIndex& E, std::size_t u, std::size_t e, std::size_t f) {
  RationalVector r = zero_vector(E.size());
  auto add = [&](std::size_t edge, const Rational& s) {
    auto [v, w] = E.pair(edge);
    r[E.index(v, u)] += s;
    r[E.index(u, w)] += s;
    r[edge] -= s;
  };
  add(e, Rational(1));
  add(f, Rational(-1));
  return r;
}

std::vector<LinearConstraint> cone_rows(const DegreeStructure& ds, const std::vector<std::size_t>& choice,
                                        const Rational& gap) {
  std::vector<LinearConstraint> rows;
  for (const auto& d : ds.D) rows.push_back({d, Rational(0), Rel::EQ});
  for (std::size_t u = 0; u < choice.size(); ++u)
    for_each_opposite(ds.E, u, [&](std::size_t e) {
      if (e != choice[u]) rows.push_back({slack_difference(ds.E, u, e, choice[u]), gap, Rel::GE});
    });
  return rows;
}

}  // namespace

Fan flat_tt_fan(const DegreeStructure& ds) {
  const EdgeIndex& E = ds.E;
  if (E.n() < 4 || E.n() > 6) throw std::invalid_argument("flat_tt_fan: n must be in 4..6");
  const std::size_t m = E.size();
  Fan fan;
  std::vector<std::size_t> choice;
  std::function<void()> rec = [&]() {
    if (!lp_feasible(m, cone_rows(ds, choice, Rational(1)))) return;
    const std::size_t u = choice.size();
    if (u == E.n()) {
      Polyhedron cone = dd_convert(Polyhedron::from_hrep(m, cone_rows(ds, choice, Rational(0))));
      EuSignature sig(E.n());
      for (std::size_t k = 0; k < E.n(); ++k) sig[k] = {choice[k]};
      fan.cones.push_back({std::move(cone), to_string(sig)});
      return;
    }
    for_each_opposite(E, u, [&](std::size_t e) {
      choice.push_back(e);
      rec();
      choice.pop_back();
    });
  };
  rec();

  // Completeness: across every facet of every cone lies another cone.
  const std::vector<RationalVector> L = kernel_basis(ds.D, m);
  fan.complete = true;
  for (std::size_t i = 0; i < fan.cones.size() && fan.complete; ++i) {
    const Polyhedron& K = fan.cones[i].geometry;
    for (const auto& row : K.inequalities()) {
      LinearConstraint h = as_le(row);
      RationalVector f = zero_vector(m);  // relint point of the facet
      for (const auto& v : K.vertices())
        if (h.tight_at(v)) f += v;
      for (const auto& r : K.rays())
        if (sgn(dot(h.a, r)) == 0) f += r;
      RationalVector w = orth_project(L, h.a);  // outward direction in L
      bool found = false;
      for (std::size_t j = 0; j < fan.cones.size() && !found; ++j) {
        if (j == i || !fan.cones[j].geometry.contains(f)) continue;
        found = true;
        for (const auto& r2 : fan.cones[j].geometry.inequalities()) {
          LinearConstraint g = as_le(r2);
          if (g.tight_at(f) && sgn(dot(g.a, w)) > 0) {
            found = false;
            break;
          }
        }
      }
      if (!found) {
        fan.complete = false;
        break;
      }
    }
  }
  return fan;
}

RationalVector shortcut(const EdgeIndex& E, const RootedTriangle& t) {
  auto [v, w] = E.pair(t.vw);
  RationalVector s = zero_vector(E.size());
  s[t.vw] = 1;
  s[E.index(v, t.u)] = -1;
  s[E.index(t.u, w)] = -1;
  return s;
}

bool is_good_face(const RotationContext& ctx, const IndexSet& g) { return is_good_face(ctx.P, g); }

bool is_good_face(const Polyhedron& P, const IndexSet& g) {
  const auto& V = P.vertices();
  const auto& R = P.rays();
  const std::size_t m = P.ambient_dim();
  for (std::size_t e = 0; e < m; ++e) {
    bool inside = true;
    for (auto i : g.to_vector()) {
      const RationalVector& x = i < V.size() ? V[i] : R[i - V.size()];
      if (sgn(x[e]) != 0) {
        inside = false;
        break;
      }
    }
    if (inside) return false;
  }
  return true;
}

std::set<RootedTriangle> feasible_shortcuts(const RotationContext& ctx, const EdgeIndex& E,
                                            const IndexSet& g) {
  if (!is_good_face(ctx, g)) throw std::invalid_argument("feasible_shortcuts: face is not good");
  const FaceLattice& pl = *ctx.P_polar_lattice;
  auto f = pl.find(ctx.P_pair->conjugate_of_primal(g));
  if (!f) throw std::invalid_argument("feasible_shortcuts: conjugate face not found");
  RationalVector a = relint_point(pl.face(*f), ctx.P_polar());
  std::set<RootedTriangle> out;
  for (std::size_t u = 0; u < E.n(); ++u)
    for_each_opposite(E, u, [&](std::size_t e) {
      if (sgn(dot(a, shortcut(E, {u, e}))) == 0) out.insert({u, e});
    });
  return out;
}

IndexSet nonnegativity_vertices(const RotationContext& ctx) {
  const auto& SV = ctx.S.vertices();
  const auto& AV = ctx.S_polar.vertices();
  const std::size_t m = ctx.ambient_dim();
  const Rational s = ctx.convention == PolarConvention::BlockingGe ? Rational(-1) : Rational(1);
  std::vector<std::vector<std::size_t>> zero_sets(m);
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t i = 0; i < SV.size(); ++i)
      if (sgn(SV[i][e]) == 0) zero_sets[e].push_back(i);
  IndexSet out(AV.size());
  for (std::size_t j = 0; j < AV.size(); ++j) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < SV.size(); ++i)
      if (dot(AV[j], SV[i] - ctx.z) == s) tight.push_back(i);
    if (std::find(zero_sets.begin(), zero_sets.end(), tight) != zero_sets.end()) out.insert(j);
  }
  return out;
}

FaceLattice del_N(const RotationContext& ctx) {
  return deletion(face_lattice(ctx.S_polar), nonnegativity_vertices(ctx));
}

}  // namespace rotaplex
