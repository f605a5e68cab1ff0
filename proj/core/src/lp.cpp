#include "rotaplex/lp.hpp"

#include <algorithm>

#include "rotaplex/linalg.hpp"

namespace rotaplex {

std::string to_string(Rel r) {
  switch (r) {
    case Rel::LE: return "LE";
    case Rel::GE: return "GE";
    case Rel::EQ: return "EQ";
  }
  return "?";
}

Rel parse_rel(const std::string& s) {
  if (s == "LE" || s == "<=") return Rel::LE;
  if (s == "GE" || s == ">=") return Rel::GE;
  if (s == "EQ" || s == "=") return Rel::EQ;
  throw std::invalid_argument("unknown relation '" + s + "'");
}

bool LinearConstraint::satisfied_by(const RationalVector& x) const {
  int c = cmp(dot(a, x), b);
  switch (rel) {
    case Rel::LE: return c <= 0;
    case Rel::GE: return c >= 0;
    case Rel::EQ: return c == 0;
  }
  return false;
}

bool LinearConstraint::satisfied_by_direction(const RationalVector& r) const {
  int s = sgn(dot(a, r));
  switch (rel) {
    case Rel::LE: return s <= 0;
    case Rel::GE: return s >= 0;
    case Rel::EQ: return s == 0;
  }
  return false;
}

LinearConstraint canonical(const LinearConstraint& c) {
  LinearConstraint r = c;
  for (const auto& x : c.a) {
    if (sgn(x) == 0) continue;
    Rational s = abs(x);
    if (c.rel == Rel::EQ && sgn(x) < 0) s = -s;
    for (auto& y : r.a) y /= s;
    r.b /= s;
    return r;
  }
  return r;
}

LinearConstraint as_le(const LinearConstraint& c) {
  if (c.rel != Rel::GE) return c;
  return LinearConstraint{-c.a, -c.b, Rel::LE};
}

bool constraint_less(const LinearConstraint& x, const LinearConstraint& y) {
  if (x.rel != y.rel) {
    auto rank = [](Rel r) { return r == Rel::EQ ? 0 : (r == Rel::LE ? 1 : 2); };
    return rank(x.rel) < rank(y.rel);
  }
  int c = lex_compare(x.a, y.a);
  if (c != 0) return c < 0;
  return x.b < y.b;
}

namespace {

// Dictionary: basic[r] = cst[r] + sum_j t[r][j] * nonbasic[j].
struct Dictionary {
  std::vector<RationalVector> t;
  RationalVector cst;
  std::vector<std::size_t> basic;     // variable id per row
  std::vector<std::size_t> nonbasic;  // variable id per column
  std::vector<bool> free_var;         // by variable id
  RationalVector obj;                 // objective coefficients on nonbasic
  Rational obj_cst = 0;

  void pivot(std::size_t r, std::size_t e) {
    const Rational piv = t[r][e];
    const std::size_t cols = nonbasic.size();
    // Solve row r for nonbasic e.
    RationalVector nr(cols);
    Rational inv = 1 / piv;
    for (std::size_t j = 0; j < cols; ++j) nr[j] = (j == e) ? inv : -t[r][j] * inv;
    Rational nc = -cst[r] * inv;
    auto substitute = [&](RationalVector& row, Rational& c) {
      Rational f = row[e];
      if (sgn(f) == 0) return;
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == e)
          row[j] = f * nr[j];
        else if (sgn(nr[j]) != 0)
          row[j] += f * nr[j];
      }
      c += f * nc;
    };
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != r) substitute(t[i], cst[i]);
    }
    substitute(obj, obj_cst);
    t[r] = std::move(nr);
    cst[r] = nc;
    std::swap(basic[r], nonbasic[e]);
  }
};

// Bland's rule maximization over the dictionary; rows whose basic variable is
// free are never chosen as leaving rows. Returns false if unbounded.
bool bland_maximize(Dictionary& d) {
  while (true) {
    std::size_t e = SIZE_MAX;
    std::size_t best_id = SIZE_MAX;
    for (std::size_t j = 0; j < d.nonbasic.size(); ++j) {
      int s = sgn(d.obj[j]);
      if (s == 0) continue;
      if (d.free_var[d.nonbasic[j]]) return false;  // free column with nonzero cost
      if (s > 0 && d.nonbasic[j] < best_id) {
        best_id = d.nonbasic[j];
        e = j;
      }
    }
    if (e == SIZE_MAX) return true;
    std::size_t leave = SIZE_MAX;
    Rational best_ratio;
    std::size_t leave_id = SIZE_MAX;
    for (std::size_t r = 0; r < d.t.size(); ++r) {
      if (d.free_var[d.basic[r]]) continue;
      if (sgn(d.t[r][e]) >= 0) continue;
      Rational ratio = d.cst[r] / (-d.t[r][e]);
      if (leave == SIZE_MAX || ratio < best_ratio ||
          (ratio == best_ratio && d.basic[r] < leave_id)) {
        leave = r;
        best_ratio = ratio;
        leave_id = d.basic[r];
      }
    }
    if (leave == SIZE_MAX) return false;
    d.pivot(leave, e);
  }
}

}  // namespace

LpResult lp_solve(std::size_t dim, const std::vector<LinearConstraint>& constraints,
                  const RationalVector& objective) {
  LpResult res;
  for (const auto& c : constraints) {
    if (c.a.size() != dim) throw DimensionError("lp_solve: constraint dimension mismatch");
  }
  if (!objective.empty() && objective.size() != dim)
    throw DimensionError("lp_solve: objective dimension mismatch");

  // Eliminate equations: x = x0 + K y.
  RationalMatrix eq_rows;
  RationalVector eq_rhs;
  for (const auto& c : constraints) {
    if (c.rel == Rel::EQ) {
      eq_rows.push_back(c.a);
      eq_rhs.push_back(c.b);
    }
  }
  RationalVector x0 = zero_vector(dim);
  std::vector<RationalVector> kernel;
  if (eq_rows.empty()) {
    for (std::size_t i = 0; i < dim; ++i) kernel.push_back(unit_vector(dim, i));
  } else {
    auto sol = solve(eq_rows, eq_rhs, dim);
    if (!sol) return res;
    x0 = *sol;
    kernel = kernel_basis(eq_rows, dim);
  }
  const std::size_t k = kernel.size();

  // Inequalities as A' y <= b'.
  RationalMatrix rows;
  RationalVector rhs;
  for (const auto& c : constraints) {
    if (c.rel == Rel::EQ) continue;
    LinearConstraint le = as_le(c);
    RationalVector ay(k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      ay[j] = dot(le.a, kernel[j]);
      if (sgn(ay[j]) != 0) nonzero = true;
    }
    Rational bb = le.b - dot(le.a, x0);
    if (!nonzero) {
      if (sgn(bb) < 0) return res;
      continue;
    }
    rows.push_back(std::move(ay));
    rhs.push_back(std::move(bb));
  }
  const std::size_t m = rows.size();

  // Variables: 0..k-1 free y, k..k+m-1 slacks, k+m the phase-one artificial.
  Dictionary d;
  d.free_var.assign(k + m + 1, false);
  for (std::size_t j = 0; j < k; ++j) d.free_var[j] = true;
  for (std::size_t j = 0; j < k; ++j) d.nonbasic.push_back(j);
  d.t.resize(m);
  d.cst = rhs;
  for (std::size_t r = 0; r < m; ++r) {
    d.basic.push_back(k + r);
    d.t[r].resize(k);
    for (std::size_t j = 0; j < k; ++j) d.t[r][j] = -rows[r][j];
  }
  d.obj = zero_vector(k);
  RationalVector cy;
  if (!objective.empty()) {
    cy.resize(k);
    for (std::size_t j = 0; j < k; ++j) cy[j] = dot(objective, kernel[j]);
  }

  // Move free variables into the basis.
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t col = SIZE_MAX;
    for (std::size_t c = 0; c < d.nonbasic.size(); ++c)
      if (d.nonbasic[c] == j) col = c;
    for (std::size_t r = 0; r < d.t.size(); ++r) {
      if (!d.free_var[d.basic[r]] && sgn(d.t[r][col]) != 0) {
        d.pivot(r, col);
        break;
      }
    }
  }

  // Phase one with a single artificial variable.
  bool need_phase1 = false;
  for (std::size_t r = 0; r < d.t.size(); ++r)
    if (!d.free_var[d.basic[r]] && sgn(d.cst[r]) < 0) need_phase1 = true;
  if (need_phase1) {
    const std::size_t art = k + m;
    d.nonbasic.push_back(art);
    for (std::size_t r = 0; r < d.t.size(); ++r)
      d.t[r].push_back(d.free_var[d.basic[r]] ? Rational(0) : Rational(1));
    d.obj.assign(d.nonbasic.size(), Rational(0));
    d.obj.back() = -1;
    d.obj_cst = 0;
    const std::size_t e = d.nonbasic.size() - 1;
    std::size_t leave = SIZE_MAX;
    for (std::size_t r = 0; r < d.t.size(); ++r) {
      if (d.free_var[d.basic[r]]) continue;
      if (leave == SIZE_MAX || d.cst[r] < d.cst[leave]) leave = r;
    }
    d.pivot(leave, e);
    bland_maximize(d);
    if (sgn(d.obj_cst) < 0) return res;
    // Drive the artificial out of the basis if it is still basic at level 0.
    for (std::size_t r = 0; r < d.t.size(); ++r) {
      if (d.basic[r] != art) continue;
      for (std::size_t c = 0; c < d.nonbasic.size(); ++c) {
        if (sgn(d.t[r][c]) != 0) {
          d.pivot(r, c);
          break;
        }
      }
    }
    // Remove the artificial column.
    std::size_t col = SIZE_MAX;
    for (std::size_t c = 0; c < d.nonbasic.size(); ++c)
      if (d.nonbasic[c] == art) col = c;
    if (col != SIZE_MAX) {
      for (auto& row : d.t) row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
      d.nonbasic.erase(d.nonbasic.begin() + static_cast<std::ptrdiff_t>(col));
    } else {
      // Artificial stuck in a row with all-zero coefficients: the row is 0 = 0.
      for (std::size_t r = 0; r < d.t.size(); ++r) {
        if (d.basic[r] == art) {
          d.t.erase(d.t.begin() + static_cast<std::ptrdiff_t>(r));
          d.cst.erase(d.cst.begin() + static_cast<std::ptrdiff_t>(r));
          d.basic.erase(d.basic.begin() + static_cast<std::ptrdiff_t>(r));
          break;
        }
      }
    }
  }

  auto current_point = [&]() {
    RationalVector y = zero_vector(k);
    for (std::size_t r = 0; r < d.t.size(); ++r)
      if (d.basic[r] < k) y[d.basic[r]] = d.cst[r];
    RationalVector x = x0;
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(y[j]) != 0) x += y[j] * kernel[j];
    return x;
  };

  if (objective.empty()) {
    res.status = LpStatus::Optimal;
    res.value = 0;
    res.point = current_point();
    return res;
  }

  // Phase two: express the objective over the current nonbasic variables.
  d.obj.assign(d.nonbasic.size(), Rational(0));
  d.obj_cst = dot(objective, x0);
  for (std::size_t c = 0; c < d.nonbasic.size(); ++c)
    if (d.nonbasic[c] < k) d.obj[c] += cy[d.nonbasic[c]];
  for (std::size_t r = 0; r < d.t.size(); ++r) {
    if (d.basic[r] >= k || sgn(cy[d.basic[r]]) == 0) continue;
    const Rational& f = cy[d.basic[r]];
    for (std::size_t c = 0; c < d.nonbasic.size(); ++c) d.obj[c] += f * d.t[r][c];
    d.obj_cst += f * d.cst[r];
  }
  bool bounded = bland_maximize(d);
  res.point = current_point();
  if (!bounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = d.obj_cst;
  return res;
}

bool lp_feasible(std::size_t dim, const std::vector<LinearConstraint>& constraints) {
  return lp_solve(dim, constraints).status != LpStatus::Infeasible;
}

bool lp_feasible(const std::vector<LinearConstraint>& constraints) {
  if (constraints.empty()) return true;
  return lp_feasible(constraints[0].a.size(), constraints);
}

std::optional<RationalVector> lp_feasible_point(std::size_t dim,
                                                const std::vector<LinearConstraint>& constraints) {
  auto r = lp_solve(dim, constraints);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  return r.point;
}

}  // namespace rotaplex
