#pragma once
/*
 * oracle.hpp
 * ----------
 * Brute-force numeric backends for checking the symbolic engine: brackets
 * become determinants of concrete rational point coordinates, blades become
 * wedge products, and the meet of two explicitly spanned subspaces is computed
 * by plain linear algebra.  Nothing here calls the straightening or shuffle
 * code.
 */

#include "brackets/gc_algebra.hpp"

#include <random>

namespace brackets::oracle {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

struct PointAssignment {
  Matrix rows;                            // one coordinate vector per point
  std::map<std::string, Rational> params; // values for parameter variables
};

// Coordinates in the basis e_S (S a sorted k-subset of 1..d) of the k-th
// exterior power.
struct NumericExtensor {
  int degree = 0;
  std::map<std::vector<int>, Rational> coords;

  bool is_zero() const { return coords.empty(); }
  void add(const std::vector<int>& key, const Rational& v) {
    if (v == 0)
      return;
    auto [it, inserted] = coords.try_emplace(key, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0)
        coords.erase(it);
    }
  }
};

inline Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0)
      ++pivot;
    if (pivot == n)
      return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0)
        continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0)
        continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Basis of {x : a x = 0} for a (rows x cols) matrix, by reduced row echelon form.
inline std::vector<Vector> nullspace(Matrix a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r])
      x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      Rational f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k)
        a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
      continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Wedge of k vectors in d-space: its coordinates are the k x k minors.
inline NumericExtensor wedge(const std::vector<Vector>& vectors, int d) {
  NumericExtensor out;
  out.degree = static_cast<int>(vectors.size());
  if (vectors.empty()) {
    out.add({}, 1);
    return out;
  }
  detail::for_each_subset(d, out.degree, [&](const std::vector<int>& cols) {
    Matrix m;
    for (const auto& v : vectors) {
      Vector row;
      for (int c : cols)
        row.push_back(v.at(c - 1));
      m.push_back(std::move(row));
    }
    out.add(cols, determinant(std::move(m)));
  });
  return out;
}

// Value of a bracket polynomial with brackets read as determinants.
inline Rational evaluate(const Poly& f, const BracketRing& ctx, const PointAssignment& pts) {
  if (static_cast<int>(pts.rows.size()) != ctx.n())
    throw Error(Error::Kind::Domain, "point assignment has the wrong number of points");
  std::map<Monomial::Var, Rational> cache;
  auto value_of = [&](Monomial::Var v) -> Rational {
    if (auto it = cache.find(v); it != cache.end())
      return it->second;
    Rational val;
    if (ctx.is_bracket_var(v)) {
      Matrix m;
      for (int i : ctx.bracket(v).indices)
        m.push_back(pts.rows.at(i - 1));
      val = determinant(std::move(m));
    } else {
      const std::string& name = ctx.vars()->name(v);
      auto it = pts.params.find(name);
      if (it == pts.params.end())
        throw Error(Error::Kind::Binding, "parameter '" + name + "' has no value");
      val = it->second;
    }
    cache.emplace(v, val);
    return val;
  };
  Rational total = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (const auto& fac : m.factors()) {
      Rational v = value_of(fac.var);
      for (Monomial::Exp e = 0; e < fac.exp; ++e)
        t *= v;
    }
    total += t;
  }
  return total;
}

// Value of a polynomial in the matrix entries x_{i,j}.
inline Rational evaluate_matrix_poly(const Poly& g, const BracketRing& ctx,
                                     const PointAssignment& pts) {
  Rational total = 0;
  for (const auto& [m, c] : g.terms()) {
    Rational t = c;
    for (const auto& fac : m.factors()) {
      auto [row, col] = ctx.matrix_entry(fac.var);
      for (Monomial::Exp e = 0; e < fac.exp; ++e)
        t *= pts.rows.at(row - 1).at(col - 1);
    }
    total += t;
  }
  return total;
}

inline NumericExtensor evaluate(const GCExpression& u, const PointAssignment& pts) {
  const auto& ring = u.context()->brackets();
  const int d = ring.d();
  NumericExtensor out;
  if (u.is_zero())
    return out;
  auto deg = u.degree();
  if (!deg)
    throw Error(Error::Kind::Degree, "numeric evaluation needs a homogeneous expression");
  out.degree = *deg;
  for (const auto& [blade, coeff] : u.terms()) {
    std::vector<Vector> vs;
    for (int i : blade)
      vs.push_back(pts.rows.at(i - 1));
    Rational c = evaluate(coeff, ring, pts);
    if (c == 0)
      continue;
    for (const auto& [key, v] : wedge(vs, d).coords)
      out.add(key, c * v);
  }
  return out;
}

// Extensor of span(U) cap span(V), each given by spanning vectors.  Returns
// nullopt when either family is dependent or together they miss the ambient
// space; the result is defined up to a nonzero scalar.
inline std::optional<NumericExtensor> classical_meet(const std::vector<Vector>& u,
                                                     const std::vector<Vector>& v, int d) {
  const std::size_t j = u.size(), k = v.size();
  if (rank(u) != j || rank(v) != k)
    return std::nullopt;
  Matrix all = u;
  all.insert(all.end(), v.begin(), v.end());
  if (static_cast<int>(rank(all)) != d)
    return std::nullopt;
  if (static_cast<int>(j + k) == d) {
    NumericExtensor out;
    out.add({}, determinant(all));
    return out;
  }
  // Solve sum alpha_i u_i - sum beta_j v_j = 0, columns are the vectors.
  Matrix a(d, Vector(j + k));
  for (int r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < j; ++i)
      a[r][i] = u[i][r];
    for (std::size_t i = 0; i < k; ++i)
      a[r][j + i] = -v[i][r];
  }
  std::vector<Vector> meet_basis;
  for (const auto& sol : nullspace(a, j + k)) {
    Vector w(d, 0);
    for (std::size_t i = 0; i < j; ++i)
      for (int r = 0; r < d; ++r)
        w[r] += sol[i] * u[i][r];
    meet_basis.push_back(std::move(w));
  }
  return wedge(meet_basis, d);
}

inline bool projective_equal(const NumericExtensor& a, const NumericExtensor& b) {
  if (a.degree != b.degree)
    return false;
  if (a.is_zero() || b.is_zero())
    return a.is_zero() && b.is_zero();
  if (a.coords.size() != b.coords.size())
    return false;
  const auto& [key, av] = *a.coords.begin();
  auto it = b.coords.find(key);
  if (it == b.coords.end())
    return false;
  Rational ratio = it->second / av;
  for (const auto& [k, v] : a.coords) {
    auto jt = b.coords.find(k);
    if (jt == b.coords.end() || jt->second != ratio * v)
      return false;
  }
  return true;
}

inline PointAssignment random_assignment(const BracketRing& ctx, std::mt19937_64& rng,
                                         int lo = -10, int hi = 10) {
  std::uniform_int_distribution<int> dist(lo, hi);
  PointAssignment pts;
  pts.rows.assign(ctx.n(), Vector(ctx.d()));
  for (auto& row : pts.rows)
    for (auto& x : row)
      x = dist(rng);
  for (const auto& p : ctx.param_names())
    pts.params[p] = dist(rng);
  return pts;
}

// Probabilistic test that f lies in the kernel of psi: f must vanish at every
// sampled integer configuration.
inline bool random_membership_check(const Poly& f, const BracketRing& ctx, int trials,
                                    std::mt19937_64& rng) {
  if (f.uses_block(Block::Param))
    throw Error(Error::Kind::Unsupported, "membership check needs a parameter-free polynomial");
  for (int t = 0; t < trials; ++t)
    if (evaluate(f, ctx, random_assignment(ctx, rng)) != 0)
      return false;
  return true;
}

} // namespace brackets::oracle
