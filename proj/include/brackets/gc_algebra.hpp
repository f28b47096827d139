#pragma once
/*
 * gc_algebra.hpp
 * --------------
 * Grassmann-Cayley ring over the bracket ring: skew-commuting point symbols,
 * blades of degree above d identified with zero.  Join is the exterior
 * product; meet is the shuffle product, which for a degree-j blade a and a
 * degree-k blade b sums over the ways to split a into an increasing
 * (d-k)-prefix and an increasing remainder:
 *
 *   a ^ b = sum sgn(w) [a_w1 .. a_w(d-k) b_1 .. b_k] a_w(d-k+1) .. a_wj
 *
 * Coefficients are polynomials over brackets and parameters; they are never
 * straightened implicitly.
 */

#include "brackets/bracket_ring.hpp"

namespace brackets {

using Blade = std::vector<int>; // strictly increasing point indices, 1-based

// Higher degree first, then lexicographic.
struct BladeOrder {
  bool operator()(const Blade& a, const Blade& b) const {
    if (a.size() != b.size())
      return a.size() > b.size();
    return a < b;
  }
};

class GCRing;
using GCRingPtr = std::shared_ptr<const GCRing>;

class GCRing {
public:
  explicit GCRing(BracketRingPtr ring) : ring_(std::move(ring)) {}

  const BracketRing& brackets() const noexcept { return *ring_; }
  const BracketRingPtr& bracket_ring() const noexcept { return ring_; }
  int n() const noexcept { return ring_->n(); }
  int d() const noexcept { return ring_->d(); }
  const std::vector<std::string>& point_names() const noexcept { return ring_->point_names(); }

  std::string blade_name(const Blade& b) const {
    std::string out;
    for (int i : b) {
      if (!out.empty())
        out += '*';
      out += ring_->point_names().at(i - 1);
    }
    return out;
  }

private:
  BracketRingPtr ring_;
};

inline GCRingPtr make_gc(std::vector<std::string> names, int d,
                         std::vector<std::string> params = {}) {
  if (names.empty())
    throw Error(Error::Kind::Domain, "a Grassmann-Cayley ring needs at least one point");
  int n = static_cast<int>(names.size());
  return std::make_shared<const GCRing>(make_context(n, d, std::move(names), std::move(params)));
}

class GCExpression {
public:
  using Terms = std::map<Blade, Poly, BladeOrder>;

  explicit GCExpression(GCRingPtr ctx) : ctx_(std::move(ctx)) {}

  // Degree-0 expression holding a bracket polynomial.
  static GCExpression scalar(GCRingPtr ctx, const Poly& p) {
    GCExpression e(std::move(ctx));
    e.add_term({}, p);
    return e;
  }

  static GCExpression point(GCRingPtr ctx, int index) {
    if (index < 1 || index > ctx->n())
      throw Error(Error::Kind::Domain, "point index out of range");
    GCExpression e(ctx);
    e.add_term({index}, ctx->brackets().constant(1));
    return e;
  }

  const GCRingPtr& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Common degree of all blades; nullopt for zero or mixed-degree input.
  std::optional<int> degree() const {
    if (terms_.empty())
      return std::nullopt;
    int deg = static_cast<int>(terms_.begin()->first.size());
    for (const auto& [b, c] : terms_)
      if (static_cast<int>(b.size()) != deg)
        return std::nullopt;
    return deg;
  }

  bool is_homogeneous() const { return is_zero() || degree().has_value(); }

  Poly coefficient(const Blade& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? ctx_->brackets().zero() : it->second;
  }

  // Coefficient of the empty blade; the whole value when the expression is
  // of degree 0.
  Poly scalar_part() const { return coefficient({}); }

  void add_term(const Blade& b, const Poly& c) {
    if (c.vars() != ctx_->brackets().vars())
      throw Error(Error::Kind::Context, "coefficient belongs to a different ring");
    if (static_cast<int>(b.size()) > ctx_->d() || c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  GCExpression& operator+=(const GCExpression& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_)
      add_term(b, c);
    return *this;
  }

  GCExpression& operator-=(const GCExpression& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_)
      add_term(b, -c);
    return *this;
  }

  friend GCExpression operator+(GCExpression a, const GCExpression& b) { return a += b; }
  friend GCExpression operator-(GCExpression a, const GCExpression& b) { return a -= b; }
  friend GCExpression operator-(GCExpression a) {
    for (auto& [b, c] : a.terms_)
      c = -c;
    return a;
  }

  friend GCExpression operator*(const Poly& s, const GCExpression& e) {
    GCExpression r(e.ctx_);
    for (const auto& [b, c] : e.terms_)
      r.add_term(b, s * c);
    return r;
  }

  friend GCExpression operator*(const Rational& s, const GCExpression& e) {
    GCExpression r(e.ctx_);
    for (const auto& [b, c] : e.terms_)
      r.add_term(b, s * c);
    return r;
  }

  friend bool operator==(const GCExpression& a, const GCExpression& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  void check_same(const GCExpression& o) const {
    if (ctx_ != o.ctx_)
      throw Error(Error::Kind::Context, "expressions belong to different Grassmann-Cayley rings");
  }

private:
  GCRingPtr ctx_;
  Terms terms_;
};

// gc_arith in function form.
enum class GCArithOp { Add, Sub };

inline GCExpression gc_arith(GCArithOp op, const GCExpression& u, const GCExpression& v) {
  return op == GCArithOp::Add ? u + v : u - v;
}
inline GCExpression gc_scalar_mul(const Poly& s, const GCExpression& u) { return s * u; }

struct LinearTerm {
  std::string point;
  Poly coefficient;
};

// Degree-1 expression sum coefficient_i * point_i.
inline GCExpression lift(const std::vector<LinearTerm>& terms, const GCRingPtr& ctx) {
  GCExpression e(ctx);
  for (const auto& t : terms) {
    auto idx = ctx->brackets().point_index(t.point);
    if (!idx)
      throw Error(Error::Kind::Name, "unknown point '" + t.point + "'");
    e.add_term({*idx}, t.coefficient);
  }
  return e;
}

namespace detail {

// Sign of the merge of two sorted disjoint blades; 0 when they overlap.
inline int merge_sign(const Blade& a, const Blade& b, Blade& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0, inversions = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j]))
      out.push_back(a[i++]);
    else if (i == a.size() || b[j] < a[i]) {
      inversions += a.size() - i;
      out.push_back(b[j++]);
    } else
      return 0;
  }
  return inversions % 2 ? -1 : 1;
}

} // namespace detail

inline GCExpression join(const GCExpression& u, const GCExpression& v) {
  u.check_same(v);
  GCExpression r(u.context());
  Blade merged;
  for (const auto& [a, p] : u.terms())
    for (const auto& [b, q] : v.terms()) {
      if (static_cast<int>(a.size() + b.size()) > u.context()->d())
        continue;
      int sign = detail::merge_sign(a, b, merged);
      if (sign == 0)
        continue;
      Poly c = p * q;
      r.add_term(merged, sign > 0 ? c : -c);
    }
  return r;
}

// Shuffle product of two blades.
inline GCExpression meet_blades(const Blade& a, const Blade& b, const GCRingPtr& ctx) {
  const int d = ctx->d();
  const int j = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int take = d - k;
  GCExpression r(ctx);
  std::vector<bool> chosen(j, false);
  std::fill(chosen.begin(), chosen.begin() + take, true);
  do {
    std::vector<int> entries;
    Blade rest;
    std::size_t inversions = 0, skipped = 0;
    for (int p = 0; p < j; ++p) {
      if (chosen[p]) {
        entries.push_back(a[p]);
        inversions += skipped;
      } else {
        rest.push_back(a[p]);
        ++skipped;
      }
    }
    entries.insert(entries.end(), b.begin(), b.end());
    Poly br = ctx->brackets().bracket_of(std::move(entries));
    if (br.is_zero())
      continue;
    r.add_term(rest, inversions % 2 ? -br : br);
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return r;
}

inline GCExpression meet(const GCExpression& u, const GCExpression& v) {
  u.check_same(v);
  if (!u.is_homogeneous() || !v.is_homogeneous())
    throw Error(Error::Kind::Degree, "meet needs homogeneous operands");
  if (u.is_zero() || v.is_zero())
    return GCExpression(u.context());
  const int d = u.context()->d();
  const int j = *u.degree();
  const int k = *v.degree();
  if (j + k < d)
    throw Error(Error::Kind::Degree, "meet of degrees " + std::to_string(j) + " and " +
                                         std::to_string(k) + " is undefined below d=" +
                                         std::to_string(d));
  GCExpression r(u.context());
  for (const auto& [a, p] : u.terms())
    for (const auto& [b, q] : v.terms()) {
      Poly pq = p * q;
      GCExpression shuffled = meet_blades(a, b, u.context());
      for (const auto& [blade, br] : shuffled.terms())
        r.add_term(blade, br * pq);
    }
  return r;
}

// Degree-d blade {i1..id} -> bracket [i1..id], coefficients carried along.
inline Poly top_to_bracket(const GCExpression& u) {
  const auto& ring = u.context()->brackets();
  Poly out = ring.zero();
  if (u.is_zero())
    return out;
  if (u.degree() != u.context()->d())
    throw Error(Error::Kind::Degree, "expected an expression of degree " +
                                         std::to_string(u.context()->d()));
  for (const auto& [b, c] : u.terms())
    out += ring.bracket_poly(Bracket{b}) * c;
  return out;
}

// Bracket polynomial carried by a degree-0 or degree-d expression.
inline std::optional<Poly> as_bracket_poly(const GCExpression& u) {
  if (u.is_zero())
    return u.context()->brackets().zero();
  auto deg = u.degree();
  if (deg == 0)
    return u.scalar_part();
  if (deg == u.context()->d())
    return top_to_bracket(u);
  return std::nullopt;
}

// Straightens every coefficient.  A top-degree expression is first turned
// into its bracket polynomial, since degree-d extensors are brackets.
inline GCExpression gc_normal_form(const GCExpression& u) {
  const auto& ring = u.context()->brackets();
  if (!u.is_zero() && u.degree() == u.context()->d() && u.context()->d() > 0)
    return GCExpression::scalar(u.context(), straighten(top_to_bracket(u), ring));
  GCExpression r(u.context());
  for (const auto& [b, c] : u.terms())
    r.add_term(b, straighten(c, ring));
  return r;
}

inline std::string render(const GCExpression& u) {
  if (u.is_zero())
    return "0";
  const auto& ring = u.context()->brackets();
  std::string out;
  for (const auto& [b, c] : u.terms()) {
    std::string piece;
    if (b.empty())
      piece = ring.render(c);
    else {
      std::string blade = u.context()->blade_name(b);
      std::string coeff = ring.render(c);
      if (c.size() > 1)
        piece = "(" + coeff + ")*" + blade;
      else if (coeff == "1")
        piece = blade;
      else if (coeff == "-1")
        piece = "-" + blade;
      else
        piece = coeff + "*" + blade;
    }
    if (!out.empty() && piece.front() != '-')
      out += '+';
    out += piece;
  }
  return out;
}

} // namespace brackets
