#pragma once
/*
 * poly.hpp
 * --------
 * Exact sparse multivariate polynomials over GMP rationals.
 *
 * A Poly lives over a VarTable, an immutable list of named variables each
 * tagged with a block (bracket, parameter or matrix entry).  Terms are kept in
 * a canonical structural order; anything order-sensitive (leading terms,
 * reduction, rendering) goes through a MonomialOrder.
 */

#include "brackets/error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace brackets {

using Integer = mpz_class;
using Rational = mpq_class;

// GMP arithmetic assumes lowest terms; values built from (num, den) may not be.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return canonical(q).get_str(); }

enum class Block : std::uint8_t { Bracket, Param, Matrix };

class VarTable {
public:
  struct Entry {
    std::string name;
    Block block;
  };

  explicit VarTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!index_.emplace(entries_[i].name, i).second)
        throw Error(Error::Kind::Name, "duplicate variable name '" + entries_[i].name + "'");
    }
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const std::string& name(std::size_t i) const { return entries_.at(i).name; }
  Block block(std::size_t i) const { return entries_.at(i).block; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_var_table(std::vector<VarTable::Entry> entries) {
  return std::make_shared<const VarTable>(std::move(entries));
}

// Sparse power product: (variable, exponent) pairs sorted by variable index,
// exponents strictly positive.
class Monomial {
public:
  using Var = std::uint32_t;
  using Exp = std::uint32_t;

  struct Factor {
    Var var;
    Exp exp;
    auto operator<=>(const Factor&) const = default;
  };

  Monomial() = default;

  explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.var < b.var; });
    std::vector<Factor> merged;
    merged.reserve(factors_.size());
    for (const auto& f : factors_) {
      if (f.exp == 0)
        continue;
      if (!merged.empty() && merged.back().var == f.var)
        merged.back().exp += f.exp;
      else
        merged.push_back(f);
    }
    factors_ = std::move(merged);
  }

  static Monomial variable(Var v, Exp e = 1) { return Monomial({{v, e}}); }

  std::span<const Factor> factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  Exp degree() const noexcept {
    Exp d = 0;
    for (const auto& f : factors_)
      d += f.exp;
    return d;
  }

  Exp exponent(Var v) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, Var x) { return f.var < x; });
    return (it != factors_.end() && it->var == v) ? it->exp : 0;
  }

  bool divides(const Monomial& other) const noexcept {
    auto it = other.factors_.begin();
    for (const auto& f : factors_) {
      while (it != other.factors_.end() && it->var < f.var)
        ++it;
      if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp)
        return false;
    }
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
      if (b == o.factors_.end() || (a != factors_.end() && a->var < b->var))
        r.factors_.push_back(*a++);
      else if (a == factors_.end() || b->var < a->var)
        r.factors_.push_back(*b++);
      else {
        r.factors_.push_back({a->var, a->exp + b->exp});
        ++a;
        ++b;
      }
    }
    return r;
  }

  // Exact quotient; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    auto b = o.factors_.begin();
    for (const auto& f : factors_) {
      Exp e = f.exp;
      if (b != o.factors_.end() && b->var == f.var) {
        e -= b->exp;
        ++b;
      }
      if (e > 0)
        r.factors_.push_back({f.var, e});
    }
    return r;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

private:
  std::vector<Factor> factors_;
};

class Poly {
public:
  using Terms = std::map<Monomial, Rational>;

  explicit Poly(VarTablePtr vars) : vars_(std::move(vars)) {}

  Poly(VarTablePtr vars, const Rational& c) : vars_(std::move(vars)) {
    if (c != 0)
      terms_.emplace(Monomial(), c).first->second.canonicalize();
  }

  static Poly term(VarTablePtr vars, Monomial m, const Rational& c) {
    Poly p(std::move(vars));
    p.add_term(m, c);
    return p;
  }

  static Poly variable(VarTablePtr vars, Monomial::Var v) {
    if (v >= vars->size())
      throw Error(Error::Kind::Domain, "variable index out of range");
    return term(std::move(vars), Monomial::variable(v), 1);
  }

  const VarTablePtr& vars() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Constant value if the polynomial has no non-constant term.
  std::optional<Rational> constant_value() const {
    if (terms_.empty())
      return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_one())
      return terms_.begin()->second;
    return std::nullopt;
  }

  Monomial::Exp degree() const noexcept {
    Monomial::Exp d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, m.degree());
    return d;
  }

  bool uses_block(Block b) const {
    for (const auto& [m, c] : terms_)
      for (const auto& f : m.factors())
        if (vars_->block(f.var) == b)
          return true;
    return false;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
      it->second.canonicalize();
    } else {
      it->second += canonical(c);
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    const Rational f = canonical(s);
    for (auto& [m, c] : terms_)
      c *= f;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator-(Poly a) {
    for (auto& [m, c] : a.terms_)
      c = -c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    Poly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term(ma * mb, ca * cb);
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r(vars_, 1);
    for (unsigned i = 0; i < e; ++i)
      r = r * *this;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.same_table(b) && a.terms_ == b.terms_;
  }

  bool same_table(const Poly& o) const noexcept { return vars_ == o.vars_; }

  void check_same(const Poly& o) const {
    if (!same_table(o))
      throw Error(Error::Kind::Context, "polynomials live over different variable tables");
  }

private:
  VarTablePtr vars_;
  Terms terms_;
};

// poly_arith in function form, for callers that prefer it to operators.
enum class ArithOp { Add, Sub, Mul };

inline Poly poly_arith(ArithOp op, const Poly& f, const Poly& g) {
  switch (op) {
  case ArithOp::Add: return f + g;
  case ArithOp::Sub: return f - g;
  case ArithOp::Mul: return f * g;
  }
  return f;
}
inline Poly negate(const Poly& f) { return -f; }
inline Poly scalar_mul(const Rational& s, const Poly& f) { return s * f; }

// Variable rank follows VarTable index: a larger index is a higher-ranked
// variable.
//
// GrevlexBlocked compares the non-parameter block first (total degree, then
// reverse lexicographic from the lowest-ranked variable up), then the
// parameter block the same way.  Lex compares exponents from the
// highest-ranked variable down.
class MonomialOrder {
public:
  enum class Kind { GrevlexBlocked, Lex };

  explicit MonomialOrder(VarTablePtr vars, Kind kind = Kind::GrevlexBlocked)
      : vars_(std::move(vars)), kind_(kind), is_param_(vars_->size()) {
    for (std::size_t i = 0; i < vars_->size(); ++i)
      is_param_[i] = vars_->block(i) == Block::Param;
  }

  const VarTablePtr& vars() const noexcept { return vars_; }
  Kind kind() const noexcept { return kind_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::Lex)
      return compare_lex(a, b);
    if (auto c = compare_grevlex(a, b, false); c != 0)
      return c;
    return compare_grevlex(a, b, true);
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  // Strict-weak "greater" functor so ordered containers iterate leading term first.
  struct Greater {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const {
      return order->compare(a, b) > 0;
    }
  };

private:
  bool in_block(Monomial::Var v, bool params) const { return is_param_[v] == params; }

  std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b, bool params) const {
    Monomial::Exp da = 0, db = 0;
    for (const auto& f : a.factors())
      if (in_block(f.var, params))
        da += f.exp;
    for (const auto& f : b.factors())
      if (in_block(f.var, params))
        db += f.exp;
    if (da != db)
      return da <=> db;
    // Lowest-ranked differing variable decides; the smaller exponent wins.
    auto fa = a.factors();
    auto fb = b.factors();
    std::size_t i = 0, j = 0;
    while (true) {
      while (i < fa.size() && !in_block(fa[i].var, params))
        ++i;
      while (j < fb.size() && !in_block(fb[j].var, params))
        ++j;
      if (i == fa.size() || j == fb.size())
        return std::strong_ordering::equal; // same degree => both exhausted
      if (fa[i].var != fb[j].var)
        return fa[i].var < fb[j].var ? std::strong_ordering::less : std::strong_ordering::greater;
      if (fa[i].exp != fb[j].exp)
        return fb[j].exp <=> fa[i].exp;
      ++i;
      ++j;
    }
  }

  std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) const {
    auto fa = a.factors();
    auto fb = b.factors();
    std::size_t i = fa.size(), j = fb.size();
    while (i > 0 && j > 0) {
      const auto& x = fa[i - 1];
      const auto& y = fb[j - 1];
      if (x.var != y.var)
        return x.var <=> y.var;
      if (x.exp != y.exp)
        return x.exp <=> y.exp;
      --i;
      --j;
    }
    if (i == 0 && j == 0)
      return std::strong_ordering::equal;
    return i > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  VarTablePtr vars_;
  Kind kind_;
  std::vector<bool> is_param_;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

// Terms sorted by the order, leading term first.
inline std::vector<Term> sorted_terms(const Poly& f, const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms())
    out.push_back({m, c});
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.monomial, b.monomial) > 0;
  });
  return out;
}

inline Term leading_term(const Poly& f, const MonomialOrder& ord) {
  if (f.is_zero())
    throw Error(Error::Kind::EmptyInput, "leading term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ord.compare(it->first, best->first) > 0)
      best = it;
  return {best->first, best->second};
}

// Division by an ordered list of divisors.  The lookup index buckets divisors
// by the smallest variable of their leading monomial, so finding the first
// (in sequence order) divisor of a term touches only the buckets of the
// term's own variables.
class Reducer {
public:
  Reducer(std::vector<Poly> divisors, MonomialOrder order) : order_(std::move(order)) {
    entries_.reserve(divisors.size());
    for (auto& g : divisors) {
      if (g.vars() != order_.vars())
        throw Error(Error::Kind::Context, "divisor lives over a different variable table");
      if (g.is_zero())
        throw Error(Error::Kind::EmptyInput, "zero divisor in reduction set");
      auto lt = leading_term(g, order_);
      std::size_t idx = entries_.size();
      if (lt.monomial.is_one())
        constants_.push_back(idx);
      else
        buckets_[lt.monomial.factors().front().var].push_back(idx);
      entries_.push_back({std::move(lt.monomial), std::move(lt.coefficient), std::move(g)});
    }
  }

  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Poly& divisor(std::size_t i) const { return entries_.at(i).poly; }
  const Monomial& lead(std::size_t i) const { return entries_.at(i).lead; }

  std::optional<std::size_t> first_divisor(const Monomial& m) const {
    std::optional<std::size_t> best;
    if (!constants_.empty())
      best = constants_.front();
    for (const auto& f : m.factors()) {
      auto it = buckets_.find(f.var);
      if (it == buckets_.end())
        continue;
      for (std::size_t idx : it->second) {
        if (best && idx >= *best)
          break;
        if (entries_[idx].lead.divides(m)) {
          best = idx;
          break;
        }
      }
    }
    return best;
  }

  Poly reduce(const Poly& f) const {
    if (f.vars() != order_.vars())
      throw Error(Error::Kind::Context, "polynomial lives over a different variable table");
    std::map<Monomial, Rational, MonomialOrder::Greater> work(
        MonomialOrder::Greater{&order_});
    for (const auto& [m, c] : f.terms())
      work.emplace(m, c);
    Poly remainder(f.vars());
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      auto idx = first_divisor(node.key());
      if (!idx) {
        remainder.add_term(node.key(), node.mapped());
        continue;
      }
      const auto& e = entries_[*idx];
      Monomial shift = node.key() / e.lead;
      Rational scale = node.mapped() / e.lead_coeff;
      for (const auto& [m, c] : e.poly.terms()) {
        if (m == e.lead)
          continue;
        Monomial target = m * shift;
        auto [it, inserted] = work.try_emplace(std::move(target), -scale * c);
        if (!inserted) {
          it->second -= scale * c;
          if (it->second == 0)
            work.erase(it);
        }
      }
    }
    return remainder;
  }

private:
  struct Entry {
    Monomial lead;
    Rational lead_coeff;
    Poly poly;
  };

  MonomialOrder order_;
  std::vector<Entry> entries_;
  std::unordered_map<Monomial::Var, std::vector<std::size_t>> buckets_;
  std::vector<std::size_t> constants_;
};

inline Poly multivariate_reduce(const Poly& f, const std::vector<Poly>& divisors,
                                const MonomialOrder& ord) {
  return Reducer(divisors, ord).reduce(f);
}

struct ContentSplit {
  Rational content;
  Poly primitive;
};

// content * primitive == f, primitive has coprime integer coefficients and a
// positive leading coefficient.
inline ContentSplit content_primitive(const Poly& f, const MonomialOrder& ord) {
  if (f.is_zero())
    return {Rational(0), f};
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading_term(f, ord).coefficient < 0)
    content = -content;
  Poly primitive = f * Rational(1 / content);
  return {content, primitive};
}

struct BlockCoefficient {
  Monomial monomial; // only variables of the split block
  Poly coefficient;  // free of that block
};

// f = sum monomial * coefficient, sorted by the order on the block monomials,
// largest first.
inline std::vector<BlockCoefficient> coefficients_by_block(const Poly& f, Block block,
                                                           const MonomialOrder& ord) {
  std::vector<BlockCoefficient> out;
  std::map<Monomial, std::size_t> slot;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Factor> in, rest;
    for (const auto& fac : m.factors())
      (f.vars()->block(fac.var) == block ? in : rest).push_back(fac);
    Monomial key(std::move(in));
    auto [it, inserted] = slot.try_emplace(key, out.size());
    if (inserted)
      out.push_back({key, Poly(f.vars())});
    out[it->second].coefficient.add_term(Monomial(std::move(rest)), c);
  }
  std::sort(out.begin(), out.end(), [&](const BlockCoefficient& a, const BlockCoefficient& b) {
    return ord.compare(a.monomial, b.monomial) > 0;
  });
  return out;
}

// Text rendering.  Within a monomial parameters come first, then the other
// variables from highest rank down; terms follow the order, leading first.
inline std::string render_monomial(const Monomial& m, const VarTable& vars) {
  std::vector<Monomial::Factor> fs(m.factors().begin(), m.factors().end());
  std::stable_sort(fs.begin(), fs.end(), [&](const auto& a, const auto& b) {
    bool pa = vars.block(a.var) == Block::Param;
    bool pb = vars.block(b.var) == Block::Param;
    if (pa != pb)
      return pa;
    return pa ? a.var < b.var : a.var > b.var;
  });
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty())
      out += '*';
    out += vars.name(f.var);
    if (f.exp > 1)
      out += "^" + std::to_string(f.exp);
  }
  return out;
}

inline std::string render(const Poly& f, const MonomialOrder& ord) {
  if (f.is_zero())
    return "0";
  std::string out;
  for (const auto& t : sorted_terms(f, ord)) {
    std::string piece;
    if (t.monomial.is_one())
      piece = to_string(t.coefficient);
    else {
      std::string mono = render_monomial(t.monomial, *f.vars());
      if (t.coefficient == 1)
        piece = mono;
      else if (t.coefficient == -1)
        piece = "-" + mono;
      else
        piece = to_string(t.coefficient) + "*" + mono;
    }
    if (!out.empty() && piece.front() != '-')
      out += '+';
    out += piece;
  }
  return out;
}

inline std::string render(const Poly& f) { return render(f, MonomialOrder(f.vars())); }

} // namespace brackets
