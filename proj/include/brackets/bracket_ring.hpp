#pragma once
/*
 * bracket_ring.hpp
 * ----------------
 * The bracket ring B(n,d): polynomials in the maximal minors [l1 ... ld] of a
 * generic n x d matrix X, modulo the Grassmann-Pluecker ideal.
 *
 * Bracket variables are laid out in lexicographic order of their index tuples,
 * so the lexicographically largest bracket is the highest-ranked variable of
 * the tableau order (graded reverse lex).  Under that ranking the leading
 * monomial of a straightening relation is a non-standard tableau, and the
 * normal form modulo the relations is a combination of standard tableaux.
 */

#include "brackets/poly.hpp"

#include <cstdlib>
#include <mutex>
#include <numeric>

namespace brackets {

struct Bracket {
  std::vector<int> indices; // strictly increasing, 1-based
  auto operator<=>(const Bracket&) const = default;
};

struct SignedBracket {
  int sign;
  Bracket bracket;
};

// A bracket monomial as a k x d array, rows sorted ascending.
class Tableau {
public:
  Tableau() = default;
  explicit Tableau(std::vector<Bracket> rows) : rows_(std::move(rows)) {
    std::sort(rows_.begin(), rows_.end());
  }
  const std::vector<Bracket>& rows() const noexcept { return rows_; }
  std::size_t degree() const noexcept { return rows_.size(); }
  bool operator==(const Tableau&) const = default;

private:
  std::vector<Bracket> rows_;
};

// Index of the first pair of adjacent rows (i, i+1) that breaks a column, and
// that column.
struct Violation {
  std::size_t row;
  std::size_t column;
};

inline std::optional<Violation> first_violation(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    for (std::size_t c = 0; c < rows[i].indices.size(); ++c)
      if (rows[i].indices[c] > rows[i + 1].indices[c])
        return Violation{i, c};
  return std::nullopt;
}

inline bool is_standard(const Tableau& t) { return !first_violation(t).has_value(); }

// Sign of the permutation sorting `seq`, together with the sorted sequence;
// zero sign when an entry repeats.
inline int sort_with_sign(std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j])
        return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  return sign;
}

struct SubductionResult {
  Poly brackets;  // bracket polynomial h
  Poly remainder; // psi(h) + remainder == input
  bool member() const { return remainder.is_zero(); }
};

struct FactorResult {
  Rational content;
  std::vector<Bracket> factors; // with multiplicity, ascending
  Poly cofactor;
};

class BracketRing;
using BracketRingPtr = std::shared_ptr<const BracketRing>;

class BracketRing {
  struct Private {};

public:
  BracketRing(Private, int n, int d, std::vector<std::string> names,
              std::vector<std::string> params)
      : n_(n), d_(d), names_(std::move(names)), params_(std::move(params)) {
    if (d < 1 || d > n)
      throw Error(Error::Kind::Domain, "bracket ring needs 1 <= d <= n (got n=" +
                                           std::to_string(n) + ", d=" + std::to_string(d) + ")");
    if (names_.empty())
      for (int i = 1; i <= n; ++i)
        names_.push_back(std::to_string(i));
    if (static_cast<int>(names_.size()) != n)
      throw Error(Error::Kind::Name, "expected " + std::to_string(n) + " point names");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty())
        throw Error(Error::Kind::Name, "empty point name");
      if (!name_index_.emplace(names_[i], static_cast<int>(i) + 1).second)
        throw Error(Error::Kind::Name, "duplicate point name '" + names_[i] + "'");
    }
    for (const auto& p : params_)
      if (name_index_.count(p))
        throw Error(Error::Kind::Name, "parameter '" + p + "' clashes with a point name");
    compact_ = std::all_of(names_.begin(), names_.end(),
                           [](const std::string& s) { return s.size() == 1; });

    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 1);
    std::vector<VarTable::Entry> entries;
    while (true) {
      Bracket b{idx};
      bracket_index_.emplace(b, static_cast<Monomial::Var>(brackets_.size()));
      entries.push_back({bracket_name(b), Block::Bracket});
      brackets_.push_back(std::move(b));
      int i = d - 1;
      while (i >= 0 && idx[i] == n - d + i + 1)
        --i;
      if (i < 0)
        break;
      ++idx[i];
      for (int j = i + 1; j < d; ++j)
        idx[j] = idx[j - 1] + 1;
    }
    for (const auto& p : params_)
      entries.push_back({p, Block::Param});
    vars_ = make_var_table(std::move(entries));
    order_.emplace(vars_);

    std::vector<VarTable::Entry> xs;
    for (int i = n; i >= 1; --i)
      for (int j = d; j >= 1; --j)
        xs.push_back({"x_" + std::to_string(i) + "_" + std::to_string(j), Block::Matrix});
    matrix_vars_ = make_var_table(std::move(xs));
    matrix_order_.emplace(matrix_vars_, MonomialOrder::Kind::Lex);
  }

  BracketRing(const BracketRing&) = delete;
  BracketRing& operator=(const BracketRing&) = delete;

  static BracketRingPtr make(int n, int d, std::vector<std::string> names = {},
                             std::vector<std::string> params = {}) {
    return std::make_shared<const BracketRing>(Private{}, n, d, std::move(names),
                                               std::move(params));
  }

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  const std::vector<std::string>& point_names() const noexcept { return names_; }
  const std::vector<std::string>& param_names() const noexcept { return params_; }

  const VarTablePtr& vars() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return *order_; }
  const VarTablePtr& matrix_vars() const noexcept { return matrix_vars_; }
  const MonomialOrder& matrix_order() const noexcept { return *matrix_order_; }

  std::size_t bracket_count() const noexcept { return brackets_.size(); }
  bool is_bracket_var(Monomial::Var v) const noexcept { return v < brackets_.size(); }
  const Bracket& bracket(Monomial::Var v) const { return brackets_.at(v); }

  Monomial::Var bracket_var(const Bracket& b) const {
    auto it = bracket_index_.find(b);
    if (it == bracket_index_.end())
      throw Error(Error::Kind::Domain, "not a bracket of this ring");
    return it->second;
  }

  std::optional<int> point_index(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end())
      return std::nullopt;
    return it->second;
  }

  std::optional<Monomial::Var> param_var(std::string_view name) const {
    for (std::size_t i = 0; i < params_.size(); ++i)
      if (params_[i] == name)
        return static_cast<Monomial::Var>(brackets_.size() + i);
    return std::nullopt;
  }

  // x_{row,col}, both 1-based.  Higher rows/columns rank lower.
  Monomial::Var matrix_var(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > d_)
      throw Error(Error::Kind::Domain, "matrix entry out of range");
    return static_cast<Monomial::Var>((n_ - row) * d_ + (d_ - col));
  }

  std::pair<int, int> matrix_entry(Monomial::Var v) const {
    int k = static_cast<int>(v);
    return {n_ - k / d_, d_ - k % d_};
  }

  std::string bracket_name(const Bracket& b) const {
    std::string out = "[";
    for (std::size_t i = 0; i < b.indices.size(); ++i) {
      if (i > 0 && !compact_)
        out += ' ';
      out += names_.at(b.indices[i] - 1);
    }
    return out + "]";
  }

  // Signed, sorted bracket; nullopt when an index repeats.
  std::optional<SignedBracket> normalize(std::vector<int> seq) const {
    if (static_cast<int>(seq.size()) != d_)
      throw Error(Error::Kind::Domain, "bracket needs exactly " + std::to_string(d_) + " entries");
    for (int i : seq)
      if (i < 1 || i > n_)
        throw Error(Error::Kind::Domain, "bracket index " + std::to_string(i) + " out of range 1.." +
                                             std::to_string(n_));
    int sign = sort_with_sign(seq);
    if (sign == 0)
      return std::nullopt;
    return SignedBracket{sign, Bracket{std::move(seq)}};
  }

  Poly zero() const { return Poly(vars_); }
  Poly constant(const Rational& c) const { return Poly(vars_, c); }
  Poly bracket_poly(const Bracket& b) const { return Poly::variable(vars_, bracket_var(b)); }

  // The bracket of an arbitrary index sequence, as a signed polynomial.
  Poly bracket_of(std::vector<int> seq) const {
    auto sb = normalize(std::move(seq));
    if (!sb)
      return zero();
    return Poly::term(vars_, Monomial::variable(bracket_var(sb->bracket)), sb->sign);
  }

  Poly param_poly(std::string_view name) const {
    auto v = param_var(name);
    if (!v)
      throw Error(Error::Kind::Name, "unknown parameter '" + std::string(name) + "'");
    return Poly::variable(vars_, *v);
  }

  Tableau tableau(const Monomial& m) const {
    std::vector<Bracket> rows;
    for (const auto& f : m.factors())
      if (is_bracket_var(f.var))
        for (Monomial::Exp e = 0; e < f.exp; ++e)
          rows.push_back(brackets_[f.var]);
    return Tableau(std::move(rows));
  }

  Monomial monomial(const Tableau& t) const {
    std::vector<Monomial::Factor> fs;
    for (const auto& row : t.rows())
      fs.push_back({bracket_var(row), 1});
    return Monomial(std::move(fs));
  }

  std::string render(const Poly& f) const {
    if (f.vars() == matrix_vars_)
      return brackets::render(f, *matrix_order_);
    return brackets::render(f, *order_);
  }

  // Deduplicated Grassmann-Pluecker relations, built on first use.
  const std::vector<Poly>& relations() const {
    std::call_once(relations_once_, [this] { build_relations(); });
    return relations_;
  }

  const Reducer& relation_reducer() const {
    relations();
    return *reducer_;
  }

  // psi of a single bracket variable: the d x d minor on its rows.
  const Poly& minor(Monomial::Var v) const {
    std::call_once(minors_once_, [this] { build_minors(); });
    return minors_.at(v);
  }

  // Relation with leading monomial rows[i]*rows[i+1] rewriting a column
  // violation: the alternating sum over the d+1 entries
  // rows[i][c..d-1], rows[i+1][0..c], which vanishes in d-space.
  Poly exchange_relation(const Bracket& upper, const Bracket& lower, std::size_t col) const {
    const auto& a = upper.indices;
    const auto& b = lower.indices;
    std::vector<int> pool(a.begin() + col, a.end());
    pool.insert(pool.end(), b.begin(), b.begin() + col + 1);
    const std::size_t take = a.size() - col;
    Poly rel = zero();
    std::vector<bool> chosen(pool.size(), false);
    std::fill(chosen.begin(), chosen.begin() + take, true);
    do {
      std::vector<int> first(a.begin(), a.begin() + col);
      std::vector<int> second;
      std::size_t inversions = 0, seen_unchosen = 0;
      for (std::size_t p = 0; p < pool.size(); ++p) {
        if (chosen[p]) {
          first.push_back(pool[p]);
          inversions += seen_unchosen;
        } else {
          second.push_back(pool[p]);
          ++seen_unchosen;
        }
      }
      second.insert(second.end(), b.begin() + col + 1, b.end());
      Poly term = bracket_of(first) * bracket_of(second);
      rel += (inversions % 2 ? Rational(-1) : Rational(1)) * term;
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return rel;
  }

private:
  void build_relations() const;
  void build_minors() const;

  int n_;
  int d_;
  std::vector<std::string> names_;
  std::vector<std::string> params_;
  bool compact_ = true;
  std::unordered_map<std::string, int> name_index_;
  std::vector<Bracket> brackets_;
  std::map<Bracket, Monomial::Var> bracket_index_;
  VarTablePtr vars_;
  std::optional<MonomialOrder> order_;
  VarTablePtr matrix_vars_;
  std::optional<MonomialOrder> matrix_order_;

  mutable std::once_flag relations_once_;
  mutable std::vector<Poly> relations_;
  mutable std::unique_ptr<Reducer> reducer_;
  mutable std::once_flag minors_once_;
  mutable std::vector<Poly> minors_;
};

inline BracketRingPtr make_context(int n, int d, std::vector<std::string> names = {},
                                   std::vector<std::string> params = {}) {
  return BracketRing::make(n, d, std::move(names), std::move(params));
}

inline std::optional<SignedBracket> normalize_bracket(std::vector<int> seq, const BracketRing& ctx) {
  return ctx.normalize(std::move(seq));
}

namespace detail {

// Visits every strictly increasing k-subset of 1..n in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& visit) {
  if (k < 0 || k > n)
    return;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    visit(static_cast<const std::vector<int>&>(s));
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1)
      --i;
    if (i < 0)
      return;
    ++s[i];
    for (int j = i + 1; j < k; ++j)
      s[j] = s[j - 1] + 1;
  }
}

} // namespace detail

inline void BracketRing::build_relations() const {
  std::map<Poly::Terms, bool> seen;
  detail::for_each_subset(n_, d_ - 1, [&](const std::vector<int>& a) {
    detail::for_each_subset(n_, d_ + 1, [&](const std::vector<int>& b) {
      Poly rel = zero();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::vector<int> left = a;
        left.push_back(b[i]);
        std::vector<int> right;
        for (std::size_t k = 0; k < b.size(); ++k)
          if (k != i)
            right.push_back(b[k]);
        Poly term = bracket_of(left) * bracket_of(right);
        rel += ((i + 1) % 2 ? Rational(-1) : Rational(1)) * term;
      }
      if (rel.is_zero())
        return;
      Poly prim = content_primitive(rel, *order_).primitive;
      if (seen.emplace(prim.terms(), true).second)
        relations_.push_back(std::move(prim));
    });
  });
  reducer_ = std::make_unique<Reducer>(relations_, *order_);
}

inline void BracketRing::build_minors() const {
  minors_.reserve(brackets_.size());
  std::vector<int> perm(d_);
  for (const auto& b : brackets_) {
    Poly det(matrix_vars_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::size_t inv = 0;
      for (int i = 0; i < d_; ++i)
        for (int j = i + 1; j < d_; ++j)
          inv += perm[i] > perm[j];
      std::vector<Monomial::Factor> fs;
      for (int i = 0; i < d_; ++i)
        fs.push_back({matrix_var(b.indices[i], perm[i] + 1), 1});
      det.add_term(Monomial(std::move(fs)), inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    minors_.push_back(std::move(det));
  }
}

inline const std::vector<Poly>& grassmann_plucker_relations(const BracketRing& ctx) {
  return ctx.relations();
}

inline std::strong_ordering compare_tableau_order(const Tableau& a, const Tableau& b,
                                                  const BracketRing& ctx) {
  return ctx.order().compare(ctx.monomial(a), ctx.monomial(b));
}

inline bool is_standard_monomial(const Monomial& m, const BracketRing& ctx) {
  return is_standard(ctx.tableau(m));
}

// Normal form modulo the Grassmann-Pluecker ideal.  The relation set is used
// as a Groebner basis; a non-standard term that survives it is rewritten with
// the exchange relation of its first column violation, whose leading monomial
// is that violating pair and whose other terms are strictly smaller, so the
// loop terminates.
inline Poly straighten(const Poly& f, const BracketRing& ctx) {
  if (f.vars() != ctx.vars())
    throw Error(Error::Kind::Context, "polynomial does not belong to this bracket ring");
  const Reducer& reducer = ctx.relation_reducer();
  const MonomialOrder& ord = ctx.order();
  Poly r = reducer.reduce(f);
  while (true) {
    std::optional<Term> worst;
    for (const auto& [m, c] : r.terms())
      if (!is_standard_monomial(m, ctx) && (!worst || ord.compare(m, worst->monomial) > 0))
        worst = Term{m, c};
    if (!worst)
      return r;
    Tableau t = ctx.tableau(worst->monomial);
    auto v = *first_violation(t);
    const Bracket& upper = t.rows()[v.row];
    const Bracket& lower = t.rows()[v.row + 1];
    Poly rel = ctx.exchange_relation(upper, lower, v.column);
    Monomial pair = Monomial({{ctx.bracket_var(upper), 1}, {ctx.bracket_var(lower), 1}});
    Term lt = leading_term(rel, ord);
    if (lt.monomial != pair || lt.coefficient != 1)
      throw std::logic_error("exchange relation does not lead with its violating pair");
    Poly shift = Poly::term(ctx.vars(), worst->monomial / pair, worst->coefficient);
    r = reducer.reduce(r - shift * rel);
  }
}

// Ring homomorphism from bracket polynomials to polynomials in the x_{i,j}.
inline Poly psi_expand(const Poly& f, const BracketRing& ctx) {
  if (f.vars() != ctx.vars())
    throw Error(Error::Kind::Context, "polynomial does not belong to this bracket ring");
  if (f.uses_block(Block::Param))
    throw Error(Error::Kind::Unsupported, "psi is only defined on parameter-free bracket polynomials");
  Poly out(ctx.matrix_vars());
  for (const auto& [m, c] : f.terms()) {
    Poly prod(ctx.matrix_vars(), c);
    for (const auto& fac : m.factors())
      for (Monomial::Exp e = 0; e < fac.exp; ++e)
        prod = prod * ctx.minor(fac.var);
    out += prod;
  }
  return out;
}

// Subduction: peel off products of maximal minors matching the lex-leading
// monomial.  Each minor leads with its main diagonal (coefficient +1), so a
// leading monomial is an image exactly when its column multisets, sorted,
// stack into rows that are strictly increasing brackets.
inline SubductionResult to_bracket_polynomial(const Poly& g, const BracketRing& ctx) {
  if (g.vars() != ctx.matrix_vars())
    throw Error(Error::Kind::Context, "polynomial is not over this ring's matrix entries");
  const MonomialOrder& lex = ctx.matrix_order();
  std::map<Monomial, Rational, MonomialOrder::Greater> work(MonomialOrder::Greater{&lex});
  for (const auto& [m, c] : g.terms())
    work.emplace(m, c);
  SubductionResult out{ctx.zero(), Poly(ctx.matrix_vars())};
  const int d = ctx.d();
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Monomial& lead = node.key();
    std::vector<std::vector<int>> columns(d);
    for (const auto& f : lead.factors()) {
      auto [row, col] = ctx.matrix_entry(f.var);
      columns[col - 1].insert(columns[col - 1].end(), f.exp, row);
    }
    bool ok = std::all_of(columns.begin(), columns.end(),
                          [&](const auto& c) { return c.size() == columns[0].size(); });
    std::vector<Monomial::Factor> fs;
    if (ok) {
      for (auto& c : columns)
        std::sort(c.begin(), c.end());
      for (std::size_t r = 0; ok && r < columns[0].size(); ++r) {
        std::vector<int> row(d);
        for (int j = 0; j < d; ++j) {
          row[j] = columns[j][r];
          if (j > 0 && row[j] <= row[j - 1])
            ok = false;
        }
        if (ok)
          fs.push_back({ctx.bracket_var(Bracket{row}), 1});
      }
    }
    if (!ok) {
      out.remainder.add_term(lead, node.mapped());
      continue;
    }
    Monomial tableau(std::move(fs));
    Rational c = node.mapped();
    out.brackets.add_term(tableau, c);
    Poly image = psi_expand(Poly::term(ctx.vars(), tableau, 1), ctx);
    for (const auto& [m, k] : image.terms()) {
      if (m == lead)
        continue;
      auto [it, inserted] = work.try_emplace(m, -c * k);
      if (!inserted) {
        it->second -= c * k;
        if (it->second == 0)
          work.erase(it);
      }
    }
  }
  return out;
}

inline bool prove_equal(const Poly& p, const Poly& q, const BracketRing& ctx) {
  return straighten(p - q, ctx).is_zero();
}

// The unique c with p - c*q = 0 in the bracket ring, if any (q must be nonzero
// in the ring).
inline std::optional<Rational> prove_proportional(const Poly& p, const Poly& q,
                                                  const BracketRing& ctx) {
  Poly sq = straighten(q, ctx);
  if (sq.is_zero())
    return std::nullopt;
  Poly sp = straighten(p, ctx);
  Term lt = leading_term(sq, ctx.order());
  Rational c = sp.coefficient(lt.monomial) / lt.coefficient;
  if (sp == c * sq)
    return c;
  return std::nullopt;
}

// Integer content and single-bracket divisors only; no general factorization.
inline FactorResult factor_limited(const Poly& f, const BracketRing& ctx) {
  if (f.vars() != ctx.vars())
    throw Error(Error::Kind::Context, "polynomial does not belong to this bracket ring");
  auto split = content_primitive(f, ctx.order());
  FactorResult out{split.content, {}, split.primitive};
  if (f.is_zero())
    return out;
  std::vector<Monomial::Factor> divisor;
  for (Monomial::Var v = 0; v < ctx.bracket_count(); ++v) {
    Monomial::Exp lowest = std::numeric_limits<Monomial::Exp>::max();
    for (const auto& [m, c] : split.primitive.terms())
      lowest = std::min(lowest, m.exponent(v));
    if (lowest == 0)
      continue;
    divisor.push_back({v, lowest});
    out.factors.insert(out.factors.end(), lowest, ctx.bracket(v));
  }
  if (!divisor.empty()) {
    Monomial div(std::move(divisor));
    Poly rest(ctx.vars());
    for (const auto& [m, c] : split.primitive.terms())
      rest.add_term(m / div, c);
    out.cofactor = std::move(rest);
  }
  return out;
}

} // namespace brackets
