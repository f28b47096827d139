#pragma once

#include "brackets/script/parser.hpp"
#include "brackets/script/value.hpp"

#include <fstream>

namespace brackets::script {

// Evaluation failure inside a script, tagged with the 1-based statement number.
class ScriptError : public Error {
public:
  ScriptError(Kind kind, std::size_t statement, const std::string& what)
      : Error(kind, "statement " + std::to_string(statement) + ": " + what),
        statement_(statement) {}
  std::size_t statement() const noexcept { return statement_; }

private:
  std::size_t statement_;
};

struct TranscriptEntry {
  std::string statement; // source text
  Value value;
};

// One interpreter session: the active ring plus user bindings.  Point names
// resolve to degree-1 generators, parameter names to degree-0 scalars and
// x_i_j to matrix entries, unless shadowed by an assignment.
class Session {
public:
  Session() = default;
  explicit Session(GCRingPtr ctx) : ctx_(std::move(ctx)) {}

  const GCRingPtr& context() const noexcept { return ctx_; }

  void set_context(GCRingPtr ctx) {
    ctx_ = std::move(ctx);
    bindings_.clear();
  }

  const Value* lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
  }

  Value evaluate(const Node& n) {
    using K = Node::Kind;
    switch (n.kind) {
    case K::Int: return scalar(ring().constant(Rational(Integer(n.text))));
    case K::Ident: return resolve(n.text);
    case K::BracketLiteral: return bracket_literal(n);
    case K::Neg: {
      Value v = evaluate(*n.children[0]);
      if (auto* m = std::get_if<MatrixPoly>(&v))
        return MatrixPoly{m->ring, -m->poly};
      return -expect_gc(v, "negation");
    }
    case K::Add:
    case K::Sub: return additive(n);
    case K::Join: return product(n);
    case K::Meet:
      return meet(expect_gc(evaluate(*n.children[0]), "'^'"),
                  expect_gc(evaluate(*n.children[1]), "'^'"));
    case K::Assign: {
      if (ctx_ && (ctx_->brackets().point_index(n.text) || ctx_->brackets().param_var(n.text)))
        throw Error(Error::Kind::Name, "cannot assign to generator '" + n.text + "'");
      Value v = evaluate(*n.children[0]);
      bindings_.insert_or_assign(n.text, v);
      return v;
    }
    case K::Call: return call(n);
    case K::Range:
    case K::List:
      throw Error(Error::Kind::Eval, "a name list is only allowed as a ring constructor argument");
    }
    throw Error(Error::Kind::Eval, "unknown expression");
  }

  Value evaluate(std::string_view source) { return evaluate(*parse(source)); }

  std::vector<TranscriptEntry> run(std::string_view text) {
    std::vector<TranscriptEntry> out;
    auto stmts = parse_script(text);
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      try {
        Value v = evaluate(*stmts[i].node);
        out.push_back(
            {std::string(text.substr(stmts[i].begin, stmts[i].end - stmts[i].begin)), std::move(v)});
      } catch (const Error& e) {
        throw ScriptError(e.kind(), i + 1, e.what());
      }
    }
    return out;
  }

private:
  const BracketRing& ring() const {
    if (!ctx_)
      throw Error(Error::Kind::Eval, "no active ring; start with gc(...) or bracketRing(...)");
    return ctx_->brackets();
  }

  GCExpression scalar(const Poly& p) const { return GCExpression::scalar(ctx_, p); }

  static GCExpression expect_gc(const Value& v, const char* where) {
    if (auto* g = std::get_if<GCExpression>(&v))
      return *g;
    throw Error(Error::Kind::Eval, std::string("operand of ") + where +
                                       " must be a Grassmann-Cayley expression");
  }

  Poly expect_bracket_poly(const Value& v, const char* where) const {
    auto g = expect_gc(v, where);
    if (auto p = as_bracket_poly(g))
      return *p;
    throw Error(Error::Kind::Degree, std::string(where) + " needs a bracket polynomial (degree 0 or " +
                                         std::to_string(ctx_->d()) + ")");
  }

  // Matrix polynomial view of a value: constants promote, anything else fails.
  std::optional<MatrixPoly> as_matrix(const Value& v) const {
    if (auto* m = std::get_if<MatrixPoly>(&v))
      return *m;
    if (auto* g = std::get_if<GCExpression>(&v))
      if (g->is_zero() || g->degree() == 0)
        if (auto c = g->scalar_part().constant_value())
          return MatrixPoly{ctx_->bracket_ring(), Poly(ring().matrix_vars(), *c)};
    return std::nullopt;
  }

  Value resolve(const std::string& name) {
    if (auto* v = lookup(name))
      return *v;
    const auto& r = ring();
    if (auto idx = r.point_index(name))
      return GCExpression::point(ctx_, *idx);
    if (r.param_var(name))
      return scalar(r.param_poly(name));
    if (auto v = r.matrix_vars()->find(name))
      return MatrixPoly{ctx_->bracket_ring(),
                        Poly::variable(r.matrix_vars(), static_cast<Monomial::Var>(*v))};
    throw Error(Error::Kind::Name, "unbound name '" + name + "'");
  }

  Value bracket_literal(const Node& n) {
    const auto& r = ring();
    std::vector<int> seq;
    for (const auto& item : n.items) {
      if (auto idx = r.point_index(item))
        seq.push_back(*idx);
      else if (std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        // [124] means [1 2 4] while every label is a single digit
        if (item.size() > 1 && r.n() <= 9)
          for (char c : item)
            seq.push_back(c - '0');
        else
          seq.push_back(std::stoi(item));
      }
      else {
        // compact form [abc] over single-letter point names
        for (char c : item) {
          auto idx = r.point_index(std::string(1, c));
          if (!idx)
            throw Error(Error::Kind::Name, "unknown point '" + item + "' in bracket");
          seq.push_back(*idx);
        }
      }
    }
    return scalar(r.bracket_of(std::move(seq)));
  }

  Value additive(const Node& n) {
    Value a = evaluate(*n.children[0]);
    Value b = evaluate(*n.children[1]);
    bool sub = n.kind == Node::Kind::Sub;
    if (std::holds_alternative<MatrixPoly>(a) || std::holds_alternative<MatrixPoly>(b)) {
      auto ma = as_matrix(a), mb = as_matrix(b);
      if (!ma || !mb)
        throw Error(Error::Kind::Eval, "cannot add a matrix polynomial and a bracket expression");
      return MatrixPoly{ma->ring, sub ? ma->poly - mb->poly : ma->poly + mb->poly};
    }
    auto ga = expect_gc(a, sub ? "'-'" : "'+'");
    auto gb = expect_gc(b, sub ? "'-'" : "'+'");
    return sub ? ga - gb : ga + gb;
  }

  Value product(const Node& n) {
    Value a = evaluate(*n.children[0]);
    Value b = evaluate(*n.children[1]);
    if (std::holds_alternative<MatrixPoly>(a) || std::holds_alternative<MatrixPoly>(b)) {
      auto ma = as_matrix(a), mb = as_matrix(b);
      if (!ma || !mb)
        throw Error(Error::Kind::Eval, "cannot multiply a matrix polynomial and a bracket expression");
      return MatrixPoly{ma->ring, ma->poly * mb->poly};
    }
    return join(expect_gc(a, "'*'"), expect_gc(b, "'*'"));
  }

  static std::vector<std::string> expand_names(const Node& n) {
    if (n.kind == Node::Kind::List)
      return n.items;
    if (n.kind == Node::Kind::Ident)
      return {n.text};
    if (n.kind != Node::Kind::Range)
      throw Error(Error::Kind::Eval, "expected a name range like a..f or a list like {a, b}");
    const std::string& first = n.items[0];
    const std::string& last = n.items[1];
    std::vector<std::string> out;
    if (first.size() == 1 && last.size() == 1) {
      if (first[0] > last[0])
        throw Error(Error::Kind::Eval, "empty name range " + first + ".." + last);
      for (char c = first[0]; c <= last[0]; ++c)
        out.emplace_back(1, c);
      return out;
    }
    // prefix + number, e.g. p1..p8
    auto split = [](const std::string& s) {
      std::size_t k = s.size();
      while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1])))
        --k;
      return std::pair{s.substr(0, k), s.substr(k)};
    };
    auto [p1, n1] = split(first);
    auto [p2, n2] = split(last);
    if (p1 != p2 || n1.empty() || n2.empty())
      throw Error(Error::Kind::Eval, "cannot expand name range " + first + ".." + last);
    for (int i = std::stoi(n1); i <= std::stoi(n2); ++i)
      out.push_back(p1 + std::to_string(i));
    if (out.empty())
      throw Error(Error::Kind::Eval, "empty name range " + first + ".." + last);
    return out;
  }

  int int_arg(const Node& n) {
    if (n.kind != Node::Kind::Int)
      throw Error(Error::Kind::Eval, "expected an integer literal");
    return std::stoi(n.text);
  }

  static void arity(const Node& n, std::size_t lo, std::size_t hi) {
    if (n.children.size() < lo || n.children.size() > hi)
      throw Error(Error::Kind::Eval, n.text + " takes " + std::to_string(lo) +
                                         (lo == hi ? "" : "-" + std::to_string(hi)) +
                                         " argument(s)");
  }

  Value call(const Node& n) {
    const std::string& cmd = n.text;
    const auto& args = n.children;
    if (cmd == "gc" || cmd == "bracketRing") {
      arity(n, 2, 3);
      std::vector<std::string> names;
      int d = int_arg(*args[1]);
      if (cmd == "gc")
        names = expand_names(*args[0]);
      else
        for (int i = 1, count = int_arg(*args[0]); i <= count; ++i)
          names.push_back(std::to_string(i));
      std::vector<std::string> params;
      if (args.size() == 3)
        params = expand_names(*args[2]);
      set_context(make_gc(names, d, params));
      std::string desc = cmd == "gc" ? "Grassmann-Cayley ring on points" : "bracket ring on points";
      for (const auto& s : names)
        desc += " " + s;
      desc += ", d = " + std::to_string(d);
      if (!params.empty()) {
        desc += ", parameters";
        for (const auto& p : params)
          desc += " " + p;
      }
      return RingValue{desc};
    }
    if (cmd == "normalForm") {
      arity(n, 1, 1);
      return gc_normal_form(expect_gc(evaluate(*args[0]), "normalForm"));
    }
    if (cmd == "factor") {
      arity(n, 1, 1);
      Poly p = expect_bracket_poly(evaluate(*args[0]), "factor");
      return FactorValue{ctx_->bracket_ring(), factor_limited(p, ring())};
    }
    if (cmd == "coefficients") {
      arity(n, 1, 1);
      Poly p = expect_bracket_poly(evaluate(*args[0]), "coefficients");
      return CoefficientsValue{ctx_->bracket_ring(),
                               coefficients_by_block(p, Block::Param, ring().order())};
    }
    if (cmd == "coefficient") {
      arity(n, 2, 2);
      Poly p = expect_bracket_poly(evaluate(*args[0]), "coefficient");
      Poly key = expect_bracket_poly(evaluate(*args[1]), "coefficient");
      if (key.size() != 1 || key.terms().begin()->second != 1 || key.uses_block(Block::Bracket))
        throw Error(Error::Kind::Eval, "coefficient needs a monomial in the parameters");
      const Monomial& m = key.terms().begin()->first;
      for (auto& e : coefficients_by_block(p, Block::Param, ring().order()))
        if (e.monomial == m)
          return scalar(e.coefficient);
      return scalar(ring().zero());
    }
    if (cmd == "proveEqual") {
      arity(n, 2, 2);
      Poly p = expect_bracket_poly(evaluate(*args[0]), "proveEqual");
      Poly q = expect_bracket_poly(evaluate(*args[1]), "proveEqual");
      return prove_equal(p, q, ring());
    }
    if (cmd == "psi") {
      arity(n, 1, 1);
      Poly p = expect_bracket_poly(evaluate(*args[0]), "psi");
      return MatrixPoly{ctx_->bracket_ring(), psi_expand(p, ring())};
    }
    if (cmd == "toBrackets") {
      arity(n, 1, 1);
      auto m = as_matrix(evaluate(*args[0]));
      if (!m)
        throw Error(Error::Kind::Eval, "toBrackets needs a polynomial in the matrix entries");
      return SubductionValue{ctx_->bracket_ring(), to_bracket_polynomial(m->poly, ring())};
    }
    throw Error(Error::Kind::Eval, "unknown command '" + cmd + "'");
  }

  GCRingPtr ctx_;
  std::map<std::string, Value> bindings_;
};

inline std::vector<TranscriptEntry> run_script(std::string_view text, Session& session) {
  return session.run(text);
}

inline std::vector<TranscriptEntry> run_script_file(const std::string& path, Session& session) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Error::Kind::Eval, "cannot open script '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return session.run(text);
}

} // namespace brackets::script
