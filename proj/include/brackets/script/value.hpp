#pragma once

#include "brackets/gc_algebra.hpp"

#include <json.hpp>

#include <variant>

namespace brackets::script {

// Polynomial in the matrix entries x_{i,j}, as produced by psi.
struct MatrixPoly {
  BracketRingPtr ring;
  Poly poly;
};

struct FactorValue {
  BracketRingPtr ring;
  FactorResult result;
};

struct CoefficientsValue {
  BracketRingPtr ring;
  std::vector<BlockCoefficient> entries;
};

struct SubductionValue {
  BracketRingPtr ring;
  SubductionResult result;
};

struct RingValue {
  std::string description;
};

using Value =
    std::variant<GCExpression, MatrixPoly, bool, FactorValue, CoefficientsValue, SubductionValue,
                 RingValue>;

enum class Format { Text, Json };

namespace detail {

inline std::string render_factor(const FactorValue& f) {
  const auto& ring = *f.ring;
  std::vector<std::string> parts;
  const auto& r = f.result;
  if (r.content != 1)
    parts.push_back(to_string(r.content));
  for (const auto& b : r.factors)
    parts.push_back(ring.bracket_name(b));
  if (r.content != 0 && r.cofactor != ring.constant(1))
    parts.push_back(ring.render(r.cofactor));
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? ", " : "") + parts[i];
  return out + "}";
}

} // namespace detail

inline std::string render_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GCExpression>)
          return render(x);
        else if constexpr (std::is_same_v<T, MatrixPoly>)
          return x.ring->render(x.poly);
        else if constexpr (std::is_same_v<T, bool>)
          return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, FactorValue>)
          return detail::render_factor(x);
        else if constexpr (std::is_same_v<T, CoefficientsValue>) {
          std::string out = "{";
          for (std::size_t i = 0; i < x.entries.size(); ++i) {
            const auto& e = x.entries[i];
            std::string mono = e.monomial.is_one() ? "1" : render_monomial(e.monomial, *x.ring->vars());
            out += (i ? ", " : "") + mono + " => " + x.ring->render(e.coefficient);
          }
          return out + "}";
        } else if constexpr (std::is_same_v<T, SubductionValue>) {
          if (x.result.member())
            return x.ring->render(x.result.brackets);
          return "not in the bracket ring; remainder " + x.ring->render(x.result.remainder);
        } else
          return x.description;
      },
      v);
}

inline nlohmann::ordered_json poly_json(const Poly& f, const MonomialOrder& ord) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : sorted_terms(f, ord)) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (const auto& fac : t.monomial.factors())
      mono[f.vars()->name(fac.var)] = fac.exp;
    terms.push_back({{"monomial", mono},
                     {"num", t.coefficient.get_num().get_str()},
                     {"den", t.coefficient.get_den().get_str()}});
  }
  return {{"terms", terms}};
}

inline nlohmann::ordered_json gc_json(const GCExpression& u) {
  const auto& ring = u.context()->brackets();
  nlohmann::ordered_json out;
  if (u.is_zero())
    out["degree"] = 0;
  else if (auto deg = u.degree())
    out["degree"] = *deg;
  else
    out["degree"] = nullptr;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [blade, coeff] : u.terms()) {
    auto names = nlohmann::ordered_json::array();
    for (int i : blade)
      names.push_back(ring.point_names().at(i - 1));
    terms.push_back({{"blade", names}, {"coeff", poly_json(coeff, ring.order())}});
  }
  out["terms"] = terms;
  return out;
}

inline nlohmann::ordered_json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GCExpression>)
          return gc_json(x);
        else if constexpr (std::is_same_v<T, MatrixPoly>)
          return {{"matrix_poly", poly_json(x.poly, x.ring->matrix_order())}};
        else if constexpr (std::is_same_v<T, bool>)
          return {{"value", x}};
        else if constexpr (std::is_same_v<T, FactorValue>) {
          auto factors = nlohmann::ordered_json::array();
          for (const auto& b : x.result.factors)
            factors.push_back(x.ring->bracket_name(b));
          return {{"content", to_string(x.result.content)},
                  {"factors", factors},
                  {"cofactor", poly_json(x.result.cofactor, x.ring->order())}};
        } else if constexpr (std::is_same_v<T, CoefficientsValue>) {
          auto arr = nlohmann::ordered_json::array();
          for (const auto& e : x.entries) {
            nlohmann::ordered_json mono = nlohmann::ordered_json::object();
            for (const auto& fac : e.monomial.factors())
              mono[x.ring->vars()->name(fac.var)] = fac.exp;
            arr.push_back({{"monomial", mono}, {"coeff", poly_json(e.coefficient, x.ring->order())}});
          }
          return {{"coefficients", arr}};
        } else if constexpr (std::is_same_v<T, SubductionValue>) {
          return {{"member", x.result.member()},
                  {"brackets", poly_json(x.result.brackets, x.ring->order())},
                  {"remainder", poly_json(x.result.remainder, x.ring->matrix_order())}};
        } else
          return {{"ring", x.description}};
      },
      v);
}

inline std::string render(const Value& v, Format format) {
  return format == Format::Json ? to_json(v).dump() : render_text(v);
}

} // namespace brackets::script
