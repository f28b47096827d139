#pragma once

#include "brackets/oracle.hpp"

#include <random>

namespace testing_support {

using namespace brackets;

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return Rational(num(rng), den(rng));
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Monomial m;
  for (int k = deg(rng); k > 0; --k)
    m = m * Monomial::variable(static_cast<Monomial::Var>(var(rng)));
  return m;
}

inline Poly random_poly(std::mt19937_64& rng, const VarTablePtr& vars, int terms, int max_degree) {
  Poly f(vars);
  for (int t = 0; t < terms; ++t)
    f.add_term(random_monomial(rng, vars->size(), max_degree), random_rational(rng));
  return f;
}

// Random combination of bracket monomials of a fixed degree.
inline Poly random_bracket_poly(std::mt19937_64& rng, const BracketRing& ring, int terms,
                                int degree) {
  std::uniform_int_distribution<std::size_t> pick(0, ring.bracket_count() - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  Poly f = ring.zero();
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int k = 0; k < degree; ++k)
      m = m * Monomial::variable(static_cast<Monomial::Var>(pick(rng)));
    f.add_term(m, coef(rng));
  }
  return f;
}

inline Poly random_bracket_monomial(std::mt19937_64& rng, const BracketRing& ring, int degree) {
  Poly f = ring.zero();
  while (f.is_zero())
    f = random_bracket_poly(rng, ring, 1, degree);
  return f;
}

inline std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

} // namespace testing_support
