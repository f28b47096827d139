// Lines meeting four general lines in P^3, through the C++ API.
#include "brackets/gc_algebra.hpp"

#include <iostream>

using namespace brackets;

int main() {
  auto G = make_gc({"a", "b", "c", "d", "e", "f", "g", "h"}, 4, {"l", "m"});
  const auto& ring = G->brackets();
  auto pt = [&](int i) { return GCExpression::point(G, i); };

  auto p = ring.param_poly("l") * pt(1) + ring.param_poly("m") * pt(2);
  auto ell = join(meet(join(p, join(pt(3), pt(4))), join(pt(5), pt(6))), p);
  Poly formula = *as_bracket_poly(meet(ell, join(pt(7), pt(8))));

  std::map<std::string, Poly> c;
  for (const auto& e : coefficients_by_block(formula, Block::Param, ring.order())) {
    std::string key = render_monomial(e.monomial, *ring.vars());
    std::cout << key << ": " << ring.render(e.coefficient) << "\n";
    c.emplace(key, e.coefficient);
  }
  Poly disc = straighten(c.at("l*m").pow(2) - Rational(4) * c.at("l^2") * c.at("m^2"), ring);
  std::cout << "disc: " << ring.render(disc) << "\n";
  return disc.is_zero() ? 1 : 0;
}
