// Desargues' theorem through the C++ API.
#include "brackets/gc_algebra.hpp"

#include <iostream>

using namespace brackets;

int main() {
  auto G = make_gc({"a", "b", "c", "d", "e", "f"}, 3);
  auto pt = [&](int i) { return GCExpression::point(G, i); };
  auto a = pt(1), b = pt(2), c = pt(3), d = pt(4), e = pt(5), f = pt(6);

  auto line_perspective =
      join(join(meet(join(a, b), join(d, e)), meet(join(b, c), join(e, f))),
           meet(join(a, c), join(d, f)));
  auto point_perspective = meet(meet(join(a, d), join(b, e)), join(c, f));

  const auto& ring = G->brackets();
  Poly nl = *as_bracket_poly(gc_normal_form(line_perspective));
  Poly np = *as_bracket_poly(gc_normal_form(point_perspective));
  std::cout << "nl = " << ring.render(nl) << "\n";
  std::cout << "np = " << ring.render(np) << "\n";

  Poly abc_def = ring.bracket_of({1, 2, 3}) * ring.bracket_of({4, 5, 6});
  auto ratio = prove_proportional(abc_def * np, nl, ring);
  if (!ratio) {
    std::cout << "not proportional\n";
    return 1;
  }
  std::cout << "nl = " << to_string(*ratio) << " * [abc]*[def]*np\n";
}
