#pragma once

// Demo scripts; identical copies live in scripts/*.gc.

#include <string_view>

namespace brackets::demos {

inline constexpr std::string_view kDesargues = R"gc(# Desargues' theorem in the projective plane.
# Triangles abc and def, with a~d, b~e, c~f.
gc(a..f, 3)

abLine = a*b
bcLine = b*c
acLine = a*c
deLine = d*e
efLine = e*f
dfLine = d*f

# perspective from a line: the three side intersections are collinear
pt1 = abLine ^ deLine
pt2 = bcLine ^ efLine
pt3 = acLine ^ dfLine
linePerspective = pt1 * pt2 * pt3

# perspective from a point: the three joining lines are concurrent
adLine = a*d
beLine = b*e
cfLine = c*f
pointPerspective = adLine ^ beLine ^ cfLine

factor(linePerspective)
factor(pointPerspective)

nl = normalForm(linePerspective)
np = normalForm(pointPerspective)

# np2 is np scaled to match nl's normalization
np2 = 2*np
normalForm([abc]*[def]*np2 - 2*nl)
)gc";

inline constexpr std::string_view kTransversals = R"gc(# Lines meeting four general lines in P^3.
gc(a..h, 4, {l, m})

ell1 = a*b
ell2 = c*d
ell3 = e*f
ell4 = g*h

# candidate point on ell1
p = l*a + m*b
ell = ((p * ell2) ^ ell3) * p
formula = ell ^ ell4

coefficients(formula)
A = coefficient(formula, l*l)
B = coefficient(formula, l*m)
C = coefficient(formula, m*m)
disc = normalForm(B*B - 4*A*C)
)gc";

} // namespace brackets::demos
