#pragma once

// Real roots of the reduction cubics  a3*t^3 + a1*t + a0  restricted to an
// open interval. Both orbit families reduce the critical point equations to
// a cubic of this shape (no quadratic term), so the solver only handles the
// depressed case - but it handles it carefully: closed form first, then a
// fixed Newton polish, with an explicit near-double-root flag instead of
// silently returning two nearly equal roots.

#include <vector>

namespace powsum {

struct CubicRoot {
  double t = 0.0;
  // Set when the discriminant of the normalized cubic vanishes to within
  // kCubicDegenerateTol and this root is (close to) the double root. Callers
  // enumerating smooth orbits must drop flagged roots: they correspond to
  // coordinate collisions.
  bool degenerate = false;
};

inline constexpr double kCubicDegenerateTol = 1e-12;

// All real roots of a3*t^3 + a1*t + a0 strictly inside (lo + tol_end,
// hi - tol_end), in ascending order. Each closed-form root is polished by two
// Newton steps; the polished residual is below 1e-14 * scale for the
// coefficient ranges used here. Requires a3 != 0 and lo < hi.
std::vector<CubicRoot> solve_depressed_cubic_on_interval(
    double a3, double a1, double a0, double lo, double hi,
    double tol_end = 1e-9);

}  // namespace powsum
