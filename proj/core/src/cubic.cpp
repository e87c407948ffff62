#include "powsum/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace powsum {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::vector<CubicRoot> solve_depressed_cubic_on_interval(
    double a3, double a1, double a0, double lo, double hi, double tol_end) {
  if (a3 == 0.0) {
    throw std::invalid_argument("cubic solver: leading coefficient is zero");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("cubic solver: interval must satisfy lo < hi");
  }

  // Normalize to t^3 + p t + q; all branch decisions use the normalized
  // discriminant -4p^3 - 27q^2.
  const double p = a1 / a3;
  const double q = a0 / a3;
  const double disc = -4.0 * p * p * p - 27.0 * q * q;

  std::vector<CubicRoot> roots;
  if (std::abs(disc) <= kCubicDegenerateTol) {
    // Collision: a double root at -3q/(2p) plus the simple root at twice
    // its negative (triple root at the origin when p is zero too).
    if (p == 0.0) {
      roots.push_back({std::cbrt(-q), true});
    } else {
      const double dbl = -3.0 * q / (2.0 * p);
      roots.push_back({-2.0 * dbl, false});
      roots.push_back({dbl, true});
    }
  } else if (disc > 0.0) {
    // Three distinct real roots (implies p < 0): trigonometric form.
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      roots.push_back({m * std::cos(theta - 2.0 * kPi * k / 3.0), false});
    }
  } else {
    // One real root: Cardano, picking the cube-root argument with the sign
    // that avoids cancellation.
    const double s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const double w = -q / 2.0 - std::copysign(s, q);
    const double u = std::cbrt(w);
    roots.push_back({u == 0.0 ? 0.0 : u - p / (3.0 * u), false});
  }

  // Two Newton steps take the closed forms to machine precision; skip the
  // flagged double roots, where f' vanishes.
  for (auto& root : roots) {
    if (root.degenerate) continue;
    for (int it = 0; it < 2; ++it) {
      const double f = a3 * root.t * root.t * root.t + a1 * root.t + a0;
      const double fp = 3.0 * a3 * root.t * root.t + a1;
      if (fp == 0.0) break;
      const double step = f / fp;
      if (!std::isfinite(step)) break;
      root.t -= step;
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const CubicRoot& x, const CubicRoot& y) { return x.t < y.t; });

  // Merge accidental duplicates (possible only when the acos argument was
  // clamped), then apply the exclusive interval with margin.
  std::vector<CubicRoot> out;
  for (const auto& root : roots) {
    if (!out.empty() && root.t - out.back().t < 1e-12) {
      out.back().degenerate |= root.degenerate;
      continue;
    }
    out.push_back(root);
  }
  std::erase_if(out, [&](const CubicRoot& root) {
    return !(root.t > lo + tol_end && root.t < hi - tol_end);
  });
  return out;
}

}  // namespace powsum
