#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "powsum/cubic.hpp"

using powsum::solve_depressed_cubic_on_interval;

namespace {

double eval(double a3, double a1, double a0, double t) {
  return a3 * t * t * t + a1 * t + a0;
}

}  // namespace

TEST_CASE("reduction cubic of the pair pattern at c = 0") {
  // 15 t^3 - (3/2) t = 0 on (-1/sqrt(5), 1/sqrt(5)): roots -1/sqrt(10), 0,
  // 1/sqrt(10), all simple.
  const double bound = 1.0 / std::sqrt(5.0);
  auto roots = solve_depressed_cubic_on_interval(15.0, -1.5, 0.0, -bound, bound);
  REQUIRE(roots.size() == 3);
  const double r = 1.0 / std::sqrt(10.0);
  CHECK(roots[0].t == doctest::Approx(-r).epsilon(1e-14));
  CHECK(std::abs(roots[1].t) < 1e-14);
  CHECK(roots[2].t == doctest::Approx(r).epsilon(1e-14));
  for (const auto& root : roots) CHECK_FALSE(root.degenerate);
}

TEST_CASE("reduction cubic of the triple pattern at c = 0") {
  // (10/9) t^3 - (3/2) t = 0 has roots 0 and +-sqrt(27/20) ~ +-1.1619, but
  // only 0 lies inside (-sqrt(6/5), sqrt(6/5)).
  const double bound = std::sqrt(1.2);
  auto roots =
      solve_depressed_cubic_on_interval(10.0 / 9.0, -1.5, 0.0, -bound, bound);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0].t) < 1e-14);
  CHECK_FALSE(roots[0].degenerate);
}

TEST_CASE("single real root branch") {
  // t^3 + t - 2 = (t - 1)(t^2 + t + 2): one real root at exactly 1.
  auto roots = solve_depressed_cubic_on_interval(1.0, 1.0, -2.0, -5.0, 5.0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].t == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(roots[0].degenerate);
}

TEST_CASE("vanishing discriminant flags the double root") {
  // t^3 - 3t + 2 = (t - 1)^2 (t + 2): discriminant exactly zero.
  auto roots = solve_depressed_cubic_on_interval(1.0, -3.0, 2.0, -5.0, 5.0);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].t == doctest::Approx(-2.0).epsilon(1e-13));
  CHECK_FALSE(roots[0].degenerate);
  CHECK(roots[1].t == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(roots[1].degenerate);
}

TEST_CASE("nearly vanishing discriminant still flags") {
  // Perturb the constant term by 1e-15: discriminant ~1e-13, inside the
  // degeneracy window.
  auto roots =
      solve_depressed_cubic_on_interval(1.0, -3.0, 2.0 - 1e-15, -5.0, 5.0);
  bool any_flagged = false;
  for (const auto& root : roots) any_flagged |= root.degenerate;
  CHECK(any_flagged);
  // The simple root far from the collision stays unflagged.
  CHECK_FALSE(roots[0].degenerate);
  CHECK(roots[0].t == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("interval endpoints are exclusive with margin tol_end") {
  // t^3 - t: roots -1, 0, 1.
  auto inside = solve_depressed_cubic_on_interval(1.0, -1.0, 0.0, -1.1, 1.1);
  REQUIRE(inside.size() == 3);
  // Roots sitting exactly at the endpoints are dropped.
  auto clipped = solve_depressed_cubic_on_interval(1.0, -1.0, 0.0, -1.0, 1.0);
  REQUIRE(clipped.size() == 1);
  CHECK(std::abs(clipped[0].t) < 1e-14);
  // ... as are roots within tol_end of an endpoint.
  auto margin = solve_depressed_cubic_on_interval(1.0, -1.0, 0.0, -1.0 - 1e-10,
                                                  1.0 - 1e-10, 1e-9);
  REQUIRE(margin.size() == 1);
}

TEST_CASE("roots are ascending with small residuals") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coeff(-5.0, 5.0);
  std::uniform_real_distribution<double> lead(0.5, 20.0);
  for (int trial = 0; trial < 2000; ++trial) {
    double a3 = lead(rng) * (trial % 2 == 0 ? 1.0 : -1.0);
    double a1 = coeff(rng);
    double a0 = coeff(rng);
    auto roots = solve_depressed_cubic_on_interval(a3, a1, a0, -10.0, 10.0);
    for (size_t k = 0; k < roots.size(); ++k) {
      if (k > 0) CHECK(roots[k - 1].t < roots[k].t);
      if (!roots[k].degenerate) {
        CHECK(std::abs(eval(a3, a1, a0, roots[k].t)) < 1e-11);
      }
    }
  }
}

TEST_CASE("constructed roots are recovered to full precision") {
  // Build depressed cubics from known roots r1 + r2 + r3 = 0 and demand the
  // solver return exactly those roots. This oracle owes nothing to any
  // closed form.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  int tested = 0;
  while (tested < 1000) {
    double r1 = uni(rng), r2 = uni(rng);
    double r3 = -r1 - r2;
    double rs[3] = {r1, r2, r3};
    std::sort(rs, rs + 3);
    if (rs[1] - rs[0] < 1e-3 || rs[2] - rs[1] < 1e-3) continue;
    if (std::abs(rs[0]) > 2.5 || std::abs(rs[2]) > 2.5) continue;
    ++tested;
    double p = r1 * r2 + r1 * r3 + r2 * r3;
    double q = -r1 * r2 * r3;
    auto roots = solve_depressed_cubic_on_interval(1.0, p, q, -3.0, 3.0);
    REQUIRE(roots.size() == 3);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(roots[k].t - rs[k]) < 1e-12);
      CHECK_FALSE(roots[k].degenerate);
    }
  }
}

TEST_CASE("solver agrees with a bisection scan on the reduction family") {
  // Sweep the constant term of the pair-pattern cubic through both counts
  // (three roots, one root) and compare against the scanning oracle.
  for (double c = -0.3; c <= 0.3001; c += 0.01) {
    auto mine = solve_depressed_cubic_on_interval(15.0, -1.5, c, -5.0, 5.0);
    auto ref = oracle::scan_cubic_roots(15.0, -1.5, c, -5.0, 5.0);
    // Skip the near-degenerate levels, where counting is tolerance-bound.
    bool near_collision = false;
    for (size_t i = 1; i < ref.size(); ++i) {
      if (ref[i] - ref[i - 1] < 1e-3) near_collision = true;
    }
    if (near_collision) continue;
    REQUIRE(mine.size() == ref.size());
    for (size_t k = 0; k < ref.size(); ++k) {
      CHECK(std::abs(mine[k].t - ref[k]) < 1e-9);
    }
  }
}

TEST_CASE("solver rejects bad arguments") {
  CHECK_THROWS_AS(solve_depressed_cubic_on_interval(0.0, 1.0, 1.0, -1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_depressed_cubic_on_interval(1.0, 1.0, 1.0, 1.0, -1.0),
                  std::invalid_argument);
}
