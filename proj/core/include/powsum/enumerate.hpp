#pragma once

// Closed-form enumeration of the critical orbits of p4 on the surface.
//
// The symmetric group S5 acts on the surface by permuting coordinates, and
// every critical point of p4 has coordinates taking at most three distinct
// values. Grouping equal coordinates gives a partition pattern, and each
// pattern reduces the Lagrange conditions to a depressed cubic in one
// parameter t:
//
//   [2,2,1]  (a, a, b, b, e):  15 t^3 - (3/2) t + c = 0,  t = e-parameter/(-2)
//   [3,1,1]  (a, a, a, b, e):  (10/9) t^3 - (3/2) t + c = 0
//
// plus the two collision patterns [3,2] and [4,1] that only occur at the
// special levels |c| = 1/sqrt(30) and |c| = 3/sqrt(20).

#include <optional>
#include <string>
#include <vector>

#include "powsum/surface.hpp"

namespace powsum {

enum class Pattern { k221, k311, k32, k41 };

std::string to_string(Pattern pattern);

// Orbit classification. The first three values equal the Morse index at
// smooth nondegenerate points; kSingular marks the conical double points of
// the [3,2] pattern and kIsolated the five points of the [4,1] pattern,
// where a Morse index is not defined.
enum class CritClass {
  kMinimum = 0,
  kSaddle = 1,
  kMaximum = 2,
  kSingular = 3,
  kIsolated = 4,
};

std::string to_string(CritClass crit_class);

// Morse index 0/1/2 for the smooth classes, -1 for kSingular/kIsolated.
int morse_index(CritClass crit_class);

// One S5-orbit of critical points.
struct CriticalOrbit {
  Pattern pattern = Pattern::k221;
  double t = 0.0;               // root of the reduction cubic
  Point5 representative;        // coordinates sorted descending
  Multipliers multipliers;      // Lagrange multipliers shared by the orbit
  double p4_value = 0.0;
  CritClass crit_class = CritClass::kSaddle;
  int multiplicity = 0;         // orbit size under S5
};

struct MorseCounts {
  int n_min = 0;
  int n_saddle = 0;
  int n_max = 0;
  int total() const { return n_min + n_saddle + n_max; }
};

// Everything analyze() knows about one level c.
struct RegimeReport {
  SurfaceSpec spec;
  Regime regime = Regime::kEmpty;
  std::vector<CriticalOrbit> orbits;          // singular orbits included
  MorseCounts counts;                         // smooth critical points only
  int n_singular = 0;                         // points in [3,2]/[4,1] orbits
  std::optional<int> euler_characteristic;    // smooth regimes only
  std::optional<int> genus;                   // smooth regimes only
  std::vector<std::string> notes;
};

// Size of the S5-orbit of a point whose equal-coordinate groups have the
// given sizes (a partition of 5): 5! / prod(parts[i]!).
int orbit_size(const std::vector<int>& parts);

// Lagrange multipliers from the three (with multiplicity) coordinate values,
// via Vieta on the stationarity cubic 4w^3 - 3*l3*w^2 - 2*l2*w - l1:
//   l3 = (4/3)(r1+r2+r3), l2 = -2(r1 r2 + r1 r3 + r2 r3), l1 = 4 r1 r2 r3.
Multipliers vieta_multipliers(double r1, double r2, double r3);

// The [2,2,1] orbits at level spec.c. Roots of the reduction cubic within
// tol_end of a collision level (|t| near 1/sqrt(30) or 1/sqrt(5)) are
// excluded; they belong to the singular patterns.
std::vector<CriticalOrbit> enumerate_orbits_221(const SurfaceSpec& spec,
                                                double tol_end = 1e-9);

// The [3,1,1] orbits at level spec.c, with the analogous exclusions
// (|t| near 3/(2*sqrt(5)) or sqrt(6/5)).
std::vector<CriticalOrbit> enumerate_orbits_311(const SurfaceSpec& spec,
                                                double tol_end = 1e-9);

// The [3,2] orbit (10 points) at |c| = 1/sqrt(30) or the [4,1] orbit
// (5 points) at |c| = 3/sqrt(20). Throws WrongRegimeError at any other
// level.
std::vector<CriticalOrbit> singular_orbits(const SurfaceSpec& spec);

// Classify a smooth orbit purely from the ordering of its three distinct
// coordinate values - no Hessian, no eigenvalue solve - so it can serve as an
// independent cross-check of morse_index_from_hessian:
//   [2,2,1]: the unpaired value is the middle root  -> minimum, else saddle;
//   [3,1,1]: the tripled value is the middle root   -> maximum, else minimum.
// Throws DegenerateRootError if two of the values are closer than
// spec.tol_distinct, and std::invalid_argument for non-smooth patterns.
CritClass classify_by_root_order(const CriticalOrbit& orbit,
                                 const SurfaceSpec& spec);

// Full census at one level: regime, all orbits, Morse counts, Euler
// characteristic and genus where the surface is smooth, and the notes
// reconciling computed indices with the classical answer's labels.
RegimeReport analyze(const SurfaceSpec& spec);

// Stable text key identifying an orbit: pattern plus the distinct coordinate
// values rounded to 1e-7, descending.
std::string orbit_key(const CriticalOrbit& orbit);

}  // namespace powsum
