#include "powsum/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "powsum/cubic.hpp"

namespace powsum {

namespace {

// Reduction data for the two smooth families.
//
// [2,2,1]: coordinates (a, a, b, b, e) with e = -2t, a + b = t and
// ab = (5t^2 - 1)/4 from the first two constraints, so a, b =
// (t +- s)/2 with s = sqrt(1 - 5t^2). Substituting into p3 = c gives
//   15 t^3 - (3/2) t + c = 0,   |t| < 1/sqrt(5).
// At |t| = 1/sqrt(30) the single value e collides with a or b (the [3,2]
// pattern); at |t| -> 1/sqrt(5) the pair values collide ([4,1]).
const double kPairBound = 1.0 / std::sqrt(5.0);
const double kPairCollision = 1.0 / std::sqrt(30.0);

// [3,1,1]: coordinates (a, a, a, b, e) with a = -t/3 and b, e = (t +- r)/2,
// r = sqrt(2 - (5/3) t^2). Substituting into p3 = c gives
//   (10/9) t^3 - (3/2) t + c = 0,   |t| < sqrt(6/5).
// At |t| = 3/(2 sqrt(5)) the tripled value collides with b or e ([4,1]);
// at |t| -> sqrt(6/5) the two single values collide ([3,2]).
const double kTripleBound = std::sqrt(6.0 / 5.0);
const double kTripleCollision = 3.0 / (2.0 * std::sqrt(5.0));

Point5 sorted_point(const double (&vals)[5]) {
  double v[5];
  std::copy(vals, vals + 5, v);
  std::sort(v, v + 5, std::greater<double>());
  Point5 p;
  for (int i = 0; i < 5; ++i) p[i] = v[i];
  return p;
}

// Shared tail of orbit construction: representative, multipliers from the
// three (with multiplicity) values, p4, orbit size.
CriticalOrbit build_orbit(Pattern pattern, double t, const double (&vals)[5],
                          double r1, double r2, double r3,
                          const std::vector<int>& parts) {
  CriticalOrbit orbit;
  orbit.pattern = pattern;
  orbit.t = t;
  orbit.representative = sorted_point(vals);
  orbit.multipliers = vieta_multipliers(r1, r2, r3);
  orbit.p4_value = power_sum(orbit.representative, 4);
  orbit.multiplicity = orbit_size(parts);
  return orbit;
}

// Morse class via the projected Hessian (the production route; the
// root-order rule is the independent check).
CritClass classify_by_hessian(const CriticalOrbit& orbit,
                              const SurfaceSpec& spec) {
  TangentFrame frame = tangent_frame(orbit.representative, spec);
  Eigen::Matrix2d h =
      projected_hessian(orbit.representative, orbit.multipliers, frame);
  return static_cast<CritClass>(morse_index_from_hessian(h));
}

// Classical tabulated label for a smooth family slot, used only to generate
// reconciliation notes.
const char* classical_label(Pattern pattern, bool marked_value_is_middle) {
  if (pattern == Pattern::k221) {
    return marked_value_is_middle ? "maximum" : "saddle";
  }
  return marked_value_is_middle ? "minimum" : "maximum";
}

}  // namespace

std::string to_string(Pattern pattern) {
  switch (pattern) {
    case Pattern::k221: return "221";
    case Pattern::k311: return "311";
    case Pattern::k32: return "32";
    case Pattern::k41: return "41";
  }
  return "?";
}

std::string to_string(CritClass crit_class) {
  switch (crit_class) {
    case CritClass::kMinimum: return "minimum";
    case CritClass::kSaddle: return "saddle";
    case CritClass::kMaximum: return "maximum";
    case CritClass::kSingular: return "singular";
    case CritClass::kIsolated: return "isolated";
  }
  return "?";
}

int morse_index(CritClass crit_class) {
  switch (crit_class) {
    case CritClass::kMinimum: return 0;
    case CritClass::kSaddle: return 1;
    case CritClass::kMaximum: return 2;
    default: return -1;
  }
}

int orbit_size(const std::vector<int>& parts) {
  int total = 0;
  for (int part : parts) {
    if (part < 1) throw std::invalid_argument("orbit_size: parts must be >= 1");
    total += part;
  }
  if (total != 5) {
    throw std::invalid_argument("orbit_size: parts must partition 5");
  }
  auto factorial = [](int n) {
    int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  int denom = 1;
  for (int part : parts) denom *= factorial(part);
  return factorial(5) / denom;
}

Multipliers vieta_multipliers(double r1, double r2, double r3) {
  // The stationarity cubic 4w^3 - 3 l3 w^2 - 2 l2 w - l1 must have roots
  // r1, r2, r3; expanding 4(w - r1)(w - r2)(w - r3) and matching terms:
  Multipliers m;
  m.lambda3 = (4.0 / 3.0) * (r1 + r2 + r3);
  m.lambda2 = -2.0 * (r1 * r2 + r1 * r3 + r2 * r3);
  m.lambda1 = 4.0 * r1 * r2 * r3;
  return m;
}

std::vector<CriticalOrbit> enumerate_orbits_221(const SurfaceSpec& spec,
                                                double tol_end) {
  auto roots = solve_depressed_cubic_on_interval(15.0, -1.5, spec.c,
                                                 -kPairBound, kPairBound,
                                                 tol_end);
  std::vector<CriticalOrbit> orbits;
  for (const auto& root : roots) {
    if (root.degenerate) continue;
    const double t = root.t;
    if (std::abs(std::abs(t) - kPairCollision) <= tol_end) continue;
    const double s = std::sqrt(std::max(0.0, 1.0 - 5.0 * t * t));
    const double a = 0.5 * (t + s);
    const double b = 0.5 * (t - s);
    const double e = -2.0 * t;
    const double vals[5] = {a, a, b, b, e};
    CriticalOrbit orbit = build_orbit(Pattern::k221, t, vals, a, b, e,
                                      {2, 2, 1});
    orbit.crit_class = classify_by_hessian(orbit, spec);
    orbits.push_back(orbit);
  }
  return orbits;
}

std::vector<CriticalOrbit> enumerate_orbits_311(const SurfaceSpec& spec,
                                                double tol_end) {
  auto roots = solve_depressed_cubic_on_interval(10.0 / 9.0, -1.5, spec.c,
                                                 -kTripleBound, kTripleBound,
                                                 tol_end);
  std::vector<CriticalOrbit> orbits;
  for (const auto& root : roots) {
    if (root.degenerate) continue;
    const double t = root.t;
    if (std::abs(std::abs(t) - kTripleCollision) <= tol_end) continue;
    const double r = std::sqrt(std::max(0.0, 2.0 - (5.0 / 3.0) * t * t));
    const double a = -t / 3.0;
    const double b = 0.5 * (t + r);
    const double e = 0.5 * (t - r);
    const double vals[5] = {a, a, a, b, e};
    CriticalOrbit orbit = build_orbit(Pattern::k311, t, vals, a, b, e,
                                      {3, 1, 1});
    orbit.crit_class = classify_by_hessian(orbit, spec);
    orbits.push_back(orbit);
  }
  return orbits;
}

std::vector<CriticalOrbit> singular_orbits(const SurfaceSpec& spec) {
  const Regime regime = classify_regime(spec);
  if (regime == Regime::kSingularSurface) {
    // The [3,2] orbit: limit of the pair family as t hits the collision
    // level with the sign of c.
    const double t = std::copysign(kPairCollision, spec.c);
    const double s = std::sqrt(1.0 - 5.0 * t * t);
    const double a = 0.5 * (t + s);
    const double b = 0.5 * (t - s);
    const double e = -2.0 * t;
    const double vals[5] = {a, a, b, b, e};
    CriticalOrbit orbit = build_orbit(Pattern::k32, t, vals, a, b, e, {3, 2});
    orbit.crit_class = CritClass::kSingular;
    return {orbit};
  }
  if (regime == Regime::kFivePoints) {
    // The [4,1] orbit: limit of the pair family as the paired values
    // collide (s = 0 at |t| = 1/sqrt(5), with t opposite in sign to c).
    const double t = -std::copysign(kPairBound, spec.c);
    const double a = 0.5 * t;
    const double e = -2.0 * t;
    const double vals[5] = {a, a, a, a, e};
    CriticalOrbit orbit = build_orbit(Pattern::k41, t, vals, a, a, e, {4, 1});
    orbit.crit_class = CritClass::kIsolated;
    return {orbit};
  }
  throw WrongRegimeError(
      "singular_orbits: level is not at a singular or degenerate value");
}

CritClass classify_by_root_order(const CriticalOrbit& orbit,
                                 const SurfaceSpec& spec) {
  if (orbit.pattern != Pattern::k221 && orbit.pattern != Pattern::k311) {
    throw std::invalid_argument(
        "classify_by_root_order: only smooth patterns are classifiable");
  }
  auto clusters = cluster_coordinates(orbit.representative, spec.tol_distinct);
  if (clusters.size() != 3) {
    throw DegenerateRootError(
        "classify_by_root_order: coordinate values are not three-distinct");
  }
  const int marked_count = orbit.pattern == Pattern::k221 ? 1 : 3;
  int marked_pos = -1;
  for (int i = 0; i < 3; ++i) {
    if (clusters[i].count == marked_count) marked_pos = i;
  }
  if (marked_pos < 0) {
    throw DegenerateRootError(
        "classify_by_root_order: cluster sizes do not match the pattern");
  }
  // Clusters are sorted by value, so position 1 is the middle root of the
  // stationarity cubic.
  const bool middle = marked_pos == 1;
  if (orbit.pattern == Pattern::k221) {
    return middle ? CritClass::kMinimum : CritClass::kSaddle;
  }
  return middle ? CritClass::kMaximum : CritClass::kMinimum;
}

RegimeReport analyze(const SurfaceSpec& spec) {
  RegimeReport report;
  report.spec = spec;
  report.regime = classify_regime(spec);

  report.orbits = enumerate_orbits_221(spec);
  auto triples = enumerate_orbits_311(spec);
  report.orbits.insert(report.orbits.end(), triples.begin(), triples.end());
  if (report.regime == Regime::kSingularSurface ||
      report.regime == Regime::kFivePoints) {
    auto singular = singular_orbits(spec);
    report.orbits.insert(report.orbits.end(), singular.begin(),
                         singular.end());
  }

  std::sort(report.orbits.begin(), report.orbits.end(),
            [](const CriticalOrbit& x, const CriticalOrbit& y) {
              if (x.pattern != y.pattern) return x.pattern < y.pattern;
              return x.t < y.t;
            });

  for (const auto& orbit : report.orbits) {
    switch (orbit.crit_class) {
      case CritClass::kMinimum: report.counts.n_min += orbit.multiplicity; break;
      case CritClass::kSaddle: report.counts.n_saddle += orbit.multiplicity; break;
      case CritClass::kMaximum: report.counts.n_max += orbit.multiplicity; break;
      default: report.n_singular += orbit.multiplicity; break;
    }
  }

  if (report.regime == Regime::kSmoothConnected ||
      report.regime == Regime::kSmoothFiveSpheres) {
    const int chi = report.counts.n_min - report.counts.n_saddle +
                    report.counts.n_max;
    report.euler_characteristic = chi;
    report.genus = (2 * regime_component_count(report.regime) - chi) / 2;
  }

  // Reconciliation notes: wherever the computed index contradicts the label
  // the classical tabulation gives that family, say so explicitly.
  bool any_swap = false;
  for (const auto& orbit : report.orbits) {
    if (orbit.pattern == Pattern::k32) {
      report.notes.push_back(
          "[3,2] orbit (10 conical points): no Morse index is defined; the "
          "classical tabulation calls these 'maxima'; use the local extremum "
          "probe for an empirical verdict.");
      continue;
    }
    if (orbit.pattern == Pattern::k41) continue;
    const CritClass by_order = classify_by_root_order(orbit, spec);
    const bool middle = orbit.pattern == Pattern::k221
                            ? by_order == CritClass::kMinimum
                            : by_order == CritClass::kMaximum;
    const std::string classical = classical_label(orbit.pattern, middle);
    if (classical != to_string(orbit.crit_class)) {
      any_swap = true;
      char buf[192];
      std::snprintf(buf, sizeof(buf),
                    "[%s] orbit at t=%+.6f: computed class '%s' (index %d); "
                    "the classical tabulation labels this family '%s'.",
                    to_string(orbit.pattern).c_str(), orbit.t,
                    to_string(orbit.crit_class).c_str(),
                    morse_index(orbit.crit_class), classical.c_str());
      report.notes.push_back(buf);
    }
  }
  if (any_swap) {
    char buf[224];
    std::snprintf(buf, sizeof(buf),
                  "Computed counts (min, saddle, max) = (%d, %d, %d) follow "
                  "the second-derivative test; the classical tabulation swaps "
                  "the min and max labels, i.e. reads (%d, %d, %d).",
                  report.counts.n_min, report.counts.n_saddle,
                  report.counts.n_max, report.counts.n_max,
                  report.counts.n_saddle, report.counts.n_min);
    report.notes.push_back(buf);
  }
  return report;
}

std::string orbit_key(const CriticalOrbit& orbit) {
  auto clusters = cluster_coordinates(orbit.representative, 1e-8);
  std::string key = to_string(orbit.pattern);
  for (const auto& cluster : clusters) {
    double rounded = std::round(cluster.value * 1e7) / 1e7;
    rounded += 0.0;  // maps -0 to +0 so keys are sign-stable at zero
    char buf[32];
    std::snprintf(buf, sizeof(buf), ":%+.7f", rounded);
    key += buf;
  }
  return key;
}

}  // namespace powsum
