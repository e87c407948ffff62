#pragma once

// Numerical cross-examination of the closed-form enumeration. Nothing here
// trusts enumerate.hpp: critical points are re-found by damped Newton on the
// full KKT system from random surface starts, then matched back to the
// enumerated orbits; extremality at singular points is probed by sampling
// p4 on a punctured neighborhood.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "powsum/enumerate.hpp"
#include "powsum/surface.hpp"

namespace powsum {

// A candidate critical point with its multipliers: the 8 unknowns of the
// KKT system.
struct KktState {
  Point5 point;
  Multipliers multipliers;
};

// Stationarity (5 equations) then constraints (3):
//   F_i    = 4 x_i^3 - 3 l3 x_i^2 - 2 l2 x_i - l1,  i = 0..4
//   F_5..7 = (p1, p2 - 1, p3 - c).
Eigen::Matrix<double, 8, 1> kkt_residual(const KktState& state,
                                         const SurfaceSpec& spec);

// Exact Jacobian of kkt_residual with respect to (x, l1, l2, l3).
Eigen::Matrix<double, 8, 8> kkt_jacobian(const KktState& state);

struct NewtonOptions {
  int max_iter = 50;
  double tol = 1e-11;     // infinity norm of the residual
  int max_halvings = 20;  // step dampings per iteration before giving up
};

// Damped Newton on the KKT system. Returns the converged state, or nullopt
// when the iteration stalls or leaves the finite range ("diverged" is an
// expected outcome for bad starts, not an error).
std::optional<KktState> newton_solve(const KktState& start,
                                     const SurfaceSpec& spec,
                                     const NewtonOptions& options = {});

// Least-squares Lagrange multipliers for a point assumed close to critical:
// minimizes the stationarity residual over (l1, l2, l3).
Multipliers fit_multipliers(const Point5& p);

// Deterministic draw of a point on the surface: a standard-normal 5-vector
// is centered (p1 = 0), normalized (p2 = 1), then moved along the projected
// gradient of p3 until p3 = c. Throws DegenerateRegimeError when the regime
// is Empty or FivePoints, or when |c| is within 1e-9 of +-3/sqrt(20).
Point5 random_surface_point(const SurfaceSpec& spec, std::mt19937_64& rng);
Point5 random_surface_point(const SurfaceSpec& spec, std::uint64_t seed);

// Nearest-point projection onto the surface by Gauss-Newton on the three
// constraints. Used by the probe to perturb off a point and return to the
// surface. Returns nullopt if the iteration fails to reach tol.
std::optional<Point5> project_to_surface(const Point5& ambient,
                                         const SurfaceSpec& spec,
                                         double tol = 1e-12,
                                         int max_iter = 50);

struct VerificationReport {
  int n_starts = 0;
  int n_converged = 0;
  std::uint64_t seed = 0;
  double max_residual = 0.0;                // over converged, matched states
  std::map<std::string, int> matched;       // orbit_key -> converged hits
  std::vector<KktState> unmatched;          // converged but no orbit match
};

// Run n_starts independent Newton solves from random surface points at the
// level spec.c and match every converged state to an enumerated orbit by
// pattern and distinct values (tolerance 1e-7). Fully deterministic for a
// fixed (spec, n_starts, seed). Throws std::invalid_argument for
// n_starts < 1.
VerificationReport multistart_verify(const SurfaceSpec& spec, int n_starts,
                                     std::uint64_t seed);

// True when report has no unmatched states, every enumerated orbit at this
// level was hit at least once, and max_residual < residual_bound.
bool verification_clean(const VerificationReport& report,
                        const SurfaceSpec& spec,
                        double residual_bound = 1e-11);

enum class ProbeVerdict { kLocalMin, kLocalMax, kNeither };

std::string to_string(ProbeVerdict verdict);

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::kNeither;
  double p4_center = 0.0;
  double margin = 0.0;  // min |p4(sample) - p4_center| over samples
  int n_above = 0;
  int n_below = 0;
};

// Empirically decide whether p is a local extremum of p4 on the surface by
// evaluating p4 at n_probe on-surface samples a distance ~radius from p.
// Works at smooth points (tangent-plane perturbations) and at the conical
// singular points (ambient perturbations reprojected to the surface).
// kLocalMin means every sample had p4 above p4(p). Throws
// DegenerateRegimeError when the surface near p has no 2-dimensional piece
// to sample (Empty / FivePoints regimes).
ProbeResult local_extremum_probe(const Point5& p, const SurfaceSpec& spec,
                                 double radius = 1e-3, int n_probe = 64,
                                 std::uint64_t seed = 0);

}  // namespace powsum
