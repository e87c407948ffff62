#pragma once

// Geometry of the level surface
//
//   V_c = { x in R^5 : p1(x) = 0, p2(x) = 1, p3(x) = c },   p_k = sum_i x_i^k,
//
// together with the constraint-aware linear algebra every other module leans
// on: power sums, regime classification in c, tangent frames from the
// constraint Jacobian, and the Hessian of the Lagrangian projected to the
// tangent plane.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "powsum/errors.hpp"

namespace powsum {

using Point5 = Eigen::Matrix<double, 5, 1>;

// The two levels of |c| where the family changes character:
// at |c| = kSingularLevel the surface acquires ten conical double points,
// at |c| = kDegenerateLevel it collapses to five isolated points, and beyond
// that it is empty.
inline const double kSingularLevel = 1.0 / std::sqrt(30.0);
inline const double kDegenerateLevel = 3.0 / std::sqrt(20.0);

// Absolute half-width of the window around the two special levels inside
// which classify_regime reports the boundary regime rather than a generic
// one.
inline constexpr double kRegimeBoundaryTol = 1e-12;

struct SurfaceSpec {
  double c = 0.0;
  double tol_surface = 1e-10;   // max |constraint residual| to count as on-surface
  double tol_distinct = 1e-8;   // coordinate clustering tolerance
};

enum class Regime {
  kEmpty,             // |c| > 3/sqrt(20): no real points
  kFivePoints,        // |c| = 3/sqrt(20): five isolated points
  kSingularSurface,   // |c| = 1/sqrt(30): connected surface with 10 nodes
  kSmoothConnected,   // |c| < 1/sqrt(30): smooth, one component, genus 6
  kSmoothFiveSpheres, // 1/sqrt(30) < |c| < 3/sqrt(20): five disjoint spheres
};

std::string to_string(Regime regime);

struct Multipliers {
  double lambda1 = 0.0;  // multiplier of p1
  double lambda2 = 0.0;  // multiplier of p2
  double lambda3 = 0.0;  // multiplier of p3
};

// An orthonormal basis of the 2-dimensional tangent plane at a smooth
// surface point; columns are the basis vectors.
struct TangentFrame {
  Eigen::Matrix<double, 5, 2> basis;
};

// A maximal group of coordinates that agree to within tol_distinct.
struct ValueCluster {
  double value = 0.0;  // mean of the clustered coordinates
  int count = 0;
};

// p_k(x) = sum_i x_i^k for k >= 1.
double power_sum(const Point5& p, int k);

// (p1, p2 - 1, p3 - c): zero exactly on the surface.
Eigen::Vector3d surface_residual(const Point5& p, const SurfaceSpec& spec);

// All three residuals within spec.tol_surface.
bool on_surface(const Point5& p, const SurfaceSpec& spec);

// Which member of the family the level c selects. Levels within
// kRegimeBoundaryTol of +-kSingularLevel or +-kDegenerateLevel classify as
// the boundary regimes.
Regime classify_regime(const SurfaceSpec& spec);

// Number of connected components each regime implies (Empty gives 0,
// FivePoints gives 5 isolated points counted as 5).
int regime_component_count(Regime regime);

// Coordinates grouped into clusters of values closer than tol; clusters are
// returned sorted by value, descending. Cluster counts always sum to 5.
std::vector<ValueCluster> cluster_coordinates(const Point5& p, double tol);

// Number of clusters under spec.tol_distinct.
int distinct_value_count(const Point5& p, const SurfaceSpec& spec);

// True when fewer than three coordinate values are distinct; those are
// exactly the points where the surface fails to be smooth.
bool is_singular_surface_point(const Point5& p, const SurfaceSpec& spec);

// Rows are the gradients of p1, p2, p3 at p: [1; 2x_i; 3x_i^2].
Eigen::Matrix<double, 3, 5> constraint_jacobian(const Point5& p);

// Orthonormal basis of the null space of the constraint Jacobian, computed
// from a full SVD. Throws SingularPointError when p has fewer than three
// distinct coordinates and RankDeficientError when the Jacobian has
// numerical rank below 3.
TangentFrame tangent_frame(const Point5& p, const SurfaceSpec& spec);

// Derivative of the stationarity polynomial,
//   P'(w) = 12 w^2 - 6 lambda3 w - 2 lambda2.
// The ambient Hessian of the Lagrangian is diag(P'(x_i)), so this is the
// only scalar the projected Hessian needs.
double stationarity_derivative(double w, const Multipliers& m);

// The 2x2 symmetric matrix  H[r][s] = sum_i P'(x_i) V_ir V_is  where V is
// the frame basis: the Hessian of p4 restricted to the surface, expressed in
// the frame.
Eigen::Matrix2d projected_hessian(const Point5& p, const Multipliers& m,
                                  const TangentFrame& frame);

// Eigenvalues of a symmetric 2x2 matrix in ascending order, by the closed
// form for the characteristic polynomial (no iterative solver).
std::array<double, 2> symmetric_eigenvalues_2x2(const Eigen::Matrix2d& h);

// Morse index at a nondegenerate critical point: the number of negative
// eigenvalues of the projected Hessian. Throws DegenerateRootError if an
// eigenvalue is within tol_eig of zero.
int morse_index_from_hessian(const Eigen::Matrix2d& h, double tol_eig = 1e-9);

}  // namespace powsum
