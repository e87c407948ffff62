#include "powsum/surface.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace powsum {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::kEmpty: return "empty";
    case Regime::kFivePoints: return "five-points";
    case Regime::kSingularSurface: return "singular-surface";
    case Regime::kSmoothConnected: return "smooth-connected";
    case Regime::kSmoothFiveSpheres: return "smooth-five-spheres";
  }
  return "unknown";
}

double power_sum(const Point5& p, int k) {
  double total = 0.0;
  for (int i = 0; i < 5; ++i) {
    double term = 1.0;
    for (int j = 0; j < k; ++j) term *= p[i];
    total += term;
  }
  return total;
}

Eigen::Vector3d surface_residual(const Point5& p, const SurfaceSpec& spec) {
  return {power_sum(p, 1), power_sum(p, 2) - 1.0, power_sum(p, 3) - spec.c};
}

bool on_surface(const Point5& p, const SurfaceSpec& spec) {
  return surface_residual(p, spec).cwiseAbs().maxCoeff() <= spec.tol_surface;
}

Regime classify_regime(const SurfaceSpec& spec) {
  const double a = std::abs(spec.c);
  // Boundary windows take precedence over the strict inequalities.
  if (std::abs(a - kDegenerateLevel) <= kRegimeBoundaryTol) {
    return Regime::kFivePoints;
  }
  if (std::abs(a - kSingularLevel) <= kRegimeBoundaryTol) {
    return Regime::kSingularSurface;
  }
  if (a > kDegenerateLevel) return Regime::kEmpty;
  if (a > kSingularLevel) return Regime::kSmoothFiveSpheres;
  return Regime::kSmoothConnected;
}

int regime_component_count(Regime regime) {
  switch (regime) {
    case Regime::kEmpty: return 0;
    case Regime::kFivePoints: return 5;
    case Regime::kSingularSurface: return 1;
    case Regime::kSmoothConnected: return 1;
    case Regime::kSmoothFiveSpheres: return 5;
  }
  return 0;
}

std::vector<ValueCluster> cluster_coordinates(const Point5& p, double tol) {
  double sorted[5];
  for (int i = 0; i < 5; ++i) sorted[i] = p[i];
  std::sort(sorted, sorted + 5, std::greater<double>());

  std::vector<ValueCluster> clusters;
  double sum = sorted[0];
  int count = 1;
  for (int i = 1; i < 5; ++i) {
    if (sorted[i - 1] - sorted[i] <= tol) {
      sum += sorted[i];
      ++count;
    } else {
      clusters.push_back({sum / count, count});
      sum = sorted[i];
      count = 1;
    }
  }
  clusters.push_back({sum / count, count});
  return clusters;
}

int distinct_value_count(const Point5& p, const SurfaceSpec& spec) {
  return static_cast<int>(cluster_coordinates(p, spec.tol_distinct).size());
}

bool is_singular_surface_point(const Point5& p, const SurfaceSpec& spec) {
  return distinct_value_count(p, spec) < 3;
}

Eigen::Matrix<double, 3, 5> constraint_jacobian(const Point5& p) {
  Eigen::Matrix<double, 3, 5> jac;
  for (int i = 0; i < 5; ++i) {
    jac(0, i) = 1.0;
    jac(1, i) = 2.0 * p[i];
    jac(2, i) = 3.0 * p[i] * p[i];
  }
  return jac;
}

TangentFrame tangent_frame(const Point5& p, const SurfaceSpec& spec) {
  if (is_singular_surface_point(p, spec)) {
    throw SingularPointError(
        "tangent_frame: point has fewer than three distinct coordinates");
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 5>> svd(
      constraint_jacobian(p), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // With three distinct coordinate values the rows (1, 2x, 3x^2) form a
  // Vandermonde-type system of full rank, so this is defensive only.
  if (sv[2] < 1e-10 * std::max(1.0, sv[0])) {
    throw RankDeficientError("tangent_frame: constraint Jacobian rank < 3");
  }
  TangentFrame frame;
  frame.basis = svd.matrixV().rightCols<2>();
  return frame;
}

double stationarity_derivative(double w, const Multipliers& m) {
  return 12.0 * w * w - 6.0 * m.lambda3 * w - 2.0 * m.lambda2;
}

Eigen::Matrix2d projected_hessian(const Point5& p, const Multipliers& m,
                                  const TangentFrame& frame) {
  // Ambient Hessian of the Lagrangian is diagonal with entries P'(x_i), so
  // the projection is basis^T diag(P'(x_i)) basis.
  Point5 diag;
  for (int i = 0; i < 5; ++i) diag[i] = stationarity_derivative(p[i], m);
  Eigen::Matrix2d h =
      frame.basis.transpose() * diag.asDiagonal() * frame.basis;
  return 0.5 * (h + h.transpose());
}

std::array<double, 2> symmetric_eigenvalues_2x2(const Eigen::Matrix2d& h) {
  const double a = h(0, 0);
  const double d = h(1, 1);
  const double b = 0.5 * (h(0, 1) + h(1, 0));
  const double tr = a + d;
  const double gap = std::sqrt((a - d) * (a - d) + 4.0 * b * b);
  // Extract the larger-magnitude eigenvalue first, then recover the other
  // from the determinant to avoid cancellation.
  const double big = 0.5 * (tr + std::copysign(gap, tr));
  const double small = (big != 0.0) ? (a * d - b * b) / big : 0.0;
  if (small <= big) return {small, big};
  return {big, small};
}

int morse_index_from_hessian(const Eigen::Matrix2d& h, double tol_eig) {
  const auto eig = symmetric_eigenvalues_2x2(h);
  int negatives = 0;
  for (double e : eig) {
    if (std::abs(e) < tol_eig) {
      throw DegenerateRootError(
          "morse_index_from_hessian: eigenvalue too close to zero");
    }
    if (e < 0.0) ++negatives;
  }
  return negatives;
}

}  // namespace powsum
