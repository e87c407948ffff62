#include "powsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace powsum {

namespace {

// Cheap stateless stream splitter so every start index gets an independent,
// reproducible generator.
std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

Point5 sorted_descending(const Point5& p) {
  Point5 s = p;
  std::sort(s.data(), s.data() + 5, std::greater<double>());
  return s;
}

using Vector8 = Eigen::Matrix<double, 8, 1>;

KktState unpack(const Vector8& z) {
  KktState state;
  state.point = z.head<5>();
  state.multipliers = {z[5], z[6], z[7]};
  return state;
}

Vector8 pack(const KktState& state) {
  Vector8 z;
  z << state.point, state.multipliers.lambda1, state.multipliers.lambda2,
      state.multipliers.lambda3;
  return z;
}

}  // namespace

Eigen::Matrix<double, 8, 1> kkt_residual(const KktState& state,
                                         const SurfaceSpec& spec) {
  Vector8 f;
  const auto& m = state.multipliers;
  for (int i = 0; i < 5; ++i) {
    const double x = state.point[i];
    f[i] = 4.0 * x * x * x - 3.0 * m.lambda3 * x * x - 2.0 * m.lambda2 * x -
           m.lambda1;
  }
  f.tail<3>() = surface_residual(state.point, spec);
  return f;
}

Eigen::Matrix<double, 8, 8> kkt_jacobian(const KktState& state) {
  Eigen::Matrix<double, 8, 8> jac = Eigen::Matrix<double, 8, 8>::Zero();
  for (int i = 0; i < 5; ++i) {
    const double x = state.point[i];
    jac(i, i) = stationarity_derivative(x, state.multipliers);
    jac(i, 5) = -1.0;
    jac(i, 6) = -2.0 * x;
    jac(i, 7) = -3.0 * x * x;
  }
  jac.block<3, 5>(5, 0) = constraint_jacobian(state.point);
  return jac;
}

std::optional<KktState> newton_solve(const KktState& start,
                                     const SurfaceSpec& spec,
                                     const NewtonOptions& options) {
  Vector8 z = pack(start);
  for (int iter = 0; iter < options.max_iter; ++iter) {
    const Vector8 f = kkt_residual(unpack(z), spec);
    if (!f.allFinite()) return std::nullopt;
    const double norm0 = f.lpNorm<Eigen::Infinity>();
    if (norm0 < options.tol) return unpack(z);

    const Vector8 step = kkt_jacobian(unpack(z)).partialPivLu().solve(f);
    if (!step.allFinite()) return std::nullopt;

    // Backtrack until the residual actually drops.
    double alpha = 1.0;
    bool accepted = false;
    for (int h = 0; h <= options.max_halvings; ++h) {
      const Vector8 trial = z - alpha * step;
      const Vector8 ft = kkt_residual(unpack(trial), spec);
      if (ft.allFinite() && ft.lpNorm<Eigen::Infinity>() < norm0) {
        z = trial;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) return std::nullopt;
  }
  if (kkt_residual(unpack(z), spec).lpNorm<Eigen::Infinity>() < options.tol) {
    return unpack(z);
  }
  return std::nullopt;
}

Multipliers fit_multipliers(const Point5& p) {
  Eigen::Matrix<double, 5, 3> a;
  Eigen::Matrix<double, 5, 1> b;
  for (int i = 0; i < 5; ++i) {
    const double x = p[i];
    a(i, 0) = 1.0;
    a(i, 1) = 2.0 * x;
    a(i, 2) = 3.0 * x * x;
    b[i] = 4.0 * x * x * x;
  }
  const Eigen::Vector3d sol = a.colPivHouseholderQr().solve(b);
  return {sol[0], sol[1], sol[2]};
}

Point5 random_surface_point(const SurfaceSpec& spec, std::mt19937_64& rng) {
  const Regime regime = classify_regime(spec);
  if (regime == Regime::kEmpty || regime == Regime::kFivePoints) {
    throw DegenerateRegimeError(
        "random_surface_point: level has no 2-dimensional surface");
  }
  // Within 1e-9 of the degenerate level the spheres are too small for the
  // flow to hit reliably; refuse rather than loop.
  if (std::abs(std::abs(spec.c) - kDegenerateLevel) <= 1e-9) {
    throw DegenerateRegimeError(
        "random_surface_point: level too close to +-3/sqrt(20)");
  }

  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Point5 x;
    for (int i = 0; i < 5; ++i) x[i] = gauss(rng);
    x.array() -= x.mean();
    const double norm = x.norm();
    if (norm < 1e-8) continue;
    x /= norm;

    // Newton flow in p3 along its gradient projected to {p1 = 0, p2 = 1},
    // with retraction (re-center, re-normalize) after every step.
    bool hit = false;
    for (int it = 0; it < 200; ++it) {
      const double res = power_sum(x, 3) - spec.c;
      if (std::abs(res) < 1e-13) {
        hit = true;
        break;
      }
      Point5 g = (3.0 * x.array().square()).matrix();
      g.array() -= g.mean();
      g -= g.dot(x) * x;
      const double g2 = g.squaredNorm();
      if (g2 < 1e-14) break;  // stalled near a critical point of p3
      double step = -res / g2;
      const double glen = std::sqrt(g2);
      // Cap the move at arc length 0.25 to stay in the flow's basin.
      if (std::abs(step) * glen > 0.25) {
        step = std::copysign(0.25 / glen, step);
      }
      x += step * g;
      x.array() -= x.mean();
      x /= x.norm();
    }
    if (hit && on_surface(x, spec)) return x;
  }
  throw DegenerateRegimeError(
      "random_surface_point: sampling failed to reach the surface");
}

Point5 random_surface_point(const SurfaceSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_surface_point(spec, rng);
}

std::optional<Point5> project_to_surface(const Point5& ambient,
                                         const SurfaceSpec& spec, double tol,
                                         int max_iter) {
  Point5 x = ambient;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Eigen::Vector3d res = surface_residual(x, spec);
    if (res.cwiseAbs().maxCoeff() < tol) return x;
    const Eigen::Matrix<double, 3, 5> jac = constraint_jacobian(x);
    // Gauss-Newton least-norm update: dx = -J^T (J J^T)^-1 res.
    const Eigen::Matrix3d jjt = jac * jac.transpose();
    const Eigen::Vector3d y = jjt.ldlt().solve(res);
    if (!y.allFinite()) return std::nullopt;
    x -= jac.transpose() * y;
    if (!x.allFinite()) return std::nullopt;
  }
  if (surface_residual(x, spec).cwiseAbs().maxCoeff() < tol) return x;
  return std::nullopt;
}

VerificationReport multistart_verify(const SurfaceSpec& spec, int n_starts,
                                     std::uint64_t seed) {
  if (n_starts < 1) {
    throw std::invalid_argument("multistart_verify: n_starts must be >= 1");
  }
  const RegimeReport expected = analyze(spec);

  VerificationReport report;
  report.n_starts = n_starts;
  report.seed = seed;

  for (int i = 0; i < n_starts; ++i) {
    std::mt19937_64 rng(substream_seed(seed, static_cast<std::uint64_t>(i)));
    const Point5 x = random_surface_point(spec, rng);
    const KktState start{x, fit_multipliers(x)};
    const auto end = newton_solve(start, spec);
    if (!end) continue;
    ++report.n_converged;
    const double res =
        kkt_residual(*end, spec).lpNorm<Eigen::Infinity>();
    report.max_residual = std::max(report.max_residual, res);

    const Point5 sorted = sorted_descending(end->point);
    const CriticalOrbit* best = nullptr;
    double best_dist = 1e-7;  // matching tolerance on sorted coordinates
    for (const auto& orbit : expected.orbits) {
      const double dist =
          (sorted - orbit.representative).cwiseAbs().maxCoeff();
      if (dist <= best_dist) {
        best_dist = dist;
        best = &orbit;
      }
    }
    if (best != nullptr) {
      ++report.matched[orbit_key(*best)];
    } else {
      report.unmatched.push_back(*end);
    }
  }
  return report;
}

bool verification_clean(const VerificationReport& report,
                        const SurfaceSpec& spec, double residual_bound) {
  if (!report.unmatched.empty()) return false;
  if (report.n_converged == 0) return false;
  if (report.max_residual >= residual_bound) return false;
  const RegimeReport expected = analyze(spec);
  for (const auto& orbit : expected.orbits) {
    auto it = report.matched.find(orbit_key(orbit));
    if (it == report.matched.end() || it->second == 0) return false;
  }
  return true;
}

std::string to_string(ProbeVerdict verdict) {
  switch (verdict) {
    case ProbeVerdict::kLocalMin: return "local-min";
    case ProbeVerdict::kLocalMax: return "local-max";
    case ProbeVerdict::kNeither: return "neither";
  }
  return "?";
}

ProbeResult local_extremum_probe(const Point5& p, const SurfaceSpec& spec,
                                 double radius, int n_probe,
                                 std::uint64_t seed) {
  if (radius <= 0.0 || n_probe < 1) {
    throw std::invalid_argument("local_extremum_probe: bad radius or count");
  }
  const Regime regime = classify_regime(spec);
  if (regime == Regime::kEmpty || regime == Regime::kFivePoints) {
    throw DegenerateRegimeError(
        "local_extremum_probe: no 2-dimensional neighborhood to sample");
  }
  if (!on_surface(p, spec)) {
    throw Error("local_extremum_probe: point is not on the surface");
  }

  const bool smooth = !is_singular_surface_point(p, spec);
  std::optional<TangentFrame> frame;
  if (smooth) frame = tangent_frame(p, spec);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  ProbeResult out;
  out.p4_center = power_sum(p, 4);
  out.margin = std::numeric_limits<double>::infinity();

  int collected = 0;
  const int max_attempts = 200 * n_probe;
  for (int attempt = 0; attempt < max_attempts && collected < n_probe;
       ++attempt) {
    Point5 dir;
    if (smooth) {
      Eigen::Vector2d w(gauss(rng), gauss(rng));
      const double len = w.norm();
      if (len < 1e-12) continue;
      dir = frame->basis * (w / len);
    } else {
      // At a conical point there is no tangent plane; perturb in the
      // zero-sum hyperplane and let the projection find the cone.
      for (int i = 0; i < 5; ++i) dir[i] = gauss(rng);
      dir.array() -= dir.mean();
      const double len = dir.norm();
      if (len < 1e-12) continue;
      dir /= len;
    }
    const auto q = project_to_surface(p + radius * dir, spec);
    if (!q) continue;
    const double dist = (*q - p).norm();
    if (dist < 0.05 * radius || dist > 3.0 * radius) continue;
    ++collected;
    const double delta = power_sum(*q, 4) - out.p4_center;
    if (delta > 0.0) {
      ++out.n_above;
    } else {
      ++out.n_below;
    }
    out.margin = std::min(out.margin, std::abs(delta));
  }
  if (collected < n_probe) {
    throw Error("local_extremum_probe: could not collect enough samples");
  }
  if (out.n_below == 0) {
    out.verdict = ProbeVerdict::kLocalMin;
  } else if (out.n_above == 0) {
    out.verdict = ProbeVerdict::kLocalMax;
  } else {
    out.verdict = ProbeVerdict::kNeither;
  }
  return out;
}

}  // namespace powsum
