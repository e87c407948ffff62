#include "powsum/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "powsum/verify.hpp"

namespace powsum {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(int i, int j) { parent[find(i)] = find(j); }
};

}  // namespace

int euler_characteristic(int n_min, int n_saddle, int n_max) {
  if (n_min < 0 || n_saddle < 0 || n_max < 0) {
    throw std::invalid_argument(
        "euler_characteristic: counts must be nonnegative");
  }
  return n_min - n_saddle + n_max;
}

int genus(int chi, int n_components) {
  if (n_components < 1) {
    throw std::invalid_argument("genus: need at least one component");
  }
  const int doubled = 2 * n_components - chi;
  if (doubled < 0 || doubled % 2 != 0) {
    throw InconsistentTopologyError(
        "genus: chi and component count admit no integer genus >= 0");
  }
  return doubled / 2;
}

ComponentEstimate component_count(const SurfaceSpec& spec, int n_samples,
                                  double epsilon, std::uint64_t seed) {
  if (n_samples < 1 || epsilon <= 0.0) {
    throw std::invalid_argument("component_count: bad sample count or epsilon");
  }
  const Regime regime = classify_regime(spec);
  if (regime == Regime::kEmpty) {
    throw DegenerateRegimeError("component_count: surface is empty");
  }
  if (regime == Regime::kFivePoints) {
    // Nothing to sample: the five isolated points are the components.
    return {5, 5, epsilon, 0.2};
  }

  std::vector<Point5> points;
  points.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    points.push_back(random_surface_point(
        spec, splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i)))));
  }

  // Join samples closer than epsilon. Sorting by the first coordinate keeps
  // the pair scan to a window of width epsilon.
  std::vector<int> order(n_samples);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return points[i][0] < points[j][0];
  });

  DisjointSets dsu(n_samples);
  const double eps2 = epsilon * epsilon;
  for (int a = 0; a < n_samples; ++a) {
    const Point5& pa = points[order[a]];
    for (int b = a + 1; b < n_samples; ++b) {
      const Point5& pb = points[order[b]];
      if (pb[0] - pa[0] >= epsilon) break;
      if ((pa - pb).squaredNorm() < eps2) dsu.unite(order[a], order[b]);
    }
  }

  std::vector<int> sizes(n_samples, 0);
  for (int i = 0; i < n_samples; ++i) ++sizes[dsu.find(i)];
  int components = 0;
  int largest = 0;
  for (int s : sizes) {
    if (s > 0) {
      ++components;
      largest = std::max(largest, s);
    }
  }
  return {components, n_samples, epsilon,
          static_cast<double>(largest) / n_samples};
}

std::vector<ProfileEntry> critical_value_profile(const SurfaceSpec& spec) {
  const Regime regime = classify_regime(spec);
  if (regime != Regime::kSmoothConnected &&
      regime != Regime::kSmoothFiveSpheres) {
    throw WrongRegimeError(
        "critical_value_profile: defined for smooth regimes only");
  }
  const RegimeReport report = analyze(spec);
  std::vector<ProfileEntry> entries;
  for (const auto& orbit : report.orbits) {
    entries.push_back(
        {orbit.p4_value, morse_index(orbit.crit_class), orbit.multiplicity});
  }
  std::sort(entries.begin(), entries.end(),
            [](const ProfileEntry& x, const ProfileEntry& y) {
              if (x.p4_value != y.p4_value) return x.p4_value < y.p4_value;
              return x.morse_index < y.morse_index;
            });
  std::vector<ProfileEntry> merged;
  for (const auto& entry : entries) {
    if (!merged.empty() &&
        std::abs(entry.p4_value - merged.back().p4_value) < 1e-12 &&
        entry.morse_index == merged.back().morse_index) {
      merged.back().multiplicity += entry.multiplicity;
      continue;
    }
    merged.push_back(entry);
  }
  return merged;
}

SweepResult sweep(double c_lo, double c_hi, double step, double tol_surface,
                  double tol_distinct) {
  if (!(c_lo < c_hi) || step <= 0.0) {
    throw std::invalid_argument("sweep: need c_lo < c_hi and step > 0");
  }
  // The +1e-9 guards against losing the last grid point to rounding in the
  // division.
  const int n_rows =
      static_cast<int>(std::floor((c_hi - c_lo) / step + 1e-9)) + 1;

  SweepResult result;
  result.rows.reserve(n_rows);
  for (int k = 0; k < n_rows; ++k) {
    double c = c_lo + k * step;
    if (std::abs(c) < 1e-12) c = 0.0;  // snap accumulated error at the origin
    const RegimeReport report = analyze(
        SurfaceSpec{.c = c, .tol_surface = tol_surface,
                    .tol_distinct = tol_distinct});
    SweepRow row;
    row.c = c;
    row.regime = report.regime;
    row.n_orbits = static_cast<int>(report.orbits.size());
    row.counts = report.counts;
    row.n_singular = report.n_singular;
    row.euler_characteristic = report.euler_characteristic;
    row.genus = report.genus;
    for (const auto& orbit : report.orbits) {
      row.p4_values.push_back(orbit.p4_value);
    }
    std::sort(row.p4_values.begin(), row.p4_values.end());
    row.p4_values.erase(
        std::unique(row.p4_values.begin(), row.p4_values.end(),
                    [](double x, double y) { return std::abs(x - y) < 1e-12; }),
        row.p4_values.end());
    result.rows.push_back(std::move(row));
  }

  for (size_t k = 1; k < result.rows.size(); ++k) {
    const auto& prev = result.rows[k - 1];
    const auto& cur = result.rows[k];
    if (prev.regime != cur.regime) {
      result.transitions.push_back(
          {prev.c, cur.c,
           to_string(prev.regime) + " -> " + to_string(cur.regime)});
    }
  }
  return result;
}

}  // namespace powsum
