#pragma once

// Topological consequences of the Morse counts: Euler characteristic, genus,
// a sampling-based connected-component estimate that does not look at the
// Morse data at all, and the sweep over c that locates the regime
// transitions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powsum/enumerate.hpp"

namespace powsum {

// chi = n_min - n_saddle + n_max. Counts must be nonnegative.
int euler_characteristic(int n_min, int n_saddle, int n_max);

// Genus of a closed orientable surface with n_components components:
// chi = 2*n_components - 2*genus. Throws InconsistentTopologyError when the
// genus would be negative or non-integral.
int genus(int chi, int n_components);

struct ComponentEstimate {
  int n_components = 0;
  int n_samples = 0;
  double epsilon = 0.0;
  double largest_component_fraction = 0.0;
};

// Estimate the number of connected components by sampling n_samples surface
// points and joining samples closer than epsilon (Euclidean, in R^5).
// Deterministic for fixed (spec, n_samples, epsilon, seed). FivePoints
// bypasses sampling and returns 5; Empty throws DegenerateRegimeError.
ComponentEstimate component_count(const SurfaceSpec& spec, int n_samples,
                                  double epsilon, std::uint64_t seed);

struct ProfileEntry {
  double p4_value = 0.0;
  int morse_index = 0;
  int multiplicity = 0;
};

// Critical values sorted ascending, entries with equal value (within 1e-12)
// and equal index merged. Smooth regimes only; otherwise WrongRegimeError.
std::vector<ProfileEntry> critical_value_profile(const SurfaceSpec& spec);

struct SweepRow {
  double c = 0.0;
  Regime regime = Regime::kEmpty;
  int n_orbits = 0;
  MorseCounts counts;
  int n_singular = 0;
  std::optional<int> euler_characteristic;
  std::optional<int> genus;
  std::vector<double> p4_values;  // distinct critical values, ascending
};

struct SweepTransition {
  double c_before = 0.0;
  double c_after = 0.0;
  std::string change;  // e.g. "smooth-connected -> singular-surface"
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepTransition> transitions;
};

// analyze() on the grid c = c_lo + k*step, k = 0..floor((c_hi-c_lo)/step),
// recording a transition at every pair of consecutive rows whose regime
// differs. Requires c_lo < c_hi and step > 0.
SweepResult sweep(double c_lo, double c_hi, double step,
                  double tol_surface = 1e-10, double tol_distinct = 1e-8);

}  // namespace powsum
