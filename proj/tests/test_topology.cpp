#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "powsum/topology.hpp"

using powsum::SurfaceSpec;

TEST_CASE("Euler characteristic from Morse counts") {
  CHECK(powsum::euler_characteristic(30, 60, 20) == -10);
  CHECK(powsum::euler_characteristic(20, 30, 20) == 10);
  CHECK(powsum::euler_characteristic(0, 0, 0) == 0);
  CHECK_THROWS_AS(powsum::euler_characteristic(-1, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("genus closes the chi relation or throws") {
  CHECK(powsum::genus(-10, 1) == 6);
  CHECK(powsum::genus(10, 5) == 0);
  CHECK(powsum::genus(2, 1) == 0);
  CHECK(powsum::genus(0, 1) == 1);
  CHECK_THROWS_AS(powsum::genus(3, 1), powsum::InconsistentTopologyError);
  CHECK_THROWS_AS(powsum::genus(4, 1), powsum::InconsistentTopologyError);
  CHECK_THROWS_AS(powsum::genus(0, 0), std::invalid_argument);
}

TEST_CASE("sampled component count: one component at c = 0") {
  // 4000 samples put the p99 nearest-neighbor gap near 0.08, well under the
  // linking radius; fewer samples genuinely fragment the estimate.
  auto estimate =
      powsum::component_count(SurfaceSpec{.c = 0.0}, 4000, 0.2, 1u);
  CHECK(estimate.n_components == 1);
  CHECK(estimate.n_samples == 4000);
  CHECK(estimate.largest_component_fraction == doctest::Approx(1.0));
}

TEST_CASE("sampled component count: five spheres at c = 0.4") {
  // The five spheres sit ~0.84 apart at c = 0.4, so a 0.25 radius can never
  // bridge them while comfortably linking neighbors within one sphere.
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto estimate =
        powsum::component_count(SurfaceSpec{.c = 0.4}, 2000, 0.25, seed);
    CHECK(estimate.n_components == 5);
    // Components should share the samples roughly evenly.
    CHECK(estimate.largest_component_fraction > 0.1);
    CHECK(estimate.largest_component_fraction < 0.35);
  }
}

TEST_CASE("component count bypasses sampling at the five-point level") {
  auto estimate = powsum::component_count(
      SurfaceSpec{.c = powsum::kDegenerateLevel}, 20000, 0.15, 1u);
  CHECK(estimate.n_components == 5);
  CHECK(estimate.n_samples == 5);
}

TEST_CASE("component count input validation") {
  CHECK_THROWS_AS(powsum::component_count(SurfaceSpec{.c = 0.7}, 100, 0.15, 1u),
                  powsum::DegenerateRegimeError);
  CHECK_THROWS_AS(powsum::component_count(SurfaceSpec{.c = 0.0}, 0, 0.15, 1u),
                  std::invalid_argument);
  CHECK_THROWS_AS(powsum::component_count(SurfaceSpec{.c = 0.0}, 100, 0.0, 1u),
                  std::invalid_argument);
}

TEST_CASE("component count is deterministic and monotone in epsilon") {
  SurfaceSpec spec{.c = 0.4};
  auto a = powsum::component_count(spec, 1200, 0.15, 42u);
  auto b = powsum::component_count(spec, 1200, 0.15, 42u);
  CHECK(a.n_components == b.n_components);
  CHECK(a.largest_component_fraction == b.largest_component_fraction);

  // Larger epsilon can only merge clusters, never split them.
  auto tight = powsum::component_count(spec, 1200, 0.08, 42u);
  auto loose = powsum::component_count(spec, 1200, 0.4, 42u);
  CHECK(loose.n_components <= a.n_components);
  CHECK(a.n_components <= tight.n_components);
}

TEST_CASE("critical value profile at c = 0") {
  auto profile = powsum::critical_value_profile(SurfaceSpec{.c = 0.0});
  REQUIRE(profile.size() == 3);
  CHECK(profile[0].p4_value == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(profile[0].morse_index == 0);
  CHECK(profile[0].multiplicity == 30);
  // The two saddle orbits share the value 3/10 and merge.
  CHECK(profile[1].p4_value == doctest::Approx(0.3).epsilon(1e-13));
  CHECK(profile[1].morse_index == 1);
  CHECK(profile[1].multiplicity == 60);
  CHECK(profile[2].p4_value == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(profile[2].morse_index == 2);
  CHECK(profile[2].multiplicity == 20);
}

TEST_CASE("critical value profile at c = 0.4") {
  auto profile = powsum::critical_value_profile(SurfaceSpec{.c = 0.4});
  REQUIRE(profile.size() == 3);
  // Values ascend with the index here: min < saddle < max.
  CHECK(profile[0].morse_index == 0);
  CHECK(profile[1].morse_index == 1);
  CHECK(profile[2].morse_index == 2);
  CHECK(profile[0].multiplicity == 20);
  CHECK(profile[1].multiplicity == 30);
  CHECK(profile[2].multiplicity == 20);
  CHECK(profile[0].p4_value < profile[1].p4_value);
  CHECK(profile[1].p4_value < profile[2].p4_value);
  int total = 0;
  for (const auto& entry : profile) total += entry.multiplicity;
  CHECK(total == 70);
}

TEST_CASE("critical value profile needs a smooth regime") {
  CHECK_THROWS_AS(
      powsum::critical_value_profile(SurfaceSpec{.c = powsum::kSingularLevel}),
      powsum::WrongRegimeError);
  CHECK_THROWS_AS(powsum::critical_value_profile(SurfaceSpec{.c = 0.7}),
                  powsum::WrongRegimeError);
}

TEST_CASE("genus relation closes on a grid of smooth levels") {
  for (double c = -0.65; c <= 0.651; c += 0.01303) {
    auto report = powsum::analyze(SurfaceSpec{.c = c});
    if (!report.euler_characteristic) continue;
    const int n = powsum::regime_component_count(report.regime);
    CHECK(powsum::genus(*report.euler_characteristic, n) == *report.genus);
  }
}

TEST_CASE("sweep over the full interesting range") {
  auto result = powsum::sweep(-0.7, 0.7, 0.01);
  REQUIRE(result.rows.size() == 141);

  // Grid spacing is uniform.
  for (size_t k = 1; k < result.rows.size(); ++k) {
    CHECK(result.rows[k].c - result.rows[k - 1].c ==
          doctest::Approx(0.01).epsilon(1e-9));
  }

  // The middle row is snapped to c = 0 exactly and carries the full census.
  const auto& mid = result.rows[70];
  CHECK(mid.c == 0.0);
  CHECK(mid.regime == powsum::Regime::kSmoothConnected);
  CHECK(mid.n_orbits == 4);
  CHECK(mid.counts.n_min == 30);
  CHECK(mid.counts.n_saddle == 60);
  CHECK(mid.counts.n_max == 20);
  REQUIRE(mid.euler_characteristic.has_value());
  CHECK(*mid.euler_characteristic == -10);
  CHECK(*mid.genus == 6);
  REQUIRE(mid.p4_values.size() == 3);  // 0.25, 0.3 (deduped), 0.5
  CHECK(mid.p4_values[0] == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(mid.p4_values[1] == doctest::Approx(0.3).epsilon(1e-13));
  CHECK(mid.p4_values[2] == doctest::Approx(0.5).epsilon(1e-13));

  // Exactly four regime transitions, one per special level crossing.
  REQUIRE(result.transitions.size() == 4);
  const double levels[4] = {-powsum::kDegenerateLevel, -powsum::kSingularLevel,
                            powsum::kSingularLevel, powsum::kDegenerateLevel};
  for (int k = 0; k < 4; ++k) {
    const auto& tr = result.transitions[k];
    CHECK(tr.c_before < levels[k]);
    CHECK(tr.c_after > levels[k]);
    CHECK(tr.c_after - tr.c_before <= 0.01 + 1e-12);
  }
  CHECK(result.transitions[0].change == "empty -> smooth-five-spheres");
  CHECK(result.transitions[1].change ==
        "smooth-five-spheres -> smooth-connected");
  CHECK(result.transitions[2].change ==
        "smooth-connected -> smooth-five-spheres");
  CHECK(result.transitions[3].change == "smooth-five-spheres -> empty");
}

TEST_CASE("sweep rows in the empty regime are blank") {
  auto result = powsum::sweep(0.68, 0.7, 0.01);
  REQUIRE(result.rows.size() == 3);
  for (const auto& row : result.rows) {
    CHECK(row.regime == powsum::Regime::kEmpty);
    CHECK(row.n_orbits == 0);
    CHECK_FALSE(row.euler_characteristic.has_value());
    CHECK(row.p4_values.empty());
  }
  CHECK(result.transitions.empty());
}

TEST_CASE("sweep validates its arguments") {
  CHECK_THROWS_AS(powsum::sweep(0.5, -0.5, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(powsum::sweep(-0.5, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(powsum::sweep(-0.5, 0.5, -0.1), std::invalid_argument);
}
