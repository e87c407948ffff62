#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "powsum/report.hpp"

using powsum::ReportDocument;
using powsum::SurfaceSpec;

namespace {

ReportDocument full_document() {
  SurfaceSpec spec{.c = 0.0};
  ReportDocument doc;
  doc.command = "verify";
  doc.regime_report = powsum::analyze(spec);
  doc.verification = powsum::multistart_verify(spec, 60, 21u);
  doc.components = powsum::component_count(spec, 600, 0.4, 4u);
  doc.summary = powsum::summary_line(doc.regime_report);
  return doc;
}

}  // namespace

TEST_CASE("summary lines for every regime") {
  CHECK(powsum::summary_line(powsum::analyze(SurfaceSpec{.c = 0.0})) ==
        "110 critical points: 30 min / 60 saddle / 20 max; chi=-10; genus=6");
  CHECK(powsum::summary_line(powsum::analyze(SurfaceSpec{.c = 0.4})) ==
        "70 critical points: 20 min / 30 saddle / 20 max; chi=10; genus=0");
  CHECK(powsum::summary_line(
            powsum::analyze(SurfaceSpec{.c = powsum::kSingularLevel})) ==
        "50 smooth critical points: 0 min / 30 saddle / 20 max; plus 10 "
        "conical singular points");
  CHECK(powsum::summary_line(
            powsum::analyze(SurfaceSpec{.c = powsum::kDegenerateLevel})) ==
        "surface degenerates to 5 isolated points (p4 = 0.65 each)");
  CHECK(powsum::summary_line(powsum::analyze(SurfaceSpec{.c = 0.7})) ==
        "empty surface: no critical points");
}

TEST_CASE("JSON document round-trips losslessly") {
  const ReportDocument doc = full_document();
  const nlohmann::json j = powsum::to_json(doc);
  const std::string text = j.dump();
  const ReportDocument back =
      powsum::report_from_json(nlohmann::json::parse(text));

  CHECK(back.schema == doc.schema);
  CHECK(back.command == doc.command);
  CHECK(back.summary == doc.summary);

  // Spec and regime.
  CHECK(back.regime_report.spec.c == doc.regime_report.spec.c);
  CHECK(back.regime_report.spec.tol_surface == doc.regime_report.spec.tol_surface);
  CHECK(back.regime_report.spec.tol_distinct == doc.regime_report.spec.tol_distinct);
  CHECK(back.regime_report.regime == doc.regime_report.regime);

  // Orbits: every double must survive bit-for-bit.
  REQUIRE(back.regime_report.orbits.size() == doc.regime_report.orbits.size());
  for (size_t k = 0; k < doc.regime_report.orbits.size(); ++k) {
    const auto& a = doc.regime_report.orbits[k];
    const auto& b = back.regime_report.orbits[k];
    CHECK(a.pattern == b.pattern);
    CHECK(a.t == b.t);
    CHECK((a.representative - b.representative).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.multipliers.lambda1 == b.multipliers.lambda1);
    CHECK(a.multipliers.lambda2 == b.multipliers.lambda2);
    CHECK(a.multipliers.lambda3 == b.multipliers.lambda3);
    CHECK(a.p4_value == b.p4_value);
    CHECK(a.crit_class == b.crit_class);
    CHECK(a.multiplicity == b.multiplicity);
  }

  CHECK(back.regime_report.counts.n_min == doc.regime_report.counts.n_min);
  CHECK(back.regime_report.counts.n_saddle == doc.regime_report.counts.n_saddle);
  CHECK(back.regime_report.counts.n_max == doc.regime_report.counts.n_max);
  CHECK(back.regime_report.n_singular == doc.regime_report.n_singular);
  CHECK(back.regime_report.euler_characteristic ==
        doc.regime_report.euler_characteristic);
  CHECK(back.regime_report.genus == doc.regime_report.genus);
  CHECK(back.regime_report.notes == doc.regime_report.notes);

  // Verification section.
  REQUIRE(back.verification.has_value());
  CHECK(back.verification->n_starts == doc.verification->n_starts);
  CHECK(back.verification->n_converged == doc.verification->n_converged);
  CHECK(back.verification->seed == doc.verification->seed);
  CHECK(back.verification->max_residual == doc.verification->max_residual);
  CHECK(back.verification->matched == doc.verification->matched);
  CHECK(back.verification->unmatched.size() == doc.verification->unmatched.size());

  // Component section.
  REQUIRE(back.components.has_value());
  CHECK(back.components->n_components == doc.components->n_components);
  CHECK(back.components->n_samples == doc.components->n_samples);
  CHECK(back.components->epsilon == doc.components->epsilon);
  CHECK(back.components->largest_component_fraction ==
        doc.components->largest_component_fraction);
}

TEST_CASE("JSON omits undefined chi and genus") {
  ReportDocument doc;
  doc.command = "analyze";
  doc.regime_report = powsum::analyze(SurfaceSpec{.c = powsum::kSingularLevel});
  doc.summary = powsum::summary_line(doc.regime_report);
  auto j = powsum::to_json(doc);
  CHECK_FALSE(j.contains("euler_characteristic"));
  CHECK_FALSE(j.contains("genus"));
  CHECK_FALSE(j.contains("verification"));
  CHECK_FALSE(j.contains("components"));
  CHECK(j.at("n_singular").get<int>() == 10);

  auto back = powsum::report_from_json(j);
  CHECK_FALSE(back.regime_report.euler_characteristic.has_value());
  CHECK_FALSE(back.verification.has_value());
}

TEST_CASE("text rendering mentions the essentials") {
  const ReportDocument doc = full_document();
  const std::string text = powsum::render_text(doc);
  CHECK(text.find("smooth-connected") != std::string::npos);
  CHECK(text.find("summary: 110 critical points") != std::string::npos);
  CHECK(text.find("[221]") != std::string::npos);
  CHECK(text.find("[311]") != std::string::npos);
  CHECK(text.find("verification:") != std::string::npos);
  CHECK(text.find("components: 1 ") != std::string::npos);
  CHECK(text.find("notes:") != std::string::npos);
}

TEST_CASE("sweep CSV layout") {
  auto result = powsum::sweep(-0.2, 0.2, 0.1);
  std::ostringstream out;
  powsum::write_sweep_csv(result, out);
  const std::string csv = out.str();

  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "c,regime,n_orbits,n_min,n_saddle,n_max,chi,genus,p4_values");
  int rows = 0;
  std::string c0_row;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.rfind("0,", 0) == 0) c0_row = line;
  }
  CHECK(rows == 5);
  CHECK(c0_row == "0,smooth-connected,4,30,60,20,-10,6,0.25;0.3;0.5");
}

TEST_CASE("sweep CSV leaves chi and genus blank when undefined") {
  auto result = powsum::sweep(0.68, 0.7, 0.01);
  std::ostringstream out;
  powsum::write_sweep_csv(result, out);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);  // header
  std::getline(lines, line);
  CHECK(line == "0.68,empty,0,0,0,0,,,");
}
