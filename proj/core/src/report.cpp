#include "powsum/report.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace powsum {

namespace {

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

Regime regime_from_string(const std::string& s) {
  for (Regime r : {Regime::kEmpty, Regime::kFivePoints,
                   Regime::kSingularSurface, Regime::kSmoothConnected,
                   Regime::kSmoothFiveSpheres}) {
    if (to_string(r) == s) return r;
  }
  throw Error("report: unknown regime tag '" + s + "'");
}

Pattern pattern_from_string(const std::string& s) {
  for (Pattern p : {Pattern::k221, Pattern::k311, Pattern::k32, Pattern::k41}) {
    if (to_string(p) == s) return p;
  }
  throw Error("report: unknown pattern tag '" + s + "'");
}

CritClass class_from_string(const std::string& s) {
  for (CritClass c : {CritClass::kMinimum, CritClass::kSaddle,
                      CritClass::kMaximum, CritClass::kSingular,
                      CritClass::kIsolated}) {
    if (to_string(c) == s) return c;
  }
  throw Error("report: unknown class tag '" + s + "'");
}

nlohmann::json point_to_json(const Point5& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < 5; ++i) arr.push_back(p[i]);
  return arr;
}

Point5 point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 5) {
    throw Error("report: point must be an array of five numbers");
  }
  Point5 p;
  for (int i = 0; i < 5; ++i) p[i] = j[i].get<double>();
  return p;
}

nlohmann::json multipliers_to_json(const Multipliers& m) {
  return {{"lambda1", m.lambda1},
          {"lambda2", m.lambda2},
          {"lambda3", m.lambda3}};
}

Multipliers multipliers_from_json(const nlohmann::json& j) {
  return {j.at("lambda1").get<double>(), j.at("lambda2").get<double>(),
          j.at("lambda3").get<double>()};
}

nlohmann::json orbit_to_json(const CriticalOrbit& orbit) {
  return {{"pattern", to_string(orbit.pattern)},
          {"t", orbit.t},
          {"representative", point_to_json(orbit.representative)},
          {"multipliers", multipliers_to_json(orbit.multipliers)},
          {"p4", orbit.p4_value},
          {"class", to_string(orbit.crit_class)},
          {"morse_index", morse_index(orbit.crit_class)},
          {"multiplicity", orbit.multiplicity},
          {"key", orbit_key(orbit)}};
}

CriticalOrbit orbit_from_json(const nlohmann::json& j) {
  CriticalOrbit orbit;
  orbit.pattern = pattern_from_string(j.at("pattern").get<std::string>());
  orbit.t = j.at("t").get<double>();
  orbit.representative = point_from_json(j.at("representative"));
  orbit.multipliers = multipliers_from_json(j.at("multipliers"));
  orbit.p4_value = j.at("p4").get<double>();
  orbit.crit_class = class_from_string(j.at("class").get<std::string>());
  orbit.multiplicity = j.at("multiplicity").get<int>();
  return orbit;
}

nlohmann::json verification_to_json(const VerificationReport& v) {
  nlohmann::json matched = nlohmann::json::object();
  for (const auto& [key, count] : v.matched) matched[key] = count;
  nlohmann::json unmatched = nlohmann::json::array();
  for (const auto& state : v.unmatched) {
    unmatched.push_back({{"point", point_to_json(state.point)},
                         {"multipliers",
                          multipliers_to_json(state.multipliers)}});
  }
  return {{"n_starts", v.n_starts},
          {"n_converged", v.n_converged},
          {"seed", v.seed},
          {"max_residual", v.max_residual},
          {"matched", matched},
          {"unmatched", unmatched}};
}

VerificationReport verification_from_json(const nlohmann::json& j) {
  VerificationReport v;
  v.n_starts = j.at("n_starts").get<int>();
  v.n_converged = j.at("n_converged").get<int>();
  v.seed = j.at("seed").get<std::uint64_t>();
  v.max_residual = j.at("max_residual").get<double>();
  for (const auto& [key, count] : j.at("matched").items()) {
    v.matched[key] = count.get<int>();
  }
  for (const auto& item : j.at("unmatched")) {
    v.unmatched.push_back({point_from_json(item.at("point")),
                           multipliers_from_json(item.at("multipliers"))});
  }
  return v;
}

nlohmann::json components_to_json(const ComponentEstimate& c) {
  return {{"n_components", c.n_components},
          {"n_samples", c.n_samples},
          {"epsilon", c.epsilon},
          {"largest_component_fraction", c.largest_component_fraction}};
}

ComponentEstimate components_from_json(const nlohmann::json& j) {
  return {j.at("n_components").get<int>(), j.at("n_samples").get<int>(),
          j.at("epsilon").get<double>(),
          j.at("largest_component_fraction").get<double>()};
}

}  // namespace

std::string summary_line(const RegimeReport& report) {
  switch (report.regime) {
    case Regime::kEmpty:
      return "empty surface: no critical points";
    case Regime::kFivePoints: {
      const double p4 =
          report.orbits.empty() ? 0.0 : report.orbits.front().p4_value;
      return fmt("surface degenerates to 5 isolated points (p4 = %.10g each)",
                 p4);
    }
    case Regime::kSingularSurface:
      return fmt(
          "%d smooth critical points: %d min / %d saddle / %d max; plus %d "
          "conical singular points",
          report.counts.total(), report.counts.n_min, report.counts.n_saddle,
          report.counts.n_max, report.n_singular);
    default:
      return fmt("%d critical points: %d min / %d saddle / %d max; chi=%d; "
                 "genus=%d",
                 report.counts.total(), report.counts.n_min,
                 report.counts.n_saddle, report.counts.n_max,
                 report.euler_characteristic.value_or(0),
                 report.genus.value_or(0));
  }
}

nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json j;
  j["schema"] = doc.schema;
  j["command"] = doc.command;
  j["spec"] = {{"c", doc.regime_report.spec.c},
               {"tol_surface", doc.regime_report.spec.tol_surface},
               {"tol_distinct", doc.regime_report.spec.tol_distinct}};
  j["regime"] = to_string(doc.regime_report.regime);
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& orbit : doc.regime_report.orbits) {
    orbits.push_back(orbit_to_json(orbit));
  }
  j["orbits"] = orbits;
  j["counts"] = {{"min", doc.regime_report.counts.n_min},
                 {"saddle", doc.regime_report.counts.n_saddle},
                 {"max", doc.regime_report.counts.n_max}};
  j["n_singular"] = doc.regime_report.n_singular;
  if (doc.regime_report.euler_characteristic) {
    j["euler_characteristic"] = *doc.regime_report.euler_characteristic;
  }
  if (doc.regime_report.genus) j["genus"] = *doc.regime_report.genus;
  j["notes"] = doc.regime_report.notes;
  if (doc.verification) j["verification"] = verification_to_json(*doc.verification);
  if (doc.components) j["components"] = components_to_json(*doc.components);
  j["summary"] = doc.summary;
  return j;
}

ReportDocument report_from_json(const nlohmann::json& j) {
  ReportDocument doc;
  doc.schema = j.at("schema").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  doc.regime_report.spec.c = j.at("spec").at("c").get<double>();
  doc.regime_report.spec.tol_surface =
      j.at("spec").at("tol_surface").get<double>();
  doc.regime_report.spec.tol_distinct =
      j.at("spec").at("tol_distinct").get<double>();
  doc.regime_report.regime = regime_from_string(j.at("regime").get<std::string>());
  for (const auto& item : j.at("orbits")) {
    doc.regime_report.orbits.push_back(orbit_from_json(item));
  }
  doc.regime_report.counts.n_min = j.at("counts").at("min").get<int>();
  doc.regime_report.counts.n_saddle = j.at("counts").at("saddle").get<int>();
  doc.regime_report.counts.n_max = j.at("counts").at("max").get<int>();
  doc.regime_report.n_singular = j.at("n_singular").get<int>();
  if (j.contains("euler_characteristic")) {
    doc.regime_report.euler_characteristic =
        j.at("euler_characteristic").get<int>();
  }
  if (j.contains("genus")) doc.regime_report.genus = j.at("genus").get<int>();
  doc.regime_report.notes =
      j.at("notes").get<std::vector<std::string>>();
  if (j.contains("verification")) {
    doc.verification = verification_from_json(j.at("verification"));
  }
  if (j.contains("components")) {
    doc.components = components_from_json(j.at("components"));
  }
  doc.summary = j.at("summary").get<std::string>();
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream out;
  const auto& rr = doc.regime_report;
  out << "powsum " << doc.command << "  (c = " << fmt("%.10g", rr.spec.c)
      << ", regime = " << to_string(rr.regime) << ")\n";
  if (!rr.orbits.empty()) {
    out << "orbits:\n";
    for (const auto& orbit : rr.orbits) {
      out << "  [" << to_string(orbit.pattern) << "] "
          << fmt("t=%+.10f  class=%-8s  n=%-3d  p4=%.12g", orbit.t,
                 to_string(orbit.crit_class).c_str(), orbit.multiplicity,
                 orbit.p4_value)
          << "  values:";
      for (const auto& cluster :
           cluster_coordinates(orbit.representative, rr.spec.tol_distinct)) {
        out << fmt(" %+.10f x%d", cluster.value, cluster.count);
      }
      out << "\n";
    }
  }
  out << "summary: " << doc.summary << "\n";
  if (doc.verification) {
    const auto& v = *doc.verification;
    out << fmt("verification: %d/%d starts converged (seed %llu), "
               "max residual %.3e, %zu unmatched\n",
               v.n_converged, v.n_starts,
               static_cast<unsigned long long>(v.seed), v.max_residual,
               v.unmatched.size());
    for (const auto& [key, count] : v.matched) {
      out << fmt("  %-44s hits %d\n", key.c_str(), count);
    }
  }
  if (doc.components) {
    const auto& c = *doc.components;
    out << fmt("components: %d (from %d samples, epsilon %.3g, largest "
               "fraction %.3f)\n",
               c.n_components, c.n_samples, c.epsilon,
               c.largest_component_fraction);
  }
  if (!rr.notes.empty()) {
    out << "notes:\n";
    for (const auto& note : rr.notes) out << "  - " << note << "\n";
  }
  return out.str();
}

void write_sweep_csv(const SweepResult& sweep, std::ostream& out) {
  out << "c,regime,n_orbits,n_min,n_saddle,n_max,chi,genus,p4_values\n";
  for (const auto& row : sweep.rows) {
    out << fmt("%.10g,%s,%d,%d,%d,%d,", row.c,
               to_string(row.regime).c_str(), row.n_orbits, row.counts.n_min,
               row.counts.n_saddle, row.counts.n_max);
    if (row.euler_characteristic) out << *row.euler_characteristic;
    out << ',';
    if (row.genus) out << *row.genus;
    out << ',';
    for (size_t i = 0; i < row.p4_values.size(); ++i) {
      if (i > 0) out << ';';
      out << fmt("%.10g", row.p4_values[i]);
    }
    out << '\n';
  }
}

}  // namespace powsum
