// Command line front end: analyze / verify / topology / sweep.
//
// Exit codes: 0 = success, 1 = a verification or cross-check failed,
// 2 = usage error (bad flags, or a level outside the command's domain).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "powsum/report.hpp"

namespace {

struct CommonOptions {
  double c = 0.0;
  double tol_surface = 1e-10;
  double tol_distinct = 1e-8;
  std::string format = "json";
};

powsum::SurfaceSpec to_spec(const CommonOptions& opts) {
  return {.c = opts.c, .tol_surface = opts.tol_surface,
          .tol_distinct = opts.tol_distinct};
}

void add_tolerance_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--tol-surface", opts.tol_surface,
                  "max |constraint residual| counted as on-surface")
      ->capture_default_str();
  cmd->add_option("--tol-distinct", opts.tol_distinct,
                  "coordinate clustering tolerance")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void emit(const powsum::ReportDocument& doc, const std::string& format) {
  if (format == "text") {
    std::cout << powsum::render_text(doc);
  } else {
    std::cout << powsum::to_json(doc).dump(2) << "\n";
  }
}

int run_analyze(const CommonOptions& opts, bool show_constants, bool have_c) {
  if (show_constants) {
    std::printf("singular-level    %.17g    (1/sqrt(30): conical points)\n",
                powsum::kSingularLevel);
    std::printf("degenerate-level  %.17g    (3/sqrt(20): five points)\n",
                powsum::kDegenerateLevel);
    if (!have_c) return 0;
  }
  if (!have_c) {
    std::cerr << "analyze: --c is required (or pass --show-constants)\n";
    return 2;
  }
  powsum::ReportDocument doc;
  doc.command = "analyze";
  doc.regime_report = powsum::analyze(to_spec(opts));
  doc.summary = powsum::summary_line(doc.regime_report);
  emit(doc, opts.format);
  return 0;
}

int run_verify(const CommonOptions& opts, int starts, std::uint64_t seed) {
  const powsum::SurfaceSpec spec = to_spec(opts);
  powsum::ReportDocument doc;
  doc.command = "verify";
  doc.regime_report = powsum::analyze(spec);
  doc.verification = powsum::multistart_verify(spec, starts, seed);
  doc.summary = powsum::summary_line(doc.regime_report);
  emit(doc, opts.format);
  return powsum::verification_clean(*doc.verification, spec) ? 0 : 1;
}

int run_topology(const CommonOptions& opts, int samples, double epsilon,
                 std::uint64_t seed) {
  const powsum::SurfaceSpec spec = to_spec(opts);
  powsum::ReportDocument doc;
  doc.command = "topology";
  doc.regime_report = powsum::analyze(spec);
  doc.components = powsum::component_count(spec, samples, epsilon, seed);
  doc.summary = powsum::summary_line(doc.regime_report);
  emit(doc, opts.format);

  // Cross-check: sampled components must match what the regime implies, and
  // where chi is defined the genus relation must close with the sampled
  // count.
  bool ok = doc.components->n_components ==
            powsum::regime_component_count(doc.regime_report.regime);
  if (ok && doc.regime_report.euler_characteristic) {
    const int g = powsum::genus(*doc.regime_report.euler_characteristic,
                                doc.components->n_components);
    ok = doc.regime_report.genus && g == *doc.regime_report.genus;
  }
  if (!ok) {
    std::cerr << "topology: sampled component count is inconsistent with the "
                 "Morse data\n";
  }
  return ok ? 0 : 1;
}

int run_sweep(const CommonOptions& opts, double from, double to, double step,
              const std::string& out_path) {
  const powsum::SweepResult result =
      powsum::sweep(from, to, step, opts.tol_surface, opts.tol_distinct);

  std::ostream* table = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "sweep: cannot open '" << out_path << "' for writing\n";
      return 2;
    }
    table = &file;
  }
  powsum::write_sweep_csv(result, *table);

  // Keep the human-readable part away from the CSV stream.
  std::ostream& info = out_path.empty() ? std::cerr : std::cout;
  info << "rows: " << result.rows.size() << "\n";
  info << "transitions: " << result.transitions.size() << "\n";
  for (const auto& tr : result.transitions) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "transition: %s between c=%.10g and c=%.10g\n",
                  tr.change.c_str(), tr.c_before, tr.c_after);
    info << buf;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical points of the fourth power sum on the surface "
               "p1 = 0, p2 = 1, p3 = c in R^5"};
  app.require_subcommand(1);

  CommonOptions opts;

  auto* analyze = app.add_subcommand(
      "analyze", "Closed-form census of critical orbits at one level");
  bool show_constants = false;
  auto* analyze_c = analyze->add_option(
      "--c", opts.c,
      "level of p3; the boundary regimes match |c| against 1/sqrt(30) and "
      "3/sqrt(20) to within 1e-12, so pass the full-precision constants from "
      "--show-constants to land on them");
  analyze->add_flag("--show-constants", show_constants,
                    "print the two special levels to full precision and exit");
  add_tolerance_options(analyze, opts);

  auto* verify = app.add_subcommand(
      "verify", "Multistart Newton cross-check of the census");
  verify->add_option("--c", opts.c, "level of p3")->required();
  int starts = 200;
  std::uint64_t verify_seed = 12345;
  verify->add_option("--starts", starts, "number of Newton starts")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "RNG seed")->capture_default_str();
  add_tolerance_options(verify, opts);

  auto* topology = app.add_subcommand(
      "topology", "Sampled component count checked against the Morse data");
  topology->add_option("--c", opts.c, "level of p3")->required();
  int samples = 20000;
  double epsilon = 0.15;
  std::uint64_t topo_seed = 1;
  topology->add_option("--samples", samples, "surface samples to draw")
      ->capture_default_str();
  topology->add_option("--epsilon", epsilon, "linking distance")
      ->capture_default_str();
  topology->add_option("--seed", topo_seed, "RNG seed")->capture_default_str();
  add_tolerance_options(topology, opts);

  auto* sweep = app.add_subcommand(
      "sweep", "CSV census over a grid of levels, locating transitions");
  double from = -0.7, to = 0.7, step = 0.01;
  sweep->add_option("--lo,--from", from, "first level")->capture_default_str();
  sweep->add_option("--hi,--to", to, "last level")->capture_default_str();
  sweep->add_option("--step", step, "grid spacing")->capture_default_str();
  std::string out_path;
  sweep->add_option("-o,--out", out_path, "CSV output path (default: stdout)");
  add_tolerance_options(sweep, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      return run_analyze(opts, show_constants, analyze_c->count() > 0);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(opts, starts, verify_seed);
    }
    if (app.got_subcommand(topology)) {
      return run_topology(opts, samples, epsilon, topo_seed);
    }
    if (app.got_subcommand(sweep)) {
      return run_sweep(opts, from, to, step, out_path);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const powsum::DegenerateRegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const powsum::WrongRegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const powsum::InconsistentTopologyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
