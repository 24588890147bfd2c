// Command-line front end: fixtures, violation constructions, randomized
// property suites and figure data.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "trient/errors.hpp"
#include "trient/harness.hpp"

namespace h = trient::harness;

int main(int argc, char** argv) {
  CLI::App app{"Triangle relations and area measures of tripartite entanglement"};
  app.require_subcommand(1);
  app.fallthrough();

  h::RunConfig cfg;
  std::optional<std::size_t> samples;
  std::optional<double> alpha, tolerance;
  std::optional<std::string> measure;
  std::string format = "json";
  std::string out_path;

  app.add_option("--seed", cfg.seed, "RNG seed (shard s uses seed + s)")->capture_default_str();
  app.add_option("--samples", samples, "Sample count or grid size (suite default when omitted)");
  app.add_option("--alpha", alpha, "Exponent alpha (command default when omitted)");
  app.add_option("--measure", measure, "Measure: W, C2, N2, S, T, R, I or the full name");
  app.add_option("--q", cfg.q, "Tsallis parameter")->capture_default_str();
  app.add_option("--tolerance", tolerance, "Override the main tolerance of a suite");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}))->capture_default_str();
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--threads", cfg.threads, "Worker threads, 0 = all cores (output does not depend on it)");

  auto* table1 = app.add_subcommand("table1", "Reference table of GMC and two area measures");
  auto* qudit = app.add_subcommand("qudit", "Saturating 4x2x2 fixture");

  std::string mode;
  auto* violations = app.add_subcommand("violations", "Monotonicity and triangle-relation violation constructions");
  violations->add_option("--mode", mode, "Construction")
      ->required()
      ->check(CLI::IsMember({"case1", "case2", "case3", "lemmaS2"}));

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "Randomized property suite");
  suite->add_option("name", suite_name, "Suite name")->required()->check(CLI::IsMember(h::suite_names()));

  std::string target;
  auto* figures = app.add_subcommand("figures", "CSV-ready figure data");
  figures->add_option("target", target, "Figure target")->required()->check(CLI::IsMember(h::figure_targets()));

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.samples = samples;
    cfg.alpha = alpha;
    cfg.tolerance = tolerance;
    if (measure) cfg.measure = trient::parse_measure_kind(*measure);

    h::Report report;
    if (*table1) {
      report = h::table1_report();
    } else if (*qudit) {
      report = h::qudit_report();
    } else if (*violations) {
      if (mode == "case1") report = h::case1_report(cfg);
      if (mode == "case2") report = h::case2_report(cfg);
      if (mode == "case3") report = h::case3_report(cfg);
      if (mode == "lemmaS2") report = h::lemma_s2_report(cfg);
    } else if (*suite) {
      report = h::run_suite(suite_name, cfg);
    } else if (*figures) {
      report = h::figure(target, cfg);
    }

    const std::string text = h::render(report, cfg, h::parse_format(format));
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw trient::ArgumentError("cannot open output file " + out_path);
      out << text;
    }
    return report.passed ? 0 : 1;
  } catch (const trient::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const trient::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
