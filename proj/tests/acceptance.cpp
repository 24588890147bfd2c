// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "trient/harness.hpp"
#include "trient/hybrid.hpp"

using namespace trient;
using namespace trient::harness;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = out.ok;
  if (limit_seconds > 0 && secs >= limit_seconds) {
    ok = false;
    out.detail += " (over the " + fmt(limit_seconds) + " s limit)";
  }
  if (!ok) ++failures;
  std::printf("%s %s: %s [%.3f s]\n", ok ? "PASS" : "FAIL", name, out.detail.c_str(), secs);
  std::fflush(stdout);
}

Outcome suite_outcome(const char* suite, const RunConfig& cfg = {}) {
  const Report r = run_suite(suite, cfg);
  return {r.passed, std::string(suite) + " samples=" + r.data.at("samples").dump() +
                        " failures=" + r.data.at("failures").dump()};
}

}  // namespace

int main() {
  criterion("reference-table", 1.0, [] {
    const Report r = table1_report();
    return Outcome{r.passed, "max deviation " + r.data.at("max_deviation").dump()};
  });

  criterion("w-class-monotone-at-half", 0, [] {
    RunConfig cfg;
    cfg.alpha = 0.5;
    const Report r = case1_report(cfg);
    return Outcome{r.passed, "lambda deviation " + r.data.at("lambda_deviation").dump() + ", branch area " +
                                 r.data.at("area_before").dump() + " -> " + r.data.at("area_after_first_branch").dump() +
                                 ", min ensemble gap " + r.data.at("min_ensemble_gap").dump()};
  });

  criterion("alpha-one-reference-gaps", 0, [] {
    bool ok = true;
    std::string detail;
    for (MeasureKind k : {MeasureKind::SchmidtWeight, MeasureKind::ConcurrenceSquared, MeasureKind::VonNeumann}) {
      RunConfig cfg;
      cfg.measure = k;
      const auto t0 = std::chrono::steady_clock::now();
      const Report r = case3_report(cfg);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const bool fast = secs < 1.0;
      ok = ok && r.passed && fast;
      detail += std::string(to_string(k)) + " gap " + fmt(r.data.at("results").at(0).at("gap").get<double>()) +
                (fast ? "" : " (slow)") + "; ";
    }
    return Outcome{ok, detail};
  });

  criterion("triangle-holds", 60.0, [] { return suite_outcome("triangle-holds"); });
  criterion("strict-interior", 0, [] { return suite_outcome("strictness"); });

  criterion("violation-above-one", 0, [] {
    const Report r = lemma_s2_report(RunConfig{});
    double worst = -1e300;
    for (const Json& row : r.data.at("results")) {
      if (row.contains("slack")) worst = std::max(worst, row.at("slack").get<double>());
    }
    return Outcome{r.passed, "largest slack " + fmt(worst)};
  });

  criterion("monotonicity", 0, [] {
    const Outcome holds = suite_outcome("monotonicity");
    const Report r = case2_report(RunConfig{});
    double worst = -1e300;
    for (const Json& row : r.data.at("results")) {
      if (row.contains("gap")) worst = std::max(worst, row.at("gap").get<double>());
    }
    return Outcome{holds.ok && r.passed, holds.detail + "; violations between one half and one, largest gap " + fmt(worst)};
  });

  criterion("hessian-minors", 0, [] { return suite_outcome("hessian-minors"); });
  criterion("gaussian-determinants", 0, [] { return suite_outcome("gaussian-relations"); });

  criterion("hybrid-grid", 0, [] {
    const Outcome sweep = suite_outcome("hybrid-sweep");
    const HybridSweep s = hybrid_area_sweep(50, -2.0, 2.0, 0.5);
    double worst = 0.0;
    for (const HybridSweepPoint& p : s.points) {
      const double fock = oracle::fock_mode_impurity(p.alpha1, p.alpha2, 0.5, 0.5, 40);
      worst = std::max(worst, std::abs(p.impurity[2] - fock));
    }
    const bool ok = sweep.ok && worst <= 1e-10 && s.max_diagonal_area() <= 1e-10 && s.max_area() <= 0.5 + 1e-10;
    return Outcome{ok, sweep.detail + "; max area " + fmt(s.max_area()) + ", fock deviation " + fmt(worst)};
  });

  criterion("polygon", 0, [] { return suite_outcome("polygon"); });

  criterion("qudit-saturation", 0, [] {
    const Report r = qudit_report();
    return Outcome{r.passed, "entropies " + r.data.at("entropies").dump()};
  });

  criterion("bounds-sandwich", 0, [] { return suite_outcome("bounds-sandwich"); });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
