#include <cmath>

#include "common.hpp"
#include "trient/errors.hpp"
#include "trient/hybrid.hpp"
#include "trient/locc.hpp"

namespace trient::harness {

namespace {

void append(Report& r, Json& rows, std::vector<std::string> cells, Json values) {
  r.table.add_row(std::move(cells));
  rows.push_back(std::move(values));
}

Report convexity_profiles(const RunConfig& cfg) {
  std::vector<MeasureKind> kinds = {MeasureKind::VonNeumann, MeasureKind::Tsallis, MeasureKind::Renyi2};
  if (cfg.measure) kinds = {*cfg.measure};
  const std::vector<double> alphas = cfg.alpha ? std::vector<double>{*cfg.alpha} : std::vector<double>{1.2, 1.5, 2.0};
  constexpr int kSteps = 400;

  Report r;
  r.command = "figures";
  r.table.header = {"measure", "alpha", "lambda", "sign_value", "scaled"};
  Json rows = Json::array();
  bool positive_near_zero = true;
  for (MeasureKind kind : kinds) {
    for (double alpha : alphas) {
      const MeasureSpec spec{kind, alpha, cfg.q};
      spec.validate();
      double scale = 1.0;
      if (spec.effective_kind() == MeasureKind::VonNeumann) scale = 1.0 / (2.0 * alpha - 1.0);
      if (spec.effective_kind() == MeasureKind::Tsallis) scale = 1.0 / (cfg.q - 1.0);
      for (int i = 1; i < kSteps / 2; ++i) {
        const double lambda = static_cast<double>(i) / kSteps;
        const double v = convexity_sign(spec, lambda);
        if (i == 1 && alpha > 1.0 && !(v > 0.0)) positive_near_zero = false;
        append(r, rows, {describe(spec), fmt(alpha), fmt(lambda), fmt(v), fmt(v * scale)},
               Json::array({describe(spec), alpha, lambda, v, v * scale}));
      }
    }
  }
  r.data["columns"] = r.table.header;
  r.data["rows"] = std::move(rows);
  r.data["positive_near_zero"] = positive_near_zero;
  r.passed = positive_near_zero;
  return r;
}

Report case2_profiles(const RunConfig& cfg) {
  std::vector<MeasureKind> kinds = {MeasureKind::ConcurrenceSquared, MeasureKind::SchmidtWeight,
                                    MeasureKind::VonNeumann, MeasureKind::Renyi2, MeasureKind::Tsallis};
  if (cfg.measure) kinds = {*cfg.measure};
  const std::vector<double> alphas = cfg.alpha ? std::vector<double>{*cfg.alpha} : std::vector<double>{0.6, 0.75, 0.9};
  constexpr double kBeta = 1e-8;
  constexpr int kSteps = 100;

  Report r;
  r.command = "figures";
  r.table.header = {"measure", "alpha", "p2", "L", "H"};
  Json rows = Json::array();
  bool negative = true;
  for (MeasureKind kind : kinds) {
    for (double alpha : alphas) {
      const MeasureSpec spec{kind, alpha, cfg.q};
      ViolationProbe probe{spec, kBeta, {}};
      for (int i = 0; i <= kSteps; ++i) probe.p2_grid.push_back(0.9 + 0.1 * i / kSteps);
      const Case2Profile profile = case2_profile(probe);
      const MeasureSpec unit = spec.with_alpha(1.0);
      for (const ProfilePoint& pt : profile.points) {
        // Positive rescaling that keeps the curves on a common scale.
        double k = 1.0;
        const double e = measure_of_lambda(unit, 2.0 * kBeta / pt.p2);
        switch (spec.effective_kind()) {
          case MeasureKind::SchmidtWeight: k = 1.0 / (2.0 * alpha - 1.0); break;
          case MeasureKind::VonNeumann: k = 2.0 / (2.0 * alpha - 1.0); break;
          case MeasureKind::Renyi2: k = std::pow(e, 2.0 * alpha + 1.0); break;
          case MeasureKind::Tsallis: k = std::pow(e, 2.0 * alpha + 1.0) / (cfg.q - 1.0); break;
          default: break;
        }
        const double h = pt.value * k;
        negative = negative && pt.value < 0.0;
        append(r, rows, {describe(spec), fmt(alpha), fmt(pt.p2), fmt(pt.value), fmt(h)},
               Json::array({describe(spec), alpha, pt.p2, pt.value, h}));
      }
    }
  }
  r.data["beta"] = kBeta;
  r.data["columns"] = r.table.header;
  r.data["rows"] = std::move(rows);
  r.data["negative_on_interval"] = negative;
  r.passed = negative;
  return r;
}

Report hybrid_surface(const RunConfig& cfg) {
  const int n = static_cast<int>(cfg.samples.value_or(50));
  const double alpha = cfg.alpha.value_or(0.5);
  const double tol = cfg.tolerance.value_or(1e-10);
  const HybridSweep sweep = hybrid_area_sweep(n, -2.0, 2.0, alpha, true);

  Report r;
  r.command = "figures";
  r.table.header = {"alpha1", "alpha2", "impurity_a", "impurity_b", "impurity_c", "area"};
  Json rows = Json::array();
  for (const auto& p : sweep.points) {
    append(r, rows,
           {fmt(p.alpha1), fmt(p.alpha2), fmt(p.impurity[0]), fmt(p.impurity[1]), fmt(p.impurity[2]), fmt(p.area)},
           Json::array({p.alpha1, p.alpha2, p.impurity[0], p.impurity[1], p.impurity[2], p.area}));
  }
  r.data["alpha"] = alpha;
  r.data["columns"] = r.table.header;
  r.data["rows"] = std::move(rows);
  r.data["max_diagonal_area"] = sweep.max_diagonal_area();
  r.passed = sweep.max_diagonal_area() <= tol;
  return r;
}

}  // namespace

const std::vector<std::string>& figure_targets() {
  static const std::vector<std::string> targets = {"convexity-profiles", "case2-profiles", "hybrid-surface"};
  return targets;
}

Report figure(std::string_view target, const RunConfig& cfg) {
  if (target == "convexity-profiles") return convexity_profiles(cfg);
  if (target == "case2-profiles") return case2_profiles(cfg);
  if (target == "hybrid-surface") return hybrid_surface(cfg);
  throw ArgumentError("unknown figure target '" + std::string(target) + "'");
}

}  // namespace trient::harness
