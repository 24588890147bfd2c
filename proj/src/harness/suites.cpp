#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "common.hpp"
#include "trient/errors.hpp"
#include "trient/gaussian.hpp"
#include "trient/hybrid.hpp"
#include "trient/triangle.hpp"

namespace trient::harness {

using detail::amplitudes_json;
using detail::kMaxCounterexamples;
using detail::measurement_json;
using detail::run_sharded;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// One row of a suite summary: a (measure, alpha) pair or a named check.
struct Group {
  std::string label;
  double alpha = 0.0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Smallest observed margin; the meaning is suite specific.
  double min_value = kInf;

  void observe(double value, bool failed) {
    ++checks;
    if (failed) ++failures;
    min_value = std::min(min_value, value);
  }
};

struct ShardResult {
  std::vector<Group> groups;
  Json counterexamples = Json::array();
  std::size_t skipped = 0;

  void dump(Json ce) {
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(ce));
  }
};

ShardResult merge(const std::vector<ShardResult>& shards) {
  ShardResult out;
  out.groups = shards.front().groups;
  for (auto& g : out.groups) {
    g.checks = g.failures = 0;
    g.min_value = kInf;
  }
  for (const auto& s : shards) {
    for (std::size_t i = 0; i < out.groups.size(); ++i) {
      out.groups[i].checks += s.groups[i].checks;
      out.groups[i].failures += s.groups[i].failures;
      out.groups[i].min_value = std::min(out.groups[i].min_value, s.groups[i].min_value);
    }
    for (const auto& ce : s.counterexamples) {
      if (out.counterexamples.size() < kMaxCounterexamples) out.counterexamples.push_back(ce);
    }
    out.skipped += s.skipped;
  }
  return out;
}

Json replay_json(std::uint64_t seed, std::size_t shard, std::size_t index) {
  return Json{{"seed", seed}, {"shard", shard}, {"shard_seed", derive_seed(seed, shard)}, {"index", index}};
}

std::vector<MeasureSpec> suite_measures(const RunConfig& cfg) {
  if (cfg.measure) {
    MeasureSpec s{*cfg.measure, 1.0, cfg.q};
    s.validate();
    return {s};
  }
  return qubit_measure_set(1.0, cfg.q);
}

std::vector<double> suite_alphas(const RunConfig& cfg, std::vector<double> defaults) {
  if (cfg.alpha) return {*cfg.alpha};
  return defaults;
}

std::vector<Group> measure_alpha_groups(const std::vector<MeasureSpec>& measures, const std::vector<double>& alphas) {
  std::vector<Group> groups;
  for (const auto& m : measures) {
    for (double a : alphas) groups.push_back(Group{std::string(to_string(m.kind)), a});
  }
  return groups;
}

/// Fills the report from merged groups; `value_name` titles min_value.
Report finish(std::string_view suite, const ShardResult& merged, const std::string& value_name, std::size_t samples,
              Json extra = Json::object()) {
  Report r;
  r.command = "suite";
  r.table.header = {"group", "alpha", "checks", "failures", value_name};
  Json groups = Json::array();
  std::size_t failures = 0;
  for (const auto& g : merged.groups) {
    failures += g.failures;
    const double shown = std::isfinite(g.min_value) ? g.min_value : std::numeric_limits<double>::quiet_NaN();
    groups.push_back(Json{{"group", g.label},
                          {"alpha", g.alpha},
                          {"checks", g.checks},
                          {"failures", g.failures},
                          {value_name, std::isfinite(shown) ? Json(shown) : Json(nullptr)}});
    r.table.add_row({g.label, fmt(g.alpha), fmt(g.checks), fmt(g.failures), fmt(shown)});
  }
  r.data = std::move(extra);
  r.data["suite"] = std::string(suite);
  r.data["samples"] = samples;
  r.data["groups"] = std::move(groups);
  r.data["failures"] = failures;
  r.data["skipped"] = merged.skipped;
  r.data["counterexamples"] = merged.counterexamples;
  r.passed = failures == 0;
  return r;
}

// --- triangle relation ------------------------------------------------------

Report suite_triangle_holds(const RunConfig& cfg) {
  const std::size_t n = cfg.samples.value_or(10000);
  const double tol = cfg.tolerance.value_or(kSlackTolerance);
  const auto measures = suite_measures(cfg);
  const auto alphas = suite_alphas(cfg, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});
  const auto shards = run_sharded<ShardResult>(n, cfg.seed, cfg.threads, [&](std::size_t shard, Rng& rng, std::size_t b, std::size_t e) {
    ShardResult res;
    res.groups = measure_alpha_groups(measures, alphas);
    for (std::size_t i = b; i < e; ++i) {
      const PureState psi = haar_state({2, 2, 2}, rng);
      for (std::size_t m = 0; m < measures.size(); ++m) {
        const BipartitionVector v = bipartition_vector(psi, measures[m]);
        for (std::size_t a = 0; a < alphas.size(); ++a) {
          const double slack = triangle_check_sides(v.powered(alphas[a])).min_slack();
          const bool failed = slack < -tol;
          res.groups[m * alphas.size() + a].observe(slack, failed);
          if (failed) {
            res.dump(Json{{"replay", replay_json(cfg.seed, shard, i - b)},
                          {"measure", describe(measures[m])},
                          {"alpha", alphas[a]},
                          {"slack", slack},
                          {"state", amplitudes_json(psi)}});
          }
        }
      }
    }
    return res;
  });
  return finish("triangle-holds", merge(shards), "min_slack", n, Json{{"tolerance", tol}});
}

Report suite_strictness(const RunConfig& cfg) {
  const std::size_t n = cfg.samples.value_or(10000);
  constexpr double kEntangled = 1e-3;
  const auto measures = suite_measures(cfg);
  const auto alphas = suite_alphas(cfg, {0.1, 0.3, 0.5, 0.7, 0.9});
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) throw ArgumentError("strictness needs 0 < alpha < 1");
  }
  const auto shards = run_sharded<ShardResult>(n, cfg.seed, cfg.threads, [&](std::size_t shard, Rng& rng, std::size_t b, std::size_t e) {
    ShardResult res;
    res.groups = measure_alpha_groups(measures, alphas);
    for (std::size_t i = b; i < e; ++i) {
      const PureState psi = haar_state({2, 2, 2}, rng);
      const auto lambdas = local_lambdas(psi);
      if (*std::min_element(lambdas.begin(), lambdas.end()) <= kEntangled) {
        ++res.skipped;
        continue;
      }
      for (std::size_t m = 0; m < measures.size(); ++m) {
        const BipartitionVector v = bipartition_vector(psi, measures[m]);
        for (std::size_t a = 0; a < alphas.size(); ++a) {
          const double slack = triangle_check_sides(v.powered(alphas[a])).min_slack();
          const bool saturated = !(slack > 0.0);
          res.groups[m * alphas.size() + a].observe(slack, saturated);
          if (saturated) {
            res.dump(Json{{"replay", replay_json(cfg.seed, shard, i - b)},
                          {"measure", describe(measures[m])},
                          {"alpha", alphas[a]},
                          {"slack", slack},
                          {"state", amplitudes_json(psi)}});
          }
        }
      }
    }
    return res;
  });
  return finish("strictness", merge(shards), "min_slack", n, Json{{"entangled_threshold", kEntangled}});
}

Report suite_non_obtuse(const RunConfig& cfg) {
  const std::size_t n = cfg.samples.value_or(10000);
  const double tol = cfg.tolerance.value_or(kSlackTolerance);
  const auto measures = suite_measures(cfg);
  const auto alphas = suite_alphas(cfg, {0.1, 0.2, 0.3, 0.4, 0.5});
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 0.5)) throw ArgumentError("non-obtuse needs 0 < alpha <= 1/2");
  }
  const auto shards = run_sharded<ShardResult>(n, cfg.seed, cfg.threads, [&](std::size_t shard, Rng& rng, std::size_t b, std::size_t e) {
    ShardResult res;
    res.groups = measure_alpha_groups(measures, alphas);
    for (std::size_t i = b; i < e; ++i) {
      const PureState psi = haar_state({2, 2, 2}, rng);
      for (std::size_t m = 0; m < measures.size(); ++m) {
        const BipartitionVector v = bipartition_vector(psi, measures[m]);
        for (std::size_t a = 0; a < alphas.size(); ++a) {
          const TriangleReport t = triangle_area_sides(v.powered(alphas[a]), false);
          if (!t.cosines) {
            ++res.skipped;
            continue;
          }
          const double min_cos = std::min({(*t.cosines)[0], (*t.cosines)[1], (*t.cosines)[2]});
          const bool failed = min_cos < -tol;
          res.groups[m * alphas.size() + a].observe(min_cos, failed);
          if (failed) {
            res.dump(Json{{"replay", replay_json(cfg.seed, shard, i - b)},
                          {"measure", describe(measures[m])},
                          {"alpha", alphas[a]},
                          {"min_cosine", min_cos},
                          {"state", amplitudes_json(psi)}});
          }
        }
      }
    }
    return res;
  });
  return finish("non-obtuse", merge(shards), "min_cosine", n, Json{{"tolerance", tol}});
}

// --- LOCC monotonicity ------------------------------------------------------

Report suite_monotonicity(const RunConfig& cfg) {
  const std::size_t n = cfg.samples.value_or(1000);
  constexpr std::size_t kMeasurementsPerState = 10;
  const double tol = cfg.tolerance.value_or(1e-9);
  const auto measures = suite_measures(cfg);
  const auto alphas = suite_alphas(cfg, {0.25, 0.5});
  const auto shards = run_sharded<ShardResult>(n, cfg.seed, cfg.threads, [&](std::size_t shard, Rng& rng, std::size_t b, std::size_t e) {
    ShardResult res;
    res.groups = measure_alpha_groups(measures, alphas);
    std::uniform_int_distribution<int> party(0, 2);
    for (std::size_t i = b; i < e; ++i) {
      const PureState psi = haar_state({2, 2, 2}, rng);
      for (std::size_t k = 0; k < kMeasurementsPerState; ++k) {
        const int p = party(rng);
        const LocalMeasurement meas(p, random_two_outcome_measurement(rng));
        for (std::size_t m = 0; m < measures.size(); ++m) {
          for (std::size_t a = 0; a < alphas.size(); ++a) {
            const MonotonicityGap g = monotonicity_gap(psi, meas, measures[m].with_alpha(alphas[a]));
            const double gap = g.gap.value_or(-kInf);
            const bool failed = gap < -tol;
            res.groups[m * alphas.size() + a].observe(gap, failed);
            if (failed) {
              res.dump(Json{{"replay", replay_json(cfg.seed, shard, i - b)},
                            {"measurement_index", k},
                            {"measure", describe(measures[m])},
                            {"alpha", alphas[a]},
                            {"gap", g.gap ? Json(*g.gap) : Json(nullptr)},
                            {"state", amplitudes_json(psi)},
                            {"measurement", measurement_json(meas)}});
            }
          }
        }
      }
    }
    return res;
  });
  return finish("monotonicity", merge(shards), "min_gap", n,
                Json{{"tolerance", tol}, {"measurements_per_state", kMeasurementsPerState}});
}

// --- Gaussian ----------------------------------------------------------------

Report suite_gaussian(const RunConfig& cfg) {
  const std::size_t n = cfg.samples.value_or(1000);
  const double tol = cfg.tolerance.value_or(1e-10);
  constexpr double kRelTol = 1e-8;
  enum { Purity, Complement, Product, ImpurityTriangle, RenyiTriangle, Chain, kChecks };
  const auto make_groups = [] {
    return std::vector<Group>{{"purity"}, {"complement-determinants"}, {"determinant-products"},
                              {"impurity-triangle"}, {"renyi2-triangle"}, {"impurity-chain"}};
  };
  const auto shards = run_sharded<ShardResult>(n, cfg.seed, cfg.threads, [&](std::size_t shard, Rng& rng, std::size_t b, std::size_t e) {
    ShardResult res;
    res.groups = make_groups();
    for (std::size_t i = b; i < e; ++i) {
      const GaussianCovariance cm = random_pure_tripartite_cm({1, 1, 1}, rng);
      std::array<double, kChecks> margin{};
      std::array<bool, kChecks> failed{};
      try {
        const GaussianDetReport d = gaussian_det_relations(cm);
        margin[Purity] = kRelTol - std::abs(d.det_total - 1.0);
        margin[Complement] = kRelTol - *std::max_element(d.complement_residual.begin(), d.complement_residual.end());
        margin[Product] = kInf;
        margin[ImpurityTriangle] = margin[RenyiTriangle] = kInf;
        margin[Chain] = *std::min_element(d.impurity_chain_slack.begin(), d.impurity_chain_slack.end());
        for (std::size_t k = 0; k < 3; ++k) {
          const std::size_t j = (k + 1) % 3, l = (k + 2) % 3;
          margin[Product] = std::min(margin[Product], d.product_slack[k] / d.det_single[k]);
          margin[ImpurityTriangle] = std::min(margin[ImpurityTriangle], d.impurity[j] + d.impurity[l] - d.impurity[k]);
          margin[RenyiTriangle] = std::min(margin[RenyiTriangle], d.renyi2[j] + d.renyi2[l] - d.renyi2[k]);
        }
        failed[Purity] = margin[Purity] < 0.0;
        failed[Complement] = !d.complements_equal(kRelTol);
        failed[Product] = !d.products_hold(kRelTol);
        failed[ImpurityTriangle] = !d.impurity_triangle_holds(tol);
        failed[RenyiTriangle] = !d.renyi2_triangle_holds(tol);
        failed[Chain] = !d.impurity_chain_holds(tol);
      } catch (const ValidationError&) {
        margin.fill(-kInf);
        failed.fill(true);
      }
      bool any = false;
      for (std::size_t k = 0; k < kChecks; ++k) {
        res.groups[k].observe(margin[k], failed[k]);
        any = any || failed[k];
      }
      if (any) {
        Json sigma = Json::array();
        for (Eigen::Index r = 0; r < cm.sigma().rows(); ++r) {
          Json row = Json::array();
          for (Eigen::Index c = 0; c < cm.sigma().cols(); ++c) row.push_back(cm.sigma()(r, c));
          sigma.push_back(std::move(row));
        }
        res.dump(Json{{"replay", replay_json(cfg.seed, shard, i - b)}, {"sigma", std::move(sigma)}});
      }
    }
    return res;
  });
  return finish("gaussian-relations", merge(shards), "min_margin", n,
                Json{{"tolerance", tol}, {"relative_tolerance", kRelTol}, {"modes", {1, 1, 1}}});
}

// --- hybrid -----------------------------------------------------------------

Report suite_hybrid(const RunConfig& cfg) {
  const int n = static_cast<int>(cfg.samples.value_or(50));
  const double alpha = cfg.alpha.value_or(0.5);
  const double tol = cfg.tolerance.value_or(kSlackTolerance);
  constexpr double kBound = 0.5;
  const HybridSweep sweep = hybrid_area_sweep(n, -2.0, 2.0, alpha, true);

  ShardResult res;
  res.groups = {{"diagonal-area", alpha}, {"area-bound", alpha}, {"impurity-triangle", alpha}, {"exchange-symmetry", alpha}};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& p = sweep.points[static_cast<std::size_t>(i * n + j)];
      const auto& q = sweep.points[static_cast<std::size_t>(j * n + i)];
      if (i == j) res.groups[0].observe(tol - p.area, p.area > tol);
      res.groups[1].observe(kBound + tol - p.area, p.area > kBound + tol);
      res.groups[2].observe(p.min_slack, !p.triangle_holds);
      const double asym = std::abs(p.area - q.area);
      res.groups[3].observe(tol - asym, asym > tol);
      if (p.area > kBound + tol || !p.triangle_holds || (i == j && p.area > tol)) {
        res.dump(Json{{"alpha1", p.alpha1}, {"alpha2", p.alpha2}, {"impurity", p.impurity}, {"area", p.area}});
      }
    }
  }
  return finish("hybrid-sweep", res, "min_margin", static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                Json{{"tolerance", tol},
                     {"grid", {{"points_per_axis", n}, {"lo", -2.0}, {"hi", 2.0}}},
                     {"normalized", true},
                     {"max_area", sweep.max_area()},
                     {"max_diagonal_area", sweep.max_diagonal_area()}});
}

// --- polygon ----------------------------------------------------------------

Report suite_polygon(const RunConfig& cfg) {
  const std::size_t n = cfg.samples.value_or(1000);
  const MeasureSpec spec{cfg.measure.value_or(MeasureKind::Impurity), cfg.alpha.value_or(1.0), cfg.q};
  const double tol = cfg.tolerance.value_or(kSlackTolerance);
  const std::array<std::size_t, 2> parties{4, 5};
  const auto shards = run_sharded<ShardResult>(n, cfg.seed, cfg.threads, [&](std::size_t shard, Rng& rng, std::size_t b, std::size_t e) {
    ShardResult res;
    for (std::size_t np : parties) res.groups.push_back(Group{std::to_string(np) + "-qubit", spec.alpha});
    for (std::size_t i = b; i < e; ++i) {
      for (std::size_t g = 0; g < parties.size(); ++g) {
        const PureState psi = haar_state(std::vector<int>(parties[g], 2), rng);
        const PolygonCheck c = polygon_check(psi, spec);
        const double slack = *std::min_element(c.slack.begin(), c.slack.end());
        const bool failed = slack < -tol;
        res.groups[g].observe(slack, failed);
        if (failed) {
          res.dump(Json{{"replay", replay_json(cfg.seed, shard, i - b)},
                        {"parties", parties[g]},
                        {"slack", slack},
                        {"state", amplitudes_json(psi)}});
        }
      }
    }
    return res;
  });
  return finish("polygon", merge(shards), "min_slack", n, Json{{"tolerance", tol}, {"measure", describe(spec)}});
}

// --- Hessian ----------------------------------------------------------------

Report suite_hessian(const RunConfig& cfg) {
  const std::size_t n = cfg.samples.value_or(1000);
  constexpr double kMinorTol = 1e-12;
  constexpr double kDetTol = 1e-9;
  constexpr double kMinArea = 1e-6;
  struct HessianShard {
    ShardResult res;
    double closed_form_mismatch = 0.0;
  };
  const auto shards = run_sharded<HessianShard>(n, cfg.seed, cfg.threads, [&](std::size_t shard, Rng& rng, std::size_t b, std::size_t e) {
    HessianShard out;
    ShardResult& res = out.res;
    res.groups = {{"D1<=0"}, {"D2>=0"}, {"D3=0"}, {"det-side-coordinates>0"}};
    for (std::size_t i = b; i < e; ++i) {
      std::array<double, 3> sides{};
      do {
        for (double& s : sides) s = uniform(rng, 0.0, 1.0);
      } while (!triangle_check_sides(sides).all() ||
               area_from_squared_sides({sides[0] * sides[0], sides[1] * sides[1], sides[2] * sides[2]}) < kMinArea);
      const std::array<double, 3> x{sides[0] * sides[0], sides[1] * sides[1], sides[2] * sides[2]};
      const HessianReport sq = hessian_minors(x, HessianCoordinates::E2Alpha);
      const HessianReport lin = hessian_minors(sides, HessianCoordinates::EAlpha);
      out.closed_form_mismatch = std::max(out.closed_form_mismatch, lin.det_relative);
      const std::array<double, 4> margin{-sq.minors[0], sq.minors[1], kDetTol - sq.det_relative, lin.det_h};
      const std::array<bool, 4> failed{sq.minors[0] > kMinorTol, sq.minors[1] < -kMinorTol, sq.det_relative > kDetTol,
                                       !(lin.det_h > 0.0)};
      bool any = false;
      for (std::size_t k = 0; k < margin.size(); ++k) {
        res.groups[k].observe(margin[k], failed[k]);
        any = any || failed[k];
      }
      if (any) {
        res.dump(Json{{"replay", replay_json(cfg.seed, shard, i - b)},
                      {"sides", sides},
                      {"minors", sq.minors},
                      {"det_relative", sq.det_relative},
                      {"det_side_coordinates", lin.det_h}});
      }
    }
    return out;
  });
  std::vector<ShardResult> parts;
  double mismatch = 0.0;
  for (const auto& s : shards) {
    parts.push_back(s.res);
    mismatch = std::max(mismatch, s.closed_form_mismatch);
  }
  // The closed-form determinant is informational: its relative agreement
  // degrades like 1/A^2 on needle triangles.
  return finish("hessian-minors", merge(parts), "min_margin", n,
                Json{{"minor_tolerance", kMinorTol},
                     {"determinant_tolerance", kDetTol},
                     {"min_area", kMinArea},
                     {"max_closed_form_relative_mismatch", mismatch}});
}

// --- bounds -----------------------------------------------------------------

Report suite_bounds(const RunConfig& cfg) {
  const std::size_t n = cfg.samples.value_or(10000);
  const double alpha = cfg.alpha.value_or(0.5);
  const double tol = cfg.tolerance.value_or(kSlackTolerance);
  constexpr double kGmcTol = 1e-12;
  const auto measures = suite_measures(cfg);
  const auto shards = run_sharded<ShardResult>(n, cfg.seed, cfg.threads, [&](std::size_t shard, Rng& rng, std::size_t b, std::size_t e) {
    ShardResult res;
    res.groups = measure_alpha_groups(measures, {alpha});
    res.groups.push_back(Group{"gmc-reduction", 0.25});
    const MeasureSpec c2{MeasureKind::ConcurrenceSquared, 1.0};
    for (std::size_t i = b; i < e; ++i) {
      const PureState psi = haar_state({2, 2, 2}, rng);
      for (std::size_t m = 0; m < measures.size(); ++m) {
        const BipartitionVector v = bipartition_vector(psi, measures[m]);
        const TriangleReport t = triangle_area(v, alpha, false);
        const AreaBounds bounds = area_bounds(v, alpha);
        const double margin = t.valid() ? std::min(t.area - bounds.lower, bounds.upper - t.area) : -kInf;
        const bool failed = margin < -tol;
        res.groups[m].observe(margin, failed);
        if (failed) {
          res.dump(Json{{"replay", replay_json(cfg.seed, shard, i - b)},
                        {"measure", describe(measures[m])},
                        {"area", t.area},
                        {"lower", bounds.lower},
                        {"upper", bounds.upper},
                        {"state", amplitudes_json(psi)}});
        }
      }
      // At alpha = 1/4 the squared-concurrence lower bound is (sqrt3/4) GMC.
      const double reduced = kAreaNormalization * area_bounds(bipartition_vector(psi, c2), 0.25).lower;
      const BipartitionVector conc = concurrence_vector(psi);
      const double min_conc = std::min({conc.values[0], conc.values[1], conc.values[2]});
      const double dev = std::max(std::abs(reduced - min_conc), std::abs(gmc(psi) - min_conc));
      const bool failed = dev > kGmcTol;
      res.groups.back().observe(kGmcTol - dev, failed);
      if (failed) {
        res.dump(Json{{"replay", replay_json(cfg.seed, shard, i - b)},
                      {"gmc_reduction", reduced},
                      {"min_concurrence", min_conc},
                      {"state", amplitudes_json(psi)}});
      }
    }
    return res;
  });
  return finish("bounds-sandwich", merge(shards), "min_margin", n, Json{{"tolerance", tol}, {"gmc_tolerance", kGmcTol}});
}

using SuiteFn = Report (*)(const RunConfig&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites = {
      {"triangle-holds", suite_triangle_holds}, {"strictness", suite_strictness},
      {"non-obtuse", suite_non_obtuse},         {"monotonicity", suite_monotonicity},
      {"gaussian-relations", suite_gaussian},   {"hybrid-sweep", suite_hybrid},
      {"polygon", suite_polygon},               {"hessian-minors", suite_hessian},
      {"bounds-sandwich", suite_bounds},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"triangle-holds", "strictness",   "non-obtuse",
                                                 "monotonicity",   "gaussian-relations", "hybrid-sweep",
                                                 "polygon",        "hessian-minors", "bounds-sandwich"};
  return names;
}

Report run_suite(std::string_view name, const RunConfig& cfg) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw ArgumentError("unknown suite '" + std::string(name) + "'");
  return it->second(cfg);
}

}  // namespace trient::harness
