#include <cmath>
#include <limits>
#include <numbers>

#include "common.hpp"
#include "trient/errors.hpp"
#include "trient/locc.hpp"
#include "trient/triangle.hpp"

namespace trient::harness {

using detail::amplitudes_json;
using detail::measurement_json;

namespace {

constexpr double kTable1Tolerance = 5e-4;
constexpr double kGapTolerance = 3e-3;
constexpr double kExactTolerance = 1e-12;
constexpr double kCase2Beta = 1e-3;
constexpr double kStrictViolation = -1e-8;

std::vector<MeasureSpec> measures_for(const RunConfig& cfg, double alpha) {
  if (cfg.measure) {
    MeasureSpec s{*cfg.measure, alpha, cfg.q};
    s.validate();
    return {s};
  }
  return qubit_measure_set(alpha, cfg.q);
}

std::vector<double> alphas_for(const RunConfig& cfg, std::vector<double> defaults) {
  if (cfg.alpha) return {*cfg.alpha};
  return defaults;
}

struct Case3Point {
  MeasureKind kind;
  StandardFormState state;
  MeasurementParams params;
  double reference_gap;
};

std::vector<Case3Point> case3_points() {
  constexpr double pi = std::numbers::pi;
  return {
      {MeasureKind::SchmidtWeight, {0.264, 0.367, 0.32, 0.055, 0.8 * pi}, {0.4 * pi, 0.1 * pi, 0.6 * pi, 0.2 * pi}, -0.027},
      {MeasureKind::ConcurrenceSquared, {0.096, 0.238, 0.173, 0.0, 0.0}, {0.4 * pi, 0.2 * pi, -0.5 * pi, -0.1 * pi}, -0.010},
      {MeasureKind::VonNeumann, {0.048, 0.046, 0.0, 0.141, 0.0}, {0.4 * pi, 0.1 * pi, 0.0, -0.7 * pi}, -0.011},
  };
}

Json standard_form_json(const StandardFormState& s) {
  return Json{{"l0", s.l0()}, {"l1", s.l1}, {"l2", s.l2}, {"l3", s.l3}, {"l4", s.l4}, {"varphi", s.varphi}};
}

Json params_json(const MeasurementParams& p) {
  return Json{{"phi1", p.phi1}, {"phi2", p.phi2}, {"psi1", p.psi1}, {"psi2", p.psi2}};
}

}  // namespace

Report table1_report() {
  constexpr double pi = std::numbers::pi;
  const double r2 = std::sqrt(2.0);
  const std::vector<std::pair<std::string, PureState>> states = {
      {"psi1", PureState::from_kets({{"000", std::sin(pi / 5) / r2}, {"100", std::cos(pi / 5) / r2}, {"111", 1.0 / r2}})},
      {"psi2", PureState::from_kets({{"000", std::cos(pi / 8)}, {"111", std::sin(pi / 8)}})},
      {"psi3", PureState::from_kets({{"000", 0.5}, {"100", 0.5}, {"111", 1.0 / r2}})},
  };
  const double reference[3][3] = {
      {0.5878, 0.7071, 0.7071},
      {0.7329, 0.6009, 0.8251},
      {0.6487, 0.5, 0.7638},
  };
  const char* quantities[3] = {"gmc", "area_von_neumann", "area_concurrence_squared"};
  const MeasureSpec a1{MeasureKind::VonNeumann, 0.5};
  const MeasureSpec a2{MeasureKind::ConcurrenceSquared, 0.5};

  Report r;
  r.command = "table1";
  r.table.header = {"state", "quantity", "value", "reference", "deviation", "ok"};
  Json cells = Json::array();
  double max_dev = 0.0;
  for (std::size_t q = 0; q < 3; ++q) {
    for (std::size_t s = 0; s < 3; ++s) {
      const PureState& psi = states[s].second;
      double v = 0.0;
      if (q == 0) v = gmc(psi);
      if (q == 1) v = triangle_area(psi, a1, true).value();
      if (q == 2) v = triangle_area(psi, a2, true).value();
      const double dev = std::abs(v - reference[q][s]);
      max_dev = std::max(max_dev, dev);
      const bool ok = dev <= kTable1Tolerance;
      cells.push_back(Json{{"state", states[s].first},
                           {"quantity", quantities[q]},
                           {"value", v},
                           {"reference", reference[q][s]},
                           {"deviation", dev},
                           {"ok", ok}});
      r.table.add_row({states[s].first, quantities[q], fmt(v), fmt(reference[q][s]), fmt(dev), fmt(ok)});
    }
  }
  r.passed = max_dev <= kTable1Tolerance;
  r.data["cells"] = std::move(cells);
  r.data["max_deviation"] = max_dev;
  r.data["tolerance"] = kTable1Tolerance;
  return r;
}

Report case1_report(const RunConfig& cfg) {
  const double alpha = cfg.alpha.value_or(0.5);
  if (!(alpha > 0.0 && alpha <= 0.5)) throw ArgumentError("case1 needs 0 < alpha <= 1/2");
  const PureState w =
      PureState::from_kets({{"100", std::sqrt(3.0) / 2}, {"010", std::sqrt(2.0) / 4}, {"001", std::sqrt(2.0) / 4}});
  CMatrix x1 = CMatrix::Zero(2, 2), x2 = CMatrix::Zero(2, 2);
  x1(0, 0) = std::sqrt(3.0) / 2;
  x1(1, 1) = std::sqrt(2.0) / 2;
  x2(0, 0) = 0.5;
  x2(1, 1) = std::sqrt(2.0) / 2;
  const LocalMeasurement m(0, {x1, x2});
  const LoccOutcome out = apply_measurement(w, m);
  const PureState& w1 = out.post_states.at(0);

  const std::vector<double> before = local_lambdas(w), after = local_lambdas(w1);
  const std::array<double, 3> want_before{0.25, 0.125, 0.125}, want_after{1.0 / 3, 1.0 / 6, 1.0 / 6};
  double lambda_dev = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    lambda_dev = std::max({lambda_dev, std::abs(before[i] - want_before[i]), std::abs(after[i] - want_after[i])});
  }

  const MeasureSpec c2{MeasureKind::ConcurrenceSquared, alpha};
  const double area_w = triangle_area(w, c2, true).value();
  const double area_w1 = triangle_area(w1, c2, true).value();

  Report r;
  r.command = "violations";
  r.table.header = {"measure", "alpha", "area_before", "ensemble_average", "gap", "ok"};
  Json gaps = Json::array();
  double min_gap = std::numeric_limits<double>::infinity();
  for (const MeasureSpec& spec : measures_for(cfg, alpha)) {
    const MonotonicityGap g = monotonicity_gap(w, m, spec, true);
    const double gap = g.gap.value_or(-std::numeric_limits<double>::infinity());
    min_gap = std::min(min_gap, gap);
    const bool ok = gap >= -1e-9;
    gaps.push_back(Json{{"measure", describe(spec)}, {"area_before", g.area_before}, {"gap", gap}, {"ok", ok}});
    r.table.add_row({describe(spec), fmt(alpha), fmt(g.area_before), fmt(g.area_before - gap), fmt(gap), fmt(ok)});
  }

  r.data["mode"] = "case1";
  r.data["state"] = amplitudes_json(w);
  r.data["measurement"] = measurement_json(m);
  r.data["probabilities"] = out.probabilities;
  r.data["lambdas_before"] = before;
  r.data["lambdas_after"] = after;
  r.data["lambda_deviation"] = lambda_dev;
  r.data["area_before"] = area_w;
  r.data["area_after_first_branch"] = area_w1;
  r.data["area_increases_on_branch"] = area_w < area_w1;
  r.data["ensemble_gaps"] = std::move(gaps);
  r.data["min_ensemble_gap"] = min_gap;
  r.passed = lambda_dev <= kExactTolerance && area_w < area_w1 && min_gap >= -1e-9;
  return r;
}

Report case2_report(const RunConfig& cfg) {
  Report r;
  r.command = "violations";
  r.table.header = {"measure", "alpha", "beta", "p2", "p_alpha_beta", "gap", "ok"};
  Json rows = Json::array();
  bool all_ok = true;
  for (double alpha : alphas_for(cfg, {0.6, 0.75, 0.9})) {
    if (!(alpha > 0.5 && alpha < 1.0)) throw ArgumentError("case2 needs 1/2 < alpha < 1");
    for (const MeasureSpec& spec : measures_for(cfg, alpha)) {
      Json row{{"measure", describe(spec)}, {"alpha", alpha}, {"beta", kCase2Beta}};
      try {
        const Case2Violation v = case2_violation(spec, kCase2Beta);
        const bool ok = v.gap < kStrictViolation;
        row["p2"] = v.p2;
        row["p_alpha_beta"] = v.p_alpha_beta;
        row["gap"] = v.gap;
        row["ok"] = ok;
        row["state"] = amplitudes_json(v.state);
        row["measurement"] = measurement_json(v.measurement);
        all_ok = all_ok && ok;
        r.table.add_row({describe(spec), fmt(alpha), fmt(kCase2Beta), fmt(v.p2), fmt(v.p_alpha_beta), fmt(v.gap), fmt(ok)});
      } catch (const SearchFailed& e) {
        row["ok"] = false;
        row["error"] = e.what();
        all_ok = false;
        r.table.add_row({describe(spec), fmt(alpha), fmt(kCase2Beta), "", "", "", fmt(false)});
      }
      rows.push_back(std::move(row));
    }
  }
  r.data["mode"] = "case2";
  r.data["threshold"] = kStrictViolation;
  r.data["results"] = std::move(rows);
  r.passed = all_ok;
  return r;
}

Report case3_report(const RunConfig& cfg) {
  if (cfg.alpha && *cfg.alpha != 1.0) throw ArgumentError("case3 is defined at alpha = 1");
  Report r;
  r.command = "violations";
  r.table.header = {"measure", "gap", "reference", "deviation", "ok"};
  if (cfg.samples) r.table.header.push_back("search_gap");
  Json rows = Json::array();
  bool all_ok = true;
  std::size_t used = 0;
  for (const Case3Point& p : case3_points()) {
    if (cfg.measure && *cfg.measure != p.kind) continue;
    ++used;
    const MeasureSpec spec{p.kind, 1.0};
    const double gap = standard_form_gap(spec, p.state, p.params);
    const double dev = std::abs(gap - p.reference_gap);
    const bool ok = dev <= kGapTolerance;
    all_ok = all_ok && ok;
    Json row{{"measure", describe(spec)},
             {"standard_form", standard_form_json(p.state)},
             {"angles", params_json(p.params)},
             {"state", amplitudes_json(p.state.to_state())},
             {"measurement", measurement_json(measurement_from_params(p.params))},
             {"gap", gap},
             {"reference", p.reference_gap},
             {"deviation", dev},
             {"ok", ok}};
    std::vector<std::string> cells{describe(spec), fmt(gap), fmt(p.reference_gap), fmt(dev), fmt(ok)};
    if (cfg.samples) {
      const ViolationSearchResult s =
          random_violation_search(spec, cfg.seed, *cfg.samples, ViolationSearchStart{p.state, p.params});
      row["search"] = Json{{"gap", s.gap},
                           {"evaluations", s.evaluations},
                           {"standard_form", standard_form_json(s.state)},
                           {"angles", params_json(s.params)}};
      cells.push_back(fmt(s.gap));
    }
    r.table.add_row(std::move(cells));
    rows.push_back(std::move(row));
  }
  if (used == 0) throw ArgumentError("case3 has reference points only for schmidt-weight, concurrence-squared and von-neumann");
  r.data["mode"] = "case3";
  r.data["tolerance"] = kGapTolerance;
  r.data["results"] = std::move(rows);
  r.passed = all_ok;
  return r;
}

Report lemma_s2_report(const RunConfig& cfg) {
  Report r;
  r.command = "violations";
  r.table.header = {"measure", "alpha", "t", "slack", "ok"};
  Json rows = Json::array();
  bool all_ok = true;
  for (double alpha : alphas_for(cfg, {1.1, 1.5, 2.0})) {
    if (!(alpha > 1.0)) throw ArgumentError("lemmaS2 needs alpha > 1");
    for (const MeasureSpec& spec : measures_for(cfg, alpha)) {
      Json row{{"measure", describe(spec)}, {"alpha", alpha}};
      try {
        const ViolationWitness w = triangle_violation_witness(spec);
        const bool ok = w.slack < kStrictViolation;
        row["t"] = w.t;
        row["slack"] = w.slack;
        row["sides"] = w.vector.powered(alpha);
        row["state"] = amplitudes_json(w.state);
        row["ok"] = ok;
        all_ok = all_ok && ok;
        r.table.add_row({describe(spec), fmt(alpha), fmt(w.t), fmt(w.slack), fmt(ok)});
      } catch (const SearchFailed& e) {
        row["ok"] = false;
        row["error"] = e.what();
        all_ok = false;
        r.table.add_row({describe(spec), fmt(alpha), "", "", fmt(false)});
      }
      rows.push_back(std::move(row));
    }
  }
  r.data["mode"] = "lemmaS2";
  r.data["threshold"] = kStrictViolation;
  r.data["results"] = std::move(rows);
  r.passed = all_ok;
  return r;
}

Report qudit_report() {
  const PureState psi =
      PureState::from_kets({{"000", 0.5}, {"101", 0.5}, {"210", 0.5}, {"311", 0.5}}, {4, 2, 2});
  const MeasureSpec spec{MeasureKind::VonNeumann, 1.0};
  const BipartitionVector v = bipartition_vector(psi, spec);
  const std::array<double, 3> want{2.0, 1.0, 1.0};
  double dev = 0.0;
  for (std::size_t i = 0; i < 3; ++i) dev = std::max(dev, std::abs(v.values[i] - want[i]));
  const TriangleCheck check = triangle_check(v, 1.0);
  const bool saturated = std::abs(check.slack[0]) <= kExactTolerance;
  const bool nonzero = std::min({v.values[0], v.values[1], v.values[2]}) > kExactTolerance;

  Report r;
  r.command = "qudit";
  r.table.header = {"party", "entropy", "expected", "slack"};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 3; ++i) {
    labels.emplace_back(1, v.labels[i]);
    r.table.add_row({labels.back(), fmt(v.values[i]), fmt(want[i]), fmt(check.slack[i])});
  }
  r.data["state"] = amplitudes_json(psi);
  r.data["entropies"] = v.values;
  r.data["labels"] = labels;
  r.data["slack"] = check.slack;
  r.data["max_deviation"] = dev;
  r.data["saturated"] = saturated;
  r.passed = dev <= kExactTolerance && saturated && nonzero;
  return r;
}

}  // namespace trient::harness
