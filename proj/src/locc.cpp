#include "trient/locc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "trient/errors.hpp"

namespace trient {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWitnessSlack = -1e-8;
constexpr double kCase2GapFloor = -1e-12;

void check_angle(double a, const char* name) {
  if (!(a >= -kPi - 1e-12 && a <= kPi + 1e-12)) {
    throw ArgumentError(std::string("measurement angle ") + name + " outside [-pi, pi]");
  }
}

}  // namespace

// --- measurements -----------------------------------------------------------

LocalMeasurement::LocalMeasurement(int party, std::vector<CMatrix> kraus) : party_(party), kraus_(std::move(kraus)) {
  if (party_ < 0) throw ArgumentError("measurement party must be nonnegative");
  if (kraus_.empty()) throw ValidationError("measurement needs at least one Kraus operator");
  const Eigen::Index d = kraus_.front().rows();
  for (const auto& k : kraus_) {
    if (k.rows() != d || k.cols() != d) throw ValidationError("Kraus operators must be square and equal-sized");
  }
  if (completeness_residual() > kCompletenessTolerance) {
    throw ValidationError("Kraus operators are not complete (residual " + std::to_string(completeness_residual()) +
                          ")");
  }
}

LocalMeasurement LocalMeasurement::identity(int party, int dim) {
  return LocalMeasurement(party, {CMatrix::Identity(dim, dim)});
}

double LocalMeasurement::completeness_residual() const {
  const Eigen::Index d = kraus_.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

LocalMeasurement measurement_from_params(const MeasurementParams& p, int party) {
  check_angle(p.phi1, "phi1");
  check_angle(p.phi2, "phi2");
  check_angle(p.psi1, "psi1");
  check_angle(p.psi2, "psi2");
  const Complex phase = std::polar(1.0, p.psi2);
  CMatrix v(2, 2);
  v << std::cos(p.psi1), -phase * std::sin(p.psi1),
       std::sin(p.psi1), phase * std::cos(p.psi1);
  CMatrix d1 = CMatrix::Zero(2, 2), d2 = CMatrix::Zero(2, 2);
  d1(0, 0) = std::sin(p.phi1);
  d1(1, 1) = std::sin(p.phi2);
  d2(0, 0) = std::cos(p.phi1);
  d2(1, 1) = std::cos(p.phi2);
  return LocalMeasurement(party, {d1 * v, d2 * v});
}

double StandardFormState::l0() const {
  for (double l : {l1, l2, l3, l4}) {
    if (l < 0.0) throw ArgumentError("standard-form coefficients must be nonnegative");
  }
  const double rest = l1 * l1 + l2 * l2 + l3 * l3 + l4 * l4;
  if (rest > 1.0 + 1e-12) throw ArgumentError("standard-form coefficients exceed unit norm");
  return std::sqrt(std::max(0.0, 1.0 - rest));
}

PureState StandardFormState::to_state() const {
  const double zero = l0();
  CVector amps = CVector::Zero(8);
  amps[0b000] = zero;
  amps[0b100] = std::polar(l1, varphi);
  amps[0b101] = l2;
  amps[0b110] = l3;
  amps[0b111] = l4;
  return PureState::normalized({2, 2, 2}, std::move(amps));
}

LoccOutcome apply_measurement(const PureState& state, const LocalMeasurement& m) {
  const auto& dims = state.dims();
  if (m.party() >= static_cast<int>(dims.size())) throw ArgumentError("measurement party out of range");
  const int d = dims[static_cast<std::size_t>(m.party())];
  if (m.kraus().front().rows() != d) throw ValidationError("Kraus dimension does not match the measured party");
  if (m.completeness_residual() > kCompletenessTolerance) throw ValidationError("Kraus operators are not complete");

  Eigen::Index stride = 1;
  for (std::size_t p = static_cast<std::size_t>(m.party()) + 1; p < dims.size(); ++p) stride *= dims[p];

  const CVector& psi = state.amplitudes();
  LoccOutcome out;
  for (std::size_t k = 0; k < m.kraus().size(); ++k) {
    const CMatrix& op = m.kraus()[k];
    CVector phi = CVector::Zero(psi.size());
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      if (psi[i] == Complex{}) continue;
      const Eigen::Index digit = (i / stride) % d;
      const Eigen::Index base = i - digit * stride;
      for (Eigen::Index a = 0; a < d; ++a) phi[base + a * stride] += op(a, digit) * psi[i];
    }
    const double p = phi.squaredNorm();
    if (p < kZeroBranchProbability) continue;
    out.probabilities.push_back(p);
    out.post_states.push_back(PureState::normalized(dims, phi / std::sqrt(p)));
    out.kraus_index.push_back(k);
  }
  return out;
}

MonotonicityGap monotonicity_gap(const PureState& state, const LocalMeasurement& m, const MeasureSpec& spec,
                                 bool normalized) {
  spec.validate();
  MonotonicityGap out;
  const TriangleReport before = triangle_area(state, spec, normalized);
  out.input_valid = before.valid();
  out.area_before = before.value();
  const LoccOutcome outcome = apply_measurement(state, m);
  double average = 0.0;
  for (std::size_t k = 0; k < outcome.post_states.size(); ++k) {
    BranchArea b{outcome.probabilities[k], triangle_area(outcome.post_states[k], spec, normalized)};
    if (!b.triangle.valid()) out.invalid_branches.push_back(k);
    average += b.probability * b.triangle.value();
    out.branches.push_back(std::move(b));
  }
  if (out.input_valid && out.invalid_branches.empty()) out.gap = out.area_before - average;
  return out;
}

// --- convexity --------------------------------------------------------------

double convexity_sign(const MeasureSpec& spec, double lambda) {
  spec.validate();
  if (!(lambda > 0.0 && lambda < 0.5)) throw ArgumentError("convexity_sign needs lambda in (0, 1/2)");
  const double a = spec.alpha;
  const double l = lambda, m = 1.0 - lambda;
  switch (spec.effective_kind()) {
    case MeasureKind::SchmidtWeight: return a - 1.0;
    case MeasureKind::ConcurrenceSquared:
    case MeasureKind::NegativitySquared:
    case MeasureKind::Impurity: return (a - 1.0) * (1.0 - 2.0 * l) * (1.0 - 2.0 * l) - 2.0 * l * m;
    case MeasureKind::VonNeumann: {
      const double lg = std::log2(l), mg = std::log2(m);
      const double num = (a - 1.0) * (mg - lg) * (mg - lg) + (lg / m + mg / l) / std::numbers::ln2;
      return num / (lg * lg);
    }
    case MeasureKind::Tsallis: {
      const double q = spec.q;
      const double d = std::pow(m, q - 1.0) - std::pow(l, q - 1.0);
      const double t = 1.0 - std::pow(l, q) - std::pow(m, q);
      return (a - 1.0) * d * d - (q - 1.0) / q * t * (std::pow(l, q - 2.0) + std::pow(m, q - 2.0));
    }
    case MeasureKind::Renyi2: {
      const double p = 2.0 * l * l - 2.0 * l + 1.0;
      return (a - 1.0) * (1.0 - 2.0 * l) * (1.0 - 2.0 * l) + 2.0 * std::numbers::ln2 * l * m * std::log2(p);
    }
  }
  return 0.0;
}

ConvexityInterval convexity_interval(const MeasureSpec& spec) {
  spec.validate();
  ConvexityInterval out{spec, std::nullopt};
  if (spec.alpha <= 1.0) return out;
  switch (spec.effective_kind()) {
    case MeasureKind::SchmidtWeight: out.u_alpha = 0.5; return out;
    case MeasureKind::ConcurrenceSquared:
    case MeasureKind::NegativitySquared:
    case MeasureKind::Impurity:
      out.u_alpha = 0.5 * (1.0 - std::sqrt(1.0 / (2.0 * spec.alpha - 1.0)));
      return out;
    default: break;
  }
  // Entropic kinds: walk a 1e-6 grid to the first sign change, then bisect.
  constexpr double kStep = 1e-6;
  double prev = kStep;
  if (convexity_sign(spec, prev) <= 0.0) return out;
  for (double l = 2 * kStep; l < 0.5; l += kStep) {
    if (convexity_sign(spec, l) <= 0.0) {
      double lo = prev, hi = l;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (convexity_sign(spec, mid) > 0.0 ? lo : hi) = mid;
      }
      out.u_alpha = lo;
      return out;
    }
    prev = l;
  }
  out.u_alpha = 0.5;
  return out;
}

ViolationWitness triangle_violation_witness(const MeasureSpec& spec, std::optional<double> t) {
  spec.validate();
  if (spec.alpha <= 1.0) throw ArgumentError("triangle_violation_witness needs alpha > 1");

  const auto build = [&](double tt) {
    const double a = std::sqrt(1.0 - 2.0 * tt), b = std::sqrt(tt);
    PureState s = w_state(a, b, b);
    BipartitionVector v = bipartition_vector(s, spec);
    TriangleCheck c = triangle_check(v, spec.alpha);
    const double slack = c.slack[0];
    return ViolationWitness{std::move(s), tt, v, c, slack};
  };

  if (t) {
    if (!(*t > 0.0 && *t <= 0.25)) throw ArgumentError("witness t = b^2 must lie in (0, 1/4]");
    ViolationWitness w = build(*t);
    if (!(w.slack < kWitnessSlack)) {
      throw SearchFailed("W-class state with b^2 = " + std::to_string(*t) + " does not violate the relation");
    }
    return w;
  }

  const ConvexityInterval ci = convexity_interval(spec);
  if (!ci.u_alpha) throw SearchFailed("empty convexity interval for " + describe(spec));
  // lambda_B = lambda_C = t and lambda_A = 2t must all sit in (0, u].
  const double t_max = std::min(0.5 * *ci.u_alpha, 0.25);
  std::optional<ViolationWitness> best;
  constexpr int kGrid = 400;
  for (int k = 1; k <= kGrid; ++k) {
    ViolationWitness w = build(t_max * k / kGrid);
    if (!best || w.slack < best->slack) best = std::move(w);
  }
  if (!(best->slack < kWitnessSlack)) {
    throw SearchFailed("no strict triangle violation inside the convexity interval for " + describe(spec));
  }
  return std::move(*best);
}

// --- Case II ----------------------------------------------------------------

double case2_limit(double alpha) { return (2.0 * alpha - 1.0) * (1.0 - std::pow(4.0, 1.0 - alpha)); }

double case2_g_squared(const MeasureSpec& spec, double beta, double p2) {
  const double a = spec.alpha;
  const double big = std::pow(measure_of_lambda(spec, 2.0 * beta / p2), 2.0 * a);
  const double small = std::pow(measure_of_lambda(spec, beta / p2), 2.0 * a);
  return p2 * p2 / 16.0 * big * (4.0 * small - big);
}

double case2_sign_carrier(const MeasureSpec& spec, double beta, double p2) {
  const double a = spec.alpha;
  const double e1 = measure_of_lambda(spec, beta / p2);
  const double e2 = measure_of_lambda(spec, 2.0 * beta / p2);
  const double d1 = measure_derivative(spec, beta / p2);
  const double d2 = measure_derivative(spec, 2.0 * beta / p2);
  const double ratio = std::pow(e1 / e2, 2.0 * a);
  const double u = beta * d2 / e2;
  const double v = beta * d1 / e2;
  return 4.0 * p2 * ratio - p2 - 8.0 * a * u * ratio + 4.0 * a * u - 4.0 * a * v * std::pow(e1 / e2, 2.0 * a - 1.0);
}

Case2Profile case2_profile(const ViolationProbe& probe) {
  probe.spec.validate();
  const double a = probe.spec.alpha;
  if (!(a > 0.5 && a < 1.0)) throw ArgumentError("case2_profile needs 1/2 < alpha < 1");
  if (!(probe.beta > 0.0 && probe.beta <= 0.125)) throw ArgumentError("case2_profile needs 0 < beta <= 1/8");
  Case2Profile out;
  out.beta_zero_limit = case2_limit(a);
  for (double p2 : probe.p2_grid) {
    if (!(p2 > 0.0 && p2 <= 1.0)) throw ArgumentError("p2 grid values must lie in (0, 1]");
    if (2.0 * probe.beta / p2 > 0.5) throw ArgumentError("p2 below 4 beta leaves the W-branch regime");
    out.points.push_back({p2, case2_sign_carrier(probe.spec, probe.beta, p2)});
  }
  return out;
}

Case2Violation case2_violation(const MeasureSpec& spec, double beta, int grid_points) {
  spec.validate();
  const double a = spec.alpha;
  if (!(a >= 0.5 && a < 1.0)) throw ArgumentError("case2_violation needs 1/2 <= alpha < 1");
  if (!(beta > 0.0 && beta <= 0.125)) throw ArgumentError("case2_violation needs 0 < beta <= 1/8");
  if (grid_points < 2) throw ArgumentError("case2_violation needs at least two grid points");

  const double p_min = 4.0 * beta;
  const auto grid = [&](int k) { return 1.0 - (1.0 - p_min) * k / (grid_points - 1); };

  // Walk down from p2 = 1 while g^2 is decreasing in p2 (L < 0).
  int last = -1;
  for (int k = 0; k < grid_points; ++k) {
    if (!(case2_sign_carrier(spec, beta, grid(k)) < 0.0)) break;
    last = k;
  }
  if (last < 0) {
    std::ostringstream os;
    os << "no decreasing interval at p2 = 1 for " << describe(spec) << ", beta = " << beta
       << ": L(beta, 1) = " << case2_sign_carrier(spec, beta, 1.0) << ", beta->0 limit " << case2_limit(a);
    throw SearchFailed(os.str());
  }
  const double p_ab = grid(last);

  int best = 0;
  double best_g2 = case2_g_squared(spec, beta, 1.0);
  for (int k = 1; k <= last; ++k) {
    const double g2 = case2_g_squared(spec, beta, grid(k));
    if (g2 > best_g2) {
      best_g2 = g2;
      best = k;
    }
  }
  const double p2 = grid(best);

  const double amp_a = std::sqrt(1.0 - 2.0 * beta), amp_b = std::sqrt(beta);
  PureState w = w_state(amp_a, amp_b, amp_b);
  const double y2 = std::sqrt(std::clamp((p2 - 2.0 * beta) / (amp_a * amp_a), 0.0, 1.0));
  const double y1 = std::sqrt(std::max(0.0, 1.0 - y2 * y2));
  CMatrix x1 = CMatrix::Zero(2, 2), x2 = CMatrix::Zero(2, 2);
  x1(1, 1) = y1;
  x2(0, 0) = 1.0;
  x2(1, 1) = y2;
  LocalMeasurement m(0, {x1, x2});
  const MonotonicityGap g = monotonicity_gap(w, m, spec);
  if (!g.gap || !(*g.gap < kCase2GapFloor)) {
    std::ostringstream os;
    os << "no monotonicity violation for " << describe(spec) << ", beta = " << beta << " on [" << p_ab
       << ", 1]; realized gap " << (g.gap ? *g.gap : std::numeric_limits<double>::quiet_NaN());
    throw SearchFailed(os.str());
  }
  return Case2Violation{std::move(w), std::move(m), beta, p2, p_ab, *g.gap};
}

// --- Case III ---------------------------------------------------------------

double standard_form_gap(const MeasureSpec& spec, const StandardFormState& s, const MeasurementParams& p) {
  const double inf = std::numeric_limits<double>::infinity();
  const double rest = s.l1 * s.l1 + s.l2 * s.l2 + s.l3 * s.l3 + s.l4 * s.l4;
  if (rest > 1.0 || s.l1 < 0 || s.l2 < 0 || s.l3 < 0 || s.l4 < 0) return inf;
  const MonotonicityGap g = monotonicity_gap(s.to_state(), measurement_from_params(p, 0), spec);
  return g.gap ? *g.gap : inf;
}

namespace {

constexpr int kSearchDims = 9;
using SearchPoint = std::array<double, kSearchDims>;

constexpr SearchPoint kLower{0, 0, 0, 0, 0, -kPi, -kPi, -kPi, -kPi};
constexpr SearchPoint kUpper{1, 1, 1, 1, kPi, kPi, kPi, kPi, kPi};

SearchPoint pack(const StandardFormState& s, const MeasurementParams& p) {
  return {s.l1, s.l2, s.l3, s.l4, s.varphi, p.phi1, p.phi2, p.psi1, p.psi2};
}

std::pair<StandardFormState, MeasurementParams> unpack(const SearchPoint& x) {
  return {{x[0], x[1], x[2], x[3], x[4]}, {x[5], x[6], x[7], x[8]}};
}

SearchPoint random_point(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<double, 5> l{};
  double norm = 0.0;
  for (double& v : l) {
    v = std::abs(normal(rng));
    norm += v * v;
  }
  norm = std::sqrt(norm);
  SearchPoint x{};
  for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(i)] = l[static_cast<std::size_t>(i) + 1] / norm;
  x[4] = uniform(rng, 0.0, kPi);
  for (std::size_t i = 5; i < kSearchDims; ++i) x[i] = uniform(rng, -kPi, kPi);
  return x;
}

}  // namespace

ViolationSearchResult random_violation_search(const MeasureSpec& spec, std::uint64_t seed, std::size_t budget,
                                              std::optional<ViolationSearchStart> start) {
  spec.validate();
  if (budget < 1) throw ArgumentError("random_violation_search needs budget >= 1");
  Rng rng(seed);
  std::size_t evals = 0;
  const auto eval = [&](const SearchPoint& x) {
    ++evals;
    const auto [s, p] = unpack(x);
    return standard_form_gap(spec, s, p);
  };

  SearchPoint best{};
  double best_gap = std::numeric_limits<double>::infinity();
  if (start) {
    best = pack(start->state, start->params);
    best_gap = eval(best);
  } else {
    const std::size_t n_random = std::max<std::size_t>(1, budget / 2);
    while (evals < n_random) {
      const SearchPoint x = random_point(rng);
      const double g = eval(x);
      if (g < best_gap) {
        best_gap = g;
        best = x;
      }
    }
  }

  // Pattern search: try +-step per coordinate, halve all steps after a sweep
  // without improvement.
  SearchPoint step{};
  for (std::size_t i = 0; i < kSearchDims; ++i) step[i] = i < 4 ? 0.05 : 0.1 * kPi;
  while (evals < budget && step[0] > 1e-10) {
    bool improved = false;
    for (std::size_t i = 0; i < kSearchDims && evals < budget; ++i) {
      for (double dir : {1.0, -1.0}) {
        if (evals >= budget) break;
        SearchPoint trial = best;
        trial[i] = std::clamp(trial[i] + dir * step[i], kLower[i], kUpper[i]);
        if (trial[i] == best[i]) continue;
        const double g = eval(trial);
        if (g < best_gap) {
          best_gap = g;
          best = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      for (double& s : step) s *= 0.5;
    }
  }

  const auto [s, p] = unpack(best);
  return {s, p, best_gap, evals};
}

}  // namespace trient
