#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "trient/measures.hpp"
#include "trient/random.hpp"
#include "trient/states.hpp"
#include "trient/triangle.hpp"

namespace trient {

inline constexpr double kCompletenessTolerance = 1e-10;
/// Branches with probability below this are dropped.
inline constexpr double kZeroBranchProbability = 1e-14;

/// Generalized measurement on one party. Completeness is validated on
/// construction (ValidationError).
class LocalMeasurement {
 public:
  LocalMeasurement(int party, std::vector<CMatrix> kraus);

  static LocalMeasurement identity(int party, int dim = 2);

  int party() const { return party_; }
  const std::vector<CMatrix>& kraus() const { return kraus_; }
  /// max |sum K^dag K - I| elementwise.
  double completeness_residual() const;

 private:
  int party_;
  std::vector<CMatrix> kraus_;
};

/// Angles of the two-outcome family X_i = D_i V with D_1 = diag(sin phi1,
/// sin phi2), D_2 = diag(cos phi1, cos phi2) and
/// V = [[cos psi1, -e^{i psi2} sin psi1], [sin psi1, e^{i psi2} cos psi1]].
struct MeasurementParams {
  double phi1 = 0.0, phi2 = 0.0, psi1 = 0.0, psi2 = 0.0;
};

/// Throws ArgumentError for angles outside [-pi, pi].
LocalMeasurement measurement_from_params(const MeasurementParams& p, int party = 0);

/// l0|000> + l1 e^{i varphi}|100> + l2|101> + l3|110> + l4|111>, l0 >= 0
/// fixed by normalization.
struct StandardFormState {
  double l1 = 0.0, l2 = 0.0, l3 = 0.0, l4 = 0.0;
  double varphi = 0.0;

  /// Throws ArgumentError if any l < 0 or l1^2+..+l4^2 > 1.
  double l0() const;
  PureState to_state() const;
};

struct LoccOutcome {
  std::vector<double> probabilities;
  std::vector<PureState> post_states;
  /// Index into the measurement's Kraus list for each kept branch.
  std::vector<std::size_t> kraus_index;
};

/// Applies `m` to its party; zero-probability branches are dropped.
LoccOutcome apply_measurement(const PureState& state, const LocalMeasurement& m);

struct BranchArea {
  double probability = 0.0;
  TriangleReport triangle;
};

struct MonotonicityGap {
  double area_before = 0.0;
  std::vector<BranchArea> branches;
  /// A(psi) - sum_k p_k A(psi_k); empty when any triangle is invalid.
  std::optional<double> gap;
  std::vector<std::size_t> invalid_branches;
  bool input_valid = true;
};

/// Uses the raw (unnormalized) area unless `normalized` is set.
MonotonicityGap monotonicity_gap(const PureState& state, const LocalMeasurement& m, const MeasureSpec& spec,
                                 bool normalized = false);

// --- convexity of E^alpha(lambda) -------------------------------------------

/// Sign carrier of d^2/dlambda^2 E^alpha(lambda) on (0, 1/2): positive
/// factors removed. For C^2/N^2/Impurity (alpha-1)(1-2l)^2 - 2l(1-l); for W
/// (alpha - 1); for S, T_q, R the l1, l2, l3 functions.
double convexity_sign(const MeasureSpec& spec, double lambda);

struct ConvexityInterval {
  MeasureSpec spec;
  /// Upper end u of (0, u] on which E^alpha is strictly convex; empty when
  /// alpha <= 1.
  std::optional<double> u_alpha;
};

ConvexityInterval convexity_interval(const MeasureSpec& spec);

struct ViolationWitness {
  PureState state;
  /// b^2 = c^2 of the W-class state a|100> + b|010> + b|001>.
  double t = 0.0;
  BipartitionVector vector;
  TriangleCheck check;
  double slack = 0.0;
};

/// W-class state violating the triangle relation at spec.alpha > 1. With no
/// explicit `t` the most violating t inside the convexity interval is used.
/// Throws ArgumentError for alpha <= 1 and SearchFailed if no strict
/// violation (slack < -1e-8) is found.
ViolationWitness triangle_violation_witness(const MeasureSpec& spec, std::optional<double> t = std::nullopt);

// --- Case II: 1/2 < alpha < 1 ----------------------------------------------

struct ViolationProbe {
  MeasureSpec spec;
  double beta = 1e-8;
  std::vector<double> p2_grid;
};

struct ProfilePoint {
  double p2 = 0.0;
  double value = 0.0;
};

struct Case2Profile {
  std::vector<ProfilePoint> points;
  /// (2 alpha - 1)(1 - 4^{1 - alpha}).
  double beta_zero_limit = 0.0;
};

/// The bracket L(beta, p2) with d/dp2 g^2 = (1/8) E^{4 alpha}(2 beta / p2) L.
double case2_sign_carrier(const MeasureSpec& spec, double beta, double p2);
/// g^2(p2) = p2^2/16 E^{2a}(2b/p2) [4 E^{2a}(b/p2) - E^{2a}(2b/p2)].
double case2_g_squared(const MeasureSpec& spec, double beta, double p2);
double case2_limit(double alpha);

/// Throws ArgumentError unless 1/2 < alpha < 1 and beta > 0.
Case2Profile case2_profile(const ViolationProbe& probe);

struct Case2Violation {
  PureState state;
  LocalMeasurement measurement;
  double beta = 0.0;
  double p2 = 0.0;
  /// Left end of the interval on which g decreases.
  double p_alpha_beta = 1.0;
  double gap = 0.0;
};

/// Throws ArgumentError unless 1/2 <= alpha < 1; SearchFailed when no
/// realized gap below -1e-12 exists on the decreasing interval.
Case2Violation case2_violation(const MeasureSpec& spec, double beta, int grid_points = 20001);

// --- Case III: random search over standard-form states ----------------------

struct ViolationSearchResult {
  StandardFormState state;
  MeasurementParams params;
  double gap = 0.0;
  std::size_t evaluations = 0;
};

struct ViolationSearchStart {
  StandardFormState state;
  MeasurementParams params;
};

/// Seeded random sampling followed by pattern search, minimizing the
/// monotonicity gap of a measurement on party A. Deterministic given seed.
ViolationSearchResult random_violation_search(const MeasureSpec& spec, std::uint64_t seed, std::size_t budget,
                                              std::optional<ViolationSearchStart> start = std::nullopt);

/// Gap for one (state, params) point; +inf when undefined.
double standard_form_gap(const MeasureSpec& spec, const StandardFormState& s, const MeasurementParams& p);

}  // namespace trient
