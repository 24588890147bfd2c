#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "trient/measures.hpp"
#include "trient/states.hpp"

namespace trient {

/// Slack tolerance for the triangle relation.
inline constexpr double kSlackTolerance = 1e-10;
/// Areas below this are treated as degenerate.
inline constexpr double kDegenerateArea = 1e-12;
/// 4/sqrt(3): maps the equilateral triangle with unit sides to area 1.
inline constexpr double kAreaNormalization = 2.3094010767585030580;

struct TriangleCheck {
  /// holds[i]: side_i <= side_j + side_k (within kSlackTolerance).
  std::array<bool, 3> holds{};
  /// slack[i] = side_j + side_k - side_i.
  std::array<double, 3> slack{};

  bool all() const { return holds[0] && holds[1] && holds[2]; }
  double min_slack() const;
};

TriangleCheck triangle_check(const BipartitionVector& v, double alpha);
TriangleCheck triangle_check_sides(const std::array<double, 3>& sides);

enum class TriangleClass { Acute, Right, Obtuse, DegenerateLine, DegeneratePoint, Invalid };
std::string_view to_string(TriangleClass c);

struct TriangleReport {
  std::array<double, 3> sides{};
  double semiperimeter = 0.0;
  /// Raw (or normalized, see `normalized`) Heron area; 0 when invalid.
  double area = 0.0;
  /// area * 4/sqrt(3) regardless of the flag.
  double normalized_area = 0.0;
  bool normalized = false;
  /// Interior-angle cosines opposite each side; empty for degenerate or
  /// invalid triangles.
  std::optional<std::array<double, 3>> cosines;
  TriangleClass classification = TriangleClass::Invalid;
  TriangleCheck check;
  double lower_bound = 0.0;
  double upper_bound = 0.0;

  bool valid() const { return classification != TriangleClass::Invalid; }
  /// The area the caller asked for (normalized when requested).
  double value() const { return normalized ? normalized_area : area; }
};

/// Area via the side-squared form (1/4) sqrt(-x1^2 + 2 x1 (x2 + x3) - (x2 - x3)^2),
/// x_i = side_i^2. Negative radicands within round-off are clamped to 0.
double area_from_squared_sides(const std::array<double, 3>& x);
/// Literal Heron product sqrt(Q (Q-a)(Q-b)(Q-c)); used for cross-checks.
double heron_area(const std::array<double, 3>& sides);

TriangleReport triangle_area_sides(const std::array<double, 3>& sides, bool normalized);
TriangleReport triangle_area(const BipartitionVector& v, double alpha, bool normalized);
/// Shorthand: bipartition vector of `state` under `spec`, sides at spec.alpha.
TriangleReport triangle_area(const PureState& state, const MeasureSpec& spec, bool normalized);
/// Area value only (0 for degenerate), throwing nothing on invalid triangles;
/// returns std::nullopt when the relation is violated.
std::optional<double> state_area(const PureState& state, const MeasureSpec& spec, bool normalized);

struct AreaBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// lower = (sqrt3/4) min side^2, upper = sum side^2 / (4 sqrt3); raw scale.
AreaBounds area_bounds(const BipartitionVector& v, double alpha);
AreaBounds area_bounds_sides(const std::array<double, 3>& sides);

/// Minimum over the three bipartition values.
double gmc(const BipartitionVector& v);
/// Genuinely multipartite concurrence of a pure three-party state.
double gmc(const PureState& state);

enum class HessianCoordinates { E2Alpha, EAlpha };

struct HessianReport {
  HessianCoordinates coordinates = HessianCoordinates::E2Alpha;
  /// E2Alpha: the matrix with the positive 1/(128 A^3) factor omitted.
  /// EAlpha: the full Hessian of the area.
  Eigen::Matrix3d matrix;
  std::array<double, 3> minors{};
  double det_h = 0.0;
  /// EAlpha only: the closed form (x1^2 + x2^2 + x3^2) / (32 A).
  double det_closed_form = 0.0;
  /// |D3| / max(x)^6 in E2Alpha coordinates.
  double det_relative = 0.0;
  bool negative_semidefinite = false;
};

/// Throws SingularError for degenerate triangles (A = 0) and ArgumentError
/// for non-positive or invalid inputs.
HessianReport hessian_minors(const std::array<double, 3>& x, HessianCoordinates coords);

/// Per party i: E(rho_i) <= sum_{j != i} E(rho_j) + 1e-10, for an n >= 3
/// party pure state. Only subadditive kinds (Impurity, ConcurrenceSquared,
/// VonNeumann, Tsallis) are accepted; others throw UnsupportedError.
struct PolygonCheck {
  std::vector<double> values;
  std::vector<bool> holds;
  std::vector<double> slack;
  bool all() const;
};
PolygonCheck polygon_check(const PureState& state, const MeasureSpec& spec);

}  // namespace trient
