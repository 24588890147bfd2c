#include "trient/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trient/errors.hpp"

namespace trient {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kRightAngleTolerance = 1e-10;

}  // namespace

double TriangleCheck::min_slack() const { return std::min({slack[0], slack[1], slack[2]}); }

TriangleCheck triangle_check_sides(const std::array<double, 3>& s) {
  TriangleCheck out;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    out.slack[i] = s[j] + s[k] - s[i];
    out.holds[i] = out.slack[i] >= -kSlackTolerance;
  }
  return out;
}

TriangleCheck triangle_check(const BipartitionVector& v, double alpha) {
  for (double x : v.values) {
    if (x < 0.0) throw ArgumentError("bipartition entries must be nonnegative");
  }
  return triangle_check_sides(v.powered(alpha));
}

std::string_view to_string(TriangleClass c) {
  switch (c) {
    case TriangleClass::Acute: return "acute";
    case TriangleClass::Right: return "right";
    case TriangleClass::Obtuse: return "obtuse";
    case TriangleClass::DegenerateLine: return "degenerate-line";
    case TriangleClass::DegeneratePoint: return "degenerate-point";
    case TriangleClass::Invalid: return "invalid";
  }
  return "unknown";
}

double area_from_squared_sides(const std::array<double, 3>& x) {
  const double radicand = -x[0] * x[0] + 2.0 * x[0] * (x[1] + x[2]) - (x[1] - x[2]) * (x[1] - x[2]);
  return 0.25 * std::sqrt(std::max(0.0, radicand));
}

double heron_area(const std::array<double, 3>& s) {
  const double q = 0.5 * (s[0] + s[1] + s[2]);
  const double prod = q * (q - s[0]) * (q - s[1]) * (q - s[2]);
  return std::sqrt(std::max(0.0, prod));
}

AreaBounds area_bounds_sides(const std::array<double, 3>& s) {
  const std::array<double, 3> x{s[0] * s[0], s[1] * s[1], s[2] * s[2]};
  return {kSqrt3 / 4.0 * std::min({x[0], x[1], x[2]}), (x[0] + x[1] + x[2]) / (4.0 * kSqrt3)};
}

AreaBounds area_bounds(const BipartitionVector& v, double alpha) {
  return area_bounds_sides(v.powered(alpha));
}

TriangleReport triangle_area_sides(const std::array<double, 3>& sides, bool normalized) {
  TriangleReport r;
  r.sides = sides;
  r.normalized = normalized;
  r.semiperimeter = 0.5 * (sides[0] + sides[1] + sides[2]);
  r.check = triangle_check_sides(sides);
  const AreaBounds b = area_bounds_sides(sides);
  r.lower_bound = b.lower;
  r.upper_bound = b.upper;
  if (!r.check.all()) {
    r.classification = TriangleClass::Invalid;
    return r;
  }
  const std::array<double, 3> x{sides[0] * sides[0], sides[1] * sides[1], sides[2] * sides[2]};
  r.area = area_from_squared_sides(x);
  r.normalized_area = r.area * kAreaNormalization;

  const bool any_zero = sides[0] == 0.0 || sides[1] == 0.0 || sides[2] == 0.0;
  if (any_zero || r.area < kDegenerateArea) {
    const bool all_zero = sides[0] == 0.0 && sides[1] == 0.0 && sides[2] == 0.0;
    r.classification = all_zero ? TriangleClass::DegeneratePoint : TriangleClass::DegenerateLine;
    return r;
  }
  std::array<double, 3> cosines{};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    cosines[i] = (x[j] + x[k] - x[i]) / (2.0 * sides[j] * sides[k]);
  }
  r.cosines = cosines;
  const double min_cos = std::min({cosines[0], cosines[1], cosines[2]});
  if (min_cos < -kRightAngleTolerance) {
    r.classification = TriangleClass::Obtuse;
  } else if (min_cos <= kRightAngleTolerance) {
    r.classification = TriangleClass::Right;
  } else {
    r.classification = TriangleClass::Acute;
  }
  return r;
}

TriangleReport triangle_area(const BipartitionVector& v, double alpha, bool normalized) {
  for (double x : v.values) {
    if (x < 0.0) throw ArgumentError("bipartition entries must be nonnegative");
  }
  return triangle_area_sides(v.powered(alpha), normalized);
}

TriangleReport triangle_area(const PureState& state, const MeasureSpec& spec, bool normalized) {
  spec.validate();
  return triangle_area(bipartition_vector(state, spec), spec.alpha, normalized);
}

std::optional<double> state_area(const PureState& state, const MeasureSpec& spec, bool normalized) {
  const TriangleReport r = triangle_area(state, spec, normalized);
  if (!r.valid()) return std::nullopt;
  return r.value();
}

double gmc(const BipartitionVector& v) { return std::min({v.values[0], v.values[1], v.values[2]}); }

double gmc(const PureState& state) { return gmc(concurrence_vector(state)); }

HessianReport hessian_minors(const std::array<double, 3>& x, HessianCoordinates coords) {
  for (double v : x) {
    if (!(v > 0.0)) throw ArgumentError("hessian_minors needs three positive coordinates");
  }
  HessianReport r;
  r.coordinates = coords;
  const double x1 = x[0], x2 = x[1], x3 = x[2];

  if (coords == HessianCoordinates::E2Alpha) {
    // x are squared sides; the triangle relation applies to sqrt(x).
    const TriangleCheck tc = triangle_check_sides({std::sqrt(x1), std::sqrt(x2), std::sqrt(x3)});
    if (!tc.all()) throw ArgumentError("hessian_minors: coordinates do not form a triangle");
    if (area_from_squared_sides(x) < kDegenerateArea) {
      throw SingularError("hessian_minors: degenerate triangle (A = 0)");
    }
    Eigen::Matrix3d h;
    h << -2 * x2 * x3, x3 * (x1 + x2 - x3), x2 * (x1 + x3 - x2),
         x3 * (x1 + x2 - x3), -2 * x1 * x3, x1 * (x2 + x3 - x1),
         x2 * (x1 + x3 - x2), x1 * (x2 + x3 - x1), -2 * x1 * x2;
    r.matrix = h;
    r.minors[0] = h(0, 0);
    r.minors[1] = h.topLeftCorner<2, 2>().determinant();
    r.minors[2] = h.determinant();
    r.det_h = r.minors[2];
    const double scale = std::pow(std::max({x1, x2, x3}), 6);
    r.det_relative = std::abs(r.det_h) / scale;
    const double eps = 1e-12 * scale;
    r.negative_semidefinite = r.minors[0] <= eps && r.minors[1] >= -eps && std::abs(r.minors[2]) <= 1e-9 * scale;
    return r;
  }

  // x are the sides themselves.
  const TriangleCheck tc = triangle_check_sides(x);
  if (!tc.all()) throw ArgumentError("hessian_minors: sides do not form a triangle");
  const double a = area_from_squared_sides({x1 * x1, x2 * x2, x3 * x3});
  if (a < kDegenerateArea) throw SingularError("hessian_minors: degenerate triangle (A = 0)");

  const auto diag = [](double p, double s, double t) {
    const double d = s * s - t * t;
    return p * p * p * p * p * p + 3 * p * p * d * d - (s * s + t * t) * (3 * p * p * p * p + d * d);
  };
  const double x1s = x1 * x1, x2s = x2 * x2, x3s = x3 * x3;
  Eigen::Matrix3d h;
  h(0, 0) = diag(x1, x2, x3);
  h(1, 1) = diag(x2, x1, x3);
  h(2, 2) = diag(x3, x1, x2);
  h(0, 1) = h(1, 0) = -4 * x1 * x2 * x3s * (x3s - x1s - x2s);
  h(0, 2) = h(2, 0) = -4 * x1 * x2s * x3 * (x2s - x1s - x3s);
  h(1, 2) = h(2, 1) = -4 * x1s * x2 * x3 * (x1s - x2s - x3s);
  h /= 128.0 * a * a * a;
  r.matrix = h;
  r.minors[0] = h(0, 0);
  r.minors[1] = h.topLeftCorner<2, 2>().determinant();
  r.minors[2] = h.determinant();
  r.det_h = r.minors[2];
  r.det_closed_form = (x1s + x2s + x3s) / (32.0 * a);
  r.det_relative = std::abs(r.det_h - r.det_closed_form) / r.det_closed_form;
  // A 3x3 negative semidefinite matrix has det <= 0.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(h, Eigen::EigenvaluesOnly);
  r.negative_semidefinite = es.eigenvalues().maxCoeff() <= 1e-12 * h.cwiseAbs().maxCoeff();
  return r;
}

bool PolygonCheck::all() const {
  return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

PolygonCheck polygon_check(const PureState& state, const MeasureSpec& spec) {
  spec.validate();
  if (state.num_parties() < 3) throw ArgumentError("polygon_check needs at least three parties");
  switch (spec.effective_kind()) {
    case MeasureKind::Impurity:
    case MeasureKind::ConcurrenceSquared:
    case MeasureKind::VonNeumann:
    case MeasureKind::Tsallis: break;
    default:
      throw UnsupportedError("polygon_check needs a subadditive measure, got " + std::string(to_string(spec.kind)));
  }
  PolygonCheck out;
  const int n = static_cast<int>(state.num_parties());
  for (int p = 0; p < n; ++p) {
    out.values.push_back(std::pow(measure_of_state(spec, partial_trace(state, {p})), spec.alpha));
  }
  double total = 0.0;
  for (double v : out.values) total += v;
  for (double v : out.values) {
    const double slack = (total - v) - v;
    out.slack.push_back(slack);
    out.holds.push_back(slack >= -kSlackTolerance);
  }
  return out;
}

}  // namespace trient
