#include "trient/hybrid.hpp"

#include <algorithm>
#include <cmath>

#include "trient/errors.hpp"

namespace trient {

void HybridState::validate() const {
  if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) throw ValidationError("hybrid displacements must be finite");
  const double norm = std::norm(c0) + std::norm(c1);
  if (std::abs(norm - 1.0) > 1e-12) throw ValidationError("hybrid amplitudes must satisfy |c0|^2 + |c1|^2 = 1");
}

double coherent_overlap(double alpha1, double alpha2) {
  const double d = alpha1 - alpha2;
  return std::exp(-0.5 * d * d);
}

HybridImpurities hybrid_impurities(const HybridState& h) {
  h.validate();
  HybridImpurities out;
  const double p0 = std::norm(h.c0), p1 = std::norm(h.c1);
  const double s = coherent_overlap(h.alpha1, h.alpha2);
  out.overlap = s;
  // rho_A and rho_B are diag(p0, p1).
  const double qubit = 1.0 - p0 * p0 - p1 * p1;
  // rho_C = p0 |a1><a1| + p1 |a2><a2| shares its nonzero spectrum with
  // diag(p) G, G the Gram matrix [[1, s], [s, 1]].
  const double tr = p0 + p1;
  const double det = p0 * p1 * (1.0 - s * s);
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  out.mode_spectrum = {0.5 * (tr + disc), 0.5 * (tr - disc)};
  const double mode = 1.0 - out.mode_spectrum[0] * out.mode_spectrum[0] - out.mode_spectrum[1] * out.mode_spectrum[1];
  out.impurity = {std::max(0.0, qubit), std::max(0.0, qubit), std::max(0.0, mode)};
  return out;
}

double HybridSweep::max_area() const {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, p.area);
  return m;
}

double HybridSweep::max_diagonal_area() const {
  double m = 0.0;
  for (int i = 0; i < points_per_axis; ++i) {
    m = std::max(m, points[static_cast<std::size_t>(i * points_per_axis + i)].area);
  }
  return m;
}

bool HybridSweep::all_hold() const {
  return std::all_of(points.begin(), points.end(), [](const HybridSweepPoint& p) { return p.triangle_holds; });
}

HybridSweep hybrid_area_sweep(int n, double lo, double hi, double alpha, bool normalized) {
  if (n < 2) throw ArgumentError("hybrid_area_sweep needs at least 2 points per axis");
  if (!(lo < hi)) throw ArgumentError("hybrid_area_sweep needs lo < hi");
  if (!(alpha > 0.0)) throw ArgumentError("alpha must be positive");
  HybridSweep sweep;
  sweep.points_per_axis = n;
  sweep.lo = lo;
  sweep.hi = hi;
  sweep.alpha = alpha;
  sweep.normalized = normalized;
  sweep.points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      HybridState h;
      h.alpha1 = lo + i * step;
      h.alpha2 = lo + j * step;
      const HybridImpurities imp = hybrid_impurities(h);
      std::array<double, 3> sides{};
      for (std::size_t k = 0; k < 3; ++k) sides[k] = std::pow(imp.impurity[k], alpha);
      const TriangleReport report = triangle_area_sides(sides, normalized);
      HybridSweepPoint p;
      p.alpha1 = h.alpha1;
      p.alpha2 = h.alpha2;
      p.impurity = imp.impurity;
      p.area = report.value();
      p.min_slack = report.check.min_slack();
      p.triangle_holds = report.check.all();
      sweep.points.push_back(p);
    }
  }
  return sweep;
}

}  // namespace trient
