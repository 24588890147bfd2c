#pragma once

#include <array>
#include <vector>

#include "trient/states.hpp"
#include "trient/triangle.hpp"

namespace trient {

/// c0 |0 0 alpha1> + c1 |1 1 alpha2>: two qubits and one mode carrying a
/// coherent state with real displacement. The qubit pairs are orthogonal, so
/// the norm is |c0|^2 + |c1|^2 whatever the coherent overlap.
struct HybridState {
  Complex c0{0.70710678118654752440, 0.0};
  Complex c1{0.70710678118654752440, 0.0};
  double alpha1 = 0.0;
  double alpha2 = 0.0;

  /// Throws ValidationError unless |c0|^2 + |c1|^2 = 1 within 1e-12 and the
  /// displacements are finite.
  void validate() const;
};

/// <alpha1|alpha2> = exp(-(alpha1 - alpha2)^2 / 2).
double coherent_overlap(double alpha1, double alpha2);

struct HybridImpurities {
  /// Impurity 1 - Tr rho^2 of parties A, B, C.
  std::array<double, 3> impurity{};
  /// Nonzero spectrum of rho_C from the 2x2 Gram problem, descending.
  std::array<double, 2> mode_spectrum{};
  double overlap = 0.0;
};

HybridImpurities hybrid_impurities(const HybridState& h);

struct HybridSweepPoint {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  std::array<double, 3> impurity{};
  double area = 0.0;
  double min_slack = 0.0;
  bool triangle_holds = false;
};

struct HybridSweep {
  int points_per_axis = 0;
  double lo = 0.0;
  double hi = 0.0;
  double alpha = 0.5;
  bool normalized = true;
  /// Row-major: alpha1 outer, alpha2 inner.
  std::vector<HybridSweepPoint> points;

  double max_area() const;
  double max_diagonal_area() const;
  bool all_hold() const;
};

/// Triangle area of the impurity vector over an n x n grid on [lo, hi]^2,
/// with equal branch weights. Throws ArgumentError for n < 2 or lo >= hi.
HybridSweep hybrid_area_sweep(int n, double lo, double hi, double alpha, bool normalized = true);

}  // namespace trient
