#pragma once

#include <cstddef>
#include <cstdint>

#include "trient/measures.hpp"
#include "trient/states.hpp"

namespace trient {

/// Largest rank the estimator accepts: the full three-qubit space.
inline constexpr int kMaxConvexRoofRank = 8;

struct ConvexRoofEstimate {
  /// min over sampled decompositions of sum_m p_m A(psi_m); an upper bound
  /// on the convex roof.
  double value = 0.0;
  int rank = 0;
  /// Number of decomposition elements used by sampled candidates.
  int elements = 0;
  std::size_t evaluations = 0;
};

/// Upper bound on the convex-roof triangle area of a three-party mixed
/// state. Candidate 0 is the eigendecomposition; later candidates are either
/// fresh Haar isometries mixing the scaled eigenvectors or Givens-rotation
/// perturbations of the current best, accepted on improvement. The sequence
/// of candidates does not depend on `budget`, so the result is nonincreasing
/// in `budget` for a fixed seed.
///
/// Throws ArgumentError unless rho has exactly three parties (dims), and
/// UnsupportedError when its rank exceeds kMaxConvexRoofRank.
ConvexRoofEstimate convex_roof_area_estimate(const DensityOperator& rho, const MeasureSpec& spec, std::size_t budget,
                                             std::uint64_t seed, bool normalized = false);

}  // namespace trient
