#include "trient/convex_roof.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "trient/errors.hpp"
#include "trient/random.hpp"
#include "trient/triangle.hpp"

namespace trient {

namespace {

constexpr double kRankCutoff = 1e-12;

// Columns of `scaled` are sqrt(mu_i) |e_i>; row m of `mix` gives
// |w_m> = sum_i mix(m, i) scaled.col(i).
double decomposition_average(const CMatrix& scaled, const CMatrix& mix, const std::vector<int>& dims,
                             const MeasureSpec& spec, bool normalized) {
  double total = 0.0;
  for (Eigen::Index m = 0; m < mix.rows(); ++m) {
    const CVector w = scaled * mix.row(m).transpose();
    const double p = w.squaredNorm();
    if (p < 1e-15) continue;
    const auto area = state_area(PureState::normalized(dims, w), spec, normalized);
    if (!area) return std::numeric_limits<double>::infinity();
    total += p * *area;
  }
  return total;
}

}  // namespace

ConvexRoofEstimate convex_roof_area_estimate(const DensityOperator& rho, const MeasureSpec& spec, std::size_t budget,
                                             std::uint64_t seed, bool normalized) {
  spec.validate();
  const std::vector<int>& dims = rho.dims();
  if (dims.size() != 3) throw ArgumentError("convex_roof_area_estimate needs a three-party density operator");
  if (budget < 1) throw ArgumentError("convex_roof_area_estimate needs budget >= 1");

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = solver.eigenvalues().size() - 1; i >= 0; --i) {
    if (solver.eigenvalues()[i] > kRankCutoff) support.push_back(i);
  }
  const int rank = static_cast<int>(support.size());
  if (rank > kMaxConvexRoofRank) {
    throw UnsupportedError("convex_roof_area_estimate supports rank <= " + std::to_string(kMaxConvexRoofRank) +
                           ", got " + std::to_string(rank));
  }
  CMatrix scaled(rho.dim(), rank);
  for (int j = 0; j < rank; ++j) {
    scaled.col(j) = std::sqrt(solver.eigenvalues()[support[static_cast<std::size_t>(j)]]) *
                    solver.eigenvectors().col(support[static_cast<std::size_t>(j)]);
  }

  ConvexRoofEstimate out;
  out.rank = rank;
  out.elements = rank == 1 ? 1 : 2 * rank;

  const CMatrix eigen_mix = CMatrix::Identity(rank, rank);
  out.value = decomposition_average(scaled, eigen_mix, dims, spec, normalized);
  out.evaluations = 1;
  if (rank == 1) return out;  // the decomposition is unique up to phases

  Rng rng(seed);
  const int elements = out.elements;
  // Start the local search from the eigendecomposition padded with empty
  // elements.
  CMatrix best_mix = CMatrix::Zero(elements, rank);
  best_mix.topRows(rank) = eigen_mix;
  double best = out.value;
  double step = 0.5;
  while (out.evaluations < budget) {
    CMatrix trial;
    const bool fresh = uniform(rng, 0.0, 1.0) < 0.25;
    if (fresh) {
      trial = haar_unitary(elements, rng).leftCols(rank);
    } else {
      // Givens rotation between two decomposition elements keeps the
      // columns orthonormal.
      trial = best_mix;
      std::uniform_int_distribution<int> pick(0, elements - 1);
      const int r1 = pick(rng);
      int r2 = pick(rng);
      if (r2 == r1) r2 = (r1 + 1) % elements;
      const double theta = step * uniform(rng, -1.0, 1.0);
      const Complex phase = std::polar(1.0, uniform(rng, -std::numbers::pi, std::numbers::pi));
      const Eigen::RowVectorXcd a = trial.row(r1), b = trial.row(r2);
      trial.row(r1) = std::cos(theta) * a - phase * std::sin(theta) * b;
      trial.row(r2) = std::conj(phase) * std::sin(theta) * a + std::cos(theta) * b;
    }
    const double v = decomposition_average(scaled, trial, dims, spec, normalized);
    ++out.evaluations;
    if (v < best) {
      best = v;
      best_mix = std::move(trial);
    } else if (!fresh) {
      step = std::max(step * 0.97, 1e-4);
    }
  }
  out.value = best;
  return out;
}

}  // namespace trient
