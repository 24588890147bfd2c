#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace trient {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Normalized amplitude vector over an ordered list of subsystems.
///
/// Basis ordering follows ket notation: party 0 is the most significant
/// digit, so for three qubits the amplitude of |abc> sits at index
/// 4a + 2b + c.
class PureState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws ValidationError if any dim < 2, the length does not match, or
  /// the vector is not normalized within kNormTolerance.
  PureState(std::vector<int> dims, CVector amplitudes);

  /// Normalizes `amplitudes` first; throws ValidationError on a zero vector.
  static PureState normalized(std::vector<int> dims, CVector amplitudes);

  using KetTerm = std::pair<std::string_view, Complex>;

  /// Builds a state from kets such as {"000", c0}, {"111", c1}; each
  /// character is the digit of one party. Empty `dims` means qubits. The
  /// result is normalized.
  static PureState from_kets(std::initializer_list<KetTerm> terms,
                             std::vector<int> dims = {});

  const std::vector<int>& dims() const { return dims_; }
  const CVector& amplitudes() const { return amplitudes_; }
  std::size_t num_parties() const { return dims_.size(); }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }

 private:
  std::vector<int> dims_;
  CVector amplitudes_;
};

/// Hermitian, positive-semidefinite, unit-trace matrix. Validated on
/// construction; the stored matrix is the Hermitian part of the input.
class DensityOperator {
 public:
  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kEigenTolerance = 1e-10;
  static constexpr double kTraceTolerance = 1e-12;

  explicit DensityOperator(CMatrix matrix);
  /// As above, and records the subsystem dimensions the operator lives on.
  DensityOperator(CMatrix matrix, std::vector<int> dims);

  static DensityOperator from_pure(const PureState& state);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }
  /// Subsystem dimensions if known, otherwise {dim()}.
  const std::vector<int>& dims() const { return dims_; }

  /// Tr(rho^2).
  double purity() const;

 private:
  CMatrix matrix_;
  std::vector<int> dims_;
};

/// Sorted (descending) eigenvalues of a reduced state, clipped to [0, 1].
struct SchmidtProfile {
  std::vector<double> spectrum;
  /// Smallest eigenvalue; for qubits also clipped to [0, 1/2].
  double lambda_min = 0.0;
};

/// Reduced operator on the parties listed in `keep` (any order; the result
/// uses declaration order). Throws ArgumentError if `keep` is empty, equals
/// the full party set, repeats a party, or names an unknown party.
DensityOperator partial_trace(const PureState& state, std::span<const int> keep);
DensityOperator partial_trace(const PureState& state, std::initializer_list<int> keep);

/// Throws ValidationError when the operator is non-Hermitian beyond
/// tolerance (only reachable through the raw-matrix overload).
SchmidtProfile eigen_spectrum(const DensityOperator& rho);
SchmidtProfile eigen_spectrum(const CMatrix& matrix);

/// 1 - Tr(rho^2).
double impurity(const DensityOperator& rho);

/// Smallest reduced eigenvalue of each single party, in party order.
std::vector<double> local_lambdas(const PureState& state);

// Named states used throughout the fixtures.
PureState ghz_state(double theta);
PureState w_state(Complex a, Complex b, Complex c);
PureState product_zero_state(std::size_t num_qubits);

}  // namespace trient
