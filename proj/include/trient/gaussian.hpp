#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "trient/random.hpp"

namespace trient {

/// Covariance matrix of a three-party Gaussian state in the interleaved
/// quadrature basis (q1, p1, q2, p2, ...), with the vacuum normalized to the
/// identity (hbar = 1 conventions, pure iff det = 1).
class GaussianCovariance {
 public:
  static constexpr double kSymmetryTolerance = 1e-10;
  static constexpr double kUncertaintyTolerance = 1e-9;
  static constexpr double kPurityTolerance = 1e-8;

  /// Throws ValidationError if sigma is not symmetric, has the wrong size,
  /// or violates sigma + i Omega >= 0.
  GaussianCovariance(std::array<int, 3> modes, Eigen::MatrixXd sigma);

  static GaussianCovariance vacuum(std::array<int, 3> modes = {1, 1, 1});

  const std::array<int, 3>& modes() const { return modes_; }
  const Eigen::MatrixXd& sigma() const { return sigma_; }
  int total_modes() const { return modes_[0] + modes_[1] + modes_[2]; }

  /// Principal submatrix for the listed parties (0 = A, 1 = B, 2 = C).
  Eigen::MatrixXd sub(std::span<const int> parties) const;
  double det(std::span<const int> parties) const;
  double det(std::initializer_list<int> parties) const;
  bool is_pure() const;

 private:
  std::array<int, 3> modes_;
  Eigen::MatrixXd sigma_;
};

/// Standard symplectic form for n interleaved modes.
Eigen::MatrixXd symplectic_form(int n);

/// 1 - 1/sqrt(det sigma_sub). Throws ValidationError when det < 1 - 1e-8.
double gaussian_impurity(const GaussianCovariance& cm, std::span<const int> parties);
double gaussian_impurity(const GaussianCovariance& cm, std::initializer_list<int> parties);
/// log2 det sigma_sub (= -2 log2 Tr rho^2).
double gaussian_renyi2(const GaussianCovariance& cm, std::span<const int> parties);
double gaussian_renyi2(const GaussianCovariance& cm, std::initializer_list<int> parties);

/// sigma = S S^T with S = O1 Z O2: passive orthogonal-symplectic O_i from Haar
/// unitaries and single-mode squeezers with r ~ U[0, 1.5].
GaussianCovariance random_pure_tripartite_cm(std::array<int, 3> modes, std::uint64_t seed);
GaussianCovariance random_pure_tripartite_cm(std::array<int, 3> modes, Rng& rng);

/// Two-mode squeezed vacuum on (A, B), vacuum on C; one mode each.
GaussianCovariance tmsv_with_vacuum(double r);

struct GaussianDetReport {
  double det_total = 0.0;
  /// det sigma_A, det sigma_B, det sigma_C.
  std::array<double, 3> det_single{};
  /// det sigma_BC, det sigma_AC, det sigma_AB (complement of each single).
  std::array<double, 3> det_complement{};
  /// |det_i - det_complement_i| / max(det_i, det_complement_i).
  std::array<double, 3> complement_residual{};
  /// det_j det_k - det_i (>= 0 expected).
  std::array<double, 3> product_slack{};
  std::array<double, 3> impurity{};
  std::array<double, 3> renyi2{};
  /// I_j + I_k - I_i - I_j I_k (>= 0 expected).
  std::array<double, 3> impurity_chain_slack{};

  bool complements_equal(double rel_tol = 1e-8) const;
  bool products_hold(double rel_tol = 1e-8) const;
  bool impurity_triangle_holds(double tol = 1e-9) const;
  bool renyi2_triangle_holds(double tol = 1e-9) const;
  bool impurity_chain_holds(double tol = 1e-10) const;
};

/// Throws ValidationError when the CM is not pure.
GaussianDetReport gaussian_det_relations(const GaussianCovariance& cm);

}  // namespace trient
