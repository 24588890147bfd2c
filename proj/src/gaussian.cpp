#include "trient/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "trient/errors.hpp"

namespace trient {

namespace {

constexpr double kMaxSqueezing = 1.5;

Eigen::MatrixXd passive_symplectic(int n, Rng& rng) {
  const CMatrix u = haar_unitary(n, rng);
  Eigen::MatrixXd o(2 * n, 2 * n);
  // Interleaved ordering: (q_i, p_i) block of mode i against mode j is
  // [[Re u_ij, -Im u_ij], [Im u_ij, Re u_ij]].
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = u(i, j).real(), im = u(i, j).imag();
      o(2 * i, 2 * j) = re;
      o(2 * i, 2 * j + 1) = -im;
      o(2 * i + 1, 2 * j) = im;
      o(2 * i + 1, 2 * j + 1) = re;
    }
  }
  return o;
}

}  // namespace

Eigen::MatrixXd symplectic_form(int n) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    omega(2 * i, 2 * i + 1) = 1.0;
    omega(2 * i + 1, 2 * i) = -1.0;
  }
  return omega;
}

GaussianCovariance::GaussianCovariance(std::array<int, 3> modes, Eigen::MatrixXd sigma)
    : modes_(modes), sigma_(std::move(sigma)) {
  for (int m : modes_) {
    if (m < 1) throw ValidationError("each party needs at least one mode");
  }
  const int n = total_modes();
  if (sigma_.rows() != 2 * n || sigma_.cols() != 2 * n) {
    throw ValidationError("covariance matrix must be " + std::to_string(2 * n) + "x" + std::to_string(2 * n));
  }
  if ((sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
    throw ValidationError("covariance matrix is not symmetric");
  }
  sigma_ = 0.5 * (sigma_ + sigma_.transpose());
  const CMatrix test = sigma_.cast<Complex>() + Complex(0.0, 1.0) * symplectic_form(n).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(test, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kUncertaintyTolerance) {
    throw ValidationError("covariance matrix violates the uncertainty relation sigma + i Omega >= 0");
  }
}

GaussianCovariance GaussianCovariance::vacuum(std::array<int, 3> modes) {
  const int n = modes[0] + modes[1] + modes[2];
  return GaussianCovariance(modes, Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

Eigen::MatrixXd GaussianCovariance::sub(std::span<const int> parties) const {
  std::array<bool, 3> use{};
  for (int p : parties) {
    if (p < 0 || p > 2) throw ArgumentError("party index must be 0, 1 or 2");
    use[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Eigen::Index> idx;
  int offset = 0;
  for (std::size_t p = 0; p < 3; ++p) {
    if (use[p]) {
      for (int k = 0; k < 2 * modes_[p]; ++k) idx.push_back(2 * offset + k);
    }
    offset += modes_[p];
  }
  if (idx.empty()) throw ArgumentError("subsystem must contain at least one party");
  const auto n = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = sigma_(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  return out;
}

double GaussianCovariance::det(std::span<const int> parties) const { return sub(parties).determinant(); }

double GaussianCovariance::det(std::initializer_list<int> parties) const {
  return det(std::span<const int>(parties.begin(), parties.size()));
}

bool GaussianCovariance::is_pure() const { return std::abs(sigma_.determinant() - 1.0) <= kPurityTolerance; }

double gaussian_impurity(const GaussianCovariance& cm, std::span<const int> parties) {
  const double d = cm.det(parties);
  if (d < 1.0 - GaussianCovariance::kPurityTolerance) {
    throw ValidationError("unphysical covariance block: det = " + std::to_string(d) + " < 1");
  }
  return std::max(0.0, 1.0 - 1.0 / std::sqrt(d));
}

double gaussian_impurity(const GaussianCovariance& cm, std::initializer_list<int> parties) {
  return gaussian_impurity(cm, std::span<const int>(parties.begin(), parties.size()));
}

double gaussian_renyi2(const GaussianCovariance& cm, std::span<const int> parties) {
  const double d = cm.det(parties);
  if (d < 1.0 - GaussianCovariance::kPurityTolerance) {
    throw ValidationError("unphysical covariance block: det = " + std::to_string(d) + " < 1");
  }
  return std::max(0.0, std::log2(d));
}

double gaussian_renyi2(const GaussianCovariance& cm, std::initializer_list<int> parties) {
  return gaussian_renyi2(cm, std::span<const int>(parties.begin(), parties.size()));
}

GaussianCovariance random_pure_tripartite_cm(std::array<int, 3> modes, Rng& rng) {
  for (int m : modes) {
    if (m < 1) throw ArgumentError("each party needs at least one mode");
  }
  const int n = modes[0] + modes[1] + modes[2];
  Eigen::MatrixXd squeeze = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    const double r = uniform(rng, 0.0, kMaxSqueezing);
    squeeze(2 * i, 2 * i) = std::exp(r);
    squeeze(2 * i + 1, 2 * i + 1) = std::exp(-r);
  }
  const Eigen::MatrixXd o1 = passive_symplectic(n, rng);
  const Eigen::MatrixXd o2 = passive_symplectic(n, rng);
  const Eigen::MatrixXd s = o1 * squeeze * o2;
  Eigen::MatrixXd sigma = s * s.transpose();
  return GaussianCovariance(modes, 0.5 * (sigma + sigma.transpose()));
}

GaussianCovariance random_pure_tripartite_cm(std::array<int, 3> modes, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure_tripartite_cm(modes, rng);
}

GaussianCovariance tmsv_with_vacuum(double r) {
  const double c = std::cosh(2.0 * r), s = std::sinh(2.0 * r);
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(6, 6);
  sigma(0, 0) = sigma(1, 1) = sigma(2, 2) = sigma(3, 3) = c;
  sigma(0, 2) = sigma(2, 0) = s;
  sigma(1, 3) = sigma(3, 1) = -s;
  return GaussianCovariance({1, 1, 1}, sigma);
}

bool GaussianDetReport::complements_equal(double rel_tol) const {
  return std::all_of(complement_residual.begin(), complement_residual.end(), [&](double r) { return r <= rel_tol; });
}

bool GaussianDetReport::products_hold(double rel_tol) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (product_slack[i] < -rel_tol * det_single[i]) return false;
  }
  return true;
}

bool GaussianDetReport::impurity_triangle_holds(double tol) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (impurity[(i + 1) % 3] + impurity[(i + 2) % 3] - impurity[i] < -tol) return false;
  }
  return true;
}

bool GaussianDetReport::renyi2_triangle_holds(double tol) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (renyi2[(i + 1) % 3] + renyi2[(i + 2) % 3] - renyi2[i] < -tol) return false;
  }
  return true;
}

bool GaussianDetReport::impurity_chain_holds(double tol) const {
  return std::all_of(impurity_chain_slack.begin(), impurity_chain_slack.end(), [&](double s) { return s >= -tol; });
}

GaussianDetReport gaussian_det_relations(const GaussianCovariance& cm) {
  GaussianDetReport r;
  r.det_total = cm.sigma().determinant();
  if (std::abs(r.det_total - 1.0) > GaussianCovariance::kPurityTolerance) {
    throw ValidationError("gaussian_det_relations needs a pure covariance matrix (det = " +
                          std::to_string(r.det_total) + ")");
  }
  for (int i = 0; i < 3; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    r.det_single[ui] = cm.det({i});
    r.det_complement[ui] = cm.det({std::min(j, k), std::max(j, k)});
    r.complement_residual[ui] =
        std::abs(r.det_single[ui] - r.det_complement[ui]) / std::max(r.det_single[ui], r.det_complement[ui]);
    r.impurity[ui] = gaussian_impurity(cm, {i});
    r.renyi2[ui] = gaussian_renyi2(cm, {i});
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    r.product_slack[i] = r.det_single[j] * r.det_single[k] - r.det_single[i];
    r.impurity_chain_slack[i] = r.impurity[j] + r.impurity[k] - r.impurity[i] - r.impurity[j] * r.impurity[k];
  }
  return r;
}

}  // namespace trient
