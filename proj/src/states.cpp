#include "trient/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "trient/errors.hpp"

namespace trient {

namespace {

std::size_t product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         [](std::size_t acc, int d) { return acc * static_cast<std::size_t>(d); });
}

void check_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw ValidationError("state needs at least one subsystem");
  for (int d : dims) {
    if (d < 2) throw ValidationError("subsystem dimension must be >= 2, got " + std::to_string(d));
  }
}

}  // namespace

PureState::PureState(std::vector<int> dims, CVector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  check_dims(dims_);
  if (static_cast<std::size_t>(amplitudes_.size()) != product(dims_)) {
    throw ValidationError("amplitude count " + std::to_string(amplitudes_.size()) +
                          " does not match product of dims " + std::to_string(product(dims_)));
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw ValidationError("state is not normalized: |psi|^2 = " + std::to_string(norm2));
  }
}

PureState PureState::normalized(std::vector<int> dims, CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw ValidationError("cannot normalize a zero vector");
  amplitudes /= norm;
  return PureState(std::move(dims), std::move(amplitudes));
}

PureState PureState::from_kets(std::initializer_list<KetTerm> terms, std::vector<int> dims) {
  if (terms.size() == 0) throw ArgumentError("from_kets needs at least one term");
  if (dims.empty()) dims.assign(terms.begin()->first.size(), 2);
  check_dims(dims);
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(product(dims)));
  for (const auto& [ket, coeff] : terms) {
    if (ket.size() != dims.size()) throw ArgumentError("ket '" + std::string(ket) + "' has wrong length");
    std::size_t index = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) {
      const int digit = ket[p] - '0';
      if (digit < 0 || digit >= dims[p]) throw ArgumentError("ket '" + std::string(ket) + "' digit out of range");
      index = index * static_cast<std::size_t>(dims[p]) + static_cast<std::size_t>(digit);
    }
    amps[static_cast<Eigen::Index>(index)] += coeff;
  }
  return normalized(std::move(dims), std::move(amps));
}

DensityOperator::DensityOperator(CMatrix matrix) : DensityOperator(matrix, {}) {}

DensityOperator::DensityOperator(CMatrix matrix, std::vector<int> dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw ValidationError("density operator must be a non-empty square matrix");
  }
  if (dims_.empty()) {
    dims_ = {static_cast<int>(matrix_.rows())};
  } else if (product(dims_) != static_cast<std::size_t>(matrix_.rows())) {
    throw ValidationError("density operator dims do not match its size");
  }
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance) {
    throw ValidationError("density operator is not Hermitian (max deviation " + std::to_string(herm) + ")");
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint());
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw ValidationError("density operator trace is " + std::to_string(tr));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kEigenTolerance) {
    throw ValidationError("density operator has a negative eigenvalue " +
                          std::to_string(solver.eigenvalues().minCoeff()));
  }
}

DensityOperator DensityOperator::from_pure(const PureState& state) {
  const CVector& v = state.amplitudes();
  return DensityOperator(v * v.adjoint(), state.dims());
}

double DensityOperator::purity() const {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  return matrix_.cwiseAbs2().sum();
}

DensityOperator partial_trace(const PureState& state, std::span<const int> keep) {
  const auto& dims = state.dims();
  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(dims.size(), false);
  for (int p : keep) {
    if (p < 0 || p >= n) throw ArgumentError("partial_trace: party " + std::to_string(p) + " out of range");
    if (kept[static_cast<std::size_t>(p)]) throw ArgumentError("partial_trace: party listed twice");
    kept[static_cast<std::size_t>(p)] = true;
  }
  if (keep.empty() || keep.size() == dims.size()) {
    throw ArgumentError("partial_trace: keep must be a nonempty strict subset of the parties");
  }

  std::vector<int> keep_dims;
  std::size_t dk = 1, dr = 1;
  for (int p = 0; p < n; ++p) {
    if (kept[static_cast<std::size_t>(p)]) {
      keep_dims.push_back(dims[static_cast<std::size_t>(p)]);
      dk *= static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]);
    } else {
      dr *= static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]);
    }
  }

  // Reshape the amplitudes into a (kept x rest) matrix M; rho = M M^dagger.
  CMatrix m(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dr));
  std::vector<int> digits(dims.size(), 0);
  const CVector& amps = state.amplitudes();
  for (Eigen::Index idx = 0; idx < amps.size(); ++idx) {
    std::size_t row = 0, col = 0;
    for (int p = 0; p < n; ++p) {
      const auto d = static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]);
      const auto digit = static_cast<std::size_t>(digits[static_cast<std::size_t>(p)]);
      if (kept[static_cast<std::size_t>(p)]) {
        row = row * d + digit;
      } else {
        col = col * d + digit;
      }
    }
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amps[idx];
    for (int p = n - 1; p >= 0; --p) {
      if (++digits[static_cast<std::size_t>(p)] < dims[static_cast<std::size_t>(p)]) break;
      digits[static_cast<std::size_t>(p)] = 0;
    }
  }
  CMatrix rho = m * m.adjoint();
  return DensityOperator(0.5 * (rho + rho.adjoint()), std::move(keep_dims));
}

DensityOperator partial_trace(const PureState& state, std::initializer_list<int> keep) {
  return partial_trace(state, std::span<const int>(keep.begin(), keep.size()));
}

SchmidtProfile eigen_spectrum(const CMatrix& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw ValidationError("eigen_spectrum: matrix must be square");
  }
  const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > DensityOperator::kHermitianTolerance) {
    throw ValidationError("eigen_spectrum: matrix is not Hermitian");
  }
  SchmidtProfile out;
  if (matrix.rows() == 2) {
    // Closed form keeps the qubit path free of iterative round-off.
    const double a = matrix(0, 0).real(), d = matrix(1, 1).real();
    const double off = std::abs(matrix(0, 1));
    const double mean = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), off);
    out.spectrum = {mean + rad, mean - rad};
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    out.spectrum.assign(ev.data(), ev.data() + ev.size());
    std::sort(out.spectrum.begin(), out.spectrum.end(), std::greater<>());
  }
  for (double& v : out.spectrum) {
    if (v < -DensityOperator::kEigenTolerance) {
      throw ValidationError("eigen_spectrum: eigenvalue " + std::to_string(v) + " below tolerance");
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  out.lambda_min = out.spectrum.back();
  if (out.spectrum.size() == 2) out.lambda_min = std::min(out.lambda_min, 0.5);
  return out;
}

SchmidtProfile eigen_spectrum(const DensityOperator& rho) { return eigen_spectrum(rho.matrix()); }

double impurity(const DensityOperator& rho) { return 1.0 - rho.purity(); }

std::vector<double> local_lambdas(const PureState& state) {
  std::vector<double> out;
  out.reserve(state.num_parties());
  for (int p = 0; p < static_cast<int>(state.num_parties()); ++p) {
    out.push_back(eigen_spectrum(partial_trace(state, {p})).lambda_min);
  }
  return out;
}

PureState ghz_state(double theta) {
  return PureState::from_kets({{"000", std::cos(theta)}, {"111", std::sin(theta)}});
}

PureState w_state(Complex a, Complex b, Complex c) {
  return PureState::from_kets({{"100", a}, {"010", b}, {"001", c}});
}

PureState product_zero_state(std::size_t num_qubits) {
  CVector amps = CVector::Zero(Eigen::Index{1} << num_qubits);
  amps[0] = 1.0;
  return PureState(std::vector<int>(num_qubits, 2), std::move(amps));
}

}  // namespace trient
