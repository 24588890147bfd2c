#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's linear-algebra paths.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Reduced density matrix of one party by explicit summation over all basis
/// index pairs. Party 0 is the most significant digit.
inline CMatrix reduced(const CVector& amps, const std::vector<int>& dims, int party) {
  const int n = static_cast<int>(dims.size());
  const int d = dims[static_cast<std::size_t>(party)];
  CMatrix rho = CMatrix::Zero(d, d);
  const auto digits = [&](long idx) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
      out[static_cast<std::size_t>(k)] = static_cast<int>(idx % dims[static_cast<std::size_t>(k)]);
      idx /= dims[static_cast<std::size_t>(k)];
    }
    return out;
  };
  for (long i = 0; i < amps.size(); ++i) {
    const auto di = digits(i);
    for (long j = 0; j < amps.size(); ++j) {
      const auto dj = digits(j);
      bool same_rest = true;
      for (int k = 0; k < n; ++k) {
        if (k != party && di[static_cast<std::size_t>(k)] != dj[static_cast<std::size_t>(k)]) same_rest = false;
      }
      if (same_rest) rho(di[static_cast<std::size_t>(party)], dj[static_cast<std::size_t>(party)]) += amps[i] * std::conj(amps[j]);
    }
  }
  return rho;
}

/// Smaller eigenvalue of a 2x2 density matrix from the quadratic formula.
inline double smaller_eigenvalue(const CMatrix& rho) {
  const double tr = (rho(0, 0) + rho(1, 1)).real();
  const double det = (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
  return 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
}

inline double binary_entropy(double l) {
  if (l <= 0.0) return 0.0;
  return -l * std::log2(l) - (1 - l) * std::log2(1 - l);
}

/// Heron's product in long double.
inline double heron(double a, double b, double c) {
  const long double s = (static_cast<long double>(a) + b + c) / 2;
  const long double v = s * (s - a) * (s - b) * (s - c);
  return v <= 0 ? 0.0 : static_cast<double>(std::sqrt(v));
}

/// Coherent state with real displacement in a Fock basis truncated at
/// `cutoff` photons.
inline Eigen::VectorXd coherent(double alpha, int cutoff) {
  Eigen::VectorXd v(cutoff + 1);
  double c = std::exp(-0.5 * alpha * alpha);
  for (int n = 0; n <= cutoff; ++n) {
    v[n] = c;
    c *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return v;
}

/// Impurity of p0 |a1><a1| + p1 |a2><a2| built as a Fock-space matrix.
inline double fock_mode_impurity(double a1, double a2, double p0, double p1, int cutoff = 40) {
  const Eigen::VectorXd v1 = coherent(a1, cutoff), v2 = coherent(a2, cutoff);
  const Eigen::MatrixXd rho = p0 * v1 * v1.transpose() + p1 * v2 * v2.transpose();
  return 1.0 - (rho * rho).trace();
}

/// Central-difference Hessian.
inline Eigen::Matrix3d fd_hessian(const std::function<double(const std::array<double, 3>&)>& f,
                                  const std::array<double, 3>& x, double h) {
  Eigen::Matrix3d out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      auto at = [&](double si, double sj) {
        auto y = x;
        y[i] += si * h;
        y[j] += sj * h;
        return f(y);
      };
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * h * h);
    }
  }
  return out;
}

}  // namespace oracle
