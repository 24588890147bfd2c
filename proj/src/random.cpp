#include "trient/random.hpp"

#include <cmath>

#include "trient/errors.hpp"

namespace trient {

namespace {

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

PureState haar_state(const std::vector<int>& dims, Rng& rng) {
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = complex_gaussian(rng);
  return PureState::normalized(dims, std::move(v));
}

CMatrix haar_unitary(int n, Rng& rng) {
  if (n < 1) throw ArgumentError("haar_unitary: n must be positive");
  CMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) z(i, j) = complex_gaussian(rng);
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

std::vector<CMatrix> random_two_outcome_measurement(Rng& rng) {
  // Columns 0..1 of a 4x4 unitary form an isometry C^2 -> C^2 (x) C^2; its
  // two 2x2 blocks are a complete Kraus pair.
  const CMatrix u = haar_unitary(4, rng);
  return {u.block(0, 0, 2, 2), u.block(2, 0, 2, 2)};
}

}  // namespace trient
