#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "trient/states.hpp"

namespace trient {

using Rng = std::mt19937_64;

/// Seed for shard `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return seed + index; }

/// Haar-random pure state: normalized vector of i.i.d. complex Gaussians.
PureState haar_state(const std::vector<int>& dims, Rng& rng);
/// Haar-random n x n unitary (QR of a Ginibre matrix with the R-diagonal
/// phases divided out).
CMatrix haar_unitary(int n, Rng& rng);
/// Haar-random 2x2 Kraus pair {K1, K2} with K1^dag K1 + K2^dag K2 = I:
/// the two 2x2 blocks of the first two columns of a 4x4 Haar unitary.
std::vector<CMatrix> random_two_outcome_measurement(Rng& rng);

double uniform(Rng& rng, double lo, double hi);

}  // namespace trient
