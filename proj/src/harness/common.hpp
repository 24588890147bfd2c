#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "trient/harness.hpp"
#include "trient/locc.hpp"
#include "trient/random.hpp"
#include "trient/states.hpp"

namespace trient::harness::detail {

/// Fixed shard count: work is split the same way whatever the thread count,
/// so outputs depend only on the seed.
inline constexpr std::size_t kShards = 16;
/// Counterexamples kept per suite.
inline constexpr std::size_t kMaxCounterexamples = 8;

Json complex_json(Complex z);
Json amplitudes_json(const PureState& state);
Json matrix_json(const CMatrix& m);
Json measurement_json(const LocalMeasurement& m);

inline std::size_t shard_begin(std::size_t shard, std::size_t n) { return shard * n / kShards; }

/// Runs fn(shard, rng, begin, end) for every shard, shard s seeded with
/// derive_seed(seed, s), and returns the per-shard results in shard order.
template <class Result, class Fn>
std::vector<Result> run_sharded(std::size_t samples, std::uint64_t seed, unsigned threads, Fn fn) {
  std::vector<Result> results(kShards);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t s = next++; s < kShards; s = next++) {
      try {
        Rng rng(derive_seed(seed, s));
        results[s] = fn(s, rng, shard_begin(s, samples), shard_begin(s + 1, samples));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n = std::min<unsigned>(n, kShards);
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace trient::harness::detail
