#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace spectra {

/// Seedable generator with a stable, platform-independent output stream.
///
/// Raw bits come from std::mt19937_64, whose sequence is fixed by the C++
/// standard. The distribution helpers below are implemented here rather than
/// through <random> distributions, whose outputs differ between standard
/// library vendors. Bump kVersion if any derived stream changes.
class Rng {
 public:
  static constexpr int kVersion = 1;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal deviate (Box-Muller, one value per call).
  double normal();

  /// Uniformly random permutation of 0..n-1 (Fisher-Yates).
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; mixes (seed, stream) into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace spectra
