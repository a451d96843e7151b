#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "spectra/matrix.hpp"

namespace spectra {

/// Sum of m random weighted permutations: a few large flows sharing
/// large_share of each port's bandwidth, the rest sharing small_share.
struct BenchmarkSpec {
  int n = 100;
  int flows_per_port = 16;
  int large_count = 4;
  double large_share = 0.7;
  int small_count = 12;
  double small_share = 0.3;
  double noise_sigma = 0.003;
  std::uint64_t seed = 0;

  /// Keeps the 4:12 large/small proportion for a different flow count.
  static BenchmarkSpec with_flows(int flows, std::uint64_t seed);
};

enum class WorkloadKind {
  kBenchmark,
  kSyntheticSkewed,
  kCsvRaw,
  kCsvDoublyStochastic,
  kCsvMaxloadScaled,
};

std::string_view to_string(WorkloadKind kind);
std::optional<WorkloadKind> parse_workload_kind(std::string_view text);

/// Throws InvalidArgument when the spec is inconsistent.
DemandMatrix gen_benchmark(const BenchmarkSpec& spec);

/// Dominant ring i -> i+1 of weight ring_weight plus background_flows random
/// permutations sharing the rest, noised with sigma and rescaled to doubly
/// stochastic.
DemandMatrix gen_synthetic_skewed(int n, double ring_weight, int background_flows,
                                  std::uint64_t seed, double noise_sigma = 0.003);

/// Reads a matrix file and applies the preprocessing selected by `kind`
/// (one of the csv_* kinds). Noise is applied after scaling when sigma > 0.
DemandMatrix load_csv(const std::filesystem::path& path, WorkloadKind kind, double noise_sigma,
                      std::uint64_t seed);

}  // namespace spectra
