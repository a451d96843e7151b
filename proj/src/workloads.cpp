#include "spectra/workloads.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "spectra/errors.hpp"
#include "spectra/io.hpp"
#include "spectra/rng.hpp"

namespace spectra {

namespace {

constexpr std::array<std::pair<WorkloadKind, std::string_view>, 5> kKindNames{{
    {WorkloadKind::kBenchmark, "benchmark"},
    {WorkloadKind::kSyntheticSkewed, "synthetic_skewed"},
    {WorkloadKind::kCsvRaw, "csv_raw"},
    {WorkloadKind::kCsvDoublyStochastic, "csv_doubly_stochastic"},
    {WorkloadKind::kCsvMaxloadScaled, "csv_maxload_scaled"},
}};

void add_permutation(Matrix& m, const std::vector<int>& perm, double weight) {
  for (std::size_t i = 0; i < perm.size(); ++i) m(static_cast<Eigen::Index>(i), perm[i]) += weight;
}

}  // namespace

BenchmarkSpec BenchmarkSpec::with_flows(int flows, std::uint64_t seed) {
  BenchmarkSpec spec;
  spec.flows_per_port = flows;
  spec.large_count = std::max(1, flows / 4);
  spec.small_count = flows - spec.large_count;
  if (spec.small_count == 0) {
    spec.large_share = 1.0;
    spec.small_share = 0.0;
  }
  spec.seed = seed;
  return spec;
}

std::string_view to_string(WorkloadKind kind) {
  for (auto [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<WorkloadKind> parse_workload_kind(std::string_view text) {
  for (auto [k, name] : kKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

DemandMatrix gen_benchmark(const BenchmarkSpec& spec) {
  if (spec.n < 1) throw InvalidArgument("benchmark: n must be >= 1");
  if (spec.large_count < 0 || spec.small_count < 0 ||
      spec.large_count + spec.small_count != spec.flows_per_port || spec.flows_per_port < 1) {
    throw InvalidArgument("benchmark: large_count + small_count must equal flows_per_port");
  }
  if (spec.large_share < 0.0 || spec.small_share < 0.0 ||
      std::abs(spec.large_share + spec.small_share - 1.0) > 1e-12) {
    throw InvalidArgument("benchmark: flow shares must be nonnegative and sum to 1");
  }
  if ((spec.large_count == 0 && spec.large_share > 0.0) ||
      (spec.small_count == 0 && spec.small_share > 0.0)) {
    throw InvalidArgument("benchmark: a positive share needs at least one flow");
  }

  Rng rng(spec.seed);
  Matrix m = Matrix::Zero(spec.n, spec.n);
  for (int f = 0; f < spec.flows_per_port; ++f) {
    const bool large = f < spec.large_count;
    const double weight = large ? spec.large_share / spec.large_count
                                : spec.small_share / spec.small_count;
    add_permutation(m, rng.permutation(spec.n), weight);
  }
  return add_gaussian_noise(DemandMatrix(std::move(m)), spec.noise_sigma,
                            derive_seed(spec.seed, 0x6e6f697365ULL));
}

DemandMatrix gen_synthetic_skewed(int n, double ring_weight, int background_flows,
                                  std::uint64_t seed, double noise_sigma) {
  if (n < 1) throw InvalidArgument("synthetic: n must be >= 1");
  if (!(ring_weight > 0.0 && ring_weight < 1.0)) {
    throw InvalidArgument("synthetic: ring_weight must lie in (0, 1)");
  }
  if (background_flows < 0) throw InvalidArgument("synthetic: background_flows must be >= 0");

  Rng rng(seed);
  Matrix m = Matrix::Zero(n, n);
  const auto ring = PermutationMatching::cyclic_shift(n, 1);
  add_permutation(m, {ring.targets().begin(), ring.targets().end()},
                  ring_weight);
  for (int f = 0; f < background_flows; ++f) {
    add_permutation(m, rng.permutation(n), (1.0 - ring_weight) / background_flows);
  }
  DemandMatrix noisy = add_gaussian_noise(DemandMatrix(std::move(m)), noise_sigma,
                                          derive_seed(seed, 0x6e6f697365ULL));
  return normalize_doubly_stochastic(noisy).matrix;
}

DemandMatrix load_csv(const std::filesystem::path& path, WorkloadKind kind, double noise_sigma,
                      std::uint64_t seed) {
  DemandMatrix raw = read_matrix_file(path);
  switch (kind) {
    case WorkloadKind::kCsvRaw:
      return add_gaussian_noise(raw, noise_sigma, seed);
    case WorkloadKind::kCsvDoublyStochastic:
      return add_gaussian_noise(normalize_doubly_stochastic(raw).matrix, noise_sigma, seed);
    case WorkloadKind::kCsvMaxloadScaled:
      return add_gaussian_noise(scale_to_max_load(raw), noise_sigma, seed);
    default:
      throw InvalidArgument("load_csv: kind must be one of the csv_* workloads");
  }
}

}  // namespace spectra
