#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/matrix.hpp"
#include "spectra/schedule.hpp"
#include "spectra/workloads.hpp"

namespace spectra {

/// Decompose, LPT-schedule onto s switches, then (optionally) equalize.
ParallelSchedule spectra_schedule(const DemandMatrix& demand, int s, double delta, bool equalize_enabled = true);

enum class Algorithm { kSpectra, kSpectraNoEqualize, kBaseline };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);

/// Runs one algorithm end to end.
ParallelSchedule run_algorithm(Algorithm algorithm, const DemandMatrix& demand, int s, double delta);

struct WorkloadParams {
  WorkloadKind kind = WorkloadKind::kBenchmark;
  int n = 100;
  int flows = 16;                 // benchmark flows per port
  double noise_sigma = 0.003;     // benchmark / synthetic / csv noise
  double ring_weight = 0.7;       // synthetic_skewed
  int background_flows = 4;       // synthetic_skewed
  std::filesystem::path input;    // csv_* kinds
};

/// Builds the instance for one sweep seed.
DemandMatrix make_workload(const WorkloadParams& params, std::uint64_t seed);

struct ExperimentConfig {
  WorkloadParams workload;
  std::vector<Algorithm> algorithms{Algorithm::kSpectra, Algorithm::kBaseline};
  std::vector<double> delta_grid{0.0025, 0.005, 0.01, 0.02, 0.04, 0.08, 0.16, 0.32, 0.64};
  std::vector<int> s_grid{2, 4, 8};
  int seed_count = 50;                 // used when `seeds` is empty
  std::vector<std::uint64_t> seeds;    // explicit instance seeds
  std::uint64_t master_seed = 1;
  std::filesystem::path output;

  /// Instance seeds: the explicit list, or derive_seed(master_seed, i).
  std::vector<std::uint64_t> instance_seeds() const;

  /// Throws InvalidArgument on empty grids, delta < 0 or s < 1.
  void validate() const;
};

/// Parses flat `key = value` text; '#' starts a comment. Keys: workload,
/// input, n, flows, noise, ring_weight, background_flows, algorithms,
/// deltas, s, seeds, seed_list, master_seed, output.
ExperimentConfig parse_experiment_config(std::string_view text);

struct ResultRow {
  std::string workload_tag;
  std::string algorithm;
  double delta = 0.0;
  int s = 0;
  std::uint64_t seed = 0;
  std::uint64_t matrix_hash = 0;
  double makespan = 0.0;
  std::size_t num_configs_total = 0;
  std::size_t max_configs_one_switch = 0;
  double lower_bound = 0.0;
  double ratio_to_lb = 0.0;
  double wall_time_ms = 0.0;
};

/// Cartesian sweep seed x delta x s x algorithm, in that nesting order. Every
/// algorithm sees the same matrix for a given seed. Writes the CSV to
/// cfg.output when it is set.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

/// `include_timing = false` drops wall_time_ms, giving byte-stable output.
void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows,
                       bool include_timing = true);

struct SummaryRow {
  std::string algorithm;
  double delta = 0.0;
  int s = 0;
  int runs = 0;
  double mean_makespan = 0.0;
  double mean_lower_bound = 0.0;
};

/// Arithmetic means over seeds per (algorithm, delta, s), in first-seen order.
std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace spectra
