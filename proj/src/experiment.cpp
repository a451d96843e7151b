#include "spectra/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "spectra/baseline.hpp"
#include "spectra/bounds.hpp"
#include "spectra/decompose.hpp"
#include "spectra/errors.hpp"
#include "spectra/io.hpp"
#include "spectra/rng.hpp"

namespace spectra {

namespace {

std::string trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trimmed(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_value(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    throw ParseError("invalid value '" + text + "'", line);
  }
  return value;
}

}  // namespace

ParallelSchedule spectra_schedule(const DemandMatrix& demand, int s, double delta, bool equalize_enabled) {
  const DecomposeResult dec = decompose(demand);
  ParallelSchedule sched = schedule_lpt(dec.decomposition, s, delta);
  return equalize_enabled ? equalize(sched) : sched;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSpectra: return "spectra";
    case Algorithm::kSpectraNoEqualize: return "spectra_no_equalize";
    case Algorithm::kBaseline: return "baseline";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::kSpectra, Algorithm::kSpectraNoEqualize, Algorithm::kBaseline}) {
    if (to_string(a) == text) return a;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(text) + "'");
}

ParallelSchedule run_algorithm(Algorithm algorithm, const DemandMatrix& demand, int s, double delta) {
  switch (algorithm) {
    case Algorithm::kSpectra: return spectra_schedule(demand, s, delta, true);
    case Algorithm::kSpectraNoEqualize: return spectra_schedule(demand, s, delta, false);
    case Algorithm::kBaseline: return baseline_schedule(demand, s, delta);
  }
  throw InvalidArgument("unknown algorithm");
}

DemandMatrix make_workload(const WorkloadParams& p, std::uint64_t seed) {
  switch (p.kind) {
    case WorkloadKind::kBenchmark: {
      BenchmarkSpec spec = BenchmarkSpec::with_flows(p.flows, seed);
      spec.n = p.n;
      spec.noise_sigma = p.noise_sigma;
      return gen_benchmark(spec);
    }
    case WorkloadKind::kSyntheticSkewed:
      return gen_synthetic_skewed(p.n, p.ring_weight, p.background_flows, seed, p.noise_sigma);
    default:
      return load_csv(p.input, p.kind, p.noise_sigma, seed);
  }
}

std::vector<std::uint64_t> ExperimentConfig::instance_seeds() const {
  if (!seeds.empty()) return seeds;
  std::vector<std::uint64_t> out;
  for (int i = 0; i < seed_count; ++i) out.push_back(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
  return out;
}

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw InvalidArgument("config: no algorithms");
  if (delta_grid.empty() || s_grid.empty()) throw InvalidArgument("config: empty grid");
  if (seeds.empty() && seed_count < 1) throw InvalidArgument("config: need at least one seed");
  for (double d : delta_grid) {
    if (!(d >= 0.0)) throw InvalidArgument("config: delta must be >= 0");
  }
  for (int s : s_grid) {
    if (s < 1) throw InvalidArgument("config: s must be >= 1");
  }
  const bool csv = workload.kind != WorkloadKind::kBenchmark &&
                   workload.kind != WorkloadKind::kSyntheticSkewed;
  if (csv && workload.input.empty()) throw InvalidArgument("config: csv workloads need 'input'");
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw.substr(0, raw.find('#'));
    line = trimmed(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", number);
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));

    if (key == "workload") {
      const auto kind = parse_workload_kind(value);
      if (!kind) throw ParseError("unknown workload '" + value + "'", number);
      cfg.workload.kind = *kind;
    } else if (key == "input") {
      cfg.workload.input = value;
    } else if (key == "n") {
      cfg.workload.n = parse_value<int>(value, number);
    } else if (key == "flows") {
      cfg.workload.flows = parse_value<int>(value, number);
    } else if (key == "noise") {
      cfg.workload.noise_sigma = parse_value<double>(value, number);
    } else if (key == "ring_weight") {
      cfg.workload.ring_weight = parse_value<double>(value, number);
    } else if (key == "background_flows") {
      cfg.workload.background_flows = parse_value<int>(value, number);
    } else if (key == "algorithms") {
      cfg.algorithms.clear();
      try {
        for (const auto& a : split_list(value)) cfg.algorithms.push_back(parse_algorithm(a));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), number);
      }
    } else if (key == "deltas") {
      cfg.delta_grid.clear();
      for (const auto& d : split_list(value)) cfg.delta_grid.push_back(parse_value<double>(d, number));
    } else if (key == "s") {
      cfg.s_grid.clear();
      for (const auto& s : split_list(value)) cfg.s_grid.push_back(parse_value<int>(s, number));
    } else if (key == "seeds") {
      cfg.seed_count = parse_value<int>(value, number);
    } else if (key == "seed_list") {
      cfg.seeds.clear();
      for (const auto& s : split_list(value)) cfg.seeds.push_back(parse_value<std::uint64_t>(s, number));
    } else if (key == "master_seed") {
      cfg.master_seed = parse_value<std::uint64_t>(value, number);
    } else if (key == "output") {
      cfg.output = value;
    } else {
      throw ParseError("unknown key '" + key + "'", number);
    }
  }
  return cfg;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::string tag(to_string(cfg.workload.kind));
  std::vector<ResultRow> rows;

  for (std::uint64_t seed : cfg.instance_seeds()) {
    const DemandMatrix demand = make_workload(cfg.workload, seed);
    const std::uint64_t hash = matrix_hash(demand);
    for (double delta : cfg.delta_grid) {
      for (int s : cfg.s_grid) {
        const double lb = combined_lower_bound(demand, s, delta).combined;
        for (Algorithm algorithm : cfg.algorithms) {
          const auto start = std::chrono::steady_clock::now();
          const ParallelSchedule sched = run_algorithm(algorithm, demand, s, delta);
          const auto stop = std::chrono::steady_clock::now();

          ResultRow row;
          row.workload_tag = tag;
          row.algorithm = std::string(to_string(algorithm));
          row.delta = delta;
          row.s = s;
          row.seed = seed;
          row.matrix_hash = hash;
          row.makespan = makespan(sched);
          row.num_configs_total = sched.config_count();
          row.max_configs_one_switch = sched.max_configs_one_switch();
          row.lower_bound = lb;
          row.ratio_to_lb = lb > 0.0 ? row.makespan / lb : 0.0;
          row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
          rows.push_back(std::move(row));
        }
      }
    }
  }

  if (!cfg.output.empty()) {
    std::ostringstream os;
    write_results_csv(os, rows);
    write_text_file(cfg.output, os.str());
  }
  return rows;
}

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows, bool include_timing) {
  out << "workload_tag,algorithm,delta,s,seed,matrix_hash,makespan,num_configs_total,"
         "max_configs_one_switch,lower_bound,ratio_to_lb";
  if (include_timing) out << ",wall_time_ms";
  out << '\n';
  for (const auto& r : rows) {
    out << r.workload_tag << ',' << r.algorithm << ',' << format_double(r.delta) << ',' << r.s << ','
        << r.seed << ',' << std::hex << r.matrix_hash << std::dec << ',' << format_double(r.makespan)
        << ',' << r.num_configs_total << ',' << r.max_configs_one_switch << ','
        << format_double(r.lower_bound) << ',' << format_double(r.ratio_to_lb);
    if (include_timing) out << ',' << format_double(r.wall_time_ms);
    out << '\n';
  }
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
  std::vector<SummaryRow> out;
  std::map<std::tuple<std::string, double, int>, std::size_t> index;
  for (const auto& r : rows) {
    const auto key = std::make_tuple(r.algorithm, r.delta, r.s);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, out.size()).first;
      out.push_back({r.algorithm, r.delta, r.s, 0, 0.0, 0.0});
    }
    SummaryRow& sum = out[it->second];
    ++sum.runs;
    sum.mean_makespan += r.makespan;
    sum.mean_lower_bound += r.lower_bound;
  }
  for (auto& sum : out) {
    sum.mean_makespan /= sum.runs;
    sum.mean_lower_bound /= sum.runs;
  }
  return out;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "algorithm,delta,s,runs,mean_makespan,mean_lower_bound\n";
  for (const auto& r : rows) {
    out << r.algorithm << ',' << format_double(r.delta) << ',' << r.s << ',' << r.runs << ','
        << format_double(r.mean_makespan) << ',' << format_double(r.mean_lower_bound) << '\n';
  }
}

}  // namespace spectra
