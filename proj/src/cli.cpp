#include "spectra/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "spectra/bounds.hpp"
#include "spectra/decompose.hpp"
#include "spectra/errors.hpp"
#include "spectra/experiment.hpp"
#include "spectra/io.hpp"
#include "spectra/workloads.hpp"

namespace spectra {

namespace {

struct MatrixInput {
  std::string path;
  std::string kind = "csv_raw";
  double noise = 0.0;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", path, "matrix file (n lines of n comma-separated values)")->required();
    cmd->add_option("--kind", kind, "csv_raw | csv_doubly_stochastic | csv_maxload_scaled");
    cmd->add_option("--noise", noise, "Gaussian noise sigma added to nonzero entries");
    cmd->add_option("--seed", seed, "noise seed");
  }

  DemandMatrix load() const {
    const auto k = parse_workload_kind(kind);
    if (!k) throw InvalidArgument("unknown --kind '" + kind + "'");
    return load_csv(path, *k, noise, seed);
  }
};

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallel optical circuit switch scheduling toolkit", "spectra"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a workload matrix");
  std::string gen_kind = "benchmark", gen_out;
  int gen_n = 100, gen_flows = 16, gen_background = 4;
  double gen_noise = 0.003, gen_ring = 0.7;
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", gen_kind, "benchmark | synthetic_skewed");
  gen->add_option("--n", gen_n, "port count");
  gen->add_option("--flows", gen_flows, "benchmark flows per port");
  gen->add_option("--noise", gen_noise, "noise sigma");
  gen->add_option("--ring-weight", gen_ring, "synthetic_skewed ring weight");
  gen->add_option("--background", gen_background, "synthetic_skewed background flows");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "decompose a matrix into weighted matchings");
  MatrixInput dec_in;
  std::string dec_out;
  dec_in.attach(dec_cmd);
  dec_cmd->add_option("--out", dec_out, "output path (default stdout)");

  // schedule
  auto* sched_cmd = app.add_subcommand("schedule", "schedule a matrix onto s switches");
  MatrixInput sched_in;
  std::string sched_out, sched_algorithm = "spectra";
  int sched_s = 1;
  double sched_delta = 0.0;
  bool no_equalize = false;
  sched_in.attach(sched_cmd);
  sched_cmd->add_option("--s", sched_s, "number of parallel switches")->required();
  sched_cmd->add_option("--delta", sched_delta, "reconfiguration delay")->required();
  sched_cmd->add_flag("--no-equalize", no_equalize, "skip the equalize pass");
  sched_cmd->add_option("--algorithm", sched_algorithm, "spectra | baseline");
  sched_cmd->add_option("--out", sched_out, "output path (default stdout)");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "per-line makespan lower bounds as CSV");
  MatrixInput bounds_in;
  std::string bounds_out;
  int bounds_s = 1;
  double bounds_delta = 0.0;
  bounds_in.attach(bounds_cmd);
  bounds_cmd->add_option("--s", bounds_s, "number of parallel switches")->required();
  bounds_cmd->add_option("--delta", bounds_delta, "reconfiguration delay")->required();
  bounds_cmd->add_option("--out", bounds_out, "output path (default stdout)");

  // degree-prob
  auto* prob_cmd = app.add_subcommand("degree-prob", "probability that k random permutations sum to degree k");
  int prob_n = 100, prob_k = 16, prob_trials = 1000;
  std::uint64_t prob_seed = 0;
  prob_cmd->add_option("--n", prob_n, "port count")->required();
  prob_cmd->add_option("--k", prob_k, "number of permutations")->required();
  prob_cmd->add_option("--trials", prob_trials, "Monte Carlo trials");
  prob_cmd->add_option("--seed", prob_seed, "Monte Carlo seed");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "run a sweep from a config file");
  std::string exp_config, exp_out, exp_summary;
  std::optional<std::uint64_t> exp_seed;
  exp_cmd->add_option("--config", exp_config, "key = value config file")->required();
  exp_cmd->add_option("--seed", exp_seed, "master seed (overrides the config)");
  exp_cmd->add_option("--out", exp_out, "results CSV (overrides the config)");
  exp_cmd->add_option("--summary", exp_summary, "also write per-point means to this CSV");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check that a schedule file covers a matrix");
  MatrixInput verify_in;
  std::string verify_schedule;
  double verify_tol = 1e-9;
  verify_in.attach(verify_cmd);
  verify_cmd->add_option("--schedule", verify_schedule, "schedule file")->required();
  verify_cmd->add_option("--tol", verify_tol, "coverage tolerance");

  std::vector<const char*> argv{"spectra"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitValidation;
  }

  try {
    if (*gen) {
      const auto kind = parse_workload_kind(gen_kind);
      DemandMatrix m = DemandMatrix::zeros(1);
      if (kind == WorkloadKind::kBenchmark) {
        BenchmarkSpec spec = BenchmarkSpec::with_flows(gen_flows, gen_seed);
        spec.n = gen_n;
        spec.noise_sigma = gen_noise;
        m = gen_benchmark(spec);
      } else if (kind == WorkloadKind::kSyntheticSkewed) {
        m = gen_synthetic_skewed(gen_n, gen_ring, gen_background, gen_seed, gen_noise);
      } else {
        throw InvalidArgument("gen supports --kind benchmark or synthetic_skewed");
      }
      std::ostringstream os;
      write_matrix(os, m);
      emit(gen_out, os.str(), out);
    } else if (*dec_cmd) {
      const DemandMatrix m = dec_in.load();
      const DecomposeResult r = decompose(m);
      std::ostringstream os;
      write_decomposition(os, r.decomposition, m.n());
      emit(dec_out, os.str(), out);
    } else if (*sched_cmd) {
      const DemandMatrix m = sched_in.load();
      Algorithm algorithm = parse_algorithm(sched_algorithm);
      if (algorithm == Algorithm::kSpectra && no_equalize) algorithm = Algorithm::kSpectraNoEqualize;
      const ParallelSchedule sched = run_algorithm(algorithm, m, sched_s, sched_delta);
      std::ostringstream os;
      write_schedule(os, sched);
      emit(sched_out, os.str(), out);
    } else if (*bounds_cmd) {
      const DemandMatrix m = bounds_in.load();
      const BoundReport report = combined_lower_bound(m, bounds_s, bounds_delta);
      std::ostringstream os;
      os << "line_index,kind,k,w,lb1,lb2,combined\n";
      for (const auto& line : report.per_line) {
        const bool row = line.stats.index < m.n();
        os << line.stats.index << ',' << (row ? "row" : "col") << ',' << line.stats.k << ','
           << format_double(line.stats.w) << ',' << format_double(line.lb1) << ','
           << (line.lb2 ? format_double(*line.lb2) : std::string()) << ','
           << format_double(line.best()) << '\n';
      }
      emit(bounds_out, os.str(), out);
      err << "lower_bound=" << format_double(report.combined) << " line=" << report.argmax_line << '\n';
    } else if (*prob_cmd) {
      out << "n,k,trials,exact,model,monte_carlo\n"
          << prob_n << ',' << prob_k << ',' << prob_trials << ','
          << format_double(degree_prob_exact(prob_n, prob_k)) << ','
          << format_double(degree_prob_model(prob_n, prob_k)) << ','
          << format_double(estimate_degree_prob(prob_n, prob_k, prob_trials, prob_seed)) << '\n';
    } else if (*exp_cmd) {
      ExperimentConfig cfg = parse_experiment_config(read_text_file(exp_config));
      if (exp_seed) cfg.master_seed = *exp_seed;
      if (!exp_out.empty()) cfg.output = exp_out;
      const bool to_stdout = cfg.output.empty();
      const auto rows = run_experiment(cfg);
      if (to_stdout) write_results_csv(out, rows);
      if (!exp_summary.empty()) {
        std::ostringstream os;
        write_summary_csv(os, summarize(rows));
        write_text_file(exp_summary, os.str());
      }
    } else if (*verify_cmd) {
      const DemandMatrix m = verify_in.load();
      const ParallelSchedule sched = read_schedule_file(verify_schedule);
      const bool ok = verify(sched, m, verify_tol);
      out << (ok ? "PASS" : "FAIL") << " makespan=" << format_double(makespan(sched)) << '\n';
      return ok ? kExitOk : kExitValidation;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace spectra
