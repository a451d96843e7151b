#pragma once

#include <cstddef>
#include <vector>

#include "spectra/matrix.hpp"

namespace spectra {

/// Ordered configurations run by one switch.
struct SwitchProgram {
  std::vector<Configuration> configs;

  /// Sum over configurations of (delta + weight).
  double load(double delta) const;
};

/// Programs for s parallel switches sharing reconfiguration delay `delta`.
struct ParallelSchedule {
  std::vector<SwitchProgram> switches;
  double delta = 0.0;

  int s() const noexcept { return static_cast<int>(switches.size()); }
  std::vector<double> loads() const;
  std::size_t config_count() const;
  std::size_t max_configs_one_switch() const;

  /// All configurations, switch by switch, as one decomposition.
  WeightedDecomposition flatten() const;
};

/// Longest-processing-time assignment: configurations in non-increasing
/// weight order (stable on original index), each to the least-loaded switch
/// (lowest index on ties). Throws InvalidArgument for s < 1 or delta < 0.
ParallelSchedule schedule_lpt(const WeightedDecomposition& dec, int s, double delta);

struct EqualizeStats {
  int iterations = 0;  // splits performed
  int cap = 0;
  bool hit_cap = false;
};

/// Repeatedly splits the heaviest configuration of the most-loaded switch and
/// moves the excess to the least-loaded one, leaving both at
/// mu = (L_max + L_min + delta) / 2. Stops once the load gap is within delta
/// or the heaviest configuration cannot supply the excess. The loop is capped
/// at 4 * s * (configuration count) splits; hitting the cap logs a warning to
/// stderr and returns the schedule reached so far.
ParallelSchedule equalize(const ParallelSchedule& schedule, EqualizeStats* stats = nullptr);

/// Largest switch load; 0 for an empty schedule.
double makespan(const ParallelSchedule& schedule);

/// True iff the union of all switch configurations covers D within tol.
bool verify(const ParallelSchedule& schedule, const DemandMatrix& demand, double tol);

}  // namespace spectra
