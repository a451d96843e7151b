#include "spectra/schedule.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

std::size_t argmax(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::size_t argmin(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

double SwitchProgram::load(double delta) const {
  double total = 0.0;
  for (const auto& c : configs) total += delta + c.weight;
  return total;
}

std::vector<double> ParallelSchedule::loads() const {
  std::vector<double> out;
  out.reserve(switches.size());
  for (const auto& sw : switches) out.push_back(sw.load(delta));
  return out;
}

std::size_t ParallelSchedule::config_count() const {
  std::size_t total = 0;
  for (const auto& sw : switches) total += sw.configs.size();
  return total;
}

std::size_t ParallelSchedule::max_configs_one_switch() const {
  std::size_t best = 0;
  for (const auto& sw : switches) best = std::max(best, sw.configs.size());
  return best;
}

WeightedDecomposition ParallelSchedule::flatten() const {
  WeightedDecomposition dec;
  for (const auto& sw : switches) {
    dec.terms.insert(dec.terms.end(), sw.configs.begin(), sw.configs.end());
  }
  return dec;
}

ParallelSchedule schedule_lpt(const WeightedDecomposition& dec, int s, double delta) {
  if (s < 1) throw InvalidArgument("schedule_lpt: s must be >= 1");
  if (!(delta >= 0.0)) throw InvalidArgument("schedule_lpt: delta must be >= 0");

  std::vector<std::size_t> order(dec.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dec.terms[a].weight > dec.terms[b].weight;
  });

  ParallelSchedule out;
  out.delta = delta;
  out.switches.resize(static_cast<std::size_t>(s));
  std::vector<double> load(static_cast<std::size_t>(s), 0.0);
  for (std::size_t idx : order) {
    const std::size_t h = argmin(load);
    out.switches[h].configs.push_back(dec.terms[idx]);
    load[h] += delta + dec.terms[idx].weight;
  }
  return out;
}

ParallelSchedule equalize(const ParallelSchedule& schedule, EqualizeStats* stats) {
  ParallelSchedule out = schedule;
  const double delta = out.delta;
  std::vector<double> load = out.loads();

  EqualizeStats local;
  local.cap = static_cast<int>(4 * std::max<std::size_t>(1, out.switches.size()) *
                               std::max<std::size_t>(1, out.config_count()));

  while (!out.switches.empty()) {
    const std::size_t hmax = argmax(load);
    const std::size_t hmin = argmin(load);
    const double gap = load[hmax] - load[hmin];
    // The relative slack only matters for delta = 0, where repeated halving
    // would otherwise chase rounding noise until the cap.
    if (!(gap > delta + 1e-12 * load[hmax])) break;

    auto& configs = out.switches[hmax].configs;
    if (configs.empty()) break;
    const auto z = static_cast<std::size_t>(
        std::max_element(configs.begin(), configs.end(),
                         [](const Configuration& a, const Configuration& b) { return a.weight < b.weight; }) -
        configs.begin());

    const double mu = (load[hmax] + load[hmin] + delta) / 2.0;
    const double tau = load[hmax] - mu;
    if (!(configs[z].weight > tau)) break;

    if (local.iterations >= local.cap) {
      local.hit_cap = true;
      std::cerr << "warning: equalize stopped at its iteration cap (" << local.cap << ")\n";
      break;
    }
    configs[z].weight -= tau;
    out.switches[hmin].configs.push_back({configs[z].matching, tau});
    load[hmax] -= tau;
    load[hmin] += delta + tau;
    ++local.iterations;
  }

  if (stats != nullptr) *stats = local;
  return out;
}

double makespan(const ParallelSchedule& schedule) {
  double best = 0.0;
  for (const auto& sw : schedule.switches) best = std::max(best, sw.load(schedule.delta));
  return best;
}

bool verify(const ParallelSchedule& schedule, const DemandMatrix& demand, double tol) {
  return covers(schedule.flatten(), demand, tol);
}

}  // namespace spectra
