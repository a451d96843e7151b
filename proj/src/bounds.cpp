#include "spectra/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "spectra/errors.hpp"
#include "spectra/rng.hpp"

namespace spectra {

LineStats LineStats::from_values(int index, std::vector<double> values) {
  std::erase_if(values, [](double v) { return !(v > 0.0); });
  std::sort(values.begin(), values.end(), std::greater<>());
  LineStats st;
  st.index = index;
  st.k = static_cast<int>(values.size());
  for (double v : values) st.w += v;
  st.sorted_values = std::move(values);
  return st;
}

double lb1(const LineStats& st, int s, double delta) {
  if (st.k < 1) throw InvalidArgument("lb1: line has no nonzero elements");
  if (s < 1) throw InvalidArgument("lb1: s must be >= 1");
  return (st.w + delta * std::max(st.k, s)) / s;
}

std::optional<double> lb2(const LineStats& st, int s, double delta) {
  if (s < 1 || st.k != s) return std::nullopt;
  const auto x = [&](int j) {  // 1-based, zero past the end
    return j <= st.k ? st.sorted_values[static_cast<std::size_t>(j - 1)] : 0.0;
  };
  const double per_switch = st.w / s;
  double best = x(1);
  best = std::min(best, std::max({x(2), per_switch + delta / s, x(s) + delta}));
  for (int m = 2; m <= s * s; ++m) {
    best = std::min(best, std::max(x(m + 1), (st.w + m * delta) / s));
  }
  return delta + best;
}

BoundReport combined_lower_bound(const DemandMatrix& demand, int s, double delta) {
  if (demand.all_zero()) throw InvalidArgument("combined_lower_bound: demand is all zero");
  if (s < 1) throw InvalidArgument("combined_lower_bound: s must be >= 1");
  if (!(delta >= 0.0)) throw InvalidArgument("combined_lower_bound: delta must be >= 0");

  const int n = demand.n();
  const Matrix& d = demand.values();
  BoundReport report;
  report.combined = -std::numeric_limits<double>::infinity();
  for (int index = 0; index < 2 * n; ++index) {
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      values[static_cast<std::size_t>(j)] = index < n ? d(index, j) : d(j, index - n);
    }
    LineStats st = LineStats::from_values(index, std::move(values));
    if (st.k == 0) continue;
    LineBound lb{std::move(st), 0.0, std::nullopt};
    lb.lb1 = lb1(lb.stats, s, delta);
    lb.lb2 = lb2(lb.stats, s, delta);
    if (lb.best() > report.combined) {
      report.combined = lb.best();
      report.argmax_line = index;
    }
    report.per_line.push_back(std::move(lb));
  }
  return report;
}

double degree_prob_exact(int n, int k) {
  if (k < 1 || k > n) throw InvalidArgument("degree_prob_exact: need 1 <= k <= n");
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= static_cast<double>(n - j) / n;
  return p;
}

double degree_prob_model(int n, int k) {
  const double p = degree_prob_exact(n, k);
  return 1.0 - std::pow(1.0 - p, 2.0 * n);
}

double estimate_degree_prob(int n, int k, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("estimate_degree_prob: trials must be >= 1");
  if (k < 1 || k > n) throw InvalidArgument("estimate_degree_prob: need 1 <= k <= n");
  int hits = 0;
  SupportMatrix occupied(n, n);
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    occupied.setConstant(false);
    for (int f = 0; f < k; ++f) {
      const std::vector<int> perm = rng.permutation(n);
      for (int i = 0; i < n; ++i) occupied(i, perm[static_cast<std::size_t>(i)]) = true;
    }
    if (degree(occupied) == k) ++hits;
  }
  return static_cast<double>(hits) / trials;
}

}  // namespace spectra
