#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spectra/matrix.hpp"

namespace spectra {

/// Nonzero statistics of one row or column. Index i < n is row i; index
/// n + j is column j.
struct LineStats {
  int index = 0;
  int k = 0;
  double w = 0.0;
  std::vector<double> sorted_values;  // non-increasing

  static LineStats from_values(int index, std::vector<double> values);
};

/// Makespan lower bound from a single line, valid for any k >= 1:
/// (w + delta * max(k, s)) / s. Throws InvalidArgument when k == 0.
double lb1(const LineStats& stats, int s, double delta);

/// Sharper bound for lines with exactly s nonzeros; std::nullopt otherwise.
///
///   delta + min( x1,
///                max(x2, (w + delta)/s, x_s + delta),
///                min_{2 <= m <= s^2} max(x_{m+1}, (w + m delta)/s) )
///
/// with x_j = 0 for j > s. Branch m counts reconfigurations beyond the first
/// s configurations; with m of them at least s - m elements stay whole.
std::optional<double> lb2(const LineStats& stats, int s, double delta);

struct LineBound {
  LineStats stats;
  double lb1 = 0.0;
  std::optional<double> lb2;

  double best() const { return lb2 ? std::max(lb1, *lb2) : lb1; }
};

struct BoundReport {
  std::vector<LineBound> per_line;  // nonempty lines only, by index
  double combined = 0.0;
  int argmax_line = -1;
};

/// Maximum of lb1/lb2 over all 2n lines of D.
/// Throws InvalidArgument for all-zero D, s < 1 or delta < 0.
BoundReport combined_lower_bound(const DemandMatrix& demand, int s, double delta);

/// Probability that k uniform balls land in k distinct bins out of n:
/// prod_{j<k} (n - j) / n. Throws InvalidArgument unless 1 <= k <= n.
double degree_prob_exact(int n, int k);

/// 1 - (1 - p)^(2n): chance a sum of k random permutations has degree k,
/// treating the 2n lines as independent.
double degree_prob_model(int n, int k);

/// Monte Carlo estimate of the same probability from `trials` sums of k
/// Fisher-Yates permutations. Trial t draws from derive_seed(seed, t).
double estimate_degree_prob(int n, int k, int trials, std::uint64_t seed);

}  // namespace spectra
