#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace spectra {

using Matrix = Eigen::MatrixXd;
using SupportMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// n x n nonnegative traffic demand in units of link-transmission time.
///
/// Construction validates the matrix: square, n >= 1, every entry finite and
/// nonnegative. The wrapped Eigen matrix is immutable afterwards.
class DemandMatrix {
 public:
  explicit DemandMatrix(Matrix values);

  static DemandMatrix zeros(int n) { return DemandMatrix(Matrix::Zero(n, n)); }

  int n() const noexcept { return static_cast<int>(values_.rows()); }
  double operator()(int row, int col) const { return values_(row, col); }
  const Matrix& values() const noexcept { return values_; }

  /// Largest row or column sum.
  double max_line_sum() const;
  bool all_zero() const { return (values_.array() == 0.0).all(); }

  friend bool operator==(const DemandMatrix& a, const DemandMatrix& b) {
    return a.values_.rows() == b.values_.rows() && a.values_ == b.values_;
  }

 private:
  Matrix values_;
};

inline constexpr int kUnmatched = -1;

/// Partial one-to-one mapping of input ports to output ports.
class PermutationMatching {
 public:
  /// targets[i] is the output for input i, or kUnmatched.
  explicit PermutationMatching(std::vector<int> targets);

  static PermutationMatching identity(int n);
  static PermutationMatching empty(int n) {
    return PermutationMatching(std::vector<int>(static_cast<std::size_t>(n), kUnmatched));
  }
  /// i -> (i + shift) mod n for every i.
  static PermutationMatching cyclic_shift(int n, int shift);

  int n() const noexcept { return static_cast<int>(targets_.size()); }
  int target(int row) const { return targets_[static_cast<std::size_t>(row)]; }
  bool contains(int row, int col) const { return target(row) == col; }
  std::span<const int> targets() const noexcept { return targets_; }

  /// Number of matched rows.
  int size() const;

  /// Matched (row, col) cells in row order.
  std::vector<std::pair<int, int>> cells() const;

  friend bool operator==(const PermutationMatching&, const PermutationMatching&) = default;

 private:
  std::vector<int> targets_;
};

/// One switch configuration: a matching held for `weight` units of time.
struct Configuration {
  PermutationMatching matching;
  double weight = 0.0;
};

/// Ordered weighted matchings; covers D when their weighted sum is >= D.
struct WeightedDecomposition {
  std::vector<Configuration> terms;

  std::size_t size() const noexcept { return terms.size(); }
  bool empty() const noexcept { return terms.empty(); }
  double total_weight() const;
};

/// Indicator of strictly positive entries.
SupportMatrix support(const DemandMatrix& demand);

/// Maximum true count over all rows and columns.
int degree(const SupportMatrix& support);

/// Row counts followed by column counts (2n values).
std::vector<int> line_counts(const SupportMatrix& support);

/// Weighted sum of the matchings as a dense matrix.
Matrix weighted_sum(const WeightedDecomposition& dec, int n);

/// True iff every cell of `demand` is served to within `tol`.
/// Throws DimensionError when a matching has a different port count.
bool covers(const WeightedDecomposition& dec, const DemandMatrix& demand, double tol);

struct NormalizeResult {
  DemandMatrix matrix;
  bool fallback = false;
  int iterations = 0;
};

/// Sinkhorn row/column scaling to a doubly stochastic matrix.
///
/// When scaling does not bring every line sum within `tol` of 1 after
/// `max_iters` sweeps (or a line is empty), the input is instead divided by
/// its largest line sum and `fallback` is set.
NormalizeResult normalize_doubly_stochastic(const DemandMatrix& demand, double tol = 1e-8,
                                            int max_iters = 1000);

/// Adds N(0, sigma^2) to every strictly positive entry, clamping at zero.
DemandMatrix add_gaussian_noise(const DemandMatrix& demand, double sigma, std::uint64_t seed);

/// Divides by the largest row/column sum so the peak line load is 1.
DemandMatrix scale_to_max_load(const DemandMatrix& demand);

/// FNV-1a over the bit patterns of n and all entries (row-major).
std::uint64_t matrix_hash(const DemandMatrix& demand);

}  // namespace spectra
