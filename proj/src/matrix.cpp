#include "spectra/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "spectra/errors.hpp"
#include "spectra/rng.hpp"

namespace spectra {

DemandMatrix::DemandMatrix(Matrix values) : values_(std::move(values)) {
  if (values_.rows() != values_.cols()) throw DimensionError("demand matrix must be square");
  if (values_.rows() < 1) throw InvalidArgument("demand matrix must have n >= 1");
  for (Eigen::Index c = 0; c < values_.cols(); ++c) {
    for (Eigen::Index r = 0; r < values_.rows(); ++r) {
      const double v = values_(r, c);
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument("demand entries must be finite and nonnegative");
      }
    }
  }
}

double DemandMatrix::max_line_sum() const {
  return std::max(values_.rowwise().sum().maxCoeff(), values_.colwise().sum().maxCoeff());
}

PermutationMatching::PermutationMatching(std::vector<int> targets) : targets_(std::move(targets)) {
  const int n = static_cast<int>(targets_.size());
  std::vector<bool> used(targets_.size(), false);
  for (int t : targets_) {
    if (t == kUnmatched) continue;
    if (t < 0 || t >= n) throw InvalidArgument("matching target out of range");
    if (used[static_cast<std::size_t>(t)]) throw InvalidArgument("matching target used twice");
    used[static_cast<std::size_t>(t)] = true;
  }
}

PermutationMatching PermutationMatching::identity(int n) { return cyclic_shift(n, 0); }

PermutationMatching PermutationMatching::cyclic_shift(int n, int shift) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = ((i + shift) % n + n) % n;
  return PermutationMatching(std::move(t));
}

int PermutationMatching::size() const {
  return static_cast<int>(std::count_if(targets_.begin(), targets_.end(),
                                        [](int t) { return t != kUnmatched; }));
}

std::vector<std::pair<int, int>> PermutationMatching::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n(); ++i) {
    if (target(i) != kUnmatched) out.emplace_back(i, target(i));
  }
  return out;
}

double WeightedDecomposition::total_weight() const {
  double total = 0.0;
  for (const auto& t : terms) total += t.weight;
  return total;
}

SupportMatrix support(const DemandMatrix& demand) { return (demand.values().array() > 0.0).matrix(); }

int degree(const SupportMatrix& support) {
  if (support.size() == 0) return 0;
  const auto counts = support.cast<int>();
  return std::max(counts.rowwise().sum().maxCoeff(), counts.colwise().sum().maxCoeff());
}

std::vector<int> line_counts(const SupportMatrix& support) {
  const auto counts = support.cast<int>();
  const Eigen::VectorXi rows = counts.rowwise().sum();
  const Eigen::RowVectorXi cols = counts.colwise().sum();
  std::vector<int> out(rows.begin(), rows.end());
  out.insert(out.end(), cols.begin(), cols.end());
  return out;
}

Matrix weighted_sum(const WeightedDecomposition& dec, int n) {
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& term : dec.terms) {
    if (term.matching.n() != n) throw DimensionError("matching size differs from matrix size");
    for (auto [r, c] : term.matching.cells()) sum(r, c) += term.weight;
  }
  return sum;
}

bool covers(const WeightedDecomposition& dec, const DemandMatrix& demand, double tol) {
  const Matrix served = weighted_sum(dec, demand.n());
  return ((served - demand.values()).array() >= -tol).all();
}

NormalizeResult normalize_doubly_stochastic(const DemandMatrix& demand, double tol, int max_iters) {
  if (demand.all_zero()) throw InvalidArgument("cannot normalize an all-zero matrix");
  Matrix m = demand.values();
  const auto within = [&](const Matrix& x) {
    return ((x.rowwise().sum().array() - 1.0).abs() <= tol).all() &&
           ((x.colwise().sum().array() - 1.0).abs() <= tol).all();
  };
  const bool empty_line = (m.rowwise().sum().array() == 0.0).any() ||
                          (m.colwise().sum().array() == 0.0).any();
  int iter = 0;
  if (!empty_line) {
    while (!within(m) && iter < max_iters) {
      m.array().colwise() /= m.rowwise().sum().array();
      m.array().rowwise() /= m.colwise().sum().array();
      ++iter;
    }
    if (within(m)) return {DemandMatrix(std::move(m)), false, iter};
  }
  return {scale_to_max_load(demand), true, iter};
}

DemandMatrix add_gaussian_noise(const DemandMatrix& demand, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw InvalidArgument("noise sigma must be >= 0");
  if (sigma == 0.0) return demand;
  Rng rng(seed);
  Matrix m = demand.values();
  // Row-major visiting order fixes the stream-to-cell assignment.
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) > 0.0) m(r, c) = std::max(0.0, m(r, c) + sigma * rng.normal());
    }
  }
  return DemandMatrix(std::move(m));
}

DemandMatrix scale_to_max_load(const DemandMatrix& demand) {
  const double peak = demand.max_line_sum();
  if (peak <= 0.0) throw InvalidArgument("cannot scale an all-zero matrix");
  return DemandMatrix(demand.values() / peak);
}

std::uint64_t matrix_hash(const DemandMatrix& demand) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(demand.n()));
  for (int r = 0; r < demand.n(); ++r) {
    for (int c = 0; c < demand.n(); ++c) mix(std::bit_cast<std::uint64_t>(demand(r, c)));
  }
  return h;
}

}  // namespace spectra
