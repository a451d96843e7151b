#include "spectra/assignment.hpp"

#include <limits>
#include <string>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

// Minimizes sum cost(i, p(i)) over full permutations of a dense n x n matrix.
// Potentials u (rows) and v (cols) are 1-based with a virtual column 0.
std::vector<int> min_cost_assignment(const Matrix& cost) {
  const int n = static_cast<int>(cost.rows());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> row_of(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (int i = 1; i <= n; ++i) {
    row_of[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = row_of[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const int j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> target(n, kUnmatched);
  for (int j = 1; j <= n; ++j) target[row_of[j] - 1] = j - 1;
  return target;
}

}  // namespace

LapSolution solve_lap(const Matrix& cost, const SupportMatrix& eligible, Sense sense) {
  const int n = static_cast<int>(cost.rows());
  if (cost.cols() != n || eligible.rows() != n || eligible.cols() != n) {
    throw DimensionError("solve_lap expects square cost and eligibility of equal size");
  }
  if (n == 0) return {PermutationMatching::empty(0), 0.0};

  // Profit of using an edge; leaving a row unmatched is worth 0, so an edge
  // with negative profit is equivalent to an ineligible one. Every full
  // permutation over the clamped profits restricted to profitable eligible
  // edges is then an optimal partial matching.
  Matrix profit = (sense == Sense::kMaximize) ? cost : Matrix(-cost);
  Matrix clamped(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const double p = profit(r, c);
      if (eligible(r, c) && !std::isfinite(p)) {
        throw InvalidArgument("solve_lap: eligible edge with non-finite cost");
      }
      clamped(r, c) = (eligible(r, c) && p > 0.0) ? p : 0.0;
    }
  }
  const std::vector<int> full = min_cost_assignment(-clamped);

  std::vector<int> target(n, kUnmatched);
  double objective = 0.0;
  for (int r = 0; r < n; ++r) {
    const int c = full[r];
    if (eligible(r, c) && profit(r, c) >= 0.0) {
      target[r] = c;
      objective += cost(r, c);
    }
  }
  return {PermutationMatching(std::move(target)), objective};
}

LapSolution solve_lap(const Matrix& cost, Sense sense) {
  return solve_lap(cost, SupportMatrix::Constant(cost.rows(), cost.cols(), true), sense);
}

double coverage_bonus(const Matrix& weights) {
  const double max_w = weights.size() == 0 ? 0.0 : weights.maxCoeff();
  return 2.0 * static_cast<double>(weights.rows()) * std::max(max_w, 0.0) + 1.0;
}

PermutationMatching mwm_node_coverage(const CoverageConstrainedProblem& p) {
  const int n = static_cast<int>(p.weights.rows());
  if (p.weights.cols() != n || p.eligible.rows() != n || p.eligible.cols() != n ||
      p.coverage_edges.rows() != n || p.coverage_edges.cols() != n) {
    throw DimensionError("coverage problem matrices must all be n x n");
  }
  if ((p.weights.array() < 0.0).any()) throw InvalidArgument("coverage problem weights must be >= 0");

  std::vector<char> row_critical(n, 0), col_critical(n, 0);
  for (int r : p.must_cover_rows) row_critical.at(static_cast<std::size_t>(r)) = 1;
  for (int c : p.must_cover_cols) col_critical.at(static_cast<std::size_t>(c)) = 1;

  const double bonus = coverage_bonus(p.weights);
  Matrix boosted = p.weights;
  SupportMatrix usable = p.eligible.array() || p.coverage_edges.array();
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      if (!p.coverage_edges(r, c)) continue;
      boosted(r, c) += bonus * (row_critical[r] + col_critical[c]);
    }
  }

  PermutationMatching m = solve_lap(boosted, usable, Sense::kMaximize).matching;

  for (int r : p.must_cover_rows) {
    const int c = m.target(r);
    if (c == kUnmatched || !p.coverage_edges(r, c)) {
      throw InfeasibleCoverage("critical row " + std::to_string(r) + " not covered");
    }
  }
  for (int c : p.must_cover_cols) {
    bool ok = false;
    for (int r = 0; r < n && !ok; ++r) ok = m.contains(r, c) && p.coverage_edges(r, c);
    if (!ok) throw InfeasibleCoverage("critical column " + std::to_string(c) + " not covered");
  }
  return m;
}

}  // namespace spectra
