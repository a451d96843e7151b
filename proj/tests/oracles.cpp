#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace spectra::testing {

namespace {

// Calls visit(targets) for every partial matching on eligible edges.
void enumerate_matchings(const SupportMatrix& eligible,
                         const std::function<void(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(eligible.rows());
  std::vector<int> targets(n, kUnmatched);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int row) {
    if (row == n) {
      visit(targets);
      return;
    }
    targets[row] = kUnmatched;
    rec(row + 1);
    for (int c = 0; c < n; ++c) {
      if (used[c] || !eligible(row, c)) continue;
      used[c] = 1;
      targets[row] = c;
      rec(row + 1);
      targets[row] = kUnmatched;
      used[c] = 0;
    }
  };
  rec(0);
}

}  // namespace

double brute_force_lap(const Matrix& cost, const SupportMatrix& eligible, Sense sense) {
  const double sign = sense == Sense::kMaximize ? 1.0 : -1.0;
  double best = -std::numeric_limits<double>::infinity();
  enumerate_matchings(eligible, [&](const std::vector<int>& t) {
    double v = 0.0;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (t[r] != kUnmatched) v += sign * cost(static_cast<Eigen::Index>(r), t[r]);
    }
    best = std::max(best, v);
  });
  return sign * best;
}

std::optional<double> brute_force_coverage(const CoverageConstrainedProblem& p) {
  const int n = static_cast<int>(p.weights.rows());
  std::optional<double> best;
  SupportMatrix usable = p.eligible.array() || p.coverage_edges.array();
  enumerate_matchings(usable, [&](const std::vector<int>& t) {
    for (int r : p.must_cover_rows) {
      if (t[r] == kUnmatched || !p.coverage_edges(r, t[r])) return;
    }
    for (int c : p.must_cover_cols) {
      bool ok = false;
      for (int r = 0; r < n; ++r) ok = ok || (t[r] == c && p.coverage_edges(r, c));
      if (!ok) return;
    }
    double v = 0.0;
    for (int r = 0; r < n; ++r) {
      if (t[r] != kUnmatched) v += p.weights(r, t[r]);
    }
    if (!best || v > *best) best = v;
  });
  return best;
}

double matching_weight(const Matrix& weights, const PermutationMatching& m) {
  double v = 0.0;
  for (auto [r, c] : m.cells()) v += weights(r, c);
  return v;
}

std::vector<double> lp_refine_oracle(const DemandMatrix& demand,
                                     const std::vector<PermutationMatching>& matchings) {
  const int n = demand.n();
  const int k = static_cast<int>(matchings.size());

  // Constraint rows a^T alpha >= b: one per positive cell, one per alpha_i >= 0.
  std::vector<Eigen::RowVectorXd> a;
  std::vector<double> b;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (!(demand(r, c) > 0.0)) continue;
      Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(k);
      for (int i = 0; i < k; ++i) row(i) = matchings[static_cast<std::size_t>(i)].contains(r, c) ? 1.0 : 0.0;
      if (row.sum() == 0.0) throw std::invalid_argument("lp oracle: uncoverable cell");
      a.push_back(row);
      b.push_back(demand(r, c));
    }
  }
  for (int i = 0; i < k; ++i) {
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(k);
    row(i) = 1.0;
    a.push_back(row);
    b.push_back(0.0);
  }

  const int m = static_cast<int>(a.size());
  std::vector<double> best_alpha;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick(k);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k) {
      Eigen::MatrixXd sys(k, k);
      Eigen::VectorXd rhs(k);
      for (int i = 0; i < k; ++i) {
        sys.row(i) = a[static_cast<std::size_t>(pick[i])];
        rhs(i) = b[static_cast<std::size_t>(pick[i])];
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
      if (lu.rank() < k) return;
      const Eigen::VectorXd alpha = lu.solve(rhs);
      for (int j = 0; j < m; ++j) {
        if (a[static_cast<std::size_t>(j)].dot(alpha) < b[static_cast<std::size_t>(j)] - 1e-12) return;
      }
      if (alpha.sum() < best) {
        best = alpha.sum();
        best_alpha.assign(alpha.begin(), alpha.end());
      }
      return;
    }
    for (int j = start; j < m; ++j) {
      pick[depth] = j;
      choose(j + 1, depth + 1);
    }
  };
  choose(0, 0);
  if (best_alpha.empty()) throw std::runtime_error("lp oracle: no vertex found");
  return best_alpha;
}

DemandMatrix toy_matrix() {
  Matrix m(3, 3);
  m << 0.61, 0.3, 0.1,
       0.1, 0.61, 0.3,
       0.3, 0.1, 0.61;
  return DemandMatrix(m);
}

DemandMatrix random_matrix(Rng& rng, int n, double density) {
  Matrix m = Matrix::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (rng.uniform01() < density) m(r, c) = 1.0 - rng.uniform01();
    }
  }
  if (m.isZero()) m(static_cast<int>(rng.uniform_below(n)), static_cast<int>(rng.uniform_below(n))) = 0.5;
  return DemandMatrix(m);
}

}  // namespace spectra::testing
