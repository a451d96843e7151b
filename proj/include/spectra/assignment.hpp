#pragma once

#include <vector>

#include "spectra/matrix.hpp"

namespace spectra {

enum class Sense { kMinimize, kMaximize };

struct LapSolution {
  PermutationMatching matching;
  double objective = 0.0;
};

/// Linear assignment over the eligible edges of a square cost matrix.
///
/// Returns an optimal partial matching: a row is left unmatched when no
/// eligible edge improves the objective (an unmatched row contributes 0).
/// In maximize mode, zero-weight eligible edges are kept where the optimal
/// full assignment uses them. Ineligible cells are never returned.
///
/// Solved with shortest augmenting paths on dual potentials (the augmentation
/// phase of Jonker-Volgenant), O(n^3), scanning rows and columns in index
/// order so equal inputs always give equal matchings.
LapSolution solve_lap(const Matrix& cost, const SupportMatrix& eligible, Sense sense);

/// All cells eligible.
LapSolution solve_lap(const Matrix& cost, Sense sense);

/// Maximum-weight matching in which every critical row and column must be
/// matched through one of its coverage edges.
struct CoverageConstrainedProblem {
  Matrix weights;               // nonnegative, e.g. residual demand
  SupportMatrix eligible;       // edges the matching may use
  SupportMatrix coverage_edges; // edges that count as covering a critical line
  std::vector<int> must_cover_rows;
  std::vector<int> must_cover_cols;
};

/// Big-M reduction onto solve_lap: each coverage edge gains M per critical
/// endpoint, M = 2n * max(weights) + 1, so the number of covered critical
/// endpoints dominates raw weight. Throws InfeasibleCoverage when a critical
/// line ends up unmatched or matched off its coverage edges.
PermutationMatching mwm_node_coverage(const CoverageConstrainedProblem& problem);

/// The big-M constant used by mwm_node_coverage.
double coverage_bonus(const Matrix& weights);

}  // namespace spectra
