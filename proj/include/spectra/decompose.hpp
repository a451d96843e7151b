#pragma once

#include "spectra/matrix.hpp"

namespace spectra {

struct DecomposeOptions {
  /// Take each round's weight as the minimum residual over the newly covered
  /// support cells only, instead of over every matched cell. Off by default.
  bool weight_from_new_cells_only = false;
};

struct DecomposeResult {
  WeightedDecomposition decomposition;  // refined weights
  int rounds = 0;
  double initial_weight_total = 0.0;
  double refined_weight_total = 0.0;
};

/// Covers D with exactly degree(support(D)) weighted matchings.
///
/// Each round matches every critical line of the still-uncovered support
/// through one of its uncovered cells, choosing the maximum-residual such
/// matching, and weights it by the smallest matched residual. The collected
/// weights are then raised by refine() so the result covers D.
///
/// Throws InvalidArgument for an all-zero D.
DecomposeResult decompose(const DemandMatrix& demand, const DecomposeOptions& options = {});

/// Greedily raises weights, in decomposition order, until the weighted sum
/// covers D. Throws Uncoverable when some positive cell of D lies in none of
/// the matchings.
WeightedDecomposition refine(const DemandMatrix& demand, const WeightedDecomposition& dec);

}  // namespace spectra
