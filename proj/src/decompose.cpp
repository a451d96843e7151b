#include "spectra/decompose.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "spectra/assignment.hpp"
#include "spectra/errors.hpp"

namespace spectra {

DecomposeResult decompose(const DemandMatrix& demand, const DecomposeOptions& options) {
  if (demand.all_zero()) throw InvalidArgument("decompose: demand matrix is all zero");
  const int n = demand.n();

  Matrix residual = demand.values();
  SupportMatrix uncovered = support(demand);
  const int k = degree(uncovered);

  WeightedDecomposition dec;
  while (uncovered.any()) {
    if (static_cast<int>(dec.size()) >= k) {
      throw Error("decompose: round count exceeded the support degree " + std::to_string(k));
    }
    const std::vector<int> counts = line_counts(uncovered);
    const int current = *std::max_element(counts.begin(), counts.end());

    CoverageConstrainedProblem problem;
    problem.weights = residual.cwiseMax(0.0);
    problem.coverage_edges = uncovered;
    problem.eligible = uncovered.array() || (residual.array() > 0.0);
    for (int i = 0; i < n; ++i) {
      if (counts[i] == current) problem.must_cover_rows.push_back(i);
      if (counts[n + i] == current) problem.must_cover_cols.push_back(i);
    }
    PermutationMatching m = mwm_node_coverage(problem);

    double alpha = std::numeric_limits<double>::infinity();
    for (auto [r, c] : m.cells()) {
      if (options.weight_from_new_cells_only && !uncovered(r, c)) continue;
      alpha = std::min(alpha, residual(r, c));
    }
    if (!std::isfinite(alpha)) alpha = 0.0;
    alpha = std::max(alpha, 0.0);

    for (auto [r, c] : m.cells()) {
      residual(r, c) = std::max(0.0, residual(r, c) - alpha);
      uncovered(r, c) = false;
    }
    dec.terms.push_back({std::move(m), alpha});
  }

  DecomposeResult result;
  result.rounds = static_cast<int>(dec.size());
  result.initial_weight_total = dec.total_weight();
  result.decomposition = refine(demand, dec);
  result.refined_weight_total = result.decomposition.total_weight();
  return result;
}

WeightedDecomposition refine(const DemandMatrix& demand, const WeightedDecomposition& dec) {
  const int n = demand.n();
  const Matrix served = weighted_sum(dec, n);

  SupportMatrix touched = SupportMatrix::Constant(n, n, false);
  for (const auto& term : dec.terms) {
    for (auto [r, c] : term.matching.cells()) touched(r, c) = true;
  }
  if ((support(demand).array() && !touched.array()).any()) {
    throw Uncoverable("refine: matchings do not cover the support of the demand matrix");
  }

  Matrix remaining = (demand.values() - served).cwiseMax(0.0);
  WeightedDecomposition out = dec;
  for (auto& term : out.terms) {
    double d = 0.0;
    for (auto [r, c] : term.matching.cells()) d = std::max(d, remaining(r, c));
    if (d <= 0.0) continue;
    term.weight += d;
    for (auto [r, c] : term.matching.cells()) remaining(r, c) = std::max(0.0, remaining(r, c) - d);
  }
  return out;
}

}  // namespace spectra
