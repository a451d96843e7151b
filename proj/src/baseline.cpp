#include "spectra/baseline.hpp"

#include <algorithm>
#include <tuple>

#include "spectra/decompose.hpp"
#include "spectra/errors.hpp"

namespace spectra {

SparsitySplit sparsity_split(const DemandMatrix& demand, int s) {
  if (s < 1) throw InvalidArgument("sparsity_split: s must be >= 1");
  const int n = demand.n();

  struct Cell {
    double value;
    int row, col;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (demand(r, c) > 0.0) cells.push_back({demand(r, c), r, c});
    }
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Cell& a, const Cell& b) { return a.value > b.value; });

  std::vector<Matrix> parts(static_cast<std::size_t>(s), Matrix::Zero(n, n));
  std::vector<Eigen::VectorXi> row_count(static_cast<std::size_t>(s), Eigen::VectorXi::Zero(n));
  std::vector<Eigen::VectorXi> col_count(static_cast<std::size_t>(s), Eigen::VectorXi::Zero(n));
  std::vector<double> assigned(static_cast<std::size_t>(s), 0.0);

  SparsitySplit out;
  for (const Cell& cell : cells) {
    std::size_t best = 0;
    auto key = [&](std::size_t h) {
      return std::make_tuple(row_count[h](cell.row) + col_count[h](cell.col), assigned[h]);
    };
    for (std::size_t h = 1; h < parts.size(); ++h) {
      if (key(h) < key(best)) best = h;
    }
    parts[best](cell.row, cell.col) = cell.value;
    ++row_count[best](cell.row);
    ++col_count[best](cell.col);
    assigned[best] += cell.value;
    out.assignment[{cell.row, cell.col}] = static_cast<int>(best);
  }
  for (auto& p : parts) out.submatrices.emplace_back(std::move(p));
  return out;
}

ParallelSchedule baseline_schedule(const DemandMatrix& demand, int s, double delta) {
  if (!(delta >= 0.0)) throw InvalidArgument("baseline_schedule: delta must be >= 0");
  const SparsitySplit split = sparsity_split(demand, s);
  ParallelSchedule out;
  out.delta = delta;
  out.switches.resize(static_cast<std::size_t>(s));
  for (std::size_t h = 0; h < split.submatrices.size(); ++h) {
    const DemandMatrix& part = split.submatrices[h];
    if (part.all_zero()) continue;
    out.switches[h].configs = decompose(part).decomposition.terms;
  }
  return out;
}

}  // namespace spectra
