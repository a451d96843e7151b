#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spectra/matrix.hpp"
#include "spectra/schedule.hpp"

namespace spectra {

/// D split cell-by-cell into s submatrices, one per switch.
struct SparsitySplit {
  std::vector<DemandMatrix> submatrices;
  std::map<std::pair<int, int>, int> assignment;  // nonzero cell -> switch
};

/// Greedy degree-balancing split. Nonzero cells are visited by non-increasing
/// value (row-major on ties); each goes whole to the switch whose submatrix
/// currently has the fewest nonzeros in that cell's row plus column, then the
/// least assigned weight, then the lowest index.
SparsitySplit sparsity_split(const DemandMatrix& demand, int s);

/// Decomposes each nonempty submatrix independently onto its own switch, in
/// generation order. No cross-switch balancing.
ParallelSchedule baseline_schedule(const DemandMatrix& demand, int s, double delta);

}  // namespace spectra
