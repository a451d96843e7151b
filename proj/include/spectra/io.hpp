#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "spectra/matrix.hpp"
#include "spectra/schedule.hpp"

namespace spectra {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

// Matrix files: n lines of n comma-separated decimals, row-major, no header.
// NaN, infinities and negative entries are rejected with the line number.
DemandMatrix parse_matrix(std::string_view text);
DemandMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const DemandMatrix& demand);
void write_matrix_file(const std::filesystem::path& path, const DemandMatrix& demand);

// Decomposition files: header `k,n`, then per matching `weight,t0,...,t{n-1}`
// with -1 marking an unmatched input.
void write_decomposition(std::ostream& out, const WeightedDecomposition& dec, int n);
WeightedDecomposition parse_decomposition(std::string_view text);

// Schedule files: header `s,delta,makespan`, then per switch a line
// `switch h: m configs, load L` followed by m configuration lines in the
// decomposition line format.
void write_schedule(std::ostream& out, const ParallelSchedule& schedule);
ParallelSchedule parse_schedule(std::string_view text);
ParallelSchedule read_schedule_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace spectra
