#include "spectra/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Non-blank lines paired with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('\n', start);
    const auto line = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    ++number;
    if (!trim(line).empty()) out.emplace_back(number, trim(line));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw ParseError("invalid number '" + std::string(token) + "'", line);
  }
  if (!std::isfinite(value)) throw ParseError("non-finite value", line);
  return value;
}

long parse_int(std::string_view token, std::size_t line) {
  long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw ParseError("invalid integer '" + std::string(token) + "'", line);
  }
  return value;
}

Configuration parse_config_line(std::string_view line, std::size_t number, int n) {
  const auto fields = split(line, ',');
  if (static_cast<int>(fields.size()) != n + 1) {
    throw ParseError("expected weight plus " + std::to_string(n) + " targets", number);
  }
  const double weight = parse_number(fields[0], number);
  if (weight < 0.0) throw ParseError("negative weight", number);
  std::vector<int> targets;
  targets.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < fields.size(); ++i) {
    targets.push_back(static_cast<int>(parse_int(fields[i], number)));
  }
  try {
    return {PermutationMatching(std::move(targets)), weight};
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), number);
  }
}

void write_config_line(std::ostream& out, const Configuration& c) {
  out << format_double(c.weight);
  for (int t : c.matching.targets()) out << ',' << t;
  out << '\n';
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

DemandMatrix parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty matrix file");
  const auto n = lines.size();
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto [number, line] = lines[r];
    const auto fields = split(line, ',');
    if (fields.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " values, found " +
                           std::to_string(fields.size()),
                       number);
    }
    for (std::size_t c = 0; c < n; ++c) {
      const double v = parse_number(fields[c], number);
      if (v < 0.0) throw ParseError("negative demand", number);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return DemandMatrix(std::move(m));
}

DemandMatrix read_matrix_file(const std::filesystem::path& path) {
  return parse_matrix(read_text_file(path));
}

void write_matrix(std::ostream& out, const DemandMatrix& demand) {
  for (int r = 0; r < demand.n(); ++r) {
    for (int c = 0; c < demand.n(); ++c) {
      if (c > 0) out << ',';
      out << format_double(demand(r, c));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::filesystem::path& path, const DemandMatrix& demand) {
  std::ostringstream os;
  write_matrix(os, demand);
  write_text_file(path, os.str());
}

void write_decomposition(std::ostream& out, const WeightedDecomposition& dec, int n) {
  out << dec.size() << ',' << n << '\n';
  for (const auto& term : dec.terms) write_config_line(out, term);
}

WeightedDecomposition parse_decomposition(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty decomposition file");
  const auto header = split(lines[0].second, ',');
  if (header.size() != 2) throw ParseError("header must be 'k,n'", lines[0].first);
  const long k = parse_int(header[0], lines[0].first);
  const long n = parse_int(header[1], lines[0].first);
  if (k < 0 || n < 1) throw ParseError("invalid header values", lines[0].first);
  if (static_cast<long>(lines.size()) - 1 != k) {
    throw ParseError("expected " + std::to_string(k) + " matchings");
  }
  WeightedDecomposition dec;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    dec.terms.push_back(parse_config_line(lines[i].second, lines[i].first, static_cast<int>(n)));
  }
  return dec;
}

void write_schedule(std::ostream& out, const ParallelSchedule& schedule) {
  out << schedule.s() << ',' << format_double(schedule.delta) << ','
      << format_double(makespan(schedule)) << '\n';
  for (int h = 0; h < schedule.s(); ++h) {
    const auto& sw = schedule.switches[static_cast<std::size_t>(h)];
    out << "switch " << h << ": " << sw.configs.size() << " configs, load "
        << format_double(sw.load(schedule.delta)) << '\n';
    for (const auto& c : sw.configs) write_config_line(out, c);
  }
}

ParallelSchedule parse_schedule(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty schedule file");
  const auto header = split(lines[0].second, ',');
  if (header.size() != 3) throw ParseError("header must be 's,delta,makespan'", lines[0].first);
  const long s = parse_int(header[0], lines[0].first);
  if (s < 1) throw ParseError("s must be >= 1", lines[0].first);

  ParallelSchedule schedule;
  schedule.delta = parse_number(header[1], lines[0].first);
  if (schedule.delta < 0.0) throw ParseError("negative delta", lines[0].first);
  schedule.switches.resize(static_cast<std::size_t>(s));

  int n = -1;
  std::size_t i = 1;
  for (long h = 0; h < s; ++h) {
    if (i >= lines.size()) throw ParseError("missing block for switch " + std::to_string(h));
    const auto [number, line] = lines[i++];
    const std::string prefix = "switch " + std::to_string(h) + ":";
    if (!line.starts_with(prefix)) throw ParseError("expected '" + prefix + "'", number);
    std::istringstream rest{std::string(line.substr(prefix.size()))};
    long m = -1;
    std::string word;
    if (!(rest >> m >> word) || m < 0 || word != "configs,") {
      throw ParseError("malformed switch line", number);
    }
    for (long c = 0; c < m; ++c) {
      if (i >= lines.size()) throw ParseError("switch " + std::to_string(h) + " is truncated");
      const auto [cnum, cline] = lines[i++];
      if (n < 0) n = static_cast<int>(split(cline, ',').size()) - 1;
      schedule.switches[static_cast<std::size_t>(h)].configs.push_back(
          parse_config_line(cline, cnum, n));
    }
  }
  if (i != lines.size()) throw ParseError("trailing content", lines[i].first);
  return schedule;
}

ParallelSchedule read_schedule_file(const std::filesystem::path& path) {
  return parse_schedule(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace spectra
