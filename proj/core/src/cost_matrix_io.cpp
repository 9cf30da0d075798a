#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "lcrg/atsp.hpp"
#include "lcrg/errors.hpp"

namespace lcrg {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_cost(const std::string& raw, std::size_t line) {
  const std::string field = trim(raw);
  if (field == "inf" || field == "+inf" || field == "Inf") {
    return std::numeric_limits<double>::infinity();
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ConfigError("cost matrix line " + std::to_string(line) + ": cannot parse '" + field +
                      "'");
  }
  return value;
}

}  // namespace

void write_cost_matrix(std::ostream& out, const CostMatrix& costs) {
  const std::size_t n = costs.size();
  std::ostringstream buf;
  buf.precision(std::numeric_limits<double>::max_digits10);
  buf << "n=" << n << '\n';
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (j > 0) buf << ',';
      if (i == j) {
        buf << "inf";
      } else {
        buf << costs(i, j);
      }
    }
    buf << '\n';
  }
  out << buf.str();
}

CostMatrix read_cost_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  line = trim(line);
  if (line.rfind("n=", 0) != 0) throw ConfigError("cost matrix must start with 'n=<int>'");
  std::size_t n = 0;
  const std::string count = trim(line.substr(2));
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc() || ptr != count.data() + count.size() || n < 2) {
    throw ConfigError("invalid vertex count in '" + line + "'");
  }

  std::vector<double> data;
  data.reserve(n * n);
  std::size_t rows = 0;
  while (rows < n && std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::stringstream fields(line);
    std::string field;
    std::size_t cols = 0;
    while (std::getline(fields, field, ',')) {
      const double value = parse_cost(field, line_no);
      if (cols == rows && !std::isinf(value)) {
        throw ConfigError("cost matrix line " + std::to_string(line_no) +
                          ": diagonal entry must be inf");
      }
      data.push_back(value);
      ++cols;
    }
    if (cols != n) {
      throw ConfigError("cost matrix line " + std::to_string(line_no) + ": expected " +
                        std::to_string(n) + " values, found " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows != n) throw ConfigError("cost matrix has fewer than n rows");
  try {
    return CostMatrix(n, std::move(data));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("cost matrix: ") + e.what());
  }
}

}  // namespace lcrg
