#include "silentdiff/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace silentdiff {

namespace {

void check_inputs(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error("vectors differ in length");
  if (x.size() < 3) throw Error("at least three points are required");
  for (double v : x) {
    if (!std::isfinite(v)) throw Error("non-finite value");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw Error("non-finite value");
  }
}

struct Centered {
  std::vector<double> dev;
  double norm = 0.0;  // sqrt of the sum of squared deviations
};

Centered center(const std::vector<double>& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  Centered c;
  c.dev.reserve(v.size());
  double ss = 0.0;
  for (double e : v) {
    c.dev.push_back(e - mean);
    ss += (e - mean) * (e - mean);
  }
  c.norm = std::sqrt(ss);
  if (c.norm == 0.0) throw Error("undefined correlation");
  return c;
}

// The denominator does not depend on the ordering of y, so permutations
// only need the cross product.
double cross(const std::vector<double>& a, const std::vector<double>& b,
             const std::vector<std::size_t>& order) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[order[i]];
  return s;
}

double clamp_unit(double r) { return std::clamp(r, -1.0, 1.0); }

}  // namespace

double pearson_r(const std::vector<double>& x, const std::vector<double>& y) {
  check_inputs(x, y);
  const auto cx = center(x);
  const auto cy = center(y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += cx.dev[i] * cy.dev[i];
  return clamp_unit(s / (cx.norm * cy.norm));
}

std::string_view to_string(PermutationMethod m) {
  return m == PermutationMethod::Exact ? "exact" : "monte-carlo";
}

PermutationTest permutation_test(const std::vector<double>& x, const std::vector<double>& y,
                                 std::size_t max_exact_n, std::uint64_t seed) {
  check_inputs(x, y);
  const auto cx = center(x);
  const auto cy = center(y);
  const double denom = cx.norm * cy.norm;
  const std::size_t n = x.size();

  PermutationTest result;
  result.n = n;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  result.r = clamp_unit(cross(cx.dev, cy.dev, order) / denom);
  const double threshold = std::abs(result.r) - 1e-12;

  if (n <= max_exact_n) {
    result.method = PermutationMethod::Exact;
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
    do {
      ++total;
      if (std::abs(cross(cx.dev, cy.dev, order) / denom) >= threshold) ++hits;
    } while (std::next_permutation(order.begin(), order.end()));
    result.p = static_cast<double>(hits) / static_cast<double>(total);
    return result;
  }

  result.method = PermutationMethod::MonteCarlo;
  // Fisher-Yates driven directly by the engine output; std::shuffle and the
  // standard distributions are not specified bit-for-bit across libraries.
  std::mt19937_64 engine(seed);
  std::uint64_t hits = 0;
  for (std::size_t b = 0; b < kMonteCarloPermutations; ++b) {
    for (std::size_t i = n - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(engine() % (i + 1));
      std::swap(order[i], order[j]);
    }
    if (std::abs(cross(cx.dev, cy.dev, order) / denom) >= threshold) ++hits;
  }
  result.p = static_cast<double>(hits + 1) / static_cast<double>(kMonteCarloPermutations + 1);
  return result;
}

double permutation_p(const std::vector<double>& x, const std::vector<double>& y,
                     std::size_t max_exact_n, std::uint64_t seed) {
  return permutation_test(x, y, max_exact_n, seed).p;
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    std::string_view cell = line.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) cell.remove_suffix(1);
    cells.emplace_back(cell);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

double parse_number(const std::string& cell, std::size_t row) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (cell.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw Error("row " + std::to_string(row) + ": not a number: '" + cell + "'");
  }
  return v;
}

}  // namespace

MetricTable parse_metric_csv(std::string_view text) {
  MetricTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t row = 0;
  std::size_t columns = 0;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      if (row == 1) throw Error("row 1: missing header");
      continue;
    }
    auto cells = split_csv_line(line);
    if (columns == 0) {
      if (cells.size() < 3) throw Error("row 1: header needs a pair column, a metric and a y column");
      if (cells.front() != "pair") throw Error("row 1: first column must be 'pair'");
      columns = cells.size();
      table.metric_names.assign(cells.begin() + 1, cells.end() - 1);
      table.y_name = cells.back();
      table.metrics.resize(table.metric_names.size());
      continue;
    }
    if (cells.size() != columns) {
      throw Error("row " + std::to_string(row) + ": expected " + std::to_string(columns) +
                  " columns, found " + std::to_string(cells.size()));
    }
    if (cells.front().empty()) throw Error("row " + std::to_string(row) + ": empty pair label");
    if (!seen.insert(cells.front()).second) {
      throw Error("row " + std::to_string(row) + ": duplicate pair label '" + cells.front() + "'");
    }
    table.labels.push_back(cells.front());
    for (std::size_t k = 0; k < table.metric_names.size(); ++k) {
      table.metrics[k].push_back(parse_number(cells[k + 1], row));
    }
    table.y.push_back(parse_number(cells.back(), row));
  }
  if (columns == 0) throw Error("row 1: missing header");
  if (table.y.size() < 3) throw Error("at least three data rows are required");
  return table;
}

}  // namespace silentdiff
