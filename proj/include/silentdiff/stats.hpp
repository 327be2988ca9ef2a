#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "silentdiff/error.hpp"

namespace silentdiff {

/// Pearson product-moment coefficient. Throws Error on length mismatch,
/// fewer than three points, or a constant vector ("undefined correlation").
double pearson_r(const std::vector<double>& x, const std::vector<double>& y);

inline constexpr std::size_t kDefaultMaxExactN = 9;
inline constexpr std::size_t kMonteCarloPermutations = 100000;
inline constexpr std::uint64_t kDefaultPermutationSeed = 0x5eed5eedULL;

enum class PermutationMethod { Exact, MonteCarlo };
std::string_view to_string(PermutationMethod m);

struct PermutationTest {
  double r = 0.0;
  double p = 1.0;
  std::size_t n = 0;
  PermutationMethod method = PermutationMethod::Exact;
};

/// Two-sided permutation test of the correlation. Every ordering of y is
/// enumerated when n <= max_exact_n; otherwise a seeded Monte Carlo estimate
/// counting the observed ordering, so p > 0.
PermutationTest permutation_test(const std::vector<double>& x, const std::vector<double>& y,
                                 std::size_t max_exact_n = kDefaultMaxExactN,
                                 std::uint64_t seed = kDefaultPermutationSeed);

double permutation_p(const std::vector<double>& x, const std::vector<double>& y,
                     std::size_t max_exact_n = kDefaultMaxExactN,
                     std::uint64_t seed = kDefaultPermutationSeed);

/// One y column (SEM counts) against any number of metric columns.
struct MetricTable {
  std::vector<std::string> labels;         // version-pair labels, unique
  std::vector<std::string> metric_names;   // column headers between `pair` and the last column
  std::vector<std::vector<double>> metrics;  // metrics[k][row]
  std::string y_name;
  std::vector<double> y;
};

/// CSV with header `pair,<metric>...,<y>`: first column labels, last column
/// SEM counts. Errors name the offending row (1-based, header is row 1).
MetricTable parse_metric_csv(std::string_view text);

}  // namespace silentdiff
