#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "silentdiff/stats.hpp"

namespace silentdiff {
namespace {

// Two-pass textbook coefficient used as an independent reference.
double reference_r(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Brute-force permutation p-value over index orderings of y.
double reference_p(const std::vector<double>& x, const std::vector<double>& y) {
  const double observed = std::abs(reference_r(x, y));
  std::vector<std::size_t> idx(y.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::size_t hits = 0, total = 0;
  do {
    std::vector<double> perm;
    for (auto i : idx) perm.push_back(y[i]);
    hits += std::abs(reference_r(x, perm)) >= observed - 1e-12;
    ++total;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return static_cast<double>(hits) / static_cast<double>(total);
}

TEST(Pearson, KnownValues) {
  EXPECT_NEAR(pearson_r({1, 2, 3}, {2, 4, 6}), 1.0, 1e-12);
  EXPECT_NEAR(pearson_r({1, 2, 3}, {3, 2, 1}), -1.0, 1e-12);
  EXPECT_NEAR(pearson_r({1, 2, 3, 4}, {1, 3, 2, 4}), 0.8, 1e-12);
}

TEST(Pearson, Errors) {
  EXPECT_THROW(pearson_r({1, 2}, {1, 2}), Error);
  EXPECT_THROW(pearson_r({1, 2, 3}, {1, 2}), Error);
  EXPECT_THROW(pearson_r({1, 2, NAN}, {1, 2, 3}), Error);
  try {
    pearson_r({5, 5, 5}, {1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "undefined correlation");
  }
}

TEST(Pearson, MatchesReferenceOnRandomVectors) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> v(0.0, 5.0);
  for (int k = 0; k < 200; ++k) {
    std::vector<double> x(12), y(12);
    for (int i = 0; i < 12; ++i) {
      x[i] = v(rng);
      y[i] = 0.5 * x[i] + v(rng);
    }
    const double r = pearson_r(x, y);
    EXPECT_NEAR(r, reference_r(x, y), 1e-12);
    EXPECT_NEAR(pearson_r(y, x), r, 1e-12);
    EXPECT_LE(std::abs(r), 1.0 + 1e-12);
  }
}

TEST(Permutation, ThreePointIdentity) {
  auto t = permutation_test({1, 2, 3}, {1, 2, 3});
  EXPECT_EQ(t.method, PermutationMethod::Exact);
  EXPECT_DOUBLE_EQ(t.p, 2.0 / 6.0);
  EXPECT_EQ(t.n, 3u);
}

TEST(Permutation, NineSymmetricValues) {
  std::vector<double> v = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_EQ(permutation_p(v, v), 2.0 / 362880.0);
}

TEST(Permutation, NineAsymmetricValues) {
  // Only the identity ordering reaches |r| = 1 when the values are not
  // symmetric about their mean.
  std::vector<double> v = {1, 2, 4, 8, 16, 32, 64, 128, 256};
  EXPECT_EQ(permutation_p(v, v), 1.0 / 362880.0);
}

TEST(Permutation, ExactMatchesBruteForce) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> v(0, 20);
  for (int k = 0; k < 20; ++k) {
    std::vector<double> x(6), y(6);
    for (int i = 0; i < 6; ++i) {
      x[i] = i;
      y[i] = v(rng) + 0.1 * i;
    }
    EXPECT_NEAR(permutation_p(x, y), reference_p(x, y), 1e-12);
  }
}

TEST(Permutation, MonteCarloIsSeededAndBounded) {
  std::vector<double> x, y;
  for (int i = 0; i < 15; ++i) {
    x.push_back(i);
    y.push_back((i * 7) % 15);
  }
  auto a = permutation_test(x, y);
  auto b = permutation_test(x, y);
  EXPECT_EQ(a.method, PermutationMethod::MonteCarlo);
  EXPECT_EQ(a.p, b.p);
  EXPECT_GT(a.p, 0.0);
  EXPECT_LE(a.p, 1.0);
  auto c = permutation_test(x, y, kDefaultMaxExactN, 42);
  EXPECT_NEAR(c.p, a.p, 0.02);
  // A perfect correlation is never beaten: p = 1 / (B + 1).
  auto d = permutation_test(x, x);
  EXPECT_DOUBLE_EQ(d.p, 1.0 / (kMonteCarloPermutations + 1));
}

TEST(MetricCsv, ParsesColumns) {
  auto t = parse_metric_csv("pair,loc,churn,sems\n27-28,100,5,3\n28-29,200,6,4\n29-30,150,7,9\n");
  EXPECT_EQ(t.labels, (std::vector<std::string>{"27-28", "28-29", "29-30"}));
  EXPECT_EQ(t.metric_names, (std::vector<std::string>{"loc", "churn"}));
  EXPECT_EQ(t.metrics[1], (std::vector<double>{5, 6, 7}));
  EXPECT_EQ(t.y_name, "sems");
  EXPECT_EQ(t.y, (std::vector<double>{3, 4, 9}));
}

void expect_csv_error(const std::string& text, const std::string& prefix) {
  try {
    parse_metric_csv(text);
    FAIL() << text;
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind(prefix, 0), 0u) << e.what();
  }
}

TEST(MetricCsv, RowErrors) {
  expect_csv_error("", "row 1");
  expect_csv_error("x,y,z\n", "row 1");
  expect_csv_error("pair,y\n", "row 1");
  expect_csv_error("pair,x,y\na,1,2\nb,oops,3\nc,1,1\n", "row 3");
  expect_csv_error("pair,x,y\na,1,2\nb,1\nc,1,1\n", "row 3");
  expect_csv_error("pair,x,y\na,1,2\na,2,3\nc,1,1\n", "row 3");
  expect_csv_error("pair,x,y\na,1,2\nb,2,3\n", "at least three");
}

}  // namespace
}  // namespace silentdiff
