#include <gtest/gtest.h>

#include "klazar/counting.hpp"
#include "klazar/tree.hpp"
#include "oracles.hpp"

using namespace klazar;

namespace {

// (violators, leaves not ending a sibling descent, leaves) by brute force
std::map<std::vector<int>, long> tree_tally(int n) {
  std::map<std::vector<int>, long> t;
  for_each_increasing_tree(n, [&](const IncreasingTree& tr) {
    int leaves = 0, plain = 0;
    for (Label v = 0; v <= n; ++v) {
      if (!tr.is_leaf(v)) continue;
      ++leaves;
      auto left = v == 0 ? std::nullopt : tr.left_neighbor(v);
      plain += !left || *left < v;
    }
    ++t[{static_cast<int>(oracle::violators(tr).size()), plain, leaves}];
  });
  return t;
}

}  // namespace

TEST(Numbers, Basics) {
  EXPECT_EQ(odd_double_factorial(7), 105);
  EXPECT_EQ(odd_double_factorial(-1), 1);
  EXPECT_EQ(matching_count(0), 1);
  EXPECT_EQ(matching_count(8), 2027025);
  EXPECT_EQ(stirling2(4, 3), 6);
  EXPECT_EQ(stirling2(5, 3), 25);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(3, 4), 0);
  EXPECT_EQ(stirling2(3, -1), 0);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(power(3, 40), BigInt("12157665459056928801"));
}

TEST(Numbers, StirlingAgainstPartitions) {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), oracle::stirling2(n, k)) << n << ' ' << k;
  }
}

TEST(W12, Values) {
  auto w = w12_sequence(8);
  const long expect[] = {1, 1, 2, 7, 35, 226, 1787, 16717, 180560};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(w[n], expect[n]) << n;
}

TEST(W12, AgreesWithKlazarTreeCount) {
  auto w = w12_sequence(6);
  for (int n = 0; n <= 6; ++n) {
    long c = 0;
    for_each_increasing_tree(n, [&](const IncreasingTree& t) { c += oracle::violators(t).empty(); });
    EXPECT_EQ(w[n], c) << n;
    EXPECT_EQ(no_upline_count(n), c) << n;
  }
}

TEST(NoUpline, Formulas) {
  EXPECT_EQ(no_upline_refined(3, 0), 1);
  EXPECT_EQ(no_upline_refined(3, 1), 6);
  EXPECT_EQ(no_upline_count(3), 7);
  EXPECT_EQ(no_upline_refined2(8, 2, 6), 14625);
  EXPECT_EQ(no_upline_count(0), 1);
  EXPECT_EQ(no_upline_count(4), 35);
}

TEST(NoUpline, PartitionIdentity) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= 4; ++k) {
      BigInt sum = 0;
      for (int j = 0; j <= n; ++j) sum += no_upline_refined2(n, k, j);
      EXPECT_EQ(sum, 2 * k <= n ? no_upline_refined(n, k) : BigInt(0)) << n << ' ' << k;
    }
  }
}

TEST(RefinedCounts, Examples) {
  auto a = refined_tree_counts(5);
  EXPECT_EQ(a.at({2, 0, 2}), 1);
  EXPECT_EQ(a.at({2, 0, 1}), 1);
  EXPECT_EQ(a.at({2, 1, 1}), 1);
  EXPECT_EQ(a.at({1, 0, 1}), 1);
  EXPECT_EQ(a.at({1, 0, 2}), 0);
  EXPECT_EQ(a.at({1, 1, 1}), 0);
  EXPECT_EQ(a.at({3, -1, 2}), 0);
  BigInt total = 0;
  for (const auto& [idx, v] : a.entries()) {
    if (idx[0] == 5) total += v;
  }
  EXPECT_EQ(total, 945);
  EXPECT_THROW(a.at({1, 2}), std::invalid_argument);
}

TEST(RefinedCounts, AgreeWithTally) {
  auto a = refined_tree_counts(6);
  auto a4 = refined_tree_counts4(6);
  for (int n = 1; n <= 6; ++n) {
    auto tally = tree_tally(n);
    std::map<std::vector<int>, long> by_ij;
    for (const auto& [k, v] : tally) {
      by_ij[{k[0], k[1]}] += v;
      ASSERT_EQ(a4.at({n, k[0], k[1], k[2]}), v) << n;
    }
    for (const auto& [k, v] : by_ij) ASSERT_EQ(a.at({n, k[0], k[1]}), v) << n;
    BigInt t3 = 0, t4 = 0;
    for (const auto& [idx, v] : a.entries()) t3 += idx[0] == n ? v : 0;
    for (const auto& [idx, v] : a4.entries()) t4 += idx[0] == n ? v : 0;
    EXPECT_EQ(t3, oracle::double_factorial(n));
    EXPECT_EQ(t4, oracle::double_factorial(n));
  }
}

TEST(RefinedCounts4, InitialValues) {
  auto a = refined_tree_counts4(4);
  EXPECT_EQ(a.at({2, 0, 2, 2}), 1);
  EXPECT_EQ(a.at({2, 0, 1, 1}), 1);
  EXPECT_EQ(a.at({2, 1, 1, 2}), 1);
  EXPECT_EQ(a.at({0, 0, 1, 1}), 1);
}

TEST(Eq4, Terms) {
  EXPECT_EQ(eq4_terms(2), std::make_tuple(BigInt(1), BigInt(1), BigInt(0)));
  EXPECT_EQ(eq4_terms(3), std::make_tuple(BigInt(2), BigInt(4), BigInt(1)));
  EXPECT_EQ(eq4_terms(4), std::make_tuple(BigInt(7), BigInt(21), BigInt(7)));
  auto w = w12_sequence(12);
  for (int n = 1; n <= 12; ++n) {
    auto [a, b, c] = eq4_terms(n);
    EXPECT_EQ(a + b + c, w[n]) << n;
  }
}

TEST(BadVertexDistribution, Rows) {
  auto d3 = bad_vertex_distribution(3);
  EXPECT_EQ(d3, (std::map<int, BigInt>{{1, 4}, {2, 10}, {3, 1}}));
  auto d4 = bad_vertex_distribution(4);
  EXPECT_EQ(d4, (std::map<int, BigInt>{{1, 8}, {2, 60}, {3, 36}, {4, 1}}));
  EXPECT_EQ(bad_vertex_distribution(1), (std::map<int, BigInt>{{1, 1}}));
}

TEST(BadVertexDistribution, PublishedRows) {
  const auto& rows = published_bad_vertex_rows();
  ASSERT_EQ(rows.size(), 7u);
  for (int n = 1; n <= 7; ++n) {
    auto d = bad_vertex_distribution(n);
    long sum = 0;
    for (int l = 1; l <= n; ++l) {
      sum += rows[n - 1][l - 1];
      if (n == 6 && (l == 2 || l == 3)) continue;  // misprinted entries
      EXPECT_EQ(d[l], rows[n - 1][l - 1]) << n << ' ' << l;
    }
    if (n != 6) EXPECT_EQ(sum, oracle::double_factorial(n));
  }
  auto d6 = bad_vertex_distribution(6);
  EXPECT_EQ(d6[2], 1328);
  EXPECT_EQ(d6[3], 5168);
  EXPECT_EQ(rows[5][1], 128);
  EXPECT_EQ(rows[5][2], 5158);
}
