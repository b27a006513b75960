#include <gtest/gtest.h>

#include <set>

#include "klazar/counting.hpp"
#include "klazar/matching.hpp"
#include "oracles.hpp"

using namespace klazar;

namespace {

PerfectMatching M(const char* s) { return PerfectMatching::parse(s); }
constexpr DotRef top(int i) { return {Row::Top, i}; }
constexpr DotRef bot(int i) { return {Row::Bot, i}; }

const char* kClass3 = "1 5/2 6/3 12/4 14/7 8/9 10/11 13";
const char* kTheorem8 = "1 2/3 15/4 8/5 14/6 12/7 10/9 13/11 16";

}  // namespace

TEST(Matching, ParseAndPrint) {
  auto m = M("2 3/1 4");
  EXPECT_EQ(m.to_string(), "1 4/2 3");
  EXPECT_EQ(m.partner(bot(1)), top(2));
  EXPECT_THROW(M("1 2/2 3"), std::invalid_argument);
  EXPECT_THROW(M("1 3"), std::invalid_argument);
  EXPECT_THROW(M("1 2/3"), std::invalid_argument);
  EXPECT_EQ(M("").size(), 0);
}

TEST(Matching, EnumerationOrderAndCount) {
  auto one = enumerate_matchings(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].to_string(), "1 2");
  std::vector<std::string> two;
  for (const auto& m : enumerate_matchings(2)) two.push_back(m.to_string());
  EXPECT_EQ(two, (std::vector<std::string>{"1 2/3 4", "1 3/2 4", "1 4/2 3"}));
  EXPECT_EQ(enumerate_matchings(5).size(), 945u);
}

TEST(Matching, EnumerationMatchesBruteForce) {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::vector<std::pair<int, int>>> lib;
    for_each_matching(n, [&](const PerfectMatching& m) { lib.insert(oracle::pairs_of(m)); });
    auto brute = oracle::matchings(n);
    const std::set<std::vector<std::pair<int, int>>> want(brute.begin(), brute.end());
    EXPECT_EQ(lib, want) << n;
    EXPECT_EQ(lib.size(), brute.size());
  }
}

TEST(EdgeClasses, Examples) {
  auto m = M("1 5/2 8/3 4/6 9/7 10");
  auto c = classify_edges(m);
  EXPECT_EQ(c.uplines, (std::vector<std::pair<int, int>>{{3, 5}}));
  EXPECT_EQ(vertical_count(m), 1);
  EXPECT_EQ(upline_count(M("1 5/2 7/3 4/6 8")), 1);
  EXPECT_EQ(classify_edges(M("1 5/2 7/3 4/6 8")).uplines, (std::vector<std::pair<int, int>>{{1, 4}}));
  auto v = M("1 2");
  EXPECT_EQ(vertical_count(v), 1);
  EXPECT_EQ(weak_downline_count(v), 1);
  EXPECT_EQ(upline_count(v), 0);
}

TEST(EdgeClasses, AgreeWithParityOracle) {
  for (int n = 1; n <= 6; ++n) {
    for_each_matching(n, [&](const PerfectMatching& m) {
      auto p = oracle::pairs_of(m);
      ASSERT_EQ(upline_count(m), oracle::uplines(p));
      ASSERT_EQ(weak_downline_count(m), oracle::odd_to_even(p));
      ASSERT_EQ(vertical_count(m), oracle::verticals(p));
      int ee = 0, oo = 0;
      for (auto [a, b] : p) {
        ee += a % 2 == 0 && b % 2 == 0;
        oo += a % 2 == 1 && b % 2 == 1;
      }
      ASSERT_EQ(ee, oo);
    });
  }
}

TEST(Enlarge, Examples) {
  // definition-consistent value (new top joins 2 bot, 2 bot's old partner joins the new bottom)
  EXPECT_EQ(enlarge(M("1 4/3 5/2 6"), bot(2)).to_string(), "1 8/2 6/3 5/4 7");
  EXPECT_EQ(enlarge(PerfectMatching{}, bot(1)).to_string(), "1 2");
  EXPECT_EQ(enlarge(M("1 2"), top(1)).to_string(), "1 3/2 4");
  EXPECT_EQ(enlarge(M("1 2"), bot(2)).to_string(), "1 2/3 4");
  EXPECT_THROW(enlarge(M("1 2"), top(2)), std::invalid_argument);
  EXPECT_THROW(enlarge(M("1 2"), bot(3)), std::invalid_argument);
}

TEST(Prune, InvertsEnlarge) {
  auto [m, d] = prune_matching(M("1 8/2 6/3 5/4 7"));
  EXPECT_EQ(m.to_string(), "1 4/2 6/3 5");
  EXPECT_EQ(d, bot(2));
  auto [e, d1] = prune_matching(M("1 2"));
  EXPECT_EQ(e.size(), 0);
  EXPECT_EQ(d1, bot(1));
  auto [s, d2] = prune_matching(M("1 3/2 4"));
  EXPECT_EQ(s.to_string(), "1 2");
  EXPECT_EQ(d2, top(1));
  EXPECT_THROW(prune_matching(PerfectMatching{}), std::invalid_argument);
}

TEST(Enlarge, BijectionOntoNextSize) {
  for (int n = 1; n <= 6; ++n) {
    std::set<PerfectMatching> images;
    for (const auto& m : enumerate_matchings(n - 1)) {
      std::vector<DotRef> refs;
      for (int i = 1; i <= n - 1; ++i) refs.push_back(top(i));
      for (int i = 1; i <= n; ++i) refs.push_back(bot(i));
      for (auto d : refs) {
        auto big = enlarge(m, d);
        images.insert(big);
        auto [back, dd] = prune_matching(big);
        ASSERT_EQ(back, m);
        ASSERT_EQ(dd, d);
      }
    }
    EXPECT_EQ(static_cast<long>(images.size()), oracle::double_factorial(n));
  }
}

TEST(ShiftS, Examples) {
  // uplines 2 bot -> 3 top and 3 bot -> 5 top
  auto m = M("1 2/3 8/4 5/6 9/7 10");
  EXPECT_EQ(upline_from(m, 2), 3);
  EXPECT_EQ(upline_into(m, 5), 3);
  EXPECT_EQ(upline_into(m, 1), 0);
  EXPECT_EQ(shift_S(m, 2), 5);
  EXPECT_EQ(shift_S(m, 3), 5);
  EXPECT_EQ(shift_S(m, 1), 1);
}

TEST(ShiftS, NeverStartsAnUpline) {
  for (int n = 1; n <= 5; ++n) {
    for_each_matching(n, [&](const PerfectMatching& m) {
      for (int i = 1; i <= n; ++i) {
        int s = shift_S(m, i);
        ASSERT_GE(s, i);
        ASSERT_EQ(upline_from(m, s), 0);
      }
    });
  }
}

TEST(Decomposition, WorkedExample) {
  auto m = M(kTheorem8);
  ASSERT_FALSE(has_upline(m));
  EXPECT_EQ(no_upline_parameters(m), std::make_pair(2, 6));
  auto parts = decompose_no_upline(m);
  EXPECT_EQ(parts.even.to_string(), "1 3/2 4");  // 4 8, 6 12 on A = {4,6,8,12}
  EXPECT_EQ(parts.odd.to_string(), "1 4/2 3");   // 3 15, 9 13 on B = {3,9,13,15}
  EXPECT_EQ(parts.stirling.cols, 6);
  EXPECT_EQ(parts.stirling.edges.size(), 2u);
  EXPECT_TRUE(is_valid_stirling(parts.stirling));
  EXPECT_EQ(parts.power.k(), 5);
  EXPECT_EQ(parts.power.bottom, 2);
  EXPECT_TRUE(is_valid_power(parts.power));
  EXPECT_EQ(compose_no_upline(parts), m);
  EXPECT_THROW(decompose_no_upline(M("1 4/2 3")), std::invalid_argument);
}

TEST(Decomposition, NoEvenEvenMatches) {
  auto m = M("1 2/3 4/5 6");
  auto parts = decompose_no_upline(m);
  EXPECT_EQ(no_upline_parameters(m), std::make_pair(0, 0));
  EXPECT_TRUE(parts.stirling.edges.empty());
  EXPECT_EQ(parts.power.k(), 1);
  EXPECT_EQ(parts.power.bottom, 3);
}

TEST(Decomposition, CountsByKAndJ) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::pair<int, int>, long> tally;
    for (const auto& m : enumerate_no_upline_matchings(n)) {
      ++tally[no_upline_parameters(m)];
      ASSERT_EQ(compose_no_upline(decompose_no_upline(m)), m);
    }
    for (int k = 0; 2 * k <= n; ++k) {
      for (int j = 0; j <= n; ++j) {
        long df = oracle::double_factorial(k);
        long expect = df * df * oracle::stirling2(j, 2 * k);
        for (int e = 0; e < n - j; ++e) expect *= 2 * k + 1;
        ASSERT_EQ(tally[std::make_pair(k, j)], expect) << n << ' ' << k << ' ' << j;
      }
    }
  }
}

TEST(Stirling, PartitionExample) {
  StirlingMatching s{7, {{1, 5}, {3, 4}, {4, 6}}};
  ASSERT_TRUE(is_valid_stirling(s));
  EXPECT_EQ(stirling_to_partition(s), (std::vector<std::vector<int>>{{1, 5}, {2, 6}, {3, 4}, {7}}));
  StirlingMatching empty{4, {}};
  EXPECT_EQ(stirling_to_partition(empty), (std::vector<std::vector<int>>{{1}, {2}, {3}, {4}}));
  EXPECT_FALSE(is_valid_stirling(StirlingMatching{3, {{2, 2}}}));
}

TEST(Stirling, CountsAndBijection) {
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto all = enumerate_stirling_matchings(n, k);
      ASSERT_EQ(static_cast<long>(all.size()), oracle::stirling2(n, k)) << n << ' ' << k;
      std::set<std::vector<std::vector<int>>> parts;
      for (const auto& s : all) parts.insert(stirling_to_partition(s));
      ASSERT_EQ(parts.size(), all.size());
    }
  }
  std::set<std::vector<std::vector<int>>> two_blocks;
  for (const auto& s : enumerate_stirling_matchings(4, 2)) two_blocks.insert(stirling_to_partition(s));
  EXPECT_EQ(two_blocks.size(), 7u);
}

TEST(Power, CountsArePowers) {
  for (int k = 1; k <= 5; ++k) {
    long p = 1;
    for (int n = 0; n <= 6; ++n) {
      auto all = enumerate_power_matchings(k, n);
      EXPECT_EQ(static_cast<long>(all.size()), p) << k << ' ' << n;
      for (const auto& m : all) ASSERT_TRUE(is_valid_power(m));
      p *= k;
    }
  }
}

TEST(RecurrenceClass, Examples) {
  EXPECT_EQ(recurrence_class(M("1 2/3 4")), 1);
  EXPECT_EQ(recurrence_class(M("1 3/2 4")), 2);
  EXPECT_EQ(recurrence_class(M(kClass3)), 3);
  EXPECT_THROW(recurrence_class(M("1 4/2 3")), std::invalid_argument);
}

TEST(RecurrenceClass, Class2Reduction) {
  auto [r, mark] = class2_reduce(M("1 3/2 4"));
  EXPECT_EQ(r.to_string(), "1 2");
  EXPECT_EQ(mark, 1);
  auto [r2, mark2] = class2_reduce(M("1 8/2 4/3 6/5 7"));
  EXPECT_EQ(r2.to_string(), "1 5/2 4/3 6");
  EXPECT_EQ(mark2, 3);
  EXPECT_EQ(class2_expand(r2, mark2), M("1 8/2 4/3 6/5 7"));
  EXPECT_THROW(class2_reduce(M("1 2/3 4")), std::invalid_argument);
}

TEST(RecurrenceClass, Class3Reduction) {
  auto [r, x] = class3_reduce(M(kClass3));
  EXPECT_EQ(x, (std::vector<int>{2, 4, 5, 6}));
  EXPECT_EQ(r.to_string(), "1 5/2 4/3 6");
  EXPECT_EQ(class3_expand(r, x), M(kClass3));
}

TEST(RecurrenceClass, SizesAndRoundTrips) {
  // a(n) from brute-force no-upline counts
  std::vector<long> a{1};
  for (int n = 1; n <= 6; ++n) {
    long c = 0;
    for (const auto& p : oracle::matchings(n)) c += oracle::uplines(p) == 0;
    a.push_back(c);
  }
  auto choose = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return k < 0 || k > n ? 0 : r;
  };
  for (int n = 1; n <= 6; ++n) {
    long size[4] = {0, 0, 0, 0};
    for (const auto& m : enumerate_no_upline_matchings(n)) {
      int c = recurrence_class(m);
      ++size[c];
      if (c == 2) {
        auto [r, mark] = class2_reduce(m);
        ASSERT_EQ(class2_expand(r, mark), m);
      } else if (c == 3) {
        auto [r, x] = class3_reduce(m);
        ASSERT_EQ(class3_expand(r, x), m);
      }
    }
    long t3 = 0;
    for (int k = 0; n - 2 - k >= 0; ++k) t3 += choose(n - 1, k + 2) * a[n - 2 - k];
    EXPECT_EQ(size[1], a[n - 1]) << n;
    EXPECT_EQ(size[2], (n - 1) * a[n - 1]) << n;
    EXPECT_EQ(size[3], t3) << n;
  }
}
