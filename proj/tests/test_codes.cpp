#include <gtest/gtest.h>

#include <set>

#include "klazar/codes.hpp"
#include "oracles.hpp"

using namespace klazar;

namespace {

std::vector<CodeEntry> C(const char* s) { return parse_code(s); }
IncreasingTree T(const char* s) { return IncreasingTree::parse(s); }
PerfectMatching M(const char* s) { return PerfectMatching::parse(s); }

}  // namespace

TEST(CodeText, RoundTrip) {
  EXPECT_EQ(code_to_string(C("R0,L1,L1")), "R0,L1,L1");
  EXPECT_EQ(code_to_string(C(" B1 , T1 ")), "B1,T1");
  EXPECT_THROW(C("R0,X1"), std::invalid_argument);
  EXPECT_THROW(C("R"), std::invalid_argument);
}

TEST(CodeValidation, Ranges) {
  EXPECT_NO_THROW(validate_tree_code(C("R0,R1,L1")));
  EXPECT_THROW(validate_tree_code(C("R1")), std::invalid_argument);
  EXPECT_THROW(validate_tree_code(C("R0,L0")), std::invalid_argument);
  EXPECT_THROW(validate_tree_code(C("R0,R2")), std::invalid_argument);
  EXPECT_THROW(validate_tree_code(C("R0,B1")), std::invalid_argument);
  EXPECT_NO_THROW(validate_matching_code(C("B1,B2,T2")));
  EXPECT_THROW(validate_matching_code(C("T1")), std::invalid_argument);
  EXPECT_THROW(validate_matching_code(C("B1,T2")), std::invalid_argument);
  EXPECT_THROW(validate_matching_code(C("B1,B3")), std::invalid_argument);
  EXPECT_NO_THROW(validate_word({1, 3, 5}));
  EXPECT_THROW(validate_word({2}), std::invalid_argument);
  EXPECT_THROW(validate_word({1, 0}), std::invalid_argument);
  EXPECT_THROW(code_to_tree(C("R0,R5")), std::invalid_argument);
}

TEST(TreeCodes, Examples) {
  EXPECT_EQ(code_to_tree(C("R0,L1,L1,R1,R2,R1,L6")).to_string(), "0(2(5),3,1(4,7,6))");
  EXPECT_EQ(code_to_string(tree_to_code(T("0(2(5),3,1(4,7,6))"))), "R0,L1,L1,R1,R2,R1,L6");
  EXPECT_EQ(code_to_tree(C("R0")).to_string(), "0(1)");
  EXPECT_EQ(code_to_tree(C("R0,L1")).to_string(), "0(2,1)");
  EXPECT_EQ(code_to_tree({}).to_string(), "0");
}

TEST(MatchingCodes, Examples) {
  EXPECT_EQ(code_to_matching(C("B1,B1,T2,B3,B3")), M("1 4/3 5/2 8/6 9/7 10"));
  EXPECT_EQ(code_to_string(matching_to_code(M("1 4/3 5/2 8/6 9/7 10"))), "B1,B1,T2,B3,B3");
  EXPECT_EQ(code_to_matching(C("B1")), M("1 2"));
  EXPECT_EQ(code_to_matching(C("B1,B2")), M("1 2/3 4"));
}

TEST(CodeCorrespondence, Examples) {
  EXPECT_EQ(code_to_string(treecode_to_matchcode(C("R0,R1,L2,R0,L3"))), "B1,B1,T2,B4,T3");
  EXPECT_EQ(code_to_string(matchcode_to_treecode(C("B1,B1,T2,B4,T3"))), "R0,R1,L2,R0,L3");
  EXPECT_EQ(code_to_string(treecode_to_matchcode(C("R0"))), "B1");
  EXPECT_EQ(code_to_string(treecode_to_matchcode(C("R0,L1"))), "B1,T1");
}

TEST(Trapezoidal, Examples) {
  EXPECT_EQ(code_to_trapezoidal(C("R0,L1")), (TrapezoidalWord{1, 2}));
  EXPECT_EQ(code_to_trapezoidal(C("R0,L1,L1,R1,R2,R1,L6")), (TrapezoidalWord{1, 2, 2, 3, 5, 3, 12}));
  EXPECT_EQ(code_to_string(trapezoidal_to_code({1})), "R0");
  EXPECT_THROW(trapezoidal_to_code({1, 4}), std::invalid_argument);
}

TEST(Trapezoidal, ParityStats) {
  EXPECT_EQ(word_parity_stats({1, 1}), std::make_pair(0, 0));
  EXPECT_EQ(word_parity_stats({1, 2}), std::make_pair(1, 1));
  EXPECT_EQ(word_parity_stats({1, 2, 2, 3, 5, 3, 12}), std::make_pair(1, 2));
}

TEST(Words, LexicographicAndCounted) {
  for (int n = 0; n <= 6; ++n) {
    auto words = enumerate_words(n);
    EXPECT_EQ(static_cast<long>(words.size()), oracle::double_factorial(n));
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
    EXPECT_EQ(std::adjacent_find(words.begin(), words.end()), words.end());
    for (const auto& w : words) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        ASSERT_GE(w[k], 1);
        ASSERT_LE(w[k], 2 * static_cast<int>(k) + 1);
      }
    }
  }
}

TEST(Codes, AllCorrespondencesInvertAndAlign) {
  for (int n = 0; n <= 6; ++n) {
    auto trees = enumerate_increasing_trees(n);
    auto matchings = enumerate_matchings(n);
    auto tcodes = enumerate_tree_codes(n);
    auto mcodes = enumerate_matching_codes(n);
    auto words = enumerate_words(n);
    ASSERT_EQ(trees.size(), words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      const auto& w = words[i];
      auto tc = trapezoidal_to_code(w);
      ASSERT_EQ(tc, tcodes[i]);
      ASSERT_EQ(treecode_to_matchcode(tc), mcodes[i]);
      ASSERT_EQ(code_to_tree(tc), trees[i]);
      ASSERT_EQ(code_to_matching(mcodes[i]), matchings[i]);
      ASSERT_EQ(tree_to_code(trees[i]), tc);
      ASSERT_EQ(matching_to_code(matchings[i]), mcodes[i]);
      ASSERT_EQ(code_to_trapezoidal(tc), w);
      ASSERT_EQ(matchcode_to_treecode(mcodes[i]), tc);
      ASSERT_EQ(matchcode_to_word(word_to_matchcode(w)), w);
    }
  }
}

TEST(Codes, ParityRouteSendsOddAndEvenEntries) {
  EXPECT_EQ(code_to_string(word_to_matchcode({1, 3, 2})), "B1,B2,T1");
  EXPECT_EQ(code_to_string(word_to_matchcode({1, 1, 5})), "B1,B1,B3");
}
