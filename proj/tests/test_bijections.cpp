#include <gtest/gtest.h>

#include <set>

#include "klazar/bijections.hpp"
#include "oracles.hpp"

using namespace klazar;

namespace {

std::vector<CodeEntry> C(const char* s) { return parse_code(s); }
IncreasingTree T(const char* s) { return IncreasingTree::parse(s); }
PerfectMatching M(const char* s) { return PerfectMatching::parse(s); }
using Pairs = std::vector<std::pair<int, int>>;

}  // namespace

TEST(Phi, Examples) {
  NodeMarkedKlazarTree one{T("0(1(3,10,7(8),4(9,5(6),11)),2)"), {4}};
  one.validate();
  EXPECT_EQ(mark_violators(one).to_string(), "0(1(3,9,5(6),10,7(8),4(11)),2)");
  NodeMarkedKlazarTree two{T("0(1,4(5),2(3(6),7))"), {2, 3}};
  two.validate();
  EXPECT_EQ(mark_violators(two).to_string(), "0(1,6,3,4(5),2(7))");
  NodeMarkedKlazarTree plain{T("0(1(2),3)"), {}};
  EXPECT_EQ(mark_violators(plain), plain.tree);
  EXPECT_EQ(unmark_violators(T("0(1,6,3,4(5),2(7))")), two);
}

TEST(Phi, ValidationRejects) {
  EXPECT_THROW((NodeMarkedKlazarTree{T("0(2,1)"), {}}.validate()), std::invalid_argument);     // has a violator
  EXPECT_THROW((NodeMarkedKlazarTree{T("0(1(2))"), {2}}.validate()), std::invalid_argument);  // leaf mark
  EXPECT_THROW((NodeMarkedKlazarTree{T("0(1(2))"), {0}}.validate()), std::invalid_argument);  // root mark
}

TEST(Phi, BijectionPreservingReverseBad) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> images;
    for (const auto& k : enumerate_klazar_trees(n)) {
      std::vector<Label> nodes;
      for (Label v = 1; v <= n; ++v) {
        if (!k.is_leaf(v)) nodes.push_back(v);
      }
      const auto leaves = tree_stats(k).leaves;
      for (unsigned mask = 0; mask < (1u << nodes.size()); ++mask) {
        NodeMarkedKlazarTree m{k, {}};
        for (std::size_t b = 0; b < nodes.size(); ++b) {
          if (mask >> b & 1) m.marked.push_back(nodes[b]);
        }
        auto t = mark_violators(m);
        ASSERT_EQ(oracle::violators(t), m.marked);
        ASSERT_EQ(static_cast<int>(reverse_bad_vertices(t).size()), leaves - 1);
        ASSERT_EQ(unmark_violators(t), m);
        images.insert(t.to_string());
      }
    }
    EXPECT_EQ(static_cast<long>(images.size()), oracle::double_factorial(n));
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(tree_from_involuted_code(C("R0,R1,L1,L2,L1,R2")).to_string(), "0(3,5,1(4,2(6)))");
  EXPECT_EQ(code_to_string(involuted_tree_code(T("0(3,5,1(4,2(6)))"))), "R0,R1,L1,L2,L1,R2");
  EXPECT_EQ(code_to_string(involuted_tree_code(T("0(1(2))"))), "R0,R1");
  EXPECT_EQ(code_to_string(involuted_tree_code(T("0(2,1)"))), "R0,L1");
}

TEST(Sigma, ViolatorPairsFromCode) {
  EXPECT_EQ(violator_pairs_from_code(C("R0,R1,L1,L2,L1,R2")), (Pairs{{2, 6}}));
  EXPECT_EQ(violator_pairs_from_code(C("R0,L1")), (Pairs{{1, 2}}));
  EXPECT_TRUE(violator_pairs_from_code(C("R0,R1")).empty());
}

TEST(Sigma, BijectionTrackingViolators) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> codes;
    for_each_increasing_tree(n, [&](const IncreasingTree& t) {
      auto c = involuted_tree_code(t);
      ASSERT_NO_THROW(validate_tree_code(c));
      ASSERT_EQ(tree_from_involuted_code(c), t);
      auto expect = violator_partner_pairs(t);
      auto got = violator_pairs_from_code(c);
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, expect) << t.to_string();
      codes.insert(code_to_string(c));
    });
    EXPECT_EQ(static_cast<long>(codes.size()), oracle::double_factorial(n));
  }
}

TEST(Tau, Examples) {
  EXPECT_EQ(upline_tracking_matching(C("B1,T1,B2,T1")), M("1 5/2 8/3 7/4 6"));
  EXPECT_EQ(code_to_string(upline_tracking_code(M("1 3/2 10/4 7/5 9/6 8"))), "B1,B1,T1,T2,T1");
  EXPECT_EQ(upline_tracking_matching(C("B1")), M("1 2"));
}

TEST(Tau, UplinePairsFromCode) {
  EXPECT_TRUE(upline_pairs_from_code(C("B1,T1,B2,T1")).empty());
  EXPECT_EQ(upline_pairs_from_code(C("B1,T1")), (Pairs{{1, 2}}));
  EXPECT_TRUE(upline_pairs_from_code(C("B1,B2")).empty());
}

TEST(Tau, BijectionTrackingUplines) {
  for (int n = 1; n <= 6; ++n) {
    std::set<PerfectMatching> images;
    for (const auto& c : enumerate_matching_codes(n)) {
      auto m = upline_tracking_matching(c);
      ASSERT_EQ(upline_tracking_code(m), c);
      ASSERT_EQ(upline_pairs_from_code(c), classify_edges(m).uplines) << code_to_string(c);
      images.insert(m);
    }
    EXPECT_EQ(static_cast<long>(images.size()), oracle::double_factorial(n));
  }
}

TEST(TauVariant, Examples) {
  EXPECT_EQ(downline_tracking_matching(C("B1,T1,B2,T1")), M("1 4/2 8/3 6/5 7"));
  EXPECT_EQ(downline_tracking_matching(C("B1")), M("1 2"));
  EXPECT_EQ(downline_tracking_matching(C("B1,B1")), M("1 3/2 4"));
}

TEST(TauVariant, JointParityCorollary) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::pair<int, int>, long> words, matchings;
    std::set<PerfectMatching> images;
    for_each_word(n, [&](const TrapezoidalWord& w) {
      auto stats = word_parity_stats(w);
      ++words[stats];
      auto m = downline_tracking_matching(word_to_matchcode(w));
      auto p = oracle::pairs_of(m);
      ASSERT_EQ(std::make_pair(oracle::uplines(p), oracle::odd_to_even(p)), stats);
      images.insert(m);
    });
    for (const auto& p : oracle::matchings(n)) ++matchings[{oracle::uplines(p), oracle::odd_to_even(p)}];
    EXPECT_EQ(words, matchings) << n;
    EXPECT_EQ(static_cast<long>(images.size()), oracle::double_factorial(n));
  }
  std::multiset<std::pair<int, int>> n2;
  for (const auto& w : enumerate_words(2)) n2.insert(word_parity_stats(w));
  EXPECT_EQ(n2, (std::multiset<std::pair<int, int>>{{0, 2}, {0, 0}, {1, 1}}));
}

TEST(PhiMap, Examples) {
  EXPECT_EQ(tree_to_matching_recursive(T("0(2,1)")), M("1 4/2 3"));
  EXPECT_EQ(tree_to_matching(T("0(2,1)")), M("1 4/2 3"));
  EXPECT_EQ(tree_to_matching_recursive(T("0(1,2)")), M("1 2/3 4"));
  EXPECT_EQ(tree_to_matching(T("0(1)")), M("1 2"));
  auto m = tree_to_matching_recursive(T("0(4,2(8,7,6(9)),5,1(3))"));
  EXPECT_EQ(classify_edges(m).uplines, (Pairs{{1, 5}, {2, 6}, {6, 9}, {7, 8}}));
}

TEST(PhiMap, RecursiveEqualsExplicitAndTracksViolators) {
  for (int n = 1; n <= 6; ++n) {
    std::set<PerfectMatching> images, klazar_images;
    for_each_increasing_tree(n, [&](const IncreasingTree& t) {
      auto m = tree_to_matching_recursive(t);
      ASSERT_EQ(m, tree_to_matching(t)) << t.to_string();
      ASSERT_EQ(classify_edges(m).uplines, violator_partner_pairs(t)) << t.to_string();
      images.insert(m);
      if (oracle::violators(t).empty()) klazar_images.insert(m);
    });
    EXPECT_EQ(static_cast<long>(images.size()), oracle::double_factorial(n));
    auto no_up = enumerate_no_upline_matchings(n);
    EXPECT_EQ(klazar_images, std::set<PerfectMatching>(no_up.begin(), no_up.end()));
  }
}

TEST(Corollary13, ThreeStatisticsAtTwo) {
  std::multiset<int> kv, ups, words;
  for (const auto& t : enumerate_increasing_trees(2)) kv.insert(static_cast<int>(klazar_violators(t).size()));
  for (const auto& m : enumerate_matchings(2)) ups.insert(upline_count(m));
  for (const auto& w : enumerate_words(2)) words.insert(word_parity_stats(w).first);
  const std::multiset<int> expect{0, 0, 1};
  EXPECT_EQ(kv, expect);
  EXPECT_EQ(ups, expect);
  EXPECT_EQ(words, expect);
}
