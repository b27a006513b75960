#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "klazar/matching.hpp"
#include "klazar/tree.hpp"

namespace klazar {

/// One step of a build-tree code ('R' or 'L') or build-matching code
/// ('B' or 'T').
struct CodeEntry {
  char letter = 'R';
  int index = 0;
  friend bool operator==(const CodeEntry&, const CodeEntry&) = default;
  friend auto operator<=>(const CodeEntry&, const CodeEntry&) = default;
};

using BuildTreeCode = std::vector<CodeEntry>;
using BuildMatchingCode = std::vector<CodeEntry>;
using TrapezoidalWord = std::vector<int>;

std::string code_to_string(const std::vector<CodeEntry>& c);  // "R0,L1,..."
std::vector<CodeEntry> parse_code(std::string_view text);

/// Throw std::invalid_argument naming the first bad position.
void validate_tree_code(const BuildTreeCode& c);
void validate_matching_code(const BuildMatchingCode& c);
void validate_word(const TrapezoidalWord& w);

/// Step-k insertion of vertex k: rightmost child of index (R) or immediate
/// left neighbor of index (L).
void apply_tree_step(IncreasingTree& t, CodeEntry e);
/// The entry recording vertex n = t.max_label() in t.
CodeEntry tree_step_of_max(const IncreasingTree& t);

IncreasingTree code_to_tree(const BuildTreeCode& c);
BuildTreeCode tree_to_code(const IncreasingTree& t);

/// The dot that enlarge consumes for a (B,i) or (T,i) entry at step k.
DotRef matching_step_dot(CodeEntry e);
CodeEntry matching_entry_of(DotRef d);

PerfectMatching code_to_matching(const BuildMatchingCode& c);
BuildMatchingCode matching_to_code(const PerfectMatching& m);

BuildMatchingCode treecode_to_matchcode(const BuildTreeCode& c);
BuildTreeCode matchcode_to_treecode(const BuildMatchingCode& c);

TrapezoidalWord code_to_trapezoidal(const BuildTreeCode& c);
BuildTreeCode trapezoidal_to_code(const TrapezoidalWord& w);
/// Odd 2i-1 becomes (B,i), even 2i becomes (T,i).
BuildMatchingCode word_to_matchcode(const TrapezoidalWord& w);
TrapezoidalWord matchcode_to_word(const BuildMatchingCode& c);

/// (distinct even values of odd multiplicity, distinct odd values of odd
/// multiplicity).
std::pair<int, int> word_parity_stats(const TrapezoidalWord& w);

/// All words of length n in lexicographic order.
void for_each_word(int n, const std::function<void(const TrapezoidalWord&)>& visit);
std::vector<TrapezoidalWord> enumerate_words(int n);
std::vector<BuildTreeCode> enumerate_tree_codes(int n);
std::vector<BuildMatchingCode> enumerate_matching_codes(int n);

}  // namespace klazar
