#pragma once

#include <utility>
#include <vector>

#include "klazar/codes.hpp"
#include "klazar/matching.hpp"
#include "klazar/tree.hpp"

namespace klazar {

/// Turns every marked node into a Klazar violator (largest mark first).
IncreasingTree mark_violators(const NodeMarkedKlazarTree& marked);
/// Inverse: the violators of t become the marks.
NodeMarkedKlazarTree unmark_violators(const IncreasingTree& t);

/// Natural tree coding with the involution F applied before each step is
/// recorded.
BuildTreeCode involuted_tree_code(const IncreasingTree& t);
IncreasingTree tree_from_involuted_code(const BuildTreeCode& c);

/// (i, j) for each (L,i) of odd multiplicity, j the last position carrying
/// index i. These are the (violator, partner) pairs of
/// tree_from_involuted_code(c).
std::vector<std::pair<Label, Label>> violator_pairs_from_code(const BuildTreeCode& c);

/// Natural matching coding, with each step's dot adjusted so that uplines are
/// tracked by the T entries.
PerfectMatching upline_tracking_matching(const BuildMatchingCode& c);
BuildMatchingCode upline_tracking_code(const PerfectMatching& m);

/// (i, j) for each (T,i) of odd multiplicity, j the last position carrying
/// index i. These are the uplines of upline_tracking_matching(c).
std::vector<std::pair<int, int>> upline_pairs_from_code(const BuildMatchingCode& c);

/// Tree to matching by recursion on the maximal label.
PerfectMatching tree_to_matching_recursive(const IncreasingTree& t);
/// The same map as a composition of three code-level bijections.
PerfectMatching tree_to_matching(const IncreasingTree& t);

/// Like upline_tracking_matching, but B entries follow weak downlines, so
/// that (uplines, weak downlines) track the parity statistics of words.
PerfectMatching downline_tracking_matching(const BuildMatchingCode& c);

}  // namespace klazar
