#pragma once

#include <string>

#include "klazar/matching.hpp"
#include "klazar/tree.hpp"

namespace klazar {

/// Indented outline, one vertex per line, children in order. Violators carry
/// a trailing " *".
std::string tree_ascii(const IncreasingTree& t);
/// Layered drawing: leaves spaced evenly, parents centred over children.
std::string tree_svg(const IncreasingTree& t);

/// Two dot rows with '|' under vertical lines, then one line per match.
std::string matching_ascii(const PerfectMatching& m);
/// Lines and arcs between two labelled dot rows; uplines are drawn dashed
/// red with class "upline".
std::string matching_svg(const PerfectMatching& m);

}  // namespace klazar
