#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "klazar/codes.hpp"
#include "klazar/counting.hpp"
#include "klazar/matching.hpp"
#include "klazar/series.hpp"
#include "klazar/tree.hpp"

namespace klazar {

using Json = nlohmann::ordered_json;

Json to_json(const IncreasingTree& t);
Json to_json(const NodeMarkedKlazarTree& t);
Json to_json(const PerfectMatching& m);
Json to_json(DotRef d);
Json to_json(const std::vector<CodeEntry>& c);
Json to_json(const TrapezoidalWord& w);
Json to_json(const StirlingMatching& s);
Json to_json(const PowerMatching& p);
Json to_json(const OrderedShape& s);
Json to_json(const Polynomial& p);
Json to_json(const TruncatedEgf& f);
Json to_json(const CountTable& t);

// All parsers throw std::invalid_argument on malformed input.
IncreasingTree tree_from_json(const Json& j);
NodeMarkedKlazarTree marked_tree_from_json(const Json& j);
PerfectMatching matching_from_json(const Json& j);
std::vector<CodeEntry> code_from_json(const Json& j);
TrapezoidalWord word_from_json(const Json& j);

// Accept either canonical JSON or the text notations (bracket trees, slash
// matchings, "R0,L1" codes, space- or comma-separated words).
IncreasingTree read_tree(std::string_view text);
NodeMarkedKlazarTree read_marked_tree(std::string_view text);
PerfectMatching read_matching(std::string_view text);
std::vector<CodeEntry> read_code(std::string_view text);
TrapezoidalWord read_word(std::string_view text);

}  // namespace klazar
