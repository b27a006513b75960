#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klazar {

enum class Row { Top, Bot };

/// A dot of a two-row diagram: top position i is the number 2i-1, bottom
/// position i is 2i.
struct DotRef {
  Row row = Row::Bot;
  int pos = 1;

  int value() const { return row == Row::Top ? 2 * pos - 1 : 2 * pos; }
  static DotRef of_value(int v) { return v % 2 ? DotRef{Row::Top, (v + 1) / 2} : DotRef{Row::Bot, v / 2}; }
  std::string to_string() const;
  friend bool operator==(const DotRef&, const DotRef&) = default;
};

/// Perfect matching of [2n].
class PerfectMatching {
 public:
  PerfectMatching() : partner_(1, 0) {}
  /// Throws std::invalid_argument unless the pairs partition [2n].
  static PerfectMatching from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  /// Slash notation, e.g. "1 3/2 10/4 7/5 9/6 8". The empty string is the
  /// empty matching.
  static PerfectMatching parse(std::string_view text);

  int size() const { return static_cast<int>(partner_.size() - 1) / 2; }
  int partner(int v) const;
  DotRef partner(DotRef d) const { return DotRef::of_value(partner(d.value())); }
  /// Pairs smaller-first, sorted by the smaller entry.
  std::vector<std::pair<int, int>> pairs() const;
  std::string to_string() const;

  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
  friend auto operator<=>(const PerfectMatching& a, const PerfectMatching& b) {
    return a.partner_ <=> b.partner_;
  }

 private:
  std::vector<int> partner_;  // index 0 unused
};

struct EdgeClasses {
  std::vector<std::pair<int, int>> uplines;          // (bottom i, top j), j > i
  std::vector<int> verticals;                        // column
  std::vector<std::pair<int, int>> strict_downlines; // (top i, bottom j), j > i
  std::vector<std::pair<int, int>> top_arcs;         // positions, smaller first
  std::vector<std::pair<int, int>> bottom_arcs;
};

EdgeClasses classify_edges(const PerfectMatching& m);
int upline_count(const PerfectMatching& m);
/// Odd-to-weakly-larger-even matches, vertical lines included.
int weak_downline_count(const PerfectMatching& m);
int vertical_count(const PerfectMatching& m);
bool has_upline(const PerfectMatching& m);
/// Top position j of the upline starting at bottom position i, or 0.
int upline_from(const PerfectMatching& m, int i);
/// Bottom position of the upline ending at top position j, or 0.
int upline_into(const PerfectMatching& m, int j);

// ---- enumeration ----------------------------------------------------------

/// Every perfect matching of [2n] once, ordered like the trapezoidal words
/// under the letter-swap code correspondence.
void for_each_matching(int n, const std::function<void(const PerfectMatching&)>& visit);
std::vector<PerfectMatching> enumerate_matchings(int n);
std::vector<PerfectMatching> enumerate_no_upline_matchings(int n);

// ---- growth ---------------------------------------------------------------

/// Adds the dots 2n+1, 2n+2 to a size-n matching. d = (Bot, n+1) adds them as
/// a pair; otherwise the new top dot joins d and d's old partner joins the new
/// bottom dot.
PerfectMatching enlarge(const PerfectMatching& m, DotRef d);
/// Inverse of enlarge.
std::pair<PerfectMatching, DotRef> prune_matching(const PerfectMatching& m);

/// Follows uplines from bottom position i until reaching a position that
/// starts none.
int shift_S(const PerfectMatching& m, int i);

// ---- no-upline decomposition ----------------------------------------------

/// n columns; edges (top a, bottom b) with b > a.
struct StirlingMatching {
  int cols = 0;
  std::vector<std::pair<int, int>> edges;  // sorted
  friend bool operator==(const StirlingMatching&, const StirlingMatching&) = default;
  friend auto operator<=>(const StirlingMatching&, const StirlingMatching&) = default;
};

/// top dots, `bottom` dots flush right; edges (top a, bottom b) with
/// a < b + (top - bottom), one per bottom dot.
struct PowerMatching {
  int top = 0;
  int bottom = 0;
  std::vector<std::pair<int, int>> edges;  // sorted by bottom
  int k() const { return top - bottom; }
  friend bool operator==(const PowerMatching&, const PowerMatching&) = default;
  friend auto operator<=>(const PowerMatching&, const PowerMatching&) = default;
};

bool is_valid_stirling(const StirlingMatching& s);
bool is_valid_power(const PowerMatching& p);
std::vector<StirlingMatching> enumerate_stirling_matchings(int n, int k);
std::vector<PowerMatching> enumerate_power_matchings(int k, int n);

struct NoUplineParts {
  PerfectMatching even;  // on the ranks of the even-even support
  PerfectMatching odd;   // on the ranks of the odd-odd support
  StirlingMatching stirling;
  PowerMatching power;
  friend bool operator==(const NoUplineParts&, const NoUplineParts&) = default;
};

NoUplineParts decompose_no_upline(const PerfectMatching& m);
PerfectMatching compose_no_upline(const NoUplineParts& parts);
/// (k, j): number of even-even matches, half the largest even in one (0 if none).
std::pair<int, int> no_upline_parameters(const PerfectMatching& m);

/// Set partition of [cols] into cols - #edges blocks, in standard order.
std::vector<std::vector<int>> stirling_to_partition(const StirlingMatching& s);

// ---- the three recurrence classes -----------------------------------------

int recurrence_class(const PerfectMatching& m);

/// Class 2: prune, returning the top position that absorbed the last top
/// dot's partner.
std::pair<PerfectMatching, int> class2_reduce(const PerfectMatching& m);
PerfectMatching class2_expand(const PerfectMatching& m, int top_pos);

/// Class 3: X = {j} + verticals strictly between + {i}, a subset of [n-1].
std::pair<PerfectMatching, std::vector<int>> class3_reduce(const PerfectMatching& m);
PerfectMatching class3_expand(const PerfectMatching& m, const std::vector<int>& x);

}  // namespace klazar
