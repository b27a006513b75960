#include "klazar/matching.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klazar {

std::string DotRef::to_string() const {
  return std::to_string(pos) + (row == Row::Top ? " top" : " bot");
}

// ---------------------------------------------------------------------------
// PerfectMatching

PerfectMatching PerfectMatching::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw std::invalid_argument("matching: negative size");
  if (static_cast<int>(pairs.size()) != n) {
    throw std::invalid_argument("matching: expected " + std::to_string(n) + " pairs, got " +
                                std::to_string(pairs.size()));
  }
  PerfectMatching m;
  m.partner_.assign(2 * n + 1, 0);
  for (auto [a, b] : pairs) {
    for (int v : {a, b}) {
      if (v < 1 || v > 2 * n) {
        throw std::invalid_argument("matching: entry " + std::to_string(v) + " outside [1," +
                                    std::to_string(2 * n) + "]");
      }
      if (m.partner_[v] != 0) throw std::invalid_argument("matching: entry " + std::to_string(v) + " used twice");
    }
    if (a == b) throw std::invalid_argument("matching: entry " + std::to_string(a) + " paired with itself");
    m.partner_[a] = b;
    m.partner_[b] = a;
  }
  return m;
}

PerfectMatching PerfectMatching::parse(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  std::string s(text);
  if (s.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  std::stringstream in(s);
  std::string chunk;
  while (std::getline(in, chunk, '/')) {
    std::istringstream pair_in(chunk);
    int a = 0, b = 0;
    std::string rest;
    if (!(pair_in >> a >> b) || (pair_in >> rest)) {
      throw std::invalid_argument("matching notation: bad pair \"" + chunk + "\"");
    }
    pairs.emplace_back(a, b);
  }
  return from_pairs(static_cast<int>(pairs.size()), pairs);
}

int PerfectMatching::partner(int v) const {
  if (v < 1 || v >= static_cast<int>(partner_.size())) {
    throw std::invalid_argument("matching: no dot " + std::to_string(v));
  }
  return partner_[v];
}

std::vector<std::pair<int, int>> PerfectMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < static_cast<int>(partner_.size()); ++v) {
    if (v < partner_[v]) out.emplace_back(v, partner_[v]);
  }
  return out;
}

std::string PerfectMatching::to_string() const {
  std::string out;
  for (auto [a, b] : pairs()) {
    if (!out.empty()) out += '/';
    out += std::to_string(a) + ' ' + std::to_string(b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// edge classes

EdgeClasses classify_edges(const PerfectMatching& m) {
  EdgeClasses e;
  for (auto [a, b] : m.pairs()) {
    DotRef da = DotRef::of_value(a), db = DotRef::of_value(b);
    if (da.row == db.row) {
      (da.row == Row::Top ? e.top_arcs : e.bottom_arcs).emplace_back(da.pos, db.pos);
    } else if (da.row == Row::Bot) {
      e.uplines.emplace_back(da.pos, db.pos);
    } else if (da.pos == db.pos) {
      e.verticals.push_back(da.pos);
    } else {
      e.strict_downlines.emplace_back(da.pos, db.pos);
    }
  }
  std::sort(e.uplines.begin(), e.uplines.end());
  return e;
}

int upline_from(const PerfectMatching& m, int i) {
  int p = m.partner(2 * i);
  return p % 2 == 1 && p > 2 * i ? (p + 1) / 2 : 0;
}

int upline_into(const PerfectMatching& m, int j) {
  int p = m.partner(2 * j - 1);
  return p % 2 == 0 && p < 2 * j - 1 ? p / 2 : 0;
}

int upline_count(const PerfectMatching& m) {
  int c = 0;
  for (int i = 1; i <= m.size(); ++i) c += upline_from(m, i) != 0;
  return c;
}

int weak_downline_count(const PerfectMatching& m) {
  int c = 0;
  for (int i = 1; i <= m.size(); ++i) {
    int p = m.partner(2 * i - 1);
    c += p % 2 == 0 && p > 2 * i - 1;
  }
  return c;
}

int vertical_count(const PerfectMatching& m) {
  int c = 0;
  for (int i = 1; i <= m.size(); ++i) c += m.partner(2 * i - 1) == 2 * i;
  return c;
}

bool has_upline(const PerfectMatching& m) {
  for (int i = 1; i <= m.size(); ++i) {
    if (upline_from(m, i)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// growth

PerfectMatching enlarge(const PerfectMatching& m, DotRef d) {
  const int n = m.size() + 1;
  auto p = m.pairs();
  if (d.row == Row::Bot && d.pos == n) {
    p.emplace_back(2 * n - 1, 2 * n);
    return PerfectMatching::from_pairs(n, p);
  }
  if (d.pos < 1 || d.pos >= n) {
    throw std::invalid_argument("enlarge: dot " + d.to_string() + " outside a diagram of size " +
                                std::to_string(n - 1));
  }
  const int x = d.value();
  const int y = m.partner(x);
  for (auto& pr : p) {
    if (pr.first == std::min(x, y)) pr = {x, 2 * n - 1};
  }
  p.emplace_back(y, 2 * n);
  return PerfectMatching::from_pairs(n, p);
}

std::pair<PerfectMatching, DotRef> prune_matching(const PerfectMatching& m) {
  const int n = m.size();
  if (n == 0) throw std::invalid_argument("prune: empty diagram");
  const int x = m.partner(2 * n - 1);
  const int y = m.partner(2 * n);
  std::vector<std::pair<int, int>> p;
  for (auto pr : m.pairs()) {
    if (pr.second < 2 * n - 1) p.push_back(pr);
  }
  if (x == 2 * n) return {PerfectMatching::from_pairs(n - 1, p), DotRef{Row::Bot, n}};
  p.emplace_back(std::min(x, y), std::max(x, y));
  return {PerfectMatching::from_pairs(n - 1, p), DotRef::of_value(x)};
}

int shift_S(const PerfectMatching& m, int i) {
  if (i < 1 || i > m.size()) throw std::invalid_argument("S: position " + std::to_string(i) + " out of range");
  while (int j = upline_from(m, i)) i = j;
  return i;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

DotRef word_step_dot(int k, int a) {
  if (a == 1) return {Row::Bot, k};
  if (a % 2 == 1) return {Row::Bot, (a - 1) / 2};
  return {Row::Top, a / 2};
}

void grow_matchings(const PerfectMatching& m, int n,
                    const std::function<void(const PerfectMatching&)>& visit) {
  if (m.size() == n) {
    visit(m);
    return;
  }
  const int k = m.size() + 1;
  for (int a = 1; a <= 2 * k - 1; ++a) grow_matchings(enlarge(m, word_step_dot(k, a)), n, visit);
}

}  // namespace

void for_each_matching(int n, const std::function<void(const PerfectMatching&)>& visit) {
  if (n < 0) throw std::invalid_argument("enumerate: negative size");
  grow_matchings(PerfectMatching{}, n, visit);
}

std::vector<PerfectMatching> enumerate_matchings(int n) {
  std::vector<PerfectMatching> out;
  for_each_matching(n, [&](const PerfectMatching& m) { out.push_back(m); });
  return out;
}

std::vector<PerfectMatching> enumerate_no_upline_matchings(int n) {
  std::vector<PerfectMatching> out;
  for_each_matching(n, [&](const PerfectMatching& m) {
    if (!has_upline(m)) out.push_back(m);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Stirling and power matchings

bool is_valid_stirling(const StirlingMatching& s) {
  std::vector<bool> top(s.cols + 1), bot(s.cols + 1);
  for (auto [a, b] : s.edges) {
    if (a < 1 || b > s.cols || b <= a || top[a] || bot[b]) return false;
    top[a] = bot[b] = true;
  }
  return std::is_sorted(s.edges.begin(), s.edges.end());
}

bool is_valid_power(const PowerMatching& p) {
  if (p.bottom < 0 || p.top < p.bottom || static_cast<int>(p.edges.size()) != p.bottom) return false;
  std::vector<bool> used(p.top + 1);
  for (int b = 1; b <= p.bottom; ++b) {
    auto [a, bb] = p.edges[b - 1];
    if (bb != b || a < 1 || a >= b + p.k() || used[a]) return false;
    used[a] = true;
  }
  return true;
}

std::vector<StirlingMatching> enumerate_stirling_matchings(int n, int k) {
  std::vector<StirlingMatching> out;
  StirlingMatching cur{n, {}};
  std::vector<bool> used(n + 1);
  std::function<void(int)> step = [&](int c) {
    const int edges = static_cast<int>(cur.edges.size());
    if (c > n) {
      if (edges == n - k) {
        auto sorted = cur;
        std::sort(sorted.edges.begin(), sorted.edges.end());
        out.push_back(sorted);
      }
      return;
    }
    if (edges > n - k) return;
    step(c + 1);
    for (int a = 1; a < c; ++a) {
      if (used[a]) continue;
      used[a] = true;
      cur.edges.emplace_back(a, c);
      step(c + 1);
      cur.edges.pop_back();
      used[a] = false;
    }
  };
  if (k >= 0 && k <= n) step(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PowerMatching> enumerate_power_matchings(int k, int n) {
  std::vector<PowerMatching> out;
  if (k < 0 || n < 0) return out;
  PowerMatching cur{k + n, n, {}};
  std::vector<bool> used(k + n + 1);
  std::function<void(int)> step = [&](int b) {
    if (b > n) {
      out.push_back(cur);
      return;
    }
    for (int a = 1; a < b + k; ++a) {
      if (used[a]) continue;
      used[a] = true;
      cur.edges.emplace_back(a, b);
      step(b + 1);
      cur.edges.pop_back();
      used[a] = false;
    }
  };
  step(1);
  return out;
}

std::vector<std::vector<int>> stirling_to_partition(const StirlingMatching& s) {
  if (!is_valid_stirling(s)) throw std::invalid_argument("Stirling matching: invalid edge set");
  const int blocks = s.cols - static_cast<int>(s.edges.size());
  std::vector<int> top_of(s.cols + 1, 0);
  for (auto [a, b] : s.edges) top_of[b] = a;
  std::vector<std::vector<int>> out(blocks);
  int unmatched = 0;
  for (int i = 1; i <= s.cols; ++i) {
    int block;
    if (top_of[i] == 0) {
      block = 1 + unmatched++;
    } else {
      const int c = top_of[i];
      block = c - static_cast<int>(std::count_if(s.edges.begin(), s.edges.end(), [&](auto e) {
                return e.first < c && e.second < i;
              }));
    }
    out.at(block - 1).push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// no-upline decomposition

std::pair<int, int> no_upline_parameters(const PerfectMatching& m) {
  int k = 0, j = 0;
  for (auto [a, b] : m.pairs()) {
    if (a % 2 == 0 && b % 2 == 0) {
      ++k;
      j = std::max(j, b / 2);
    }
  }
  return {k, j};
}

namespace {

// Matching of [2k] on the ranks of `support` induced by m.
PerfectMatching induced_on(const PerfectMatching& m, const std::vector<int>& support) {
  std::vector<std::pair<int, int>> p;
  for (std::size_t r = 0; r < support.size(); ++r) {
    int mate = m.partner(support[r]);
    auto s = static_cast<int>(std::lower_bound(support.begin(), support.end(), mate) - support.begin());
    if (static_cast<int>(r) < s) p.emplace_back(static_cast<int>(r) + 1, s + 1);
  }
  return PerfectMatching::from_pairs(static_cast<int>(p.size()), p);
}

}  // namespace

NoUplineParts decompose_no_upline(const PerfectMatching& m) {
  if (has_upline(m)) throw std::invalid_argument("decompose: diagram has an upline");
  const int n = m.size();
  auto [k, j] = no_upline_parameters(m);
  std::vector<int> evens, odds;
  std::vector<std::pair<int, int>> lines;  // (top, bottom) positions
  for (auto [a, b] : m.pairs()) {
    if (a % 2 == 0 && b % 2 == 0) {
      evens.insert(evens.end(), {a, b});
    } else if (a % 2 == 1 && b % 2 == 1) {
      odds.insert(odds.end(), {a, b});
    } else {
      lines.emplace_back((a + 1) / 2, b / 2);
    }
  }
  std::sort(evens.begin(), evens.end());
  std::sort(odds.begin(), odds.end());

  NoUplineParts parts;
  parts.even = induced_on(m, evens);
  parts.odd = induced_on(m, odds);

  parts.stirling.cols = j;
  std::vector<bool> deleted_top(n + 1);
  for (auto [a, b] : lines) {
    if (b <= j - 1) {
      parts.stirling.edges.emplace_back(a, b + 1);
      deleted_top[a] = true;
    }
  }
  std::sort(parts.stirling.edges.begin(), parts.stirling.edges.end());

  std::vector<int> rank(n + 1, 0);
  for (int c = 1, r = 0; c <= n; ++c) {
    if (!deleted_top[c]) rank[c] = ++r;
  }
  parts.power.top = n - j + 2 * k + 1;
  parts.power.bottom = n - j;
  for (auto [a, b] : lines) {
    if (b > j) parts.power.edges.emplace_back(rank[a], b - j);
  }
  std::sort(parts.power.edges.begin(), parts.power.edges.end(),
            [](auto x, auto y) { return x.second < y.second; });
  return parts;
}

PerfectMatching compose_no_upline(const NoUplineParts& parts) {
  const int k = parts.even.size();
  const int j = parts.stirling.cols;
  if (parts.odd.size() != k) throw std::invalid_argument("compose: even and odd parts differ in size");
  if (!is_valid_stirling(parts.stirling) ||
      static_cast<int>(parts.stirling.edges.size()) != j - 2 * k) {
    throw std::invalid_argument("compose: Stirling part is not a (j,2k) matching");
  }
  if (!is_valid_power(parts.power) || parts.power.k() != 2 * k + 1) {
    throw std::invalid_argument("compose: power part is not a (2k+1,n-j) matching");
  }
  if (k == 0 && j != 0) throw std::invalid_argument("compose: j must be 0 when k is 0");
  const int n = j + parts.power.bottom;

  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> top_used(n + 1), bot_used(n + 1);
  for (auto [a, c] : parts.stirling.edges) {
    pairs.emplace_back(2 * a - 1, 2 * (c - 1));
    top_used[a] = bot_used[c - 1] = true;
  }
  std::vector<int> remaining_top;
  for (int c = 1; c <= n; ++c) {
    if (!top_used[c]) remaining_top.push_back(c);
  }
  for (auto [r, b] : parts.power.edges) {
    int a = remaining_top.at(r - 1);
    pairs.emplace_back(2 * a - 1, 2 * (b + j));
    top_used[a] = bot_used[b + j] = true;
  }
  std::vector<int> bottom_arcs, top_arcs;
  for (int c = 1; c <= n; ++c) {
    if (!bot_used[c]) bottom_arcs.push_back(2 * c);
    if (!top_used[c]) top_arcs.push_back(2 * c - 1);
  }
  if (static_cast<int>(bottom_arcs.size()) != 2 * k || static_cast<int>(top_arcs.size()) != 2 * k ||
      (k > 0 && bottom_arcs.back() != 2 * j)) {
    throw std::invalid_argument("compose: parts do not fit together");
  }
  for (auto [x, y] : parts.even.pairs()) pairs.emplace_back(bottom_arcs[x - 1], bottom_arcs[y - 1]);
  for (auto [x, y] : parts.odd.pairs()) pairs.emplace_back(top_arcs[x - 1], top_arcs[y - 1]);
  for (auto& p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  return PerfectMatching::from_pairs(n, pairs);
}

// ---------------------------------------------------------------------------
// recurrence classes

int recurrence_class(const PerfectMatching& m) {
  const int n = m.size();
  if (n < 1) throw std::invalid_argument("class: empty diagram");
  if (has_upline(m)) throw std::invalid_argument("class: diagram has an upline");
  const int x = m.partner(2 * n - 1);
  if (x == 2 * n) return 1;
  const int y = m.partner(2 * n);
  if (y % 2 == 1 || x < y) return 2;
  return 3;
}

std::pair<PerfectMatching, int> class2_reduce(const PerfectMatching& m) {
  if (recurrence_class(m) != 2) throw std::invalid_argument("class 2 reduce: diagram is not in class 2");
  auto [pruned, d] = prune_matching(m);
  return {pruned, d.pos};
}

PerfectMatching class2_expand(const PerfectMatching& m, int top_pos) {
  if (has_upline(m)) throw std::invalid_argument("class 2 expand: diagram has an upline");
  if (top_pos < 1 || top_pos > m.size()) {
    throw std::invalid_argument("class 2 expand: top position " + std::to_string(top_pos) + " out of range");
  }
  return enlarge(m, DotRef{Row::Top, top_pos});
}

std::pair<PerfectMatching, std::vector<int>> class3_reduce(const PerfectMatching& m) {
  if (recurrence_class(m) != 3) throw std::invalid_argument("class 3 reduce: diagram is not in class 3");
  const int n = m.size();
  const int i = (m.partner(2 * n - 1) + 1) / 2;
  const int j = m.partner(2 * n) / 2;
  std::vector<int> x{j};
  for (int c = j + 1; c < i; ++c) {
    if (m.partner(2 * c - 1) == 2 * c) x.push_back(c);
  }
  x.push_back(i);

  std::vector<int> new_value(2 * n + 1, 0);
  int top_rank = 0, bot_rank = 0;
  for (int c = 1; c < n; ++c) {
    bool vertical_gone = c > j && c < i && std::binary_search(x.begin(), x.end(), c);
    if (!vertical_gone && c != i) new_value[2 * c - 1] = 2 * ++top_rank - 1;
    if (!vertical_gone && c != j) new_value[2 * c] = 2 * ++bot_rank;
  }
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : m.pairs()) {
    if (new_value[a] && new_value[b]) {
      pairs.emplace_back(std::min(new_value[a], new_value[b]), std::max(new_value[a], new_value[b]));
    }
  }
  return {PerfectMatching::from_pairs(top_rank, pairs), x};
}

PerfectMatching class3_expand(const PerfectMatching& m, const std::vector<int>& x) {
  if (has_upline(m)) throw std::invalid_argument("class 3 expand: diagram has an upline");
  const int n = m.size() + static_cast<int>(x.size());
  if (x.size() < 2 || !std::is_sorted(x.begin(), x.end()) ||
      std::adjacent_find(x.begin(), x.end()) != x.end() || x.front() < 1 || x.back() > n - 1) {
    throw std::invalid_argument("class 3 expand: X must be an ascending subset of [n-1] with at least 2 entries");
  }
  const int j = x.front(), i = x.back();
  std::vector<int> top_cols, bot_cols;
  for (int c = 1; c < n; ++c) {
    bool middle = c > j && c < i && std::binary_search(x.begin(), x.end(), c);
    if (!middle && c != i) top_cols.push_back(c);
    if (!middle && c != j) bot_cols.push_back(c);
  }
  auto lift = [&](int v) { return v % 2 ? 2 * top_cols[(v - 1) / 2] - 1 : 2 * bot_cols[v / 2 - 1]; };
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : m.pairs()) {
    int la = lift(a), lb = lift(b);
    pairs.emplace_back(std::min(la, lb), std::max(la, lb));
  }
  pairs.emplace_back(2 * i - 1, 2 * n - 1);
  pairs.emplace_back(2 * j, 2 * n);
  for (std::size_t t = 1; t + 1 < x.size(); ++t) pairs.emplace_back(2 * x[t] - 1, 2 * x[t]);
  return PerfectMatching::from_pairs(n, pairs);
}

}  // namespace klazar
