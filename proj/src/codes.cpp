#include "klazar/codes.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace klazar {

std::string code_to_string(const std::vector<CodeEntry>& c) {
  std::string out;
  for (const auto& e : c) {
    if (!out.empty()) out += ',';
    out += e.letter;
    out += std::to_string(e.index);
  }
  return out;
}

std::vector<CodeEntry> parse_code(std::string_view text) {
  std::vector<CodeEntry> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',' ||
                                 text[pos] == '(' || text[pos] == ')')) {
      ++pos;
    }
  };
  skip();
  while (pos < text.size()) {
    char letter = text[pos++];
    if (std::string_view("RLBT").find(letter) == std::string_view::npos) {
      throw std::invalid_argument(std::string("code notation: unexpected '") + letter + "'");
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("code notation: letter without index");
    out.push_back({letter, std::stoi(std::string(text.substr(start, pos - start)))});
    skip();
  }
  return out;
}

namespace {

[[noreturn]] void bad_entry(const char* kind, std::size_t k, CodeEntry e) {
  throw std::invalid_argument(std::string(kind) + ": entry " + std::to_string(k) + " (" + e.letter +
                              std::to_string(e.index) + ") out of range");
}

}  // namespace

void validate_tree_code(const BuildTreeCode& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    const auto e = c[i];
    bool ok = (e.letter == 'R' && e.index >= 0 && e.index <= k - 1) ||
              (e.letter == 'L' && e.index >= 1 && e.index <= k - 1);
    if (!ok) bad_entry("build-tree code", k, e);
  }
}

void validate_matching_code(const BuildMatchingCode& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    const auto e = c[i];
    bool ok = (e.letter == 'B' && e.index >= 1 && e.index <= k) ||
              (e.letter == 'T' && e.index >= 1 && e.index <= k - 1);
    if (!ok) bad_entry("build-matching code", k, e);
  }
}

void validate_word(const TrapezoidalWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    if (w[i] < 1 || w[i] > 2 * k - 1) {
      throw std::invalid_argument("trapezoidal word: entry " + std::to_string(k) + " = " +
                                  std::to_string(w[i]) + " outside [1," + std::to_string(2 * k - 1) + "]");
    }
  }
}

// ---------------------------------------------------------------------------
// trees

void apply_tree_step(IncreasingTree& t, CodeEntry e) {
  if (e.letter == 'R') {
    t.add_rightmost_child(e.index);
  } else {
    t.add_left_neighbor(e.index);
  }
}

CodeEntry tree_step_of_max(const IncreasingTree& t) {
  const Label n = t.max_label();
  if (auto right = t.right_neighbor(n)) return {'L', *right};
  return {'R', t.parent(n)};
}

IncreasingTree code_to_tree(const BuildTreeCode& c) {
  validate_tree_code(c);
  IncreasingTree t;
  for (auto e : c) apply_tree_step(t, e);
  return t;
}

BuildTreeCode tree_to_code(const IncreasingTree& t) {
  BuildTreeCode c(t.edges());
  IncreasingTree cur = t;
  for (int k = t.edges(); k >= 1; --k) {
    c[k - 1] = tree_step_of_max(cur);
    cur.remove_max_leaf();
  }
  return c;
}

// ---------------------------------------------------------------------------
// matchings

DotRef matching_step_dot(CodeEntry e) {
  return {e.letter == 'T' ? Row::Top : Row::Bot, e.index};
}

CodeEntry matching_entry_of(DotRef d) { return {d.row == Row::Top ? 'T' : 'B', d.pos}; }

PerfectMatching code_to_matching(const BuildMatchingCode& c) {
  validate_matching_code(c);
  PerfectMatching m;
  for (auto e : c) m = enlarge(m, matching_step_dot(e));
  return m;
}

BuildMatchingCode matching_to_code(const PerfectMatching& m) {
  BuildMatchingCode c(m.size());
  PerfectMatching cur = m;
  for (int k = m.size(); k >= 1; --k) {
    auto [pruned, d] = prune_matching(cur);
    c[k - 1] = matching_entry_of(d);
    cur = std::move(pruned);
  }
  return c;
}

// ---------------------------------------------------------------------------
// correspondences

BuildMatchingCode treecode_to_matchcode(const BuildTreeCode& c) {
  validate_tree_code(c);
  BuildMatchingCode out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    if (c[i].letter == 'L') {
      out.push_back({'T', c[i].index});
    } else {
      out.push_back({'B', c[i].index == 0 ? k : c[i].index});
    }
  }
  return out;
}

BuildTreeCode matchcode_to_treecode(const BuildMatchingCode& c) {
  validate_matching_code(c);
  BuildTreeCode out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    if (c[i].letter == 'T') {
      out.push_back({'L', c[i].index});
    } else {
      out.push_back({'R', c[i].index == k ? 0 : c[i].index});
    }
  }
  return out;
}

TrapezoidalWord code_to_trapezoidal(const BuildTreeCode& c) {
  validate_tree_code(c);
  TrapezoidalWord w;
  for (auto e : c) w.push_back(e.letter == 'L' ? 2 * e.index : 2 * e.index + 1);
  return w;
}

BuildTreeCode trapezoidal_to_code(const TrapezoidalWord& w) {
  validate_word(w);
  BuildTreeCode c;
  for (int a : w) c.push_back(a % 2 == 0 ? CodeEntry{'L', a / 2} : CodeEntry{'R', (a - 1) / 2});
  return c;
}

BuildMatchingCode word_to_matchcode(const TrapezoidalWord& w) {
  validate_word(w);
  BuildMatchingCode c;
  for (int a : w) c.push_back(a % 2 == 0 ? CodeEntry{'T', a / 2} : CodeEntry{'B', (a + 1) / 2});
  return c;
}

TrapezoidalWord matchcode_to_word(const BuildMatchingCode& c) {
  validate_matching_code(c);
  TrapezoidalWord w;
  for (auto e : c) w.push_back(e.letter == 'T' ? 2 * e.index : 2 * e.index - 1);
  return w;
}

std::pair<int, int> word_parity_stats(const TrapezoidalWord& w) {
  std::map<int, int> mult;
  for (int a : w) ++mult[a];
  int even = 0, odd = 0;
  for (auto [a, m] : mult) {
    if (m % 2 == 1) ++(a % 2 == 0 ? even : odd);
  }
  return {even, odd};
}

// ---------------------------------------------------------------------------
// enumeration

void for_each_word(int n, const std::function<void(const TrapezoidalWord&)>& visit) {
  if (n < 0) throw std::invalid_argument("enumerate: negative size");
  TrapezoidalWord w(n, 1);
  if (n == 0) {
    visit(w);
    return;
  }
  while (true) {
    visit(w);
    int k = n - 1;
    while (k >= 0 && w[k] == 2 * k + 1) w[k--] = 1;
    if (k < 0) return;
    ++w[k];
  }
}

std::vector<TrapezoidalWord> enumerate_words(int n) {
  std::vector<TrapezoidalWord> out;
  for_each_word(n, [&](const TrapezoidalWord& w) { out.push_back(w); });
  return out;
}

std::vector<BuildTreeCode> enumerate_tree_codes(int n) {
  std::vector<BuildTreeCode> out;
  for_each_word(n, [&](const TrapezoidalWord& w) { out.push_back(trapezoidal_to_code(w)); });
  return out;
}

std::vector<BuildMatchingCode> enumerate_matching_codes(int n) {
  std::vector<BuildMatchingCode> out;
  for_each_word(n, [&](const TrapezoidalWord& w) { out.push_back(treecode_to_matchcode(trapezoidal_to_code(w))); });
  return out;
}

}  // namespace klazar
