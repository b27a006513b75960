#include "klazar/bijections.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace klazar {

IncreasingTree mark_violators(const NodeMarkedKlazarTree& marked) {
  marked.validate();
  IncreasingTree t = marked.tree;
  for (auto it = marked.marked.rbegin(); it != marked.marked.rend(); ++it) {
    t = lift_leading_children(t, *it);
  }
  return t;
}

NodeMarkedKlazarTree unmark_violators(const IncreasingTree& t) {
  NodeMarkedKlazarTree out{t, klazar_violators(t)};
  for (Label v : out.marked) out.tree = lower_leading_big_cohort(out.tree, v);
  return out;
}

BuildTreeCode involuted_tree_code(const IncreasingTree& t) {
  BuildTreeCode c(t.edges());
  IncreasingTree cur = t;
  for (int k = t.edges(); k >= 1; --k) {
    cur = involution_F(cur);
    c[k - 1] = tree_step_of_max(cur);
    cur.remove_max_leaf();
  }
  return c;
}

IncreasingTree tree_from_involuted_code(const BuildTreeCode& c) {
  validate_tree_code(c);
  IncreasingTree t;
  for (auto e : c) {
    apply_tree_step(t, e);
    t = involution_F(t);
  }
  return t;
}

namespace {

std::vector<std::pair<int, int>> odd_letter_pairs(const std::vector<CodeEntry>& c, char letter) {
  std::map<int, int> mult, last;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].letter == letter) ++mult[c[k].index];
    last[c[k].index] = static_cast<int>(k) + 1;
  }
  std::vector<std::pair<int, int>> out;
  for (auto [i, m] : mult) {
    if (m % 2 == 1) out.emplace_back(i, last[i]);
  }
  return out;
}

}  // namespace

std::vector<std::pair<Label, Label>> violator_pairs_from_code(const BuildTreeCode& c) {
  validate_tree_code(c);
  return odd_letter_pairs(c, 'L');
}

std::vector<std::pair<int, int>> upline_pairs_from_code(const BuildMatchingCode& c) {
  validate_matching_code(c);
  return odd_letter_pairs(c, 'T');
}

PerfectMatching upline_tracking_matching(const BuildMatchingCode& c) {
  validate_matching_code(c);
  PerfectMatching m;
  for (std::size_t s = 0; s < c.size(); ++s) {
    const int k = static_cast<int>(s) + 1;
    const auto [letter, i] = c[s];
    DotRef d{Row::Bot, k};
    if (letter == 'B' && i < k) {
      if (upline_from(m, i)) {
        d = {Row::Bot, i};
      } else {
        int start = i;
        while (int b = upline_into(m, start)) start = b;
        d = {Row::Top, start};
      }
    } else if (letter == 'T') {
      int j = upline_from(m, i);
      d = j ? DotRef{Row::Top, j} : DotRef{Row::Bot, i};
    }
    m = enlarge(m, d);
  }
  return m;
}

BuildMatchingCode upline_tracking_code(const PerfectMatching& m) {
  BuildMatchingCode c(m.size());
  PerfectMatching cur = m;
  for (int k = m.size(); k >= 1; --k) {
    const DotRef x = DotRef::of_value(cur.partner(2 * k - 1));
    const DotRef y = DotRef::of_value(cur.partner(2 * k));
    auto [pruned, unused] = prune_matching(cur);
    const int i = x.pos, j = y.pos;
    if (x == DotRef{Row::Bot, k}) {
      c[k - 1] = {'B', k};
    } else if (x.row == Row::Top && (y.row == Row::Top || i <= j)) {
      c[k - 1] = {'B', shift_S(pruned, i)};
    } else if (x.row == Row::Top) {
      c[k - 1] = {'T', j};
    } else if (y.row == Row::Bot || i >= j) {
      c[k - 1] = {'T', i};
    } else {
      c[k - 1] = {'B', i};
    }
    cur = std::move(pruned);
  }
  return c;
}

PerfectMatching tree_to_matching_recursive(const IncreasingTree& t) {
  const Label n = t.max_label();
  if (n == 0) return {};
  const IncreasingTree pruned = prune_tree(t);
  auto right = t.right_neighbor(n);
  if (!right) {
    const Label p = t.parent(n);
    DotRef d{Row::Bot, n};
    if (p != 0) {
      d = is_klazar_violator(t, p) ? DotRef{Row::Bot, p} : DotRef{Row::Top, H_map(pruned, p)};
    }
    return enlarge(tree_to_matching_recursive(pruned), d);
  }
  const Label j = *right;
  if (is_klazar_violator(t, j)) {
    if (associate(t, j) == ExtendedLabel(n)) {
      return enlarge(tree_to_matching_recursive(pruned), {Row::Bot, j});
    }
    return enlarge(tree_to_matching_recursive(prune_tree(involution_F(t))), {Row::Bot, j});
  }
  const IncreasingTree flipped = prune_tree(involution_F(t));
  return enlarge(tree_to_matching_recursive(flipped), {Row::Top, violator_partner(flipped, j)});
}

PerfectMatching tree_to_matching(const IncreasingTree& t) {
  return upline_tracking_matching(treecode_to_matchcode(involuted_tree_code(t)));
}

PerfectMatching downline_tracking_matching(const BuildMatchingCode& c) {
  validate_matching_code(c);
  PerfectMatching m;
  for (std::size_t s = 0; s < c.size(); ++s) {
    const int k = static_cast<int>(s) + 1;
    const auto [letter, i] = c[s];
    DotRef d{Row::Bot, k};
    if (letter == 'B' && i < k) {
      const int p = m.partner(2 * i - 1);
      d = p % 2 == 0 && p > 2 * i - 1 ? DotRef{Row::Top, i} : DotRef::of_value(p);
    } else if (letter == 'T') {
      int j = upline_from(m, i);
      d = j ? DotRef{Row::Top, j} : DotRef{Row::Bot, i};
    }
    m = enlarge(m, d);
  }
  return m;
}

}  // namespace klazar
