#include "klazar/tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace klazar {

Label ExtendedLabel::value() const {
  if (!finite_) throw std::logic_error("ExtendedLabel: INFINITY has no finite value");
  return value_;
}

std::string ExtendedLabel::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("INFINITY");
}

// ---------------------------------------------------------------------------
// IncreasingTree

IncreasingTree::IncreasingTree() : parent_{-1}, children_(1) {}

IncreasingTree IncreasingTree::from_child_lists(std::vector<std::vector<Label>> children) {
  if (children.empty()) throw std::invalid_argument("tree: no vertices");
  const int count = static_cast<int>(children.size());
  std::vector<Label> parent(count, -2);
  parent[0] = -1;
  for (Label p = 0; p < count; ++p) {
    for (Label c : children[p]) {
      if (c < 1 || c >= count) {
        throw std::invalid_argument("tree: label " + std::to_string(c) + " outside 0.." +
                                    std::to_string(count - 1));
      }
      if (parent[c] != -2) {
        throw std::invalid_argument("tree: label " + std::to_string(c) + " used twice");
      }
      if (c <= p) {
        throw std::invalid_argument("tree: child " + std::to_string(c) +
                                    " does not exceed parent " + std::to_string(p));
      }
      parent[c] = p;
    }
  }
  for (Label v = 1; v < count; ++v) {
    if (parent[v] == -2) throw std::invalid_argument("tree: label " + std::to_string(v) + " missing");
  }
  IncreasingTree t;
  t.parent_ = std::move(parent);
  t.children_ = std::move(children);
  return t;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  IncreasingTree run() {
    Label root = subtree();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    if (root != 0) fail("root label must be 0");
    const int count = static_cast<int>(seen_.size());
    std::vector<std::vector<Label>> lists(count);
    for (auto& [p, kids] : edges_) {
      if (p >= count) fail("label " + std::to_string(p) + " out of range");
      lists[p] = std::move(kids);
    }
    return IncreasingTree::from_child_lists(std::move(lists));
  }

 private:
  Label subtree() {
    Label v = number();
    std::vector<Label> kids;
    skip_space();
    if (peek() == '(') {
      ++pos_;
      while (true) {
        kids.push_back(subtree());
        skip_space();
        char c = peek();
        ++pos_;
        if (c == ')') break;
        if (c != ',') fail("expected ',' or ')'");
      }
    }
    edges_.emplace_back(v, std::move(kids));
    return v;
  }

  Label number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a label");
    Label v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (v >= static_cast<Label>(seen_.size())) seen_.resize(v + 1, false);
    if (seen_[v]) fail("label " + std::to_string(v) + " used twice");
    seen_[v] = true;
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tree notation at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<bool> seen_;
  std::vector<std::pair<Label, std::vector<Label>>> edges_;
};

void append_subtree(const IncreasingTree& t, Label v, std::string& out) {
  out += std::to_string(v);
  auto kids = t.children(v);
  if (kids.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ',';
    append_subtree(t, kids[i], out);
  }
  out += ')';
}

}  // namespace

IncreasingTree IncreasingTree::parse(std::string_view text) { return TreeParser(text).run(); }

std::string IncreasingTree::to_string() const {
  std::string out;
  append_subtree(*this, 0, out);
  return out;
}

void IncreasingTree::require_vertex(Label v) const {
  if (!contains(v)) throw std::invalid_argument("tree: unknown label " + std::to_string(v));
}

void IncreasingTree::require_child_vertex(Label v) const {
  require_vertex(v);
  if (v == 0) throw std::invalid_argument("tree: the root has no siblings");
}

Label IncreasingTree::parent(Label v) const {
  require_vertex(v);
  return parent_[v];
}

std::span<const Label> IncreasingTree::children(Label v) const {
  require_vertex(v);
  return children_[v];
}

int IncreasingTree::sibling_index(Label v) const {
  require_vertex(v);
  if (v == 0) return 0;
  const auto& sibs = children_[parent_[v]];
  return static_cast<int>(std::find(sibs.begin(), sibs.end(), v) - sibs.begin());
}

std::optional<Label> IncreasingTree::left_neighbor(Label v) const {
  if (v == 0) return std::nullopt;
  int i = sibling_index(v);
  if (i == 0) return std::nullopt;
  return children_[parent_[v]][i - 1];
}

std::optional<Label> IncreasingTree::right_neighbor(Label v) const {
  if (v == 0) return std::nullopt;
  int i = sibling_index(v);
  const auto& sibs = children_[parent_[v]];
  if (i + 1 >= static_cast<int>(sibs.size())) return std::nullopt;
  return sibs[i + 1];
}

bool IncreasingTree::is_rightmost_child(Label v) const {
  require_child_vertex(v);
  return children_[parent_[v]].back() == v;
}

void IncreasingTree::add_rightmost_child(Label p) {
  require_vertex(p);
  Label v = vertex_count();
  parent_.push_back(p);
  children_.emplace_back();
  children_[p].push_back(v);
}

void IncreasingTree::add_left_neighbor(Label w) {
  require_child_vertex(w);
  Label v = vertex_count();
  Label p = parent_[w];
  auto& sibs = children_[p];
  sibs.insert(std::find(sibs.begin(), sibs.end(), w), v);
  parent_.push_back(p);
  children_.emplace_back();
}

void IncreasingTree::remove_max_leaf() {
  Label v = max_label();
  if (v == 0) throw std::invalid_argument("tree: cannot prune the root-only tree");
  auto& sibs = children_[parent_[v]];
  sibs.erase(std::find(sibs.begin(), sibs.end(), v));
  parent_.pop_back();
  children_.pop_back();
}

void IncreasingTree::move_siblings(Label from_parent, int first, int last, Label to_parent,
                                   int insert_at) {
  auto& from = children_[from_parent];
  std::vector<Label> run(from.begin() + first, from.begin() + last + 1);
  from.erase(from.begin() + first, from.begin() + last + 1);
  auto& to = children_[to_parent];
  to.insert(to.begin() + insert_at, run.begin(), run.end());
  for (Label v : run) parent_[v] = to_parent;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

void grow_trees(IncreasingTree& t, int n, const std::function<void(const IncreasingTree&)>& visit) {
  if (t.edges() == n) {
    visit(t);
    return;
  }
  const int k = t.edges() + 1;
  for (int a = 1; a <= 2 * k - 1; ++a) {
    if (a % 2 == 1) {
      t.add_rightmost_child((a - 1) / 2);
    } else {
      t.add_left_neighbor(a / 2);
    }
    grow_trees(t, n, visit);
    t.remove_max_leaf();
  }
}

void grow_dyck(std::string& word, int open, int close, int n, std::vector<OrderedShape>& out) {
  if (close == n) {
    out.push_back(OrderedShape::from_dyck_word(word));
    return;
  }
  if (open < n) {
    word.push_back('(');
    grow_dyck(word, open + 1, close, n, out);
    word.pop_back();
  }
  if (close < open) {
    word.push_back(')');
    grow_dyck(word, open, close + 1, n, out);
    word.pop_back();
  }
}

}  // namespace

void for_each_increasing_tree(int n, const std::function<void(const IncreasingTree&)>& visit) {
  if (n < 0) throw std::invalid_argument("enumerate: negative size");
  IncreasingTree t;
  grow_trees(t, n, visit);
}

std::vector<IncreasingTree> enumerate_increasing_trees(int n) {
  std::vector<IncreasingTree> out;
  for_each_increasing_tree(n, [&](const IncreasingTree& t) { out.push_back(t); });
  return out;
}

std::vector<IncreasingTree> enumerate_klazar_trees(int n) {
  std::vector<IncreasingTree> out;
  for_each_increasing_tree(n, [&](const IncreasingTree& t) {
    if (is_klazar_tree(t)) out.push_back(t);
  });
  return out;
}

OrderedShape OrderedShape::from_dyck_word(std::string_view word) {
  OrderedShape s;
  std::vector<int> stack{0};
  for (char c : word) {
    if (c == '(') {
      int v = static_cast<int>(s.children_.size());
      s.children_.emplace_back();
      s.children_[stack.back()].push_back(v);
      stack.push_back(v);
    } else if (c == ')') {
      if (stack.size() == 1) throw std::invalid_argument("shape: unbalanced Dyck word");
      stack.pop_back();
    } else {
      throw std::invalid_argument("shape: Dyck words use only '(' and ')'");
    }
  }
  if (stack.size() != 1) throw std::invalid_argument("shape: unbalanced Dyck word");
  return s;
}

int OrderedShape::leaf_count() const {
  return static_cast<int>(std::count_if(children_.begin(), children_.end(),
                                        [](const auto& c) { return c.empty(); }));
}

std::string OrderedShape::dyck_word() const {
  std::string out;
  std::function<void(int)> walk = [&](int v) {
    for (int c : children_[v]) {
      out += '(';
      walk(c);
      out += ')';
    }
  };
  walk(0);
  return out;
}

std::string OrderedShape::to_string() const {
  std::string out;
  std::function<void(int)> walk = [&](int v) {
    out += 'o';
    if (children_[v].empty()) return;
    out += '(';
    for (std::size_t i = 0; i < children_[v].size(); ++i) {
      if (i) out += ',';
      walk(children_[v][i]);
    }
    out += ')';
  };
  walk(0);
  return out;
}

std::vector<OrderedShape> enumerate_shapes(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: negative size");
  std::vector<OrderedShape> out;
  std::string word;
  grow_dyck(word, 0, 0, n, out);
  return out;
}

OrderedShape shape_of(const IncreasingTree& t) {
  std::string word;
  std::function<void(Label)> walk = [&](Label v) {
    for (Label c : t.children(v)) {
      word += '(';
      walk(c);
      word += ')';
    }
  };
  walk(0);
  return OrderedShape::from_dyck_word(word);
}

void for_each_labelling(const OrderedShape& s,
                        const std::function<void(const IncreasingTree&)>& visit) {
  const int count = s.edges() + 1;
  std::vector<Label> label_of(count, -1);
  label_of[0] = 0;
  std::vector<int> frontier(s.children(0).begin(), s.children(0).end());

  std::function<void(Label)> place = [&](Label next) {
    if (next == count) {
      std::vector<std::vector<Label>> lists(count);
      for (int u = 0; u < count; ++u) {
        for (int c : s.children(u)) lists[label_of[u]].push_back(label_of[c]);
      }
      visit(IncreasingTree::from_child_lists(std::move(lists)));
      return;
    }
    const std::vector<int> snapshot = frontier;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      int v = snapshot[i];
      frontier.erase(std::find(frontier.begin(), frontier.end(), v));
      frontier.insert(frontier.end(), s.children(v).begin(), s.children(v).end());
      label_of[v] = next;
      place(next + 1);
      label_of[v] = -1;
      frontier = snapshot;
    }
  };
  place(1);
}

// ---------------------------------------------------------------------------
// sibling structure

namespace {

// Start index (in the parent's child list) of v's big cohort; equals v's own
// index when the big cohort is empty.
int big_cohort_start(const IncreasingTree& t, Label v) {
  auto sibs = t.children(t.parent(v));
  int i = t.sibling_index(v);
  while (i > 0 && sibs[i - 1] > v) --i;
  return i;
}

void require_non_root(const IncreasingTree& t, Label v) {
  if (!t.contains(v)) throw std::invalid_argument("tree: unknown label " + std::to_string(v));
  if (v == 0) throw std::invalid_argument("tree: operation undefined at the root");
}

}  // namespace

std::vector<Label> cohort(const IncreasingTree& t, Label v) {
  require_non_root(t, v);
  auto sibs = t.children(t.parent(v));
  return {sibs.begin(), sibs.begin() + t.sibling_index(v)};
}

std::vector<Label> big_cohort(const IncreasingTree& t, Label v) {
  require_non_root(t, v);
  auto sibs = t.children(t.parent(v));
  return {sibs.begin() + big_cohort_start(t, v), sibs.begin() + t.sibling_index(v)};
}

ExtendedLabel associate(const IncreasingTree& t, Label v) {
  require_non_root(t, v);
  auto sibs = t.children(t.parent(v));
  ExtendedLabel best = ExtendedLabel::infinity();
  for (int i = t.sibling_index(v) - 1; i >= 0 && sibs[i] > v; --i) {
    best = std::min(best, ExtendedLabel(sibs[i]));
  }
  return best;
}

ExtendedLabel min_child(const IncreasingTree& t, Label v) {
  auto kids = t.children(v);
  if (kids.empty()) return ExtendedLabel::infinity();
  return ExtendedLabel(*std::min_element(kids.begin(), kids.end()));
}

bool is_descent_terminator(const IncreasingTree& t, Label v) {
  auto left = t.left_neighbor(v);
  return left && *left > v;
}

// ---------------------------------------------------------------------------
// violators

bool is_klazar_violator(const IncreasingTree& t, Label v) {
  if (!t.contains(v)) throw std::invalid_argument("tree: unknown label " + std::to_string(v));
  if (v == 0) return false;
  return associate(t, v) < min_child(t, v);
}

std::vector<Label> klazar_violators(const IncreasingTree& t) {
  std::vector<Label> out;
  for (Label v = 1; v <= t.max_label(); ++v) {
    if (is_klazar_violator(t, v)) out.push_back(v);
  }
  return out;
}

bool is_klazar_tree(const IncreasingTree& t) {
  for (Label v = 1; v <= t.max_label(); ++v) {
    if (is_klazar_violator(t, v)) return false;
  }
  return true;
}

Label violator_partner(const IncreasingTree& t, Label v) {
  if (!is_klazar_violator(t, v)) {
    throw std::invalid_argument("partner: " + std::to_string(v) + " is not a Klazar violator");
  }
  Label best = *t.left_neighbor(v);
  auto kids = t.children(v);
  if (!kids.empty()) best = std::max(best, kids.back());
  return best;
}

std::vector<std::pair<Label, Label>> violator_partner_pairs(const IncreasingTree& t) {
  std::vector<std::pair<Label, Label>> out;
  for (Label v : klazar_violators(t)) out.emplace_back(v, violator_partner(t, v));
  return out;
}

Label H_map(const IncreasingTree& t, Label v) {
  require_non_root(t, v);
  if (is_klazar_violator(t, v)) {
    throw std::invalid_argument("H: " + std::to_string(v) + " is a Klazar violator");
  }
  std::vector<Label> violator_of(t.vertex_count(), -1);
  for (auto [violator, partner] : violator_partner_pairs(t)) violator_of[partner] = violator;
  while (violator_of[v] != -1) v = violator_of[v];
  return v;
}

// ---------------------------------------------------------------------------
// bad vertices

std::vector<Label> bad_vertices(const IncreasingTree& t) {
  std::vector<Label> out;
  for (Label v = 1; v <= t.max_label(); ++v) {
    auto right = t.right_neighbor(v);
    if (right && (v > *right || !t.is_leaf(v))) out.push_back(v);
  }
  return out;
}

std::vector<Label> reverse_bad_vertices(const IncreasingTree& t) {
  std::vector<Label> out;
  for (Label v = 1; v <= t.max_label(); ++v) {
    auto left = t.left_neighbor(v);
    if (left && (v > *left || !t.is_leaf(v))) out.push_back(v);
  }
  return out;
}

Label pi_leaf_map(const IncreasingTree& t, Label leaf) {
  require_non_root(t, leaf);
  if (!t.is_leaf(leaf)) throw std::invalid_argument("pi: " + std::to_string(leaf) + " is not a leaf");
  for (Label u = leaf; u != 0; u = t.parent(u)) {
    if (t.sibling_index(u) > 0) return u;
  }
  throw std::domain_error("pi: leaf " + std::to_string(leaf) + " ends the leftmost root path");
}

Label pi_inverse(const IncreasingTree& t, Label v) {
  require_non_root(t, v);
  auto rb = reverse_bad_vertices(t);
  if (!std::binary_search(rb.begin(), rb.end(), v)) {
    throw std::invalid_argument("pi inverse: " + std::to_string(v) + " is not reverse-bad");
  }
  while (!t.is_leaf(v)) v = t.children(v).front();
  return v;
}

// ---------------------------------------------------------------------------
// structural maps

IncreasingTree lift_leading_children(const IncreasingTree& t, Label u) {
  require_non_root(t, u);
  auto kids = t.children(u);
  if (kids.empty()) throw std::invalid_argument("lift: " + std::to_string(u) + " has no children");
  int last = static_cast<int>(std::min_element(kids.begin(), kids.end()) - kids.begin());
  int insert_at = big_cohort_start(t, u);
  IncreasingTree out = t;
  out.move_siblings(u, 0, last, t.parent(u), insert_at);
  return out;
}

IncreasingTree lower_leading_big_cohort(const IncreasingTree& t, Label u) {
  require_non_root(t, u);
  int first = big_cohort_start(t, u);
  int self = t.sibling_index(u);
  if (first == self) {
    throw std::invalid_argument("lower: " + std::to_string(u) + " has an empty big cohort");
  }
  auto sibs = t.children(t.parent(u));
  int last = static_cast<int>(std::min_element(sibs.begin() + first, sibs.begin() + self) - sibs.begin());
  IncreasingTree out = t;
  out.move_siblings(t.parent(u), first, last, u, 0);
  return out;
}

IncreasingTree involution_F(const IncreasingTree& t) {
  const Label n = t.max_label();
  if (n == 0) return t;
  auto right = t.right_neighbor(n);
  if (!right) return t;
  const Label j = *right;
  if (is_klazar_violator(t, j)) {
    if (associate(t, j) == ExtendedLabel(n)) return t;
    return lower_leading_big_cohort(t, j);
  }
  return lift_leading_children(t, j);
}

IncreasingTree prune_tree(const IncreasingTree& t) {
  IncreasingTree out = t;
  out.remove_max_leaf();
  return out;
}

VertexStats tree_stats(const IncreasingTree& t) {
  VertexStats s;
  for (Label v = 0; v <= t.max_label(); ++v) {
    const bool leaf = t.is_leaf(v);
    const bool dt = v != 0 && is_descent_terminator(t, v);
    if (leaf) {
      ++s.leaves;
      if (!dt) ++s.non_dt_leaves;
    } else if (v != 0) {
      ++s.nodes;
    }
    if (dt) s.descent_terminators.push_back(v);
  }
  s.klazar_violators = klazar_violators(t);
  s.bad = bad_vertices(t);
  s.reverse_bad = reverse_bad_vertices(t);
  return s;
}

// ---------------------------------------------------------------------------
// NodeMarkedKlazarTree

void NodeMarkedKlazarTree::validate() const {
  if (!std::is_sorted(marked.begin(), marked.end()) ||
      std::adjacent_find(marked.begin(), marked.end()) != marked.end()) {
    throw std::invalid_argument("marked tree: marks must be distinct and ascending");
  }
  for (Label v : marked) {
    if (!tree.contains(v) || v == 0 || tree.is_leaf(v)) {
      throw std::invalid_argument("marked tree: mark " + std::to_string(v) + " is not a node");
    }
  }
  auto kv = klazar_violators(tree);
  if (!kv.empty()) {
    throw std::invalid_argument("marked tree: " + std::to_string(kv.front()) +
                                " is a Klazar violator");
  }
}

// ---------------------------------------------------------------------------
// shape weights

BigInt w12_of_shape(const OrderedShape& s) {
  BigInt count = 0;
  for_each_labelling(s, [&](const IncreasingTree& t) {
    if (is_klazar_tree(t)) ++count;
  });
  return count;
}

BigInt klazar_weighted_sum(int n) {
  if (n < 1) throw std::invalid_argument("klazar_weighted_sum: n must be at least 1");
  BigInt total = 0;
  for (const auto& s : enumerate_shapes(n)) {
    BigInt weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), 2, static_cast<unsigned long>(n - s.leaf_count()));
    total += w12_of_shape(s) * weight;
  }
  return total;
}

}  // namespace klazar
