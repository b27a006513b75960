#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "klazar/bigint.hpp"

namespace klazar {

using Label = int;

/// A vertex label extended by a top element, INFINITY, which compares above
/// every finite label and equal to itself.
class ExtendedLabel {
 public:
  constexpr ExtendedLabel() = default;
  constexpr explicit ExtendedLabel(Label v) : finite_(true), value_(v) {}

  static constexpr ExtendedLabel infinity() { return ExtendedLabel{}; }

  constexpr bool is_infinite() const { return !finite_; }
  Label value() const;

  friend constexpr bool operator==(ExtendedLabel a, ExtendedLabel b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedLabel a, ExtendedLabel b) {
    if (a.finite_ != b.finite_) {
      return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  bool finite_ = false;
  Label value_ = 0;
};

/// Rooted ordered tree on the labels 0..n, root 0, with every child label
/// larger than its parent's. Sibling order is significant.
///
/// The growth operations below always add the label n+1 or remove the label n,
/// so the labelling invariant holds for every reachable value.
class IncreasingTree {
 public:
  /// The root-only tree.
  IncreasingTree();

  /// Builds a tree from per-label ordered child lists (index = label).
  /// Throws std::invalid_argument unless the lists describe an increasing
  /// ordered tree on 0..n rooted at 0.
  static IncreasingTree from_child_lists(std::vector<std::vector<Label>> children);

  /// Parses the bracket notation, e.g. "0(1(3,6(11),9,4(10,5),2(8)),7)".
  static IncreasingTree parse(std::string_view text);

  std::string to_string() const;

  int edges() const { return static_cast<int>(parent_.size()) - 1; }
  int vertex_count() const { return static_cast<int>(parent_.size()); }
  Label max_label() const { return edges(); }
  bool contains(Label v) const { return v >= 0 && v <= edges(); }

  /// -1 for the root.
  Label parent(Label v) const;
  std::span<const Label> children(Label v) const;
  bool is_leaf(Label v) const { return children(v).empty(); }
  /// Index of v in its parent's child list; 0 for the root.
  int sibling_index(Label v) const;
  std::optional<Label> left_neighbor(Label v) const;
  std::optional<Label> right_neighbor(Label v) const;
  bool is_rightmost_child(Label v) const;

  /// Adds label n+1 as the rightmost child of p.
  void add_rightmost_child(Label p);
  /// Adds label n+1 as the immediate left neighbor of v (v non-root).
  void add_left_neighbor(Label v);
  /// Deletes label n, which is always a leaf.
  void remove_max_leaf();

  friend bool operator==(const IncreasingTree&, const IncreasingTree&) = default;

 private:
  friend IncreasingTree lift_leading_children(const IncreasingTree&, Label);
  friend IncreasingTree lower_leading_big_cohort(const IncreasingTree&, Label);

  void require_vertex(Label v) const;
  void require_child_vertex(Label v) const;
  // Moves siblings [first, last] of from_parent's child list into
  // to_parent's child list at position insert_at (counted after removal).
  void move_siblings(Label from_parent, int first, int last, Label to_parent, int insert_at);

  std::vector<Label> parent_;
  std::vector<std::vector<Label>> children_;
};

/// Unlabelled rooted ordered tree. Vertices are numbered in preorder, root 0.
class OrderedShape {
 public:
  OrderedShape() : children_(1) {}
  /// Builds a shape from a Dyck word over '(' and ')'; n pairs give n edges.
  static OrderedShape from_dyck_word(std::string_view word);

  int edges() const { return static_cast<int>(children_.size()) - 1; }
  std::span<const int> children(int v) const { return children_.at(v); }
  int leaf_count() const;
  std::string dyck_word() const;
  /// Bracket rendering with anonymous vertices, e.g. "o(o(o),o)".
  std::string to_string() const;

  friend bool operator==(const OrderedShape&, const OrderedShape&) = default;
  friend auto operator<=>(const OrderedShape& a, const OrderedShape& b) {
    return a.dyck_word() <=> b.dyck_word();
  }

 private:
  std::vector<std::vector<int>> children_;
};

/// A Klazar tree together with a subset of its nodes (vertices that are
/// neither the root nor a leaf).
struct NodeMarkedKlazarTree {
  IncreasingTree tree;
  std::vector<Label> marked;  // ascending

  /// Throws std::invalid_argument if the tree has a violator or a mark is not
  /// on a node.
  void validate() const;
  friend bool operator==(const NodeMarkedKlazarTree&, const NodeMarkedKlazarTree&) = default;
};

struct VertexStats {
  int leaves = 0;
  int nodes = 0;
  std::vector<Label> klazar_violators;
  std::vector<Label> bad;
  std::vector<Label> reverse_bad;
  int non_dt_leaves = 0;
  std::vector<Label> descent_terminators;
};

// ---- enumeration ----------------------------------------------------------

/// Visits every n-edge increasing tree once, in lexicographic order of the
/// corresponding trapezoidal word.
void for_each_increasing_tree(int n, const std::function<void(const IncreasingTree&)>& visit);
std::vector<IncreasingTree> enumerate_increasing_trees(int n);
/// The violator-free subset of enumerate_increasing_trees(n), same order.
std::vector<IncreasingTree> enumerate_klazar_trees(int n);

/// All n-edge ordered shapes in lexicographic Dyck-word order ('(' < ')').
std::vector<OrderedShape> enumerate_shapes(int n);
OrderedShape shape_of(const IncreasingTree& t);
/// Every increasing labelling of s (a linear-extension enumeration that does
/// not go through the code-based tree enumerator).
void for_each_labelling(const OrderedShape& s, const std::function<void(const IncreasingTree&)>& visit);

// ---- sibling structure ----------------------------------------------------

std::vector<Label> cohort(const IncreasingTree& t, Label v);
std::vector<Label> big_cohort(const IncreasingTree& t, Label v);
ExtendedLabel associate(const IncreasingTree& t, Label v);
ExtendedLabel min_child(const IncreasingTree& t, Label v);
bool is_descent_terminator(const IncreasingTree& t, Label v);

// ---- violators ------------------------------------------------------------

bool is_klazar_violator(const IncreasingTree& t, Label v);
std::vector<Label> klazar_violators(const IncreasingTree& t);
bool is_klazar_tree(const IncreasingTree& t);
/// The larger of v's rightmost child and closest left sibling.
Label violator_partner(const IncreasingTree& t, Label v);
/// (violator, partner) pairs ordered by violator.
std::vector<std::pair<Label, Label>> violator_partner_pairs(const IncreasingTree& t);
/// Follows partner links down from a compliant child vertex to the first
/// vertex that is nobody's partner.
Label H_map(const IncreasingTree& t, Label v);

// ---- bad vertices ---------------------------------------------------------

std::vector<Label> bad_vertices(const IncreasingTree& t);
std::vector<Label> reverse_bad_vertices(const IncreasingTree& t);
/// First vertex on the path from leaf up to the root that has a left sibling.
/// Throws std::domain_error for the leaf ending the leftmost root path.
Label pi_leaf_map(const IncreasingTree& t, Label leaf);
/// Leaf at the end of the leftmost downward path from a reverse-bad vertex.
Label pi_inverse(const IncreasingTree& t, Label v);

// ---- structural maps ------------------------------------------------------

/// Moves the children of u up to and including its smallest child so that
/// they sit, with their subtrees, immediately left of u's big cohort.
IncreasingTree lift_leading_children(const IncreasingTree& t, Label u);
/// Moves the part of u's big cohort up to and including its associate so that
/// it becomes the leftmost run of u's children. Inverse of the lift.
IncreasingTree lower_leading_big_cohort(const IncreasingTree& t, Label u);

/// Involution that flips the violator status of the right neighbor j of the
/// maximal label n. Identity when n has no right neighbor or when j is a
/// violator whose associate is n.
IncreasingTree involution_F(const IncreasingTree& t);
IncreasingTree prune_tree(const IncreasingTree& t);

VertexStats tree_stats(const IncreasingTree& t);

// ---- shape weights --------------------------------------------------------

/// Number of violator-free increasing labellings of s.
BigInt w12_of_shape(const OrderedShape& s);
/// Sum over n-edge shapes of w12(s) * 2^(n - leaves(s)).
BigInt klazar_weighted_sum(int n);

}  // namespace klazar
