#ifndef TREEPERM_TREE_HPP
#define TREEPERM_TREE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treeperm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or non-canonical textual input.
struct ParseError : Error {
  using Error::Error;
};

/// A structural invariant (distinct labels, heap condition, ...) was violated.
struct InvariantError : Error {
  using Error::Error;
};

/// Rooted tree whose nodes carry distinct positive integer labels, with every
/// parent label strictly smaller than the labels of its children.  Only the
/// outermost root may be unlabeled.  Children are kept sorted by root label;
/// the canonical rendering is cached at construction, so equality and ordering
/// are O(1) string compares.
class LabeledTree {
public:
  /// Bare unlabeled root with no children.
  LabeledTree();

  /// Labeled node.  Children are re-sorted into canonical order; invariants
  /// are checked and InvariantError is thrown on violation.
  explicit LabeledTree(int root_label, std::vector<LabeledTree> children = {});

  /// Unlabeled root over the given children.
  static LabeledTree bare_root(std::vector<LabeledTree> children);

  const std::optional<int>& label() const { return label_; }
  const std::vector<LabeledTree>& children() const { return children_; }

  /// Canonical rendering, e.g. "*(1(3),2)" or "7".
  const std::string& text() const { return text_; }

  int node_count() const { return node_count_; }

  /// All labels in the tree, sorted ascending (root label included if present).
  std::vector<int> labels() const;

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.text_ == b.text_;
  }
  friend bool operator!=(const LabeledTree& a, const LabeledTree& b) {
    return !(a == b);
  }
  /// Structural order: labels numerically, then children lexicographically.
  /// Shallower trees sort before deeper ones with the same prefix, e.g.
  /// *(1,2) before *(1(2)).
  friend bool operator<(const LabeledTree& a, const LabeledTree& b);

private:
  LabeledTree(std::optional<int> label, std::vector<LabeledTree> children);

  std::optional<int> label_;
  std::vector<LabeledTree> children_;
  std::string text_;
  int node_count_ = 1;
};

/// Heap ordered tree with unlabeled root and label set exactly {1..n}.
/// Degree n is the node count minus one.
class StandardTree {
public:
  /// The unit tree (bare root, degree 0).
  StandardTree();

  /// Validates that t has an unlabeled root and labels exactly 1..n.
  explicit StandardTree(LabeledTree t);

  const LabeledTree& tree() const { return tree_; }
  int degree() const { return tree_.node_count() - 1; }
  const std::string& text() const { return tree_.text(); }

  friend bool operator==(const StandardTree& a, const StandardTree& b) {
    return a.tree_ == b.tree_;
  }
  friend bool operator!=(const StandardTree& a, const StandardTree& b) {
    return !(a == b);
  }
  friend bool operator<(const StandardTree& a, const StandardTree& b) {
    return a.tree_ < b.tree_;
  }

private:
  LabeledTree tree_;
};

/// Forest of labeled-root trees with pairwise disjoint labels, sorted by
/// ascending root label.
using Forest = std::vector<LabeledTree>;

/// Order-preserving relabeling: if the sorted labels of t are (j_1,...,j_k),
/// label j_p becomes p+m.  Shape and heap condition are preserved.
LabeledTree relabel_shift(const LabeledTree& t, int m);

/// relabel_shift(t, 0) on a tree with unlabeled root, as a StandardTree.
StandardTree standardize(const LabeledTree& t);

/// Children of the root, roots retained, in ascending root-label order.
Forest delete_root(const LabeledTree& t);
Forest delete_root(const StandardTree& t);

/// All (n+1)^r ways of attaching the r forest members to nodes of t2
/// (including t2's root), where n+1 = node count of t2.  Assignments are
/// enumerated in mixed-radix order: the first forest member varies fastest,
/// target nodes in canonical preorder of t2.  Requires forest labels disjoint
/// from, and strictly above, all labels of t2.
std::vector<LabeledTree> attach_all(const Forest& f, const LabeledTree& t2);

/// Tree with unlabeled root whose children are exactly the forest members.
LabeledTree graft_at_root(Forest f);

/// All standard heap ordered trees of degree n (count n!), sorted by
/// canonical text.  n must be between 0 and 9.
std::vector<StandardTree> enumerate_trees(int n);

/// Degree cap accepted by enumerate_trees / enumerate_perms.
inline constexpr int kMaxEnumerationDegree = 9;

std::string render_tree(const LabeledTree& t);
std::string render_tree(const StandardTree& t);

/// Parses the tree grammar:
///   standard-tree := "*" children?
///   labeled-subtree := INT children?
///   children := "(" subtree ("," subtree)* ")"
/// Whitespace is tolerated; output of render_tree is always accepted.
LabeledTree parse_tree(std::string_view text);

/// parse_tree plus the StandardTree validity check (unlabeled root, labels
/// exactly 1..n).
StandardTree parse_standard_tree(std::string_view text);

}  // namespace treeperm

#endif
