#include "treeperm/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace treeperm {

namespace {

void collect_labels(const LabeledTree& t, std::vector<int>& out) {
  if (t.label()) out.push_back(*t.label());
  for (const auto& c : t.children()) collect_labels(c, out);
}

std::string build_text(const std::optional<int>& label,
                       const std::vector<LabeledTree>& children) {
  std::string s = label ? std::to_string(*label) : std::string("*");
  if (!children.empty()) {
    s += '(';
    for (size_t i = 0; i < children.size(); ++i) {
      if (i) s += ',';
      s += children[i].text();
    }
    s += ')';
  }
  return s;
}

}  // namespace

LabeledTree::LabeledTree() : label_(std::nullopt), text_("*") {}

LabeledTree::LabeledTree(int root_label, std::vector<LabeledTree> children)
    : LabeledTree(std::optional<int>(root_label), std::move(children)) {}

LabeledTree LabeledTree::bare_root(std::vector<LabeledTree> children) {
  return LabeledTree(std::nullopt, std::move(children));
}

LabeledTree::LabeledTree(std::optional<int> label,
                         std::vector<LabeledTree> children)
    : label_(label), children_(std::move(children)) {
  if (label_ && *label_ <= 0)
    throw InvariantError("label must be a positive integer, got " +
                         std::to_string(*label_));
  for (const auto& c : children_) {
    if (!c.label())
      throw InvariantError("only the outermost root may be unlabeled");
  }
  std::sort(children_.begin(), children_.end(),
            [](const LabeledTree& a, const LabeledTree& b) {
              return *a.label() < *b.label();
            });
  for (const auto& c : children_) {
    if (label_ && *c.label() <= *label_)
      throw InvariantError("heap condition violated: child label " +
                           std::to_string(*c.label()) +
                           " not greater than parent label " +
                           std::to_string(*label_));
    node_count_ += c.node_count();
  }
  std::vector<int> all;
  collect_labels(*this, all);
  std::sort(all.begin(), all.end());
  auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end())
    throw InvariantError("duplicate label " + std::to_string(*dup));
  text_ = build_text(label_, children_);
}

namespace {

int compare_trees(const LabeledTree& a, const LabeledTree& b) {
  if (a.label() != b.label()) {
    if (!a.label()) return -1;
    if (!b.label()) return 1;
    return *a.label() < *b.label() ? -1 : 1;
  }
  size_t common = std::min(a.children().size(), b.children().size());
  for (size_t i = 0; i < common; ++i) {
    int c = compare_trees(a.children()[i], b.children()[i]);
    if (c != 0) return c;
  }
  if (a.children().size() != b.children().size())
    return a.children().size() < b.children().size() ? -1 : 1;
  return 0;
}

}  // namespace

bool operator<(const LabeledTree& a, const LabeledTree& b) {
  return compare_trees(a, b) < 0;
}

std::vector<int> LabeledTree::labels() const {
  std::vector<int> out;
  collect_labels(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

StandardTree::StandardTree() = default;

StandardTree::StandardTree(LabeledTree t) : tree_(std::move(t)) {
  if (tree_.label())
    throw InvariantError("standard tree must have an unlabeled root");
  auto ls = tree_.labels();
  for (size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] != static_cast<int>(i) + 1)
      throw InvariantError("labels must be exactly 1.." +
                           std::to_string(ls.size()) + " in " + tree_.text());
  }
}

namespace {

LabeledTree apply_relabel(const LabeledTree& t, const std::map<int, int>& m) {
  std::vector<LabeledTree> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) kids.push_back(apply_relabel(c, m));
  if (t.label()) return LabeledTree(m.at(*t.label()), std::move(kids));
  return LabeledTree::bare_root(std::move(kids));
}

}  // namespace

LabeledTree relabel_shift(const LabeledTree& t, int m) {
  std::map<int, int> repl;
  int p = 0;
  for (int j : t.labels()) repl[j] = ++p + m;
  return apply_relabel(t, repl);
}

StandardTree standardize(const LabeledTree& t) {
  return StandardTree(relabel_shift(t, 0));
}

Forest delete_root(const LabeledTree& t) { return t.children(); }

Forest delete_root(const StandardTree& t) { return t.tree().children(); }

namespace {

// Rebuilds the target tree in preorder, inserting the forest members whose
// assigned node index matches.  idx counts nodes in canonical preorder.
LabeledTree attach_rec(const LabeledTree& node,
                       const std::vector<std::vector<const LabeledTree*>>& at,
                       int& idx) {
  int my = idx++;
  std::vector<LabeledTree> kids;
  for (const auto& c : node.children()) kids.push_back(attach_rec(c, at, idx));
  for (const LabeledTree* extra : at[my]) kids.push_back(*extra);
  if (node.label()) return LabeledTree(*node.label(), std::move(kids));
  return LabeledTree::bare_root(std::move(kids));
}

}  // namespace

std::vector<LabeledTree> attach_all(const Forest& f, const LabeledTree& t2) {
  auto base = t2.labels();
  int top = base.empty() ? 0 : base.back();
  std::set<int> seen(base.begin(), base.end());
  for (const auto& s : f) {
    for (int l : s.labels()) {
      if (!seen.insert(l).second)
        throw InvariantError("label collision on " + std::to_string(l));
      if (l <= top)
        throw InvariantError("forest label " + std::to_string(l) +
                             " does not exceed all target labels");
    }
  }

  int nodes = t2.node_count();
  size_t r = f.size();
  std::vector<int> assign(r, 0);
  std::vector<LabeledTree> out;
  for (;;) {
    std::vector<std::vector<const LabeledTree*>> at(nodes);
    for (size_t i = 0; i < r; ++i) at[assign[i]].push_back(&f[i]);
    int idx = 0;
    out.push_back(attach_rec(t2, at, idx));
    // mixed-radix increment, first forest member fastest
    size_t i = 0;
    while (i < r && ++assign[i] == nodes) assign[i++] = 0;
    if (i == r) break;
  }
  return out;
}

LabeledTree graft_at_root(Forest f) {
  return LabeledTree::bare_root(std::move(f));
}

namespace {

// parent[k] for k in 1..n: 0 means the root, otherwise a label < k.
LabeledTree tree_from_parents(const std::vector<int>& parent) {
  int n = static_cast<int>(parent.size()) - 1;
  std::vector<std::vector<int>> kids(n + 1);
  for (int k = 1; k <= n; ++k) kids[parent[k]].push_back(k);
  auto build = [&](auto&& self, int label) -> LabeledTree {
    std::vector<LabeledTree> cs;
    for (int c : kids[label]) cs.push_back(self(self, c));
    return LabeledTree(label, std::move(cs));
  };
  std::vector<LabeledTree> roots;
  for (int c : kids[0]) roots.push_back(build(build, c));
  return LabeledTree::bare_root(std::move(roots));
}

}  // namespace

std::vector<StandardTree> enumerate_trees(int n) {
  if (n < 0) throw InvariantError("degree must be non-negative");
  if (n > kMaxEnumerationDegree)
    throw InvariantError("degree " + std::to_string(n) +
                         " exceeds enumeration cap " +
                         std::to_string(kMaxEnumerationDegree));
  std::vector<StandardTree> out;
  std::vector<int> parent(n + 1, 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.push_back(StandardTree(tree_from_parents(parent)));
      return;
    }
    for (int p = 0; p < k; ++p) {
      parent[k] = p;
      self(self, k + 1);
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_tree(const LabeledTree& t) { return t.text(); }
std::string render_tree(const StandardTree& t) { return t.text(); }

namespace {

class TreeParser {
public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  LabeledTree parse() {
    auto t = node();
    skip_ws();
    if (pos_ != s_.size())
      throw ParseError("unexpected trailing input at '" + rest() + "'");
    return t;
  }

private:
  LabeledTree node() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of tree input");
    std::optional<int> label;
    if (s_[pos_] == '*') {
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      label = integer();
    } else {
      throw ParseError("expected '*' or label at '" + rest() + "'");
    }
    std::vector<LabeledTree> kids;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      kids.push_back(node());
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        kids.push_back(node());
        skip_ws();
      }
      if (pos_ >= s_.size() || s_[pos_] != ')')
        throw ParseError("expected ')' at '" + rest() + "'");
      ++pos_;
    }
    if (label) return LabeledTree(*label, std::move(kids));
    return LabeledTree::bare_root(std::move(kids));
  }

  int integer() {
    size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) throw ParseError("label out of range");
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer at '" + rest() + "'");
    if (v == 0) throw ParseError("label 0 is not allowed");
    return static_cast<int>(v);
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  std::string rest() const { return std::string(s_.substr(pos_)); }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

LabeledTree parse_tree(std::string_view text) {
  return TreeParser(text).parse();
}

StandardTree parse_standard_tree(std::string_view text) {
  return StandardTree(parse_tree(text));
}

}  // namespace treeperm
