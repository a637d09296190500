#include "treeperm/iso.hpp"

#include <algorithm>
#include <set>

namespace treeperm {

CycleString alpha(const LabeledTree& t) {
  if (!t.label()) throw InvariantError("alpha requires a labeled root");
  CycleString out{*t.label()};
  const auto& kids = t.children();
  for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
    CycleString sub = alpha(*it);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

LabeledTree beta(const CycleString& s) {
  if (s.empty()) throw InvariantError("beta requires a nonempty string");
  std::set<int> distinct(s.begin(), s.end());
  if (distinct.size() != s.size())
    throw InvariantError("duplicate entry in cycle string");
  if (*std::min_element(s.begin(), s.end()) != s.front())
    throw InvariantError("cycle string must start with its minimum");

  // Right-to-left collapse: each entry adopts, as children, the already built
  // trees to its right whose roots are larger.
  std::vector<LabeledTree> stack;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    std::vector<LabeledTree> kids;
    while (!stack.empty() && *stack.back().label() > *it) {
      kids.push_back(std::move(stack.back()));
      stack.pop_back();
    }
    stack.push_back(LabeledTree(*it, std::move(kids)));
  }
  // The minimal first entry swallows everything.
  return stack.back();
}

CyclePerm phi(const StandardTree& t) {
  std::vector<Cycle> cycles;
  for (const auto& child : t.tree().children())
    cycles.push_back(Cycle(alpha(child)));
  return CyclePerm(t.degree(), std::move(cycles));
}

StandardTree phi_inv(const CyclePerm& p) {
  Forest kids;
  for (const auto& c : p.cycles()) kids.push_back(beta(c.entries()));
  return StandardTree(graft_at_root(std::move(kids)));
}

}  // namespace treeperm
