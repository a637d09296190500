#ifndef TREEPERM_ISO_HPP
#define TREEPERM_ISO_HPP

#include <vector>

#include "treeperm/perm.hpp"
#include "treeperm/tree.hpp"

namespace treeperm {

/// Cycle string: distinct positive integers with the first entry minimal.
using CycleString = std::vector<int>;

/// Tree-to-string map: root label first, then the children's strings in
/// decreasing root order.  Requires a labeled root.
CycleString alpha(const LabeledTree& t);

/// String-to-tree map, the inverse of alpha.  Implemented as a right-to-left
/// stack collapse of valid substrings.  Rejects strings whose first entry is
/// not the minimum, or with duplicates.
LabeledTree beta(const CycleString& s);

/// Bijection T_n -> S_n: one cycle per child of the root, via alpha.
CyclePerm phi(const StandardTree& t);

/// Inverse bijection: bare root with children beta(s_1), ..., beta(s_k),
/// one per cycle (fixed points included).
StandardTree phi_inv(const CyclePerm& p);

}  // namespace treeperm

#endif
