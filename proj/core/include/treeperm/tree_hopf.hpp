#ifndef TREEPERM_TREE_HOPF_HPP
#define TREEPERM_TREE_HOPF_HPP

#include "treeperm/lincomb.hpp"
#include "treeperm/tree.hpp"

namespace treeperm {

/// Product on kT: shift t1 above t2, delete its root, and attach the
/// resulting forest to t2 in all (n+1)^r ways.  Homogeneous of degree
/// deg(t1)+deg(t2), with exactly (n+1)^r coefficient-1 terms.
LinComb<StandardTree> tree_product(const StandardTree& t1,
                                   const StandardTree& t2);
LinComb<StandardTree> tree_product(const LinComb<StandardTree>& x,
                                   const LinComb<StandardTree>& y);

/// Coproduct on kT: sum over all subsets X of the root's children of
/// std(graft X) (x) std(graft complement).
LinComb<Tensor<StandardTree>> tree_coproduct(const StandardTree& t);
LinComb<Tensor<StandardTree>> tree_coproduct(const LinComb<StandardTree>& x);

/// 1 on the unit tree, 0 in positive degree.
Int tree_counit(const StandardTree& t);

/// Antipode via the graded-connected recursion, memoized.
LinComb<StandardTree> tree_antipode(const StandardTree& t);
LinComb<StandardTree> tree_antipode(const LinComb<StandardTree>& x);

}  // namespace treeperm

#endif
