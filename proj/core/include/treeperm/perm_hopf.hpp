#ifndef TREEPERM_PERM_HOPF_HPP
#define TREEPERM_PERM_HOPF_HPP

#include <optional>
#include <vector>

#include "treeperm/lincomb.hpp"
#include "treeperm/perm.hpp"

namespace treeperm {

/// A place where a shifted cycle of the first factor can land: either a
/// letter of the second factor (the cycle string is spliced immediately after
/// it) or the distinguished point where it stays a separate cycle.
struct AttachmentPoint {
  std::optional<int> letter;  // nullopt is the separate-cycle point

  bool separate() const { return !letter.has_value(); }
};

/// The n+1 attachment points of tau: its letters in order of first appearance
/// in the canonical rendering, then the separate-cycle point.
std::vector<AttachmentPoint> attachment_points(const CyclePerm& tau);

/// Heap product sigma # tau: shift sigma above tau, then attach each of its
/// cycles to one of the n+1 attachment points of tau, in all (n+1)^r ways.
/// Cycles landing on the same letter are spliced after it in strictly
/// decreasing order of their first entries.
LinComb<CyclePerm> heap_product(const CyclePerm& sigma, const CyclePerm& tau);
LinComb<CyclePerm> heap_product(const LinComb<CyclePerm>& x,
                                const LinComb<CyclePerm>& y);

/// Coproduct on kS: sum over all subsets X of the cycle set of
/// std(X) (x) std(complement).
LinComb<Tensor<CyclePerm>> perm_coproduct(const CyclePerm& p);
LinComb<Tensor<CyclePerm>> perm_coproduct(const LinComb<CyclePerm>& x);

/// 1 on the degree-0 identity, 0 otherwise.
Int perm_counit(const CyclePerm& p);

/// Antipode via the graded-connected recursion, memoized.
LinComb<CyclePerm> perm_antipode(const CyclePerm& p);
LinComb<CyclePerm> perm_antipode(const LinComb<CyclePerm>& x);

}  // namespace treeperm

#endif
