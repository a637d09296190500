#ifndef TREEPERM_ANTIPODE_HPP
#define TREEPERM_ANTIPODE_HPP

#include <functional>
#include <map>
#include <mutex>

#include "treeperm/lincomb.hpp"

namespace treeperm {

/// Antipode of a graded connected bialgebra via the left recursion
///   S(1) = 1,   S(b) = -b - sum S(b') b''
/// where the sum runs over the reduced coproduct of b (all tensor terms whose
/// factors both have positive degree).  Results are memoized per basis
/// element; the memo table is guarded so concurrent callers are race-free.
template <class B>
class AntipodeRecursion {
public:
  using DegreeFn = std::function<int(const B&)>;
  using CoproductFn = std::function<LinComb<Tensor<B>>(const B&)>;
  using ProductFn = std::function<LinComb<B>(const B&, const B&)>;

  AntipodeRecursion(DegreeFn degree, CoproductFn coproduct, ProductFn product)
      : degree_(std::move(degree)),
        coproduct_(std::move(coproduct)),
        product_(std::move(product)) {}

  LinComb<B> operator()(const B& b) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(b);
      if (it != memo_.end()) return it->second;
    }
    LinComb<B> result;
    if (degree_(b) == 0) {
      result = LinComb<B>::basis(b);
    } else {
      result = LinComb<B>::term(-1, b);
      for (const auto& [t, c] : coproduct_(b).terms()) {
        if (degree_(t.left()) == 0 || degree_(t.right()) == 0) continue;
        LinComb<B> s_left = (*this)(t.left());
        for (const auto& [sb, sc] : s_left.terms()) {
          result += (-c * sc) * product_(sb, t.right());
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(b, result);
    return result;
  }

private:
  DegreeFn degree_;
  CoproductFn coproduct_;
  ProductFn product_;
  std::map<B, LinComb<B>> memo_;
  std::mutex mu_;
};

}  // namespace treeperm

#endif
