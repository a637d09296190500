#include "treeperm/perm_hopf.hpp"

#include <algorithm>
#include <map>

#include "treeperm/antipode.hpp"

namespace treeperm {

std::vector<AttachmentPoint> attachment_points(const CyclePerm& tau) {
  std::vector<AttachmentPoint> out;
  for (const auto& c : tau.cycles()) {
    for (int e : c.entries()) out.push_back(AttachmentPoint{e});
  }
  out.push_back(AttachmentPoint{std::nullopt});
  return out;
}

LinComb<CyclePerm> heap_product(const CyclePerm& sigma, const CyclePerm& tau) {
  int n = tau.degree();
  int m = sigma.degree();
  // Shifted cycles of sigma, increasing minima; the first one varies fastest
  // in the assignment enumeration.
  std::vector<Cycle> shifted = shift_perm(sigma, n);
  std::sort(shifted.begin(), shifted.end(),
            [](const Cycle& a, const Cycle& b) { return a.min() < b.min(); });
  std::vector<AttachmentPoint> points = attachment_points(tau);
  size_t r = shifted.size();
  size_t radix = points.size();  // n + 1

  std::vector<size_t> assign(r, 0);
  LinComb<CyclePerm> out;
  for (;;) {
    // Which shifted cycles sit after each letter; several on the same letter
    // splice in decreasing order of their first entries.
    std::map<int, std::vector<const Cycle*>> after;
    std::vector<Cycle> term;
    for (size_t i = 0; i < r; ++i) {
      if (points[assign[i]].separate()) {
        term.push_back(shifted[i]);
      } else {
        after[*points[assign[i]].letter].push_back(&shifted[i]);
      }
    }
    for (auto& [letter, cs] : after) {
      std::sort(cs.begin(), cs.end(),
                [](const Cycle* a, const Cycle* b) { return a->min() > b->min(); });
    }
    for (const auto& c : tau.cycles()) {
      std::vector<int> string;
      for (int x : c.entries()) {
        string.push_back(x);
        auto it = after.find(x);
        if (it != after.end()) {
          for (const Cycle* s : it->second) {
            string.insert(string.end(), s->entries().begin(),
                          s->entries().end());
          }
        }
      }
      term.push_back(Cycle(std::move(string)));
    }
    out.add_term(CyclePerm(m + n, std::move(term)), 1);

    size_t i = 0;
    while (i < r && ++assign[i] == radix) assign[i++] = 0;
    if (i == r) break;
  }
  return out;
}

LinComb<CyclePerm> heap_product(const LinComb<CyclePerm>& x,
                                const LinComb<CyclePerm>& y) {
  return bilinear_extend<CyclePerm>(
      [](const CyclePerm& a, const CyclePerm& b) {
        return heap_product(a, b);
      })(x, y);
}

LinComb<Tensor<CyclePerm>> perm_coproduct(const CyclePerm& p) {
  const auto& cycles = p.cycles();
  size_t k = cycles.size();
  LinComb<Tensor<CyclePerm>> out;
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    std::vector<Cycle> in, rest;
    for (size_t i = 0; i < k; ++i)
      ((mask >> i) & 1 ? in : rest).push_back(cycles[i]);
    out.add_term(Tensor<CyclePerm>(std_perm(in), std_perm(rest)), 1);
  }
  return out;
}

LinComb<Tensor<CyclePerm>> perm_coproduct(const LinComb<CyclePerm>& x) {
  return linear_extend<CyclePerm>(
      [](const CyclePerm& p) { return perm_coproduct(p); })(x);
}

Int perm_counit(const CyclePerm& p) { return p.degree() == 0 ? 1 : 0; }

LinComb<CyclePerm> perm_antipode(const CyclePerm& p) {
  static AntipodeRecursion<CyclePerm> recursion(
      [](const CyclePerm& b) { return b.degree(); },
      [](const CyclePerm& b) { return perm_coproduct(b); },
      [](const CyclePerm& a, const CyclePerm& b) {
        return heap_product(a, b);
      });
  return recursion(p);
}

LinComb<CyclePerm> perm_antipode(const LinComb<CyclePerm>& x) {
  return linear_extend<CyclePerm>(
      [](const CyclePerm& p) { return perm_antipode(p); })(x);
}

}  // namespace treeperm
