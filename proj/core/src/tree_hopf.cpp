#include "treeperm/tree_hopf.hpp"

#include "treeperm/antipode.hpp"

namespace treeperm {

LinComb<StandardTree> tree_product(const StandardTree& t1,
                                   const StandardTree& t2) {
  int n = t2.degree();
  LabeledTree shifted = relabel_shift(t1.tree(), n);
  Forest forest = delete_root(shifted);
  LinComb<StandardTree> out;
  for (const auto& t : attach_all(forest, t2.tree()))
    out.add_term(StandardTree(t), 1);
  return out;
}

LinComb<StandardTree> tree_product(const LinComb<StandardTree>& x,
                                   const LinComb<StandardTree>& y) {
  return bilinear_extend<StandardTree>(
      [](const StandardTree& a, const StandardTree& b) {
        return tree_product(a, b);
      })(x, y);
}

LinComb<Tensor<StandardTree>> tree_coproduct(const StandardTree& t) {
  const Forest kids = delete_root(t);
  size_t r = kids.size();
  LinComb<Tensor<StandardTree>> out;
  for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
    Forest in, rest;
    for (size_t i = 0; i < r; ++i)
      ((mask >> i) & 1 ? in : rest).push_back(kids[i]);
    out.add_term(Tensor<StandardTree>(standardize(graft_at_root(in)),
                                      standardize(graft_at_root(rest))),
                 1);
  }
  return out;
}

LinComb<Tensor<StandardTree>> tree_coproduct(const LinComb<StandardTree>& x) {
  return linear_extend<StandardTree>(
      [](const StandardTree& t) { return tree_coproduct(t); })(x);
}

Int tree_counit(const StandardTree& t) { return t.degree() == 0 ? 1 : 0; }

LinComb<StandardTree> tree_antipode(const StandardTree& t) {
  static AntipodeRecursion<StandardTree> recursion(
      [](const StandardTree& b) { return b.degree(); },
      [](const StandardTree& b) { return tree_coproduct(b); },
      [](const StandardTree& a, const StandardTree& b) {
        return tree_product(a, b);
      });
  return recursion(t);
}

LinComb<StandardTree> tree_antipode(const LinComb<StandardTree>& x) {
  return linear_extend<StandardTree>(
      [](const StandardTree& t) { return tree_antipode(t); })(x);
}

}  // namespace treeperm
