#include <doctest.h>

#include <map>
#include <set>

#include "treeperm/iso.hpp"

using namespace treeperm;

TEST_CASE("alpha reads the root then children in decreasing order") {
  CHECK(alpha(parse_tree("7")) == CycleString{7});
  CHECK(alpha(parse_tree("1(2,3)")) == CycleString{1, 3, 2});
  CHECK(alpha(parse_tree("1(2(3))")) == CycleString{1, 2, 3});
  CHECK_THROWS_AS(alpha(parse_tree("*")), InvariantError);
}

TEST_CASE("beta collapses valid substrings") {
  CHECK(beta({7}).text() == "7");
  CHECK(beta({1, 3, 2}).text() == "1(2,3)");
  // 1 2 3 collapses to the chain, not to 1(2,3)
  CHECK(beta({1, 2, 3}).text() == "1(2(3))");
  CHECK(beta({1, 4, 2, 3}).text() == "1(2(3),4)");

  CHECK_THROWS_AS(beta({}), InvariantError);
  CHECK_THROWS_AS(beta({2, 1}), InvariantError);
  CHECK_THROWS_AS(beta({1, 2, 2}), InvariantError);
}

TEST_CASE("phi reproduces the displayed table") {
  CHECK(phi(parse_standard_tree("*(1,2,3)")).text() == "(1)(2)(3)");
  CHECK(phi(parse_standard_tree("*(1(2(3)))")).text() == "(1 2 3)");
  CHECK(phi(parse_standard_tree("*(1(3),2)")).text() == "(1 3)(2)");
  CHECK(phi(parse_standard_tree("*(1,2(3))")).text() == "(1)(2 3)");
  CHECK(phi(parse_standard_tree("*(1(2,3))")).text() == "(1 3 2)");
  // the sixth tree of degree 3, absent from the displayed list
  CHECK(phi(parse_standard_tree("*(1(2),3)")).text() == "(1 2)(3)");
}

TEST_CASE("phi_inv examples") {
  CHECK(phi_inv(CyclePerm()).text() == "*");
  CHECK(phi_inv(parse_perm("(1 3 2)")).text() == "*(1(2,3))");
  CHECK(phi_inv(parse_perm("(1 2)(3)")).text() == "*(1(2),3)");
}

TEST_CASE("beta inverts alpha on all labeled-root subtrees") {
  // every labeled-root subtree of every enumerated tree
  for (int n = 0; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      auto walk = [&](auto&& self, const LabeledTree& node) -> void {
        if (node.label()) CHECK(beta(alpha(node)) == node);
        for (const auto& c : node.children()) self(self, c);
      };
      walk(walk, t.tree());
    }
  }
}

TEST_CASE("alpha inverts beta on all enumerated cycle strings") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& p : enumerate_perms(n)) {
      for (const auto& c : p.cycles()) {
        CHECK(alpha(beta(c.entries())) == c.entries());
      }
    }
  }
}

TEST_CASE("phi is a bijection per degree") {
  for (int n = 0; n <= 5; ++n) {
    std::set<CyclePerm> image;
    for (const auto& t : enumerate_trees(n)) {
      CyclePerm p = phi(t);
      CHECK(p.degree() == n);
      CHECK(p.cycle_count() == t.tree().children().size());
      CHECK(image.insert(p).second);
      CHECK(phi_inv(p) == t);
    }
    CHECK(image.size() == enumerate_perms(n).size());
  }
}
