#include <doctest.h>

#include <algorithm>
#include <set>

#include "treeperm/tree.hpp"

using namespace treeperm;

TEST_CASE("relabel_shift follows order-preserving relabeling") {
  // root->5->9 with m=0 becomes root->1->2
  auto chain = LabeledTree::bare_root({LabeledTree(5, {LabeledTree(9)})});
  CHECK(relabel_shift(chain, 0).text() == "*(1(2))");

  // standard trees are fixed by shift 0
  auto t = parse_standard_tree("*(1(3),2)");
  CHECK(relabel_shift(t.tree(), 0) == t.tree());

  // labels (3,7,8), m=2: 3->3, 7->4, 8->5
  auto mixed = LabeledTree::bare_root(
      {LabeledTree(3), LabeledTree(7, {LabeledTree(8)})});
  CHECK(relabel_shift(mixed, 2).text() == "*(3,4(5))");
}

TEST_CASE("relabel_shift preserves shape and standardization is idempotent") {
  for (const auto& t : enumerate_trees(5)) {
    auto shifted = relabel_shift(t.tree(), 3);
    CHECK(shifted.node_count() == t.tree().node_count());
    auto back = relabel_shift(shifted, 0);
    CHECK(back == t.tree());
    CHECK(relabel_shift(back, 0) == back);
  }
}

TEST_CASE("delete_root") {
  CHECK(delete_root(StandardTree()).empty());

  auto f = delete_root(parse_standard_tree("*(1,2,3)"));
  REQUIRE(f.size() == 3);
  CHECK(f[0].text() == "1");
  CHECK(f[2].text() == "3");

  auto g = delete_root(parse_standard_tree("*(1(3),2)"));
  REQUIRE(g.size() == 2);
  CHECK(g[0].text() == "1(3)");
  CHECK(g[1].text() == "2");
}

TEST_CASE("attach_all enumerates every assignment") {
  auto star1 = parse_tree("*(1)");

  SUBCASE("empty forest gives one copy") {
    auto out = attach_all({}, star1);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == star1);
  }

  SUBCASE("one member, two nodes") {
    auto out = attach_all({LabeledTree(2)}, star1);
    REQUIRE(out.size() == 2);
    CHECK(out[0].text() == "*(1,2)");
    CHECK(out[1].text() == "*(1(2))");
  }

  SUBCASE("two members, degree-1 target: the four trees") {
    auto out = attach_all({LabeledTree(3), LabeledTree(4)}, star1);
    REQUIRE(out.size() == 4);
    std::set<std::string> texts;
    for (const auto& t : out) texts.insert(t.text());
    CHECK(texts == std::set<std::string>{"*(1,3,4)", "*(1(4),3)", "*(1(3),4)",
                                         "*(1(3,4))"});
  }

  SUBCASE("rejects collisions and low labels") {
    CHECK_THROWS_AS(attach_all({LabeledTree(1)}, star1), InvariantError);
    CHECK_THROWS_AS((void)attach_all({LabeledTree(3), LabeledTree(3)}, star1),
                    InvariantError);
  }
}

TEST_CASE("attach_all term count and distinctness") {
  // (n+1)^r computed from the shapes alone, independent of attach_all
  for (const auto& t2 : enumerate_trees(3)) {
    for (const auto& f1 : enumerate_trees(2)) {
      Forest f = delete_root(relabel_shift(f1.tree(), 3));
      auto out = attach_all(f, t2.tree());
      size_t expect = 1;
      for (size_t i = 0; i < f.size(); ++i) expect *= t2.tree().node_count();
      CHECK(out.size() == expect);
      std::set<LabeledTree> distinct(out.begin(), out.end());
      CHECK(distinct.size() == out.size());
    }
  }
}

TEST_CASE("graft_at_root") {
  CHECK(graft_at_root({}).text() == "*");
  CHECK(graft_at_root({parse_tree("1(3)"), parse_tree("2")}).text() ==
        "*(1(3),2)");
  // canonical re-sorting
  CHECK(graft_at_root({parse_tree("2"), parse_tree("1")}).text() == "*(1,2)");
}

TEST_CASE("graft_at_root inverts delete_root") {
  for (const auto& t : enumerate_trees(5)) {
    CHECK(graft_at_root(delete_root(t)) == t.tree());
  }
}

TEST_CASE("enumerate_trees counts and contents") {
  CHECK(enumerate_trees(0).size() == 1);
  CHECK(enumerate_trees(0)[0].text() == "*");

  auto t2 = enumerate_trees(2);
  REQUIRE(t2.size() == 2);
  CHECK(t2[0].text() == "*(1,2)");
  CHECK(t2[1].text() == "*(1(2))");

  auto t3 = enumerate_trees(3);
  CHECK(t3.size() == 6);
  std::set<std::string> texts;
  for (const auto& t : t3) texts.insert(t.text());
  CHECK(texts == std::set<std::string>{"*(1,2,3)", "*(1(2(3)))", "*(1(3),2)",
                                       "*(1,2(3))", "*(1(2,3))", "*(1(2),3)"});

  long long factorial = 1;
  for (int n = 1; n <= 6; ++n) {
    factorial *= n;
    CHECK(enumerate_trees(n).size() == static_cast<size_t>(factorial));
  }

  CHECK_THROWS_AS(enumerate_trees(10), InvariantError);
  CHECK_THROWS_AS(enumerate_trees(-1), InvariantError);
}

TEST_CASE("tree text round trips") {
  CHECK(parse_tree("*").text() == "*");
  CHECK(parse_tree("*(1(2,3))").text() == "*(1(2,3))");
  CHECK(parse_tree("*(2,1)").text() == "*(1,2)");
  CHECK(parse_tree(" * ( 1 ( 2 ) ) ").text() == "*(1(2))");

  for (const auto& t : enumerate_trees(6)) {
    CHECK(parse_standard_tree(t.text()) == t);
  }
}

TEST_CASE("parser diagnostics are specific") {
  CHECK_THROWS_WITH_AS(parse_tree("*(1,1)"), doctest::Contains("duplicate"),
                       InvariantError);
  CHECK_THROWS_WITH_AS(parse_tree("*(2(1))"),
                       doctest::Contains("heap condition"), InvariantError);
  CHECK_THROWS_WITH_AS(parse_standard_tree("*(1,3)"),
                       doctest::Contains("labels must be exactly"),
                       InvariantError);
  CHECK_THROWS_AS(parse_tree("*(1"), ParseError);
  CHECK_THROWS_AS(parse_tree("*(1))"), ParseError);
  CHECK_THROWS_AS(parse_tree("(1)"), ParseError);
  CHECK_THROWS_AS(parse_tree("*(0)"), ParseError);
  CHECK_THROWS_AS(parse_standard_tree("1(2)"), InvariantError);
}

TEST_CASE("unlabeled nodes below the root are rejected") {
  auto bare = LabeledTree::bare_root({});
  CHECK_THROWS_AS(LabeledTree(1, {bare}), InvariantError);
  CHECK_THROWS_AS(LabeledTree::bare_root({bare}), InvariantError);
}
