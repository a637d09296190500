// Acceptance suite: one line per criterion, exact checks only.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "treeperm/iso.hpp"
#include "treeperm/perm_hopf.hpp"
#include "treeperm/tree_hopf.hpp"
#include "treeperm/verify.hpp"

using namespace treeperm;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(const std::string& name, bool ok, const std::string& note = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
  if (!note.empty()) std::cout << "  (" << note << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. |T_n| = |S_n| = n! for n = 0..8, under 30 s.
void criterion_1() {
  auto start = Clock::now();
  const std::vector<size_t> factorials{1,   1,    2,    6,    24,
                                       120, 720,  5040, 40320};
  bool ok = true;
  for (int n = 0; n <= 8; ++n) {
    ok = ok && enumerate_trees(n).size() == factorials[n] &&
         enumerate_perms(n).size() == factorials[n];
  }
  double elapsed = seconds_since(start);
  criterion("1 enumeration-counts n<=8", ok && elapsed < 30.0,
            std::to_string(elapsed) + " s");
}

// 2. (shifted 3-cycle) # (p-cycle) has exactly p+1 terms of the displayed
// shapes, for p = 1..5.  Expected terms are constructed directly from the
// displayed expansion, independently of heap_product.
void criterion_2() {
  bool ok = true;
  for (int p = 1; p <= 5; ++p) {
    std::vector<int> tau_string;
    for (int i = 1; i <= p; ++i) tau_string.push_back(i);
    CyclePerm sigma = parse_perm("(1 2 3)");
    CyclePerm tau = CyclePerm::from_cycles({Cycle(tau_string)});

    std::set<CyclePerm> expected;
    for (int j = 0; j < p; ++j) {
      // splice p+1 p+2 p+3 right after the letter at position j
      std::vector<int> s;
      for (int i = 0; i < p; ++i) {
        s.push_back(tau_string[i]);
        if (i == j) {
          s.push_back(p + 1);
          s.push_back(p + 2);
          s.push_back(p + 3);
        }
      }
      expected.insert(CyclePerm(p + 3, {Cycle(s)}));
    }
    expected.insert(
        CyclePerm(p + 3, {Cycle(tau_string), Cycle({p + 1, p + 2, p + 3})}));

    auto prod = heap_product(sigma, tau);
    ok = ok && prod.term_count() == static_cast<size_t>(p) + 1 &&
         expected.size() == static_cast<size_t>(p) + 1;
    for (const auto& [b, c] : prod.terms())
      ok = ok && c == 1 && expected.count(b) == 1;
  }
  criterion("2 worked example: 3-cycle # p-cycle, p+1 terms", ok);
}

// 3. (1)(2)(3) # (1 2 3): 64 distinct coefficient-1 terms with the displayed
// boundary terms.
void criterion_3() {
  auto prod = heap_product(parse_perm("(1)(2)(3)"), parse_perm("(1 2 3)"));
  bool ok = prod.term_count() == 64;
  std::set<std::string> terms;
  for (const auto& [b, c] : prod.terms()) {
    ok = ok && c == 1;
    terms.insert(b.text());
  }
  ok = ok && terms.count("(1 6 5 4 2 3)") && terms.count("(1 6 2 5 3 4)") &&
       terms.count("(1 2 3 4)(5)(6)") && terms.count("(1 2 3)(4)(5)(6)");
  criterion("3 worked example: 4^3 = 64 terms", ok);
}

// 4. The five displayed tree -> permutation pairs, and their inverses.
void criterion_4() {
  const std::vector<std::pair<std::string, std::string>> table{
      {"*(1,2,3)", "(1)(2)(3)"},
      {"*(1(2(3)))", "(1 2 3)"},
      {"*(1(3),2)", "(1 3)(2)"},
      {"*(1,2(3))", "(1)(2 3)"},
      {"*(1(2,3))", "(1 3 2)"},
  };
  bool ok = true;
  for (const auto& [tree_text, perm_text] : table) {
    StandardTree t = parse_standard_tree(tree_text);
    CyclePerm p = parse_perm(perm_text);
    ok = ok && phi(t) == p && phi_inv(p) == t;
  }
  criterion("4 phi table round trip", ok);
}

// 5. (n+1)^r term-count law for both products, m+n <= 6.
void criterion_5() {
  Report r = verify(Law::TermCounts, 6);
  criterion("5 term-count law m+n<=6", r.passed,
            std::to_string(r.instances) + " instances");
}

// 6. Bialgebra suites for both algebras, under 60 s combined.
void criterion_6() {
  auto start = Clock::now();
  bool ok = true;
  long long instances = 0;
  for (Law law : {Law::AssocTree, Law::AssocPerm, Law::CompatTree,
                  Law::CompatPerm}) {
    Report r = verify(law, 5);
    ok = ok && r.passed;
    instances += r.instances;
  }
  for (Law law : {Law::CoassocTree, Law::CoassocPerm, Law::CocommTree,
                  Law::CocommPerm, Law::CounitTree, Law::CounitPerm}) {
    Report r = verify(law, 6);
    ok = ok && r.passed;
    instances += r.instances;
  }
  double elapsed = seconds_since(start);
  criterion("6 bialgebra suites", ok && elapsed < 60.0,
            std::to_string(instances) + " instances, " +
                std::to_string(elapsed) + " s");
}

// 7. Antipode convolution laws at degree <= 5 in both algebras, plus the
// transport identity (folded into antipode-perm).
void criterion_7() {
  Report tree = verify(Law::AntipodeTree, 5);
  Report perm = verify(Law::AntipodePerm, 5);
  criterion("7 antipode laws degree<=5", tree.passed && perm.passed);
}

// 8. phi is a bialgebra morphism and a bijection, degree <= 6.
void criterion_8() {
  Report prod = verify(Law::PhiProduct, 6);
  Report coprod = verify(Law::PhiCoproduct, 6);
  Report bij = verify(Law::PhiBijective, 6);
  criterion("8 phi bialgebra morphism degree<=6",
            prod.passed && coprod.passed && bij.passed);
}

// 9. Round-trip codecs up to degree 6, including beta/alpha.
void criterion_9() {
  bool ok = true;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      ok = ok && parse_standard_tree(render_tree(t)) == t;
      auto walk = [&](auto&& self, const LabeledTree& node) -> void {
        if (node.label()) ok = ok && beta(alpha(node)) == node;
        for (const auto& c : node.children()) self(self, c);
      };
      walk(walk, t.tree());
    }
    for (const auto& p : enumerate_perms(n)) {
      ok = ok && parse_perm(render_perm(p)) == p;
      for (const auto& c : p.cycles())
        ok = ok && alpha(beta(c.entries())) == c.entries();
    }
  }
  criterion("9 round-trip codecs degree<=6", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
