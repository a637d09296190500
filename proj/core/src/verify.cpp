#include "treeperm/verify.hpp"

#include <json.hpp>
#include <map>
#include <sstream>

#include "treeperm/iso.hpp"
#include "treeperm/perm_hopf.hpp"
#include "treeperm/tree_hopf.hpp"

namespace treeperm {

namespace {

const std::map<std::string, Law>& law_table() {
  static const std::map<std::string, Law> table = {
      {"assoc-tree", Law::AssocTree},
      {"assoc-perm", Law::AssocPerm},
      {"coassoc-tree", Law::CoassocTree},
      {"coassoc-perm", Law::CoassocPerm},
      {"counit-tree", Law::CounitTree},
      {"counit-perm", Law::CounitPerm},
      {"cocomm-tree", Law::CocommTree},
      {"cocomm-perm", Law::CocommPerm},
      {"compat-tree", Law::CompatTree},
      {"compat-perm", Law::CompatPerm},
      {"antipode-tree", Law::AntipodeTree},
      {"antipode-perm", Law::AntipodePerm},
      {"phi-bijective", Law::PhiBijective},
      {"phi-product", Law::PhiProduct},
      {"phi-coproduct", Law::PhiCoproduct},
      {"term-counts", Law::TermCounts},
      {"enumeration-counts", Law::EnumerationCounts},
  };
  return table;
}

struct TreeAlg {
  using B = StandardTree;
  static std::vector<B> basis(int n) { return enumerate_trees(n); }
  static int degree(const B& b) { return b.degree(); }
  static LinComb<B> product(const B& a, const B& b) {
    return tree_product(a, b);
  }
  static LinComb<Tensor<B>> coproduct(const B& b) { return tree_coproduct(b); }
  static Int counit(const B& b) { return tree_counit(b); }
  static LinComb<B> antipode(const B& b) { return tree_antipode(b); }
  static B unit() { return StandardTree(); }
  // r in the (n+1)^r term count: root-child count.
  static size_t branch_count(const B& b) { return b.tree().children().size(); }
  static size_t part_count(const B& b) { return branch_count(b); }
};

struct PermAlg {
  using B = CyclePerm;
  static std::vector<B> basis(int n) { return enumerate_perms(n); }
  static int degree(const B& b) { return b.degree(); }
  static LinComb<B> product(const B& a, const B& b) {
    return heap_product(a, b);
  }
  static LinComb<Tensor<B>> coproduct(const B& b) { return perm_coproduct(b); }
  static Int counit(const B& b) { return perm_counit(b); }
  static LinComb<B> antipode(const B& b) { return perm_antipode(b); }
  static B unit() { return CyclePerm(); }
  static size_t branch_count(const B& b) { return b.cycle_count(); }
  static size_t part_count(const B& b) { return b.cycle_count(); }
};

void fail(Report& r, std::string inputs, std::string lhs, std::string rhs) {
  r.passed = false;
  r.counterexample = Counterexample{std::move(inputs), std::move(lhs),
                                    std::move(rhs)};
}

template <class Alg>
Report check_assoc(Report r) {
  using B = typename Alg::B;
  for (int a = 0; a <= r.max_degree && r.passed; ++a) {
    for (int b = 0; a + b <= r.max_degree && r.passed; ++b) {
      for (int c = 0; a + b + c <= r.max_degree && r.passed; ++c) {
        for (const B& x : Alg::basis(a)) {
          for (const B& y : Alg::basis(b)) {
            for (const B& z : Alg::basis(c)) {
              ++r.instances;
              auto mul = bilinear_extend<B>(Alg::product);
              LinComb<B> lhs = mul(Alg::product(x, y), LinComb<B>::basis(z));
              LinComb<B> rhs = mul(LinComb<B>::basis(x), Alg::product(y, z));
              if (lhs != rhs) {
                fail(r, x.text() + ", " + y.text() + ", " + z.text(),
                     lhs.str(), rhs.str());
                return r;
              }
            }
          }
        }
      }
    }
  }
  return r;
}

// Triple tensors keyed by concatenated canonical text; enough for an exact
// equality check.
template <class B>
using Tensor3 = std::map<std::string, Int>;

template <class Alg>
Tensor3<typename Alg::B> expand_left(const LinComb<Tensor<typename Alg::B>>& x) {
  Tensor3<typename Alg::B> out;
  for (const auto& [t, c] : x.terms()) {
    for (const auto& [u, d] : Alg::coproduct(t.left()).terms()) {
      std::string key = u.left().text() + " (x) " + u.right().text() +
                        " (x) " + t.right().text();
      out[key] += c * d;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

template <class Alg>
Tensor3<typename Alg::B> expand_right(const LinComb<Tensor<typename Alg::B>>& x) {
  Tensor3<typename Alg::B> out;
  for (const auto& [t, c] : x.terms()) {
    for (const auto& [u, d] : Alg::coproduct(t.right()).terms()) {
      std::string key = t.left().text() + " (x) " + u.left().text() + " (x) " +
                        u.right().text();
      out[key] += c * d;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

template <class B>
std::string tensor3_str(const Tensor3<B>& x) {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) s += " + ";
    first = false;
    s += (c == 1 ? k : c.str() + "*" + k);
  }
  return s;
}

template <class Alg>
Report check_coassoc(Report r) {
  for (int n = 0; n <= r.max_degree; ++n) {
    for (const auto& b : Alg::basis(n)) {
      ++r.instances;
      auto delta = Alg::coproduct(b);
      auto lhs = expand_left<Alg>(delta);
      auto rhs = expand_right<Alg>(delta);
      if (lhs != rhs) {
        fail(r, b.text(), tensor3_str<typename Alg::B>(lhs),
             tensor3_str<typename Alg::B>(rhs));
        return r;
      }
    }
  }
  return r;
}

template <class Alg>
Report check_cocomm(Report r) {
  for (int n = 0; n <= r.max_degree; ++n) {
    for (const auto& b : Alg::basis(n)) {
      ++r.instances;
      auto delta = Alg::coproduct(b);
      auto swapped = swap_tensor(delta);
      if (delta != swapped) {
        fail(r, b.text(), delta.str(), swapped.str());
        return r;
      }
    }
  }
  return r;
}

template <class Alg>
Report check_counit(Report r) {
  using B = typename Alg::B;
  for (int n = 0; n <= r.max_degree; ++n) {
    for (const B& b : Alg::basis(n)) {
      ++r.instances;
      LinComb<B> left, right;
      for (const auto& [t, c] : Alg::coproduct(b).terms()) {
        left.add_term(t.right(), c * Alg::counit(t.left()));
        right.add_term(t.left(), c * Alg::counit(t.right()));
      }
      LinComb<B> expect = LinComb<B>::basis(b);
      if (left != expect || right != expect) {
        fail(r, b.text(), left.str() + " ; " + right.str(), expect.str());
        return r;
      }
    }
  }
  return r;
}

template <class Alg>
Report check_compat(Report r) {
  using B = typename Alg::B;
  auto componentwise = tensor_componentwise<B>(Alg::product);
  for (int m = 0; m <= r.max_degree; ++m) {
    for (int n = 0; m + n <= r.max_degree; ++n) {
      for (const B& x : Alg::basis(m)) {
        for (const B& y : Alg::basis(n)) {
          ++r.instances;
          LinComb<Tensor<B>> lhs;
          for (const auto& [b, c] : Alg::product(x, y).terms())
            lhs += c * Alg::coproduct(b);
          LinComb<Tensor<B>> rhs =
              componentwise(Alg::coproduct(x), Alg::coproduct(y));
          if (lhs != rhs) {
            fail(r, x.text() + ", " + y.text(), lhs.str(), rhs.str());
            return r;
          }
        }
      }
    }
  }
  return r;
}

template <class Alg>
Report check_antipode(Report r) {
  using B = typename Alg::B;
  for (int n = 0; n <= r.max_degree; ++n) {
    for (const B& b : Alg::basis(n)) {
      ++r.instances;
      LinComb<B> left, right;
      for (const auto& [t, c] : Alg::coproduct(b).terms()) {
        auto mul = bilinear_extend<B>(Alg::product);
        left += c * mul(Alg::antipode(t.left()), LinComb<B>::basis(t.right()));
        right += c * mul(LinComb<B>::basis(t.left()), Alg::antipode(t.right()));
      }
      LinComb<B> expect = LinComb<B>::term(Alg::counit(b), Alg::unit());
      if (left != expect || right != expect) {
        fail(r, b.text(), left.str() + " ; " + right.str(), expect.str());
        return r;
      }
    }
  }
  return r;
}

// perm_antipode must agree with the transport of the tree antipode through
// phi; checked together with the convolution laws under antipode-perm.
Report check_antipode_perm(Report r) {
  r = check_antipode<PermAlg>(std::move(r));
  if (!r.passed) return r;
  for (int n = 0; n <= r.max_degree; ++n) {
    for (const auto& p : enumerate_perms(n)) {
      ++r.instances;
      LinComb<CyclePerm> direct = perm_antipode(p);
      LinComb<CyclePerm> transported;
      for (const auto& [t, c] : tree_antipode(phi_inv(p)).terms())
        transported.add_term(phi(t), c);
      if (direct != transported) {
        fail(r, p.text(), direct.str(), transported.str());
        return r;
      }
    }
  }
  return r;
}

Report check_phi_bijective(Report r) {
  for (int n = 0; n <= r.max_degree; ++n) {
    std::map<CyclePerm, StandardTree> image;
    for (const auto& t : enumerate_trees(n)) {
      ++r.instances;
      CyclePerm p = phi(t);
      if (p.degree() != n ||
          p.cycle_count() != t.tree().children().size()) {
        fail(r, t.text(), p.text(), "degree/cycle-count preserving image");
        return r;
      }
      auto [it, inserted] = image.emplace(p, t);
      if (!inserted) {
        fail(r, t.text() + " and " + it->second.text(), p.text(),
             "distinct images");
        return r;
      }
      if (phi_inv(p) != t) {
        fail(r, t.text(), phi_inv(p).text(), t.text());
        return r;
      }
    }
    if (image.size() != enumerate_perms(n).size()) {
      fail(r, "degree " + std::to_string(n), std::to_string(image.size()),
           std::to_string(enumerate_perms(n).size()));
      return r;
    }
  }
  return r;
}

LinComb<CyclePerm> phi_linear(const LinComb<StandardTree>& x) {
  LinComb<CyclePerm> out;
  for (const auto& [t, c] : x.terms()) out.add_term(phi(t), c);
  return out;
}

Report check_phi_product(Report r) {
  for (int m = 0; m <= r.max_degree; ++m) {
    for (int n = 0; m + n <= r.max_degree; ++n) {
      for (const auto& t1 : enumerate_trees(m)) {
        for (const auto& t2 : enumerate_trees(n)) {
          ++r.instances;
          LinComb<CyclePerm> lhs = phi_linear(tree_product(t1, t2));
          LinComb<CyclePerm> rhs = heap_product(phi(t1), phi(t2));
          if (lhs != rhs) {
            fail(r, t1.text() + ", " + t2.text(), lhs.str(), rhs.str());
            return r;
          }
        }
      }
    }
  }
  return r;
}

Report check_phi_coproduct(Report r) {
  for (int n = 0; n <= r.max_degree; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      ++r.instances;
      LinComb<Tensor<CyclePerm>> lhs;
      for (const auto& [u, c] : tree_coproduct(t).terms())
        lhs.add_term(Tensor<CyclePerm>(phi(u.left()), phi(u.right())), c);
      LinComb<Tensor<CyclePerm>> rhs = perm_coproduct(phi(t));
      if (lhs != rhs) {
        fail(r, t.text(), lhs.str(), rhs.str());
        return r;
      }
      if (perm_counit(phi(t)) != tree_counit(t)) {
        fail(r, t.text(), perm_counit(phi(t)).str(), tree_counit(t).str());
        return r;
      }
    }
  }
  return r;
}

template <class Alg>
bool check_term_counts_one(Report& r) {
  using B = typename Alg::B;
  for (int m = 0; m <= r.max_degree; ++m) {
    for (int n = 0; m + n <= r.max_degree; ++n) {
      for (const B& x : Alg::basis(m)) {
        for (const B& y : Alg::basis(n)) {
          ++r.instances;
          LinComb<B> prod = Alg::product(x, y);
          size_t expect = 1;
          for (size_t i = 0; i < Alg::branch_count(x); ++i) expect *= n + 1;
          if (prod.term_count() != expect) {
            fail(r, x.text() + ", " + y.text(),
                 std::to_string(prod.term_count()) + " terms",
                 std::to_string(expect) + " terms");
            return false;
          }
          for (const auto& [b, c] : prod.terms()) {
            if (c != 1 || Alg::degree(b) != m + n) {
              fail(r, x.text() + ", " + y.text(), prod.str(),
                   "homogeneous coefficient-1 terms");
              return false;
            }
          }
        }
      }
    }
  }
  // Coproduct mass 2^k, degree additivity, and part-count conservation.
  for (int n = 0; n <= r.max_degree; ++n) {
    for (const B& b : Alg::basis(n)) {
      ++r.instances;
      Int mass = 0;
      for (const auto& [t, c] : Alg::coproduct(b).terms()) {
        mass += c;
        if (Alg::degree(t.left()) + Alg::degree(t.right()) != n ||
            Alg::part_count(t.left()) + Alg::part_count(t.right()) !=
                Alg::part_count(b)) {
          fail(r, b.text(), t.text(), "degree and part-count additivity");
          return false;
        }
      }
      Int expect = Int(1) << Alg::part_count(b);
      if (mass != expect) {
        fail(r, b.text(), mass.str(), expect.str());
        return false;
      }
    }
  }
  return true;
}

Report check_term_counts(Report r) {
  if (check_term_counts_one<TreeAlg>(r)) check_term_counts_one<PermAlg>(r);
  return r;
}

Report check_enumeration_counts(Report r) {
  std::ostringstream counts;
  counts << "[";
  long long factorial = 1;
  for (int n = 0; n <= r.max_degree; ++n) {
    if (n > 0) factorial *= n;
    ++r.instances;
    size_t trees = enumerate_trees(n).size();
    size_t perms = enumerate_perms(n).size();
    if (n > 0) counts << ",";
    counts << trees;
    if (trees != static_cast<size_t>(factorial) ||
        perms != static_cast<size_t>(factorial)) {
      fail(r, "degree " + std::to_string(n),
           std::to_string(trees) + " trees, " + std::to_string(perms) +
               " perms",
           std::to_string(factorial));
      return r;
    }
  }
  counts << "]";
  r.detail = counts.str();
  return r;
}

}  // namespace

const std::vector<Law>& all_laws() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> v;
    for (const auto& [id, law] : law_table()) v.push_back(law);
    return v;
  }();
  return laws;
}

std::string law_id(Law law) {
  for (const auto& [id, l] : law_table()) {
    if (l == law) return id;
  }
  throw InvariantError("unknown law");
}

Law parse_law(const std::string& id) {
  auto it = law_table().find(id);
  if (it == law_table().end()) throw InvariantError("unknown law '" + id + "'");
  return it->second;
}

int default_max_degree(Law law) {
  switch (law) {
    case Law::AssocTree:
    case Law::AssocPerm:
    case Law::CompatTree:
    case Law::CompatPerm:
    case Law::AntipodeTree:
    case Law::AntipodePerm:
      return 5;
    case Law::EnumerationCounts:
      return 7;
    default:
      return 6;
  }
}

Report verify(Law law, int max_degree) {
  if (max_degree < 0 || max_degree > kMaxVerifyDegree)
    throw InvariantError("max degree " + std::to_string(max_degree) +
                         " exceeds verification cap " +
                         std::to_string(kMaxVerifyDegree));
  Report r;
  r.law = law_id(law);
  r.max_degree = max_degree;
  r.passed = true;
  switch (law) {
    case Law::AssocTree: return check_assoc<TreeAlg>(std::move(r));
    case Law::AssocPerm: return check_assoc<PermAlg>(std::move(r));
    case Law::CoassocTree: return check_coassoc<TreeAlg>(std::move(r));
    case Law::CoassocPerm: return check_coassoc<PermAlg>(std::move(r));
    case Law::CounitTree: return check_counit<TreeAlg>(std::move(r));
    case Law::CounitPerm: return check_counit<PermAlg>(std::move(r));
    case Law::CocommTree: return check_cocomm<TreeAlg>(std::move(r));
    case Law::CocommPerm: return check_cocomm<PermAlg>(std::move(r));
    case Law::CompatTree: return check_compat<TreeAlg>(std::move(r));
    case Law::CompatPerm: return check_compat<PermAlg>(std::move(r));
    case Law::AntipodeTree: return check_antipode<TreeAlg>(std::move(r));
    case Law::AntipodePerm: return check_antipode_perm(std::move(r));
    case Law::PhiBijective: return check_phi_bijective(std::move(r));
    case Law::PhiProduct: return check_phi_product(std::move(r));
    case Law::PhiCoproduct: return check_phi_coproduct(std::move(r));
    case Law::TermCounts: return check_term_counts(std::move(r));
    case Law::EnumerationCounts: return check_enumeration_counts(std::move(r));
  }
  throw InvariantError("unknown law");
}

namespace {

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["law"] = r.law;
  j["max_degree"] = r.max_degree;
  j["instances"] = r.instances;
  j["passed"] = r.passed;
  if (r.counterexample) {
    j["counterexample"] = {{"inputs", r.counterexample->inputs},
                           {"lhs", r.counterexample->lhs},
                           {"rhs", r.counterexample->rhs}};
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace

std::string report_json(const Report& report) {
  return report_to_json(report).dump();
}

std::string reports_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : reports) j.push_back(report_to_json(r));
  return j.dump();
}

std::string report_line(const Report& report) {
  std::ostringstream os;
  os << (report.passed ? "PASS" : "FAIL") << "  ";
  os.width(20);
  os << std::left << report.law;
  os << "  degree<=" << report.max_degree << "  instances="
     << report.instances;
  if (report.counterexample) {
    os << "\n      inputs: " << report.counterexample->inputs
       << "\n      lhs: " << report.counterexample->lhs
       << "\n      rhs: " << report.counterexample->rhs;
  }
  return os.str();
}

}  // namespace treeperm
