#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "treeperm/iso.hpp"
#include "treeperm/perm_hopf.hpp"
#include "treeperm/tree_hopf.hpp"
#include "treeperm/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace treeperm;

template <class B>
ordered_json lincomb_json(const LinComb<B>& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [b, c] : x.terms())
    terms.push_back({{"coeff", c.str()}, {"basis", b.text()}});
  return ordered_json{{"terms", terms}};
}

template <class B>
ordered_json tensor_lincomb_json(const LinComb<Tensor<B>>& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [t, c] : x.terms())
    terms.push_back({{"coeff", c.str()},
                     {"left", t.left().text()},
                     {"right", t.right().text()}});
  return ordered_json{{"terms", terms}};
}

template <class X, class JsonFn>
void emit(const std::string& format, const X& x, JsonFn to_json) {
  if (format == "json") {
    std::cout << to_json(x).dump() << "\n";
  } else {
    std::cout << x.str() << "\n";
  }
}

void require_kind(const std::string& kind) {
  if (kind != "tree" && kind != "perm")
    throw ParseError("expected 'tree' or 'perm', got '" + kind + "'");
}

std::optional<int> opt_degree(int degree) {
  if (degree < 0) return std::nullopt;
  return degree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf algebra of standard heap ordered trees, the isomorphic "
               "bialgebra of permutations in cycle form, and an exhaustive "
               "axiom verifier"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string kind, arg_a, arg_b, law = "all";
  int degree = -1, enum_n = 0, max_degree = -1;
  bool count_only = false, verify_json = false;

  auto* mul = app.add_subcommand("mul", "Product of two basis elements");
  mul->add_option("kind", kind, "tree or perm")->required();
  mul->add_option("a", arg_a, "first factor")->required();
  mul->add_option("b", arg_b, "second factor")->required();
  mul->add_option("--degree", degree, "explicit degree for perm literals");

  auto* comul = app.add_subcommand("comul", "Coproduct of a basis element");
  comul->add_option("kind", kind)->required();
  comul->add_option("x", arg_a)->required();
  comul->add_option("--degree", degree);

  auto* antipode = app.add_subcommand("antipode", "Antipode of a basis element");
  antipode->add_option("kind", kind)->required();
  antipode->add_option("x", arg_a)->required();
  antipode->add_option("--degree", degree);

  auto* phi_cmd = app.add_subcommand("phi", "Image of a standard tree");
  phi_cmd->add_option("t", arg_a)->required();

  auto* phi_inv_cmd = app.add_subcommand("phi-inv", "Image of a permutation");
  phi_inv_cmd->add_option("p", arg_a)->required();
  phi_inv_cmd->add_option("--degree", degree);

  auto* enumerate = app.add_subcommand("enumerate", "Basis of degree n");
  enumerate->add_option("kind", kind)->required();
  enumerate->add_option("--n", enum_n, "degree")->required();
  enumerate->add_flag("--count-only", count_only, "print only the count");

  auto* verify_cmd = app.add_subcommand("verify", "Check algebraic laws");
  verify_cmd->add_option("--law", law, "law identifier or 'all'");
  verify_cmd->add_option("--max-degree", max_degree,
                         "degree bound (default: per-law)");
  verify_cmd->add_flag("--json", verify_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mul) {
      require_kind(kind);
      if (kind == "tree") {
        emit(format,
             tree_product(parse_standard_tree(arg_a),
                          parse_standard_tree(arg_b)),
             lincomb_json<StandardTree>);
      } else {
        emit(format,
             heap_product(parse_perm(arg_a, opt_degree(degree)),
                          parse_perm(arg_b, opt_degree(degree))),
             lincomb_json<CyclePerm>);
      }
    } else if (*comul) {
      require_kind(kind);
      if (kind == "tree") {
        emit(format, tree_coproduct(parse_standard_tree(arg_a)),
             tensor_lincomb_json<StandardTree>);
      } else {
        emit(format, perm_coproduct(parse_perm(arg_a, opt_degree(degree))),
             tensor_lincomb_json<CyclePerm>);
      }
    } else if (*antipode) {
      require_kind(kind);
      if (kind == "tree") {
        emit(format, tree_antipode(parse_standard_tree(arg_a)),
             lincomb_json<StandardTree>);
      } else {
        emit(format, perm_antipode(parse_perm(arg_a, opt_degree(degree))),
             lincomb_json<CyclePerm>);
      }
    } else if (*phi_cmd) {
      CyclePerm p = phi(parse_standard_tree(arg_a));
      if (format == "json") {
        std::cout << ordered_json{{"result", p.text()}}.dump() << "\n";
      } else {
        std::cout << p.text() << "\n";
      }
    } else if (*phi_inv_cmd) {
      StandardTree t = phi_inv(parse_perm(arg_a, opt_degree(degree)));
      if (format == "json") {
        std::cout << ordered_json{{"result", t.text()}}.dump() << "\n";
      } else {
        std::cout << t.text() << "\n";
      }
    } else if (*enumerate) {
      require_kind(kind);
      std::vector<std::string> texts;
      if (kind == "tree") {
        for (const auto& t : enumerate_trees(enum_n)) texts.push_back(t.text());
      } else {
        for (const auto& p : enumerate_perms(enum_n)) texts.push_back(p.text());
      }
      if (format == "json") {
        ordered_json j{{"n", enum_n}, {"count", texts.size()}};
        if (!count_only) j["elements"] = texts;
        std::cout << j.dump() << "\n";
      } else if (count_only) {
        std::cout << texts.size() << "\n";
      } else {
        for (const auto& s : texts) std::cout << s << "\n";
      }
    } else if (*verify_cmd) {
      std::vector<Law> laws;
      if (law == "all") {
        laws = all_laws();
      } else {
        laws.push_back(parse_law(law));
      }
      std::vector<Report> reports;
      bool all_passed = true;
      for (Law l : laws) {
        int d = max_degree >= 0 ? max_degree : default_max_degree(l);
        reports.push_back(verify(l, d));
        all_passed = all_passed && reports.back().passed;
      }
      if (verify_json || format == "json") {
        std::cout << reports_json(reports) << "\n";
      } else {
        for (const auto& r : reports) std::cout << report_line(r) << "\n";
      }
      return all_passed ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
