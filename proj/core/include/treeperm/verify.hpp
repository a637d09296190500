#ifndef TREEPERM_VERIFY_HPP
#define TREEPERM_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace treeperm {

enum class Law {
  AssocTree,
  AssocPerm,
  CoassocTree,
  CoassocPerm,
  CounitTree,
  CounitPerm,
  CocommTree,
  CocommPerm,
  CompatTree,
  CompatPerm,
  AntipodeTree,
  AntipodePerm,
  PhiBijective,
  PhiProduct,
  PhiCoproduct,
  TermCounts,
  EnumerationCounts,
};

/// All law identifiers, in a fixed order.
const std::vector<Law>& all_laws();

/// "assoc-tree", "phi-product", ...  Throws on an unknown identifier.
std::string law_id(Law law);
Law parse_law(const std::string& id);

/// Default degree bound per law, chosen so every suite finishes in seconds:
/// total degree 5 for the ternary (associativity) laws and for the antipode
/// and compatibility suites, 6 or 7 elsewhere.
int default_max_degree(Law law);

/// Hard cap on the degree argument accepted by verify().
inline constexpr int kMaxVerifyDegree = 7;

struct Counterexample {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string law;
  int max_degree = 0;
  long long instances = 0;
  bool passed = false;
  std::optional<Counterexample> counterexample;
  std::string detail;  // optional extra, e.g. enumeration counts
};

/// Exhaustively checks one law up to max_degree.  All comparisons are exact;
/// on failure the report carries the first counterexample with both sides
/// rendered canonically.  Deterministic: identical arguments give identical
/// reports.
Report verify(Law law, int max_degree);

/// Serialized JSON forms of a report (deterministic key and element order).
std::string report_json(const Report& report);
std::string reports_json(const std::vector<Report>& reports);

/// One fixed-width human-readable line per report.
std::string report_line(const Report& report);

}  // namespace treeperm

#endif
