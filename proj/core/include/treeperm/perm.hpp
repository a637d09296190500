#ifndef TREEPERM_PERM_HPP
#define TREEPERM_PERM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treeperm/tree.hpp"

namespace treeperm {

/// One cycle of a permutation, stored with distinct positive entries rotated
/// so the first entry is the minimum.
class Cycle {
public:
  explicit Cycle(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int min() const { return entries_.front(); }
  size_t length() const { return entries_.size(); }

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const Cycle& a, const Cycle& b) {
    return a.entries_ < b.entries_;
  }

private:
  std::vector<int> entries_;
};

/// Permutation of {1..n} stored as disjoint cycles with explicit fixed
/// points, cycles sorted by increasing minimum.  The canonical rendering
/// ("e" for degree 0) is cached.
class CyclePerm {
public:
  /// The identity of degree 0.
  CyclePerm();

  /// Cycle supports must partition {1..degree} exactly.
  CyclePerm(int degree, std::vector<Cycle> cycles);

  /// Normalizes an arbitrary disjoint cycle list: sorts cycles, infers the
  /// degree as the maximum label present (or takes the explicit degree, which
  /// must cover all labels), and inserts missing labels as 1-cycles.
  static CyclePerm from_cycles(std::vector<Cycle> cycles,
                               std::optional<int> degree = std::nullopt);

  int degree() const { return degree_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  size_t cycle_count() const { return cycles_.size(); }
  const std::string& text() const { return text_; }

  friend bool operator==(const CyclePerm& a, const CyclePerm& b) {
    return a.text_ == b.text_;
  }
  friend bool operator!=(const CyclePerm& a, const CyclePerm& b) {
    return !(a == b);
  }
  /// Structural order: cycle lists lexicographically, cycles by their entry
  /// sequences.  Puts (1)(2) before (1 2).
  friend bool operator<(const CyclePerm& a, const CyclePerm& b);

private:
  int degree_ = 0;
  std::vector<Cycle> cycles_;
  std::string text_;
};

/// The cycles of p ordered by strictly decreasing first entries (each cycle
/// already starts with its minimum).  A view; p is unchanged.
std::vector<Cycle> standard_order(const CyclePerm& p);

/// Order-preserving relabeling of a disjoint cycle list onto {1..k}: if the
/// labels in order are l_1 < ... < l_k, each l_j becomes j.
CyclePerm std_perm(const std::vector<Cycle>& cycles);

/// Every entry i becomes m+i; cycle structure preserved.
std::vector<Cycle> shift_perm(const CyclePerm& p, int m);

/// All n! permutations of degree n, sorted by canonical text.  n <= 9.
std::vector<CyclePerm> enumerate_perms(int n);

std::string render_perm(const CyclePerm& p);

/// Parses the grammar  perm := "e" | cycle+ ; cycle := "(" INT (SP INT)* ")".
/// Cycles are rotated min-first and sorted; the degree defaults to the
/// maximum label present and missing labels become explicit fixed points.
CyclePerm parse_perm(std::string_view text,
                     std::optional<int> degree = std::nullopt);

}  // namespace treeperm

#endif
