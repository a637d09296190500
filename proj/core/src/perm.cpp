#include "treeperm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace treeperm {

Cycle::Cycle(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvariantError("cycle must be nonempty");
  for (int e : entries_) {
    if (e <= 0)
      throw InvariantError("cycle entry must be positive, got " +
                           std::to_string(e));
  }
  std::set<int> distinct(entries_.begin(), entries_.end());
  if (distinct.size() != entries_.size())
    throw InvariantError("duplicate entry within a cycle");
  auto m = std::min_element(entries_.begin(), entries_.end());
  std::rotate(entries_.begin(), m, entries_.end());
}

namespace {

std::string build_perm_text(const std::vector<Cycle>& cycles) {
  if (cycles.empty()) return "e";
  std::string s;
  for (const auto& c : cycles) {
    s += '(';
    for (size_t i = 0; i < c.entries().size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c.entries()[i]);
    }
    s += ')';
  }
  return s;
}

}  // namespace

CyclePerm::CyclePerm() : text_("e") {}

CyclePerm::CyclePerm(int degree, std::vector<Cycle> cycles)
    : degree_(degree), cycles_(std::move(cycles)) {
  std::sort(cycles_.begin(), cycles_.end(),
            [](const Cycle& a, const Cycle& b) { return a.min() < b.min(); });
  std::set<int> support;
  for (const auto& c : cycles_) {
    for (int e : c.entries()) {
      if (!support.insert(e).second)
        throw InvariantError("duplicate label " + std::to_string(e) +
                             " across cycles");
    }
  }
  if (static_cast<int>(support.size()) != degree_ ||
      (!support.empty() && (*support.begin() < 1 || *support.rbegin() > degree_)))
    throw InvariantError("cycle supports must partition 1.." +
                         std::to_string(degree_));
  text_ = build_perm_text(cycles_);
}

bool operator<(const CyclePerm& a, const CyclePerm& b) {
  return std::lexicographical_compare(
      a.cycles().begin(), a.cycles().end(), b.cycles().begin(),
      b.cycles().end(),
      [](const Cycle& x, const Cycle& y) { return x.entries() < y.entries(); });
}

CyclePerm CyclePerm::from_cycles(std::vector<Cycle> cycles,
                                 std::optional<int> degree) {
  std::set<int> support;
  int max = 0;
  for (const auto& c : cycles) {
    for (int e : c.entries()) {
      if (!support.insert(e).second)
        throw InvariantError("duplicate label " + std::to_string(e) +
                             " across cycles");
      max = std::max(max, e);
    }
  }
  int n = degree.value_or(max);
  if (n < max)
    throw InvariantError("explicit degree " + std::to_string(n) +
                         " is below maximum label " + std::to_string(max));
  for (int i = 1; i <= n; ++i) {
    if (!support.count(i)) cycles.push_back(Cycle({i}));
  }
  return CyclePerm(n, std::move(cycles));
}

std::vector<Cycle> standard_order(const CyclePerm& p) {
  std::vector<Cycle> out(p.cycles().rbegin(), p.cycles().rend());
  return out;
}

CyclePerm std_perm(const std::vector<Cycle>& cycles) {
  std::set<int> support;
  for (const auto& c : cycles) {
    for (int e : c.entries()) {
      if (!support.insert(e).second)
        throw InvariantError("duplicate label " + std::to_string(e) +
                             " across cycles");
    }
  }
  std::map<int, int> repl;
  int j = 0;
  for (int l : support) repl[l] = ++j;
  std::vector<Cycle> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) {
    std::vector<int> es;
    es.reserve(c.entries().size());
    for (int e : c.entries()) es.push_back(repl.at(e));
    out.push_back(Cycle(std::move(es)));
  }
  return CyclePerm(static_cast<int>(support.size()), std::move(out));
}

std::vector<Cycle> shift_perm(const CyclePerm& p, int m) {
  std::vector<Cycle> out;
  out.reserve(p.cycles().size());
  for (const auto& c : p.cycles()) {
    std::vector<int> es;
    es.reserve(c.entries().size());
    for (int e : c.entries()) es.push_back(e + m);
    out.push_back(Cycle(std::move(es)));
  }
  return out;
}

namespace {

CyclePerm from_one_line(const std::vector<int>& image) {
  int n = static_cast<int>(image.size());
  std::vector<bool> seen(n + 1, false);
  std::vector<Cycle> cycles;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = image[j - 1];
    }
    cycles.push_back(Cycle(std::move(cyc)));
  }
  return CyclePerm(n, std::move(cycles));
}

}  // namespace

std::vector<CyclePerm> enumerate_perms(int n) {
  if (n < 0) throw InvariantError("degree must be non-negative");
  if (n > kMaxEnumerationDegree)
    throw InvariantError("degree " + std::to_string(n) +
                         " exceeds enumeration cap " +
                         std::to_string(kMaxEnumerationDegree));
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<CyclePerm> out;
  do {
    out.push_back(from_one_line(image));
  } while (std::next_permutation(image.begin(), image.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::string render_perm(const CyclePerm& p) { return p.text(); }

CyclePerm parse_perm(std::string_view text, std::optional<int> degree) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto rest = [&] { return std::string(text.substr(pos)); };

  skip_ws();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_ws();
    if (pos != text.size())
      throw ParseError("unexpected input after 'e' at '" + rest() + "'");
    if (degree.value_or(0) != 0)
      return CyclePerm::from_cycles({}, degree);
    return CyclePerm();
  }

  std::vector<Cycle> cycles;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(')
      throw ParseError("expected '(' at '" + rest() + "'");
    ++pos;
    std::vector<int> entries;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      long v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1000000) throw ParseError("label out of range");
        ++pos;
      }
      if (pos == start)
        throw ParseError("expected integer at '" + rest() + "'");
      if (v == 0) throw ParseError("label 0 is not allowed");
      entries.push_back(static_cast<int>(v));
    }
    if (entries.empty()) throw ParseError("empty cycle '()'");
    cycles.push_back(Cycle(std::move(entries)));
  }
  if (cycles.empty()) throw ParseError("empty permutation input");
  return CyclePerm::from_cycles(std::move(cycles), degree);
}

}  // namespace treeperm
