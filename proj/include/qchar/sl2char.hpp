#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "qchar/qpolynomial.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/ymonomial.hpp"

namespace qchar {

/// Arithmetic progression start, start + step, ..., start + (length-1) step.
struct QString {
  int start;
  int length;

  int end(int step) const { return start + (length - 1) * step; }
  friend bool operator==(const QString&, const QString&) = default;
  friend auto operator<=>(const QString&, const QString&) = default;
};

struct StringSet {
  int step{2};
  std::vector<QString> strings;
};

/// Two strings are in general position if one contains the other or their
/// union is not itself a string (they neither overlap nor touch).
inline bool in_general_position(const QString& a, const QString& b, int step) {
  if (detail::floor_mod(a.start - b.start, step) != 0) return true;
  const bool a_in_b = a.start >= b.start && a.end(step) <= b.end(step);
  const bool b_in_a = b.start >= a.start && b.end(step) <= a.end(step);
  if (a_in_b || b_in_a) return true;
  // union is a string iff the gap between them is at most one step
  return a.end(step) + step < b.start || b.end(step) + step < a.start;
}

inline bool pairwise_general_position(const StringSet& s) {
  for (std::size_t i = 0; i < s.strings.size(); ++i)
    for (std::size_t j = i + 1; j < s.strings.size(); ++j)
      if (!in_general_position(s.strings[i], s.strings[j], s.step)) return false;
  return true;
}

/// Splits a multiset of shifts into strings of the given step in pairwise
/// general position: repeatedly take the smallest remaining shift and extend
/// it as far as the remaining points allow.
inline StringSet string_decompose(const std::vector<int>& shifts, int step) {
  if (step <= 0) throw std::invalid_argument("string step must be positive");
  std::map<int, int> remaining;
  for (int s : shifts) ++remaining[s];
  StringSet out{step, {}};
  while (!remaining.empty()) {
    const int start = remaining.begin()->first;
    int length = 0;
    for (int p = start;; p += step) {
      auto it = remaining.find(p);
      if (it == remaining.end()) break;
      if (--it->second == 0) remaining.erase(it);
      ++length;
    }
    out.strings.push_back(QString{start, length});
  }
  if (!pairwise_general_position(out)) throw std::logic_error("string decomposition not in general position");
  return out;
}

/// Terms of a rank-1 character written as m_bar * prod A_{i,c}^{-1}: each key
/// is the sorted list of A-shifts c, each value the multiplicity.
using Sl2Expansion = std::map<std::vector<int>, Coeff>;

/// A-shift lists of the k+1 terms of the string (start, k) at node i. Term l
/// lowers the last l points: Y_{p} -> Y_{p+2r}^{-1}, i.e. multiplies by A_{i,p+r}^{-1}.
inline Sl2Expansion string_expansion(int start, int k, int r) {
  Sl2Expansion out;
  for (int l = 0; l <= k; ++l) {
    std::vector<int> shifts;
    for (int j = k - l; j < k; ++j) shifts.push_back(start + 2 * r * j + r);
    out.emplace(std::move(shifts), 1);
  }
  return out;
}

inline Sl2Expansion multiply_expansions(const Sl2Expansion& a, const Sl2Expansion& b) {
  Sl2Expansion out;
  for (const auto& [sa, ca] : a) {
    for (const auto& [sb, cb] : b) {
      std::vector<int> merged;
      merged.reserve(sa.size() + sb.size());
      std::merge(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(merged));
      out[std::move(merged)] += ca * cb;
    }
  }
  return out;
}

/// Expansion of the irreducible rank-1 character with highest monomial
/// prod_n Y_{i,n}^{mult(n)}, given as the multiset of shifts.
inline Sl2Expansion sl2_expansion(const std::vector<int>& shifts, int r) {
  Sl2Expansion out{{{}, 1}};
  for (const auto& s : string_decompose(shifts, 2 * r).strings)
    out = multiply_expansions(out, string_expansion(s.start, s.length, r));
  return out;
}

/// The rank-1 character of one string, in the variables Y_{i,.}.
inline QCharacter string_character(Node i, int start, int k, const RootData& rd) {
  if (k < 1) throw std::invalid_argument("string length must be positive");
  const int r = rd.r(i);
  YMonomial top;
  for (int j = 0; j < k; ++j) top.multiply_factor(i, start + 2 * r * j, 1);
  QCharacter out;
  for (const auto& [shifts, c] : string_expansion(start, k, r)) {
    YMonomial m = top;
    for (int a : shifts) {
      m.multiply_factor(i, a - r, -1);
      m.multiply_factor(i, a + r, -1);
    }
    out.add(m, c);
  }
  return out;
}

/// Character of the irreducible U_{q_i}(sl2-hat) module with highest monomial
/// m_bar, which must be a product of positive powers of Y_{i,.}.
inline QCharacter irreducible_sl2_character(Node i, const YMonomial& m_bar, const RootData& rd) {
  std::vector<int> shifts;
  for (const auto& f : m_bar.factors()) {
    if (f.node != i || f.exponent < 0)
      throw std::invalid_argument("rank-1 highest monomial must be i-dominant in node " + std::to_string(i) +
                                  " only: " + m_bar.to_string());
    shifts.insert(shifts.end(), f.exponent, f.shift);
  }
  const int r = rd.r(i);
  QCharacter out;
  for (const auto& [a_shifts, c] : sl2_expansion(shifts, r)) {
    YMonomial m = m_bar;
    for (int a : a_shifts) {
      m.multiply_factor(i, a - r, -1);
      m.multiply_factor(i, a + r, -1);
    }
    out.add(m, c);
  }
  return out;
}

}  // namespace qchar
