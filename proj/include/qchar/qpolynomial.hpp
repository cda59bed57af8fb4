#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qchar/rootdata.hpp"
#include "qchar/ymonomial.hpp"

namespace qchar {

using Coeff = boost::multiprecision::cpp_int;

struct PositiveCoefficients {
  static constexpr bool allow_negative = false;
};
struct SignedCoefficients {
  static constexpr bool allow_negative = true;
};

/// Finitely supported integer combination of Y-monomials, canonically ordered.
/// With PositiveCoefficients every stored coefficient is > 0 (q-characters);
/// with SignedCoefficients any nonzero coefficient is allowed.
template <class Policy>
class MonomialSum {
 public:
  using Terms = std::map<YMonomial, Coeff>;

  MonomialSum() = default;
  explicit MonomialSum(const YMonomial& m, Coeff c = 1) { add(m, std::move(c)); }

  static MonomialSum one() { return MonomialSum(YMonomial{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const YMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  bool contains(const YMonomial& m) const { return terms_.count(m) != 0; }

  void add(const YMonomial& m, const Coeff& c) {
    if (c == 0) return;
    if constexpr (!Policy::allow_negative) {
      if (c < 0) throw std::invalid_argument("negative coefficient added to a q-character");
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Sum of all coefficients (the dimension, for a q-character).
  Coeff total() const {
    Coeff s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  MonomialSum shifted(int delta) const {
    MonomialSum out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.shifted(delta), c);
    return out;
  }

  MonomialSum times(const YMonomial& mono) const {
    MonomialSum out;
    for (const auto& [m, c] : terms_) out.add(m * mono, c);
    return out;
  }

  MonomialSum& operator+=(const MonomialSum& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  friend MonomialSum operator+(MonomialSum a, const MonomialSum& b) { return a += b; }

  friend MonomialSum operator*(const MonomialSum& a, const MonomialSum& b) {
    MonomialSum out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
    return out;
  }

  friend bool operator==(const MonomialSum&, const MonomialSum&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      first = false;
      Coeff a = c < 0 ? Coeff(-c) : c;
      if (a != 1) s += a.str() + "*";
      s += m.is_one() ? "1" : "[" + m.to_string() + "]";
    }
    return s;
  }

 private:
  Terms terms_;
};

using QCharacter = MonomialSum<PositiveCoefficients>;
using SignedPoly = MonomialSum<SignedCoefficients>;

inline SignedPoly to_signed(const QCharacter& p) {
  SignedPoly out;
  for (const auto& [m, c] : p.terms()) out.add(m, c);
  return out;
}

inline SignedPoly operator-(const SignedPoly& p) {
  SignedPoly out;
  for (const auto& [m, c] : p.terms()) out.add(m, -c);
  return out;
}

inline SignedPoly operator-(const SignedPoly& a, const SignedPoly& b) { return a + (-b); }

inline QCharacter multiply(const QCharacter& p, const QCharacter& q) { return p * q; }

inline std::vector<std::pair<YMonomial, Coeff>> dominant_monomials(const QCharacter& p) {
  std::vector<std::pair<YMonomial, Coeff>> out;
  for (const auto& [m, c] : p.terms())
    if (is_dominant(m)) out.emplace_back(m, c);
  return out;
}

namespace detail {

template <bool Highest>
std::vector<std::pair<YMonomial, Coeff>> extremal_terms(const RootData& rd, const QCharacter& p) {
  std::map<Weight, std::vector<std::pair<YMonomial, Coeff>>> by_weight;
  for (const auto& [m, c] : p.terms()) by_weight[weight(rd, m)].emplace_back(m, c);
  std::vector<std::pair<YMonomial, Coeff>> out;
  for (const auto& [w, terms] : by_weight) {
    bool extremal = true;
    for (const auto& [v, unused] : by_weight) {
      if (v == w) continue;
      if (Highest ? weight_geq(rd, v, w) : weight_geq(rd, w, v)) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.insert(out.end(), terms.begin(), terms.end());
  }
  return out;
}

}  // namespace detail

/// Terms whose weight is maximal in the dominance order (all of them, antichains allowed).
inline std::vector<std::pair<YMonomial, Coeff>> highest_terms(const RootData& rd, const QCharacter& p) {
  return detail::extremal_terms<true>(rd, p);
}

inline std::vector<std::pair<YMonomial, Coeff>> lowest_terms(const RootData& rd, const QCharacter& p) {
  return detail::extremal_terms<false>(rd, p);
}

using WeightMultiplicities = std::map<Weight, Coeff>;

/// Ordinary character: each monomial collapses to its weight.
template <class Policy>
WeightMultiplicities specialize_beta(const RootData& rd, const MonomialSum<Policy>& p) {
  WeightMultiplicities out;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = out.try_emplace(weight(rd, m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace qchar
