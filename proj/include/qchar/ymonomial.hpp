#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qchar/qlaurent.hpp"
#include "qchar/rootdata.hpp"

namespace qchar {

/// One factor X_{node, q^shift}^exponent of a lattice monomial.
struct Factor {
  Node node;
  int shift;
  int exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

struct YTag {
  static constexpr char letter = 'Y';
};
struct ZTag {
  static constexpr char letter = 'Z';
};

/// Element of the free abelian group on variables X_{i,q^n}, kept in reduced
/// form: factors sorted by (node, shift), no zero exponents. Tag selects the
/// alphabet (Y for q-characters, Z for the restriction alphabet).
template <class Tag>
class LatticeMonomial {
 public:
  LatticeMonomial() = default;
  LatticeMonomial(std::initializer_list<Factor> factors) {
    for (const auto& f : factors) multiply_factor(f.node, f.shift, f.exponent);
  }

  static LatticeMonomial variable(Node i, int shift, int exponent = 1) {
    LatticeMonomial m;
    m.multiply_factor(i, shift, exponent);
    return m;
  }

  /// Builds from arbitrary (possibly unsorted, repeated) factors.
  static LatticeMonomial from_factors(const std::vector<Factor>& factors) {
    LatticeMonomial m;
    for (const auto& f : factors) m.multiply_factor(f.node, f.shift, f.exponent);
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  int exponent(Node i, int shift) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair{i, shift},
                               [](const Factor& f, const std::pair<int, int>& k) {
                                 return std::pair{f.node, f.shift} < k;
                               });
    return it != factors_.end() && it->node == i && it->shift == shift ? it->exponent : 0;
  }

  void multiply_factor(Node i, int shift, int exponent) {
    if (exponent == 0) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair{i, shift},
                               [](const Factor& f, const std::pair<int, int>& k) {
                                 return std::pair{f.node, f.shift} < k;
                               });
    if (it != factors_.end() && it->node == i && it->shift == shift) {
      it->exponent = detail::checked_add(it->exponent, exponent);
      if (it->exponent == 0) factors_.erase(it);
    } else {
      factors_.insert(it, Factor{i, shift, exponent});
    }
  }

  LatticeMonomial inverse() const {
    LatticeMonomial m = *this;
    for (auto& f : m.factors_) f.exponent = detail::checked_mul(f.exponent, -1);
    return m;
  }

  LatticeMonomial pow(int k) const {
    if (k == 0) return {};
    LatticeMonomial m = *this;
    for (auto& f : m.factors_) f.exponent = detail::checked_mul(f.exponent, k);
    return m;
  }

  /// Relabels every X_{i,q^n} to X_{i,q^{n+delta}}.
  LatticeMonomial shifted(int delta) const {
    LatticeMonomial m = *this;
    for (auto& f : m.factors_) f.shift = detail::checked_add(f.shift, delta);
    return m;
  }

  friend LatticeMonomial operator*(const LatticeMonomial& a, const LatticeMonomial& b) {
    LatticeMonomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
      if (ib == b.factors_.end() || (ia != a.factors_.end() && std::pair{ia->node, ia->shift} <
                                                                    std::pair{ib->node, ib->shift})) {
        out.factors_.push_back(*ia++);
      } else if (ia == a.factors_.end() || std::pair{ib->node, ib->shift} < std::pair{ia->node, ia->shift}) {
        out.factors_.push_back(*ib++);
      } else {
        int e = detail::checked_add(ia->exponent, ib->exponent);
        if (e != 0) out.factors_.push_back(Factor{ia->node, ia->shift, e});
        ++ia;
        ++ib;
      }
    }
    return out;
  }
  LatticeMonomial& operator*=(const LatticeMonomial& o) { return *this = *this * o; }
  friend LatticeMonomial operator/(const LatticeMonomial& a, const LatticeMonomial& b) { return a * b.inverse(); }

  friend bool operator==(const LatticeMonomial&, const LatticeMonomial&) = default;
  friend auto operator<=>(const LatticeMonomial& a, const LatticeMonomial& b) { return a.factors_ <=> b.factors_; }

  /// Canonical text form, e.g. "Y{1,0}^1 * Y{2,3}^-1"; "1" for the identity.
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      if (k) os << " * ";
      os << Tag::letter << '{' << factors_[k].node << ',' << factors_[k].shift << "}^" << factors_[k].exponent;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticeMonomial& m) { return os << m.to_string(); }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& f : factors_) {
      for (int v : {f.node, f.shift, f.exponent}) {
        h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
    }
    return h;
  }

 private:
  std::vector<Factor> factors_;
};

using YMonomial = LatticeMonomial<YTag>;
using ZPart = LatticeMonomial<ZTag>;

/// Weight in fundamental-weight coordinates.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, 0) {}
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }
  std::size_t size() const { return coords.size(); }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = detail::checked_add(coords[i], o.coords[i]);
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = detail::checked_add(coords[i], -o.coords[i]);
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
  }
};

/// Fundamental weight omega_i.
inline Weight fundamental_weight(const RootData& rd, Node i) {
  Weight w(rd.rank());
  w[i - 1] = 1;
  return w;
}

/// Simple root alpha_i = sum_j C_ji omega_j.
inline Weight simple_root(const RootData& rd, Node i) {
  Weight w(rd.rank());
  for (Node j = 1; j <= rd.rank(); ++j) w[j - 1] = rd.cartan(j, i);
  return w;
}

inline Weight weight(const RootData& rd, const YMonomial& m) {
  Weight w(rd.rank());
  for (const auto& f : m.factors()) {
    if (f.node < 1 || f.node > rd.rank()) throw std::out_of_range("monomial node outside the Dynkin diagram");
    w[f.node - 1] = detail::checked_add(w[f.node - 1], f.exponent);
  }
  return w;
}

/// Coefficients c with lambda - mu = sum_i c_i alpha_i, if they are all integers.
inline std::optional<std::vector<int>> root_coordinates(const RootData& rd, const Weight& diff) {
  const auto& inv = rd.cartan_inverse();
  std::vector<int> c(rd.rank());
  for (int i = 0; i < rd.rank(); ++i) {
    Rational s(0);
    for (int j = 0; j < rd.rank(); ++j) s += inv[i][j] * Rational(diff[j]);
    if (s.denominator() != 1) return std::nullopt;
    c[i] = static_cast<int>(s.numerator());
  }
  return c;
}

/// lambda >= mu in the dominance order: lambda - mu is a non-negative integral
/// combination of simple roots.
inline bool weight_geq(const RootData& rd, const Weight& lambda, const Weight& mu) {
  auto c = root_coordinates(rd, lambda - mu);
  return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
}

/// A_{i,q^n} = Y_{i,n+r_i} Y_{i,n-r_i} times the inverse Y factors of the
/// neighbours j, placed according to C_ji.
inline YMonomial a_monomial(const RootData& rd, Node i, int n) {
  if (i < 1 || i > rd.rank()) throw std::out_of_range("node out of range");
  YMonomial m;
  m.multiply_factor(i, n + rd.r(i), 1);
  m.multiply_factor(i, n - rd.r(i), 1);
  for (Node j = 1; j <= rd.rank(); ++j) {
    if (j == i) continue;
    switch (rd.cartan(j, i)) {
      case 0: break;
      case -1: m.multiply_factor(j, n, -1); break;
      case -2:
        m.multiply_factor(j, n + 1, -1);
        m.multiply_factor(j, n - 1, -1);
        break;
      case -3:
        m.multiply_factor(j, n + 2, -1);
        m.multiply_factor(j, n, -1);
        m.multiply_factor(j, n - 2, -1);
        break;
      default: throw std::logic_error("unsupported Cartan entry");
    }
  }
  return m;
}

inline bool is_dominant(const YMonomial& m) {
  return std::all_of(m.factors().begin(), m.factors().end(), [](const Factor& f) { return f.exponent > 0; });
}

inline bool is_antidominant(const YMonomial& m) {
  return std::all_of(m.factors().begin(), m.factors().end(), [](const Factor& f) { return f.exponent < 0; });
}

inline bool is_i_dominant(const YMonomial& m, Node i) {
  return std::none_of(m.factors().begin(), m.factors().end(),
                      [i](const Factor& f) { return f.node == i && f.exponent < 0; });
}

/// All factors at the maximal shift have negative exponents. The identity
/// monomial is not right negative.
inline bool is_right_negative(const YMonomial& m) {
  if (m.is_one()) return false;
  int top = m.factors().front().shift;
  for (const auto& f : m.factors()) top = std::max(top, f.shift);
  return std::all_of(m.factors().begin(), m.factors().end(),
                     [top](const Factor& f) { return f.shift != top || f.exponent < 0; });
}

inline int max_shift(const YMonomial& m) {
  if (m.is_one()) throw std::domain_error("identity monomial has no shifts");
  int top = m.factors().front().shift;
  for (const auto& f : m.factors()) top = std::max(top, f.shift);
  return top;
}

inline int min_shift(const YMonomial& m) {
  if (m.is_one()) throw std::domain_error("identity monomial has no shifts");
  int low = m.factors().front().shift;
  for (const auto& f : m.factors()) low = std::min(low, f.shift);
  return low;
}

/// One A_{node,q^shift}^{-1} factor with its multiplicity.
struct AFactor {
  Node node;
  int shift;
  int count;

  friend bool operator==(const AFactor&, const AFactor&) = default;
  friend auto operator<=>(const AFactor&, const AFactor&) = default;
};

/// Multiset {(i_k, c_k)} in canonical (node, shift) order.
using AFactorization = std::vector<AFactor>;

inline YMonomial a_product(const RootData& rd, const AFactorization& fs, int sign = 1) {
  YMonomial out;
  for (const auto& f : fs) out *= a_monomial(rd, f.node, f.shift).pow(sign * f.count);
  return out;
}

/// Solves m = m_plus * prod A_{i_k,c_k}^{-1}. The A-exponent generating
/// functions satisfy C(q) a = u, where u encodes m_plus / m, so
/// a = C~'(q) u / d(q); failure if that is not an integral non-negative solution.
inline std::optional<AFactorization> factor_over_A(const RootData& rd, const YMonomial& m_plus, const YMonomial& m) {
  const YMonomial quotient = m_plus / m;
  const int l = rd.rank();
  std::vector<QLaurent> u(l);
  for (const auto& f : quotient.factors()) {
    if (f.node < 1 || f.node > l) return std::nullopt;
    u[f.node - 1].add_term(f.shift, f.exponent);
  }
  AFactorization out;
  for (Node i = 1; i <= l; ++i) {
    QLaurent num;
    for (Node j = 1; j <= l; ++j)
      if (!u[j - 1].is_zero()) num += rd.c_tilde_prime(i, j) * u[j - 1];
    auto a = divide_exact(num, rd.d_poly());
    if (!a) return std::nullopt;
    for (auto [shift, count] : a->terms()) {
      if (count < 0) return std::nullopt;
      out.push_back(AFactor{i, shift, static_cast<int>(count)});
    }
  }
  if (m_plus * a_product(rd, out, -1) != m) return std::nullopt;
  return out;
}

}  // namespace qchar

template <class Tag>
struct std::hash<qchar::LatticeMonomial<Tag>> {
  std::size_t operator()(const qchar::LatticeMonomial<Tag>& m) const { return m.hash(); }
};
