#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qchar {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

inline int checked_add(int a, int b) {
  int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("exponent overflow");
  return out;
}

inline int checked_mul(int a, int b) {
  int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("exponent overflow");
  return out;
}

/// Floor modulus: result in [0, m) for m > 0.
inline int floor_mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// Laurent polynomial in q with overflow-checked integer coefficients.
/// Zero coefficients are never stored.
class QLaurent {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  QLaurent() = default;
  QLaurent(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_[0] = constant;
  }

  static QLaurent monomial(int exponent, Coeff coeff = 1) {
    QLaurent p;
    if (coeff != 0) p.terms_[exponent] = coeff;
    return p;
  }

  static QLaurent from_terms(const Terms& terms) {
    QLaurent p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
  }

  /// Quantum integer [n]_q = (q^n - q^-n)/(q - q^-1).
  static QLaurent quantum_int(int n) {
    QLaurent p;
    int sign = n < 0 ? -1 : 1;
    int m = n < 0 ? -n : n;
    for (int k = 0; k < m; ++k) p.add_term(m - 1 - 2 * k, sign);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  int max_exponent() const {
    if (is_zero()) throw std::domain_error("degree of zero Laurent polynomial");
    return terms_.rbegin()->first;
  }
  int min_exponent() const {
    if (is_zero()) throw std::domain_error("degree of zero Laurent polynomial");
    return terms_.begin()->first;
  }

  /// Invariant under q -> q^-1.
  bool is_palindromic() const {
    for (auto [e, c] : terms_)
      if (coeff(-e) != c) return false;
    return true;
  }

  bool has_nonnegative_coefficients() const {
    for (auto [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// Value at q = 1.
  Coeff at_one() const {
    Coeff s = 0;
    for (auto [e, c] : terms_) s = detail::checked_add(s, c);
    return s;
  }

  void add_term(int exponent, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  QLaurent& operator+=(const QLaurent& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (auto [e, c] : o.terms_) add_term(e, detail::checked_mul(c, Coeff{-1}));
    return *this;
  }

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator-(const QLaurent& a) { return QLaurent{} - a; }

  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent out;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) out.add_term(detail::checked_add(ea, eb), detail::checked_mul(ca, cb));
    return out;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  friend bool operator==(const QLaurent&, const QLaurent&) = default;

  /// Exact quotient p / d, or nullopt if d does not divide p in Z[q, q^-1].
  friend std::optional<QLaurent> divide_exact(const QLaurent& p, const QLaurent& d) {
    if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (p.is_zero()) return QLaurent{};
    const int floor = p.min_exponent() - d.min_exponent();
    const int d_top = d.max_exponent();
    const Coeff d_lead = d.terms_.rbegin()->second;
    QLaurent rem = p;
    QLaurent quot;
    while (!rem.is_zero()) {
      auto [top, c] = *rem.terms_.rbegin();
      const int e = top - d_top;
      if (e < floor || c % d_lead != 0) return std::nullopt;
      const Coeff k = c / d_lead;
      quot.add_term(e, k);
      rem -= monomial(e, k) * d;
    }
    return quot;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      Coeff a = c < 0 ? -c : c;
      if (e == 0) {
        os << a;
        continue;
      }
      if (a != 1) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const QLaurent& p) { return os << p.to_string(); }

 private:
  Terms terms_;
};

}  // namespace qchar
