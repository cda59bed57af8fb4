#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "qchar/qlaurent.hpp"

namespace qchar {

/// Node index of the Dynkin diagram, 1-based (Bourbaki numbering).
using Node = int;

enum class LieType { A, B, C, D, E, F, G };

inline char to_char(LieType t) { return "ABCDEFG"[static_cast<int>(t)]; }

inline LieType parse_lie_type(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return LieType::A;
      case 'B': case 'b': return LieType::B;
      case 'C': case 'c': return LieType::C;
      case 'D': case 'd': return LieType::D;
      case 'E': case 'e': return LieType::E;
      case 'F': case 'f': return LieType::F;
      case 'G': case 'g': return LieType::G;
      default: break;
    }
  }
  throw std::invalid_argument("unknown Lie type '" + s + "'");
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

using Rational = boost::rational<std::int64_t>;

namespace detail {

inline void require_valid_type(LieType t, int rank) {
  bool ok = false;
  switch (t) {
    case LieType::A: ok = rank >= 1; break;
    case LieType::B: ok = rank >= 2; break;
    case LieType::C: ok = rank >= 2; break;
    case LieType::D: ok = rank >= 4; break;
    case LieType::E: ok = rank >= 6 && rank <= 8; break;
    case LieType::F: ok = rank == 4; break;
    case LieType::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument(std::string("invalid simple type ") + to_char(t) + std::to_string(rank) +
                                " (need A>=1, B>=2, C>=2, D>=4, E6-8, F4, G2)");
}

// C_ij = 2(a_i,a_j)/(a_i,a_i), 0-based storage.
inline Matrix<int> cartan_matrix(LieType t, int l) {
  Matrix<int> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
  switch (t) {
    case LieType::A:
      for (int i = 1; i < l; ++i) link(i, i + 1);
      break;
    case LieType::B:  // a_l short
      for (int i = 1; i < l; ++i) link(i, i + 1);
      c[l - 1][l - 2] = -2;
      break;
    case LieType::C:  // a_l long
      for (int i = 1; i < l; ++i) link(i, i + 1);
      c[l - 2][l - 1] = -2;
      break;
    case LieType::D:
      for (int i = 1; i < l - 1; ++i) link(i, i + 1);
      link(l - 2, l);
      break;
    case LieType::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < l; ++i) link(i, i + 1);
      break;
    case LieType::F:  // a1, a2 long
      link(1, 2);
      link(2, 3);
      link(3, 4);
      c[2][1] = -2;
      break;
    case LieType::G:  // a1 short
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

// Minimal d(q) with C(q)^{-1} = C'(q)/d(q), C' non-negative.
inline QLaurent minimal_denominator(LieType t, int l) {
  auto two_term = [](int n) { return QLaurent::monomial(n) + QLaurent::monomial(-n); };
  switch (t) {
    case LieType::A: return QLaurent::quantum_int(l + 1);
    case LieType::B: return two_term(2 * l - 1);
    case LieType::C: return two_term(l + 1);
    case LieType::D: return two_term(1) * two_term(l - 1);
    case LieType::E:
      if (l == 6) return QLaurent::quantum_int(3) * two_term(6);
      if (l == 7) return two_term(1) * two_term(9);
      return two_term(1) * two_term(15);
    case LieType::F: return two_term(9);
    case LieType::G: return two_term(6);
  }
  throw std::logic_error("unreachable");
}

// Fraction-free (Bareiss) determinant over Z[q, q^-1].
inline QLaurent bareiss_determinant(Matrix<QLaurent> m) {
  const std::size_t n = m.size();
  if (n == 0) return QLaurent{1};
  QLaurent prev{1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return QLaurent{};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss step not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = QLaurent{};
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

inline Matrix<QLaurent> minor_of(const Matrix<QLaurent>& m, std::size_t row, std::size_t col) {
  Matrix<QLaurent> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<QLaurent> r;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Immutable per-type data: Cartan matrix, symmetrizers, quantized Cartan
/// matrix and its scaled inverse, dual Coxeter data and the bar involution.
/// All node arguments are 1-based.
class RootData {
 public:
  LieType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, to_char(type_)) + std::to_string(rank_); }

  int cartan(Node i, Node j) const { return cartan_[i - 1][j - 1]; }
  const Matrix<int>& cartan_matrix() const { return cartan_; }
  int r(Node i) const { return r_[i - 1]; }
  const std::vector<int>& r_values() const { return r_; }
  int r_dual() const { return r_dual_; }
  int h_dual() const { return h_dual_; }
  /// r^vee * h^vee: the support window of fundamental q-characters.
  int rh() const { return r_dual_ * h_dual_; }
  Node bar(Node i) const { return bar_[i - 1]; }

  const QLaurent& d_poly() const { return d_; }
  /// C(q)_{ij}.
  const QLaurent& cartan_q(Node i, Node j) const { return cartan_q_[i - 1][j - 1]; }
  const Matrix<QLaurent>& cartan_q_matrix() const { return cartan_q_; }
  /// C~'(q)_{ij}, with C(q) C~'(q) = d(q) Id.
  const QLaurent& c_tilde_prime(Node i, Node j) const { return c_tilde_prime_[i - 1][j - 1]; }
  const Matrix<QLaurent>& c_tilde_prime_matrix() const { return c_tilde_prime_; }
  /// Coefficients of (D(q) C~'(q))_{ij} = sum_k p_ij(k) q^k.
  const QLaurent& p_poly(Node i, Node j) const { return p_[i - 1][j - 1]; }
  /// Coefficients of d(q) [r_i]_q = sum_k s_i(k) q^k.
  const QLaurent& s_poly(Node i) const { return s_[i - 1]; }

  /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
  const std::vector<int>& highest_root() const { return positive_roots_.back(); }

  /// Exact inverse of the integer Cartan matrix (0-based).
  const Matrix<Rational>& cartan_inverse() const { return cartan_inverse_; }

  friend RootData make_root_data(LieType type, int rank);

 private:
  RootData() = default;

  void derive_symmetrizer();
  void build_quantized();
  void build_roots();
  void derive_dual_coxeter();
  void derive_bar();
  void build_cartan_inverse();

  LieType type_{LieType::A};
  int rank_{0};
  Matrix<int> cartan_;
  std::vector<int> r_;
  int r_dual_{1};
  int h_dual_{0};
  std::vector<Node> bar_;
  QLaurent d_;
  Matrix<QLaurent> cartan_q_;
  Matrix<QLaurent> c_tilde_prime_;
  Matrix<QLaurent> p_;
  std::vector<QLaurent> s_;
  std::vector<std::vector<int>> positive_roots_;
  Matrix<Rational> cartan_inverse_;
};

inline void RootData::derive_symmetrizer() {
  const int l = rank_;
  std::vector<Rational> r(l, Rational(0));
  r[0] = 1;
  // propagate r_j = r_i C_ij / C_ji along Dynkin edges
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < l; ++j) {
      if (j == i || cartan_[i][j] == 0 || r[j].numerator() != 0) continue;
      r[j] = r[i] * Rational(cartan_[i][j], cartan_[j][i]);
      stack.push_back(j);
    }
  }
  std::int64_t lcm_den = 1;
  for (auto& x : r) lcm_den = std::lcm(lcm_den, x.denominator());
  std::vector<std::int64_t> ints;
  for (auto& x : r) ints.push_back((x * lcm_den).numerator());
  std::int64_t g = 0;
  for (auto v : ints) g = std::gcd(g, v);
  r_.clear();
  for (auto v : ints) r_.push_back(static_cast<int>(v / g));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (r_[i] * cartan_[i][j] != r_[j] * cartan_[j][i])
        throw std::logic_error("Cartan matrix is not symmetrizable");
  r_dual_ = *std::max_element(r_.begin(), r_.end());
}

inline void RootData::build_quantized() {
  const int l = rank_;
  cartan_q_.assign(l, std::vector<QLaurent>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      cartan_q_[i][j] = i == j ? QLaurent::monomial(r_[i]) + QLaurent::monomial(-r_[i])
                               : QLaurent::quantum_int(cartan_[i][j]);

  d_ = detail::minimal_denominator(type_, l);
  const QLaurent det = detail::bareiss_determinant(cartan_q_);
  c_tilde_prime_.assign(l, std::vector<QLaurent>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      // adj(C)_{ij} = (-1)^{i+j} det(minor_{ji})
      QLaurent cof = detail::bareiss_determinant(detail::minor_of(cartan_q_, j, i));
      if ((i + j) % 2 == 1) cof = -cof;
      auto entry = divide_exact(d_ * cof, det);
      if (!entry) throw std::logic_error("d(q) is not a multiple of det C(q) for " + name());
      c_tilde_prime_[i][j] = std::move(*entry);
    }
  }

  p_.assign(l, std::vector<QLaurent>(l));
  s_.clear();
  for (int i = 0; i < l; ++i) {
    const QLaurent ri = QLaurent::quantum_int(r_[i]);
    for (int j = 0; j < l; ++j) p_[i][j] = ri * c_tilde_prime_[i][j];
    s_.push_back(d_ * ri);
  }
}

inline void RootData::build_roots() {
  const int l = rank_;
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < l; ++i) {
    std::vector<int> a(l, 0);
    a[i] = 1;
    roots.insert(a);
    layer.push_back(a);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < l; ++i) {
        // p: length of the alpha_i string below beta
        int p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++p;
        }
        int pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < l; ++j) pairing += beta[j] * cartan_[i][j];
        if (p - pairing > 0) {
          auto up = beta;
          up[i] += 1;
          if (!roots.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  positive_roots_.assign(roots.begin(), roots.end());
  auto height = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(),
                   [&](const auto& a, const auto& b) { return height(a) < height(b); });
}

inline void RootData::derive_dual_coxeter() {
  // h^vee = 1 + sum of the coroot coefficients of theta^vee; a_i^vee = a_i r_i / r^vee.
  const auto& theta = highest_root();
  int num = 0;
  for (int i = 0; i < rank_; ++i) num += theta[i] * r_[i];
  if (num % r_dual_ != 0) throw std::logic_error("non-integral dual Coxeter number");
  h_dual_ = 1 + num / r_dual_;
}

inline void RootData::derive_bar() {
  const int l = rank_;
  // alpha_i in fundamental-weight coordinates is column i of C.
  auto reflect = [&](std::vector<int>& w, int i) {
    const int k = w[i];
    for (int j = 0; j < l; ++j) w[j] -= k * cartan_[j][i];
  };
  // Walk rho down to -rho; the reflection word is a reduced word for w0.
  std::vector<int> word;
  std::vector<int> rho(l, 1);
  while (true) {
    auto it = std::find_if(rho.begin(), rho.end(), [](int x) { return x > 0; });
    if (it == rho.end()) break;
    int i = static_cast<int>(it - rho.begin());
    reflect(rho, i);
    word.push_back(i);
  }
  if (word.size() != positive_roots_.size()) throw std::logic_error("w0 word has wrong length");
  bar_.assign(l, 0);
  for (int i = 0; i < l; ++i) {
    std::vector<int> a(l);
    for (int j = 0; j < l; ++j) a[j] = cartan_[j][i];
    for (int s : word) reflect(a, s);
    for (int k = 0; k < l; ++k) {
      bool match = true;
      for (int j = 0; j < l && match; ++j) match = a[j] == -cartan_[j][k];
      if (match) bar_[i] = k + 1;
    }
    if (bar_[i] == 0) throw std::logic_error("w0 does not permute -simple roots");
  }
}

inline void RootData::build_cartan_inverse() {
  const int l = rank_;
  Matrix<Rational> a(l, std::vector<Rational>(2 * l, Rational(0)));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) a[i][j] = cartan_[i][j];
    a[i][l + i] = 1;
  }
  for (int c = 0; c < l; ++c) {
    int p = c;
    while (a[p][c].numerator() == 0) ++p;
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (int i = 0; i < l; ++i) {
      if (i == c || a[i][c].numerator() == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j < 2 * l; ++j) a[i][j] -= f * a[c][j];
    }
  }
  cartan_inverse_.assign(l, std::vector<Rational>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cartan_inverse_[i][j] = a[i][l + j];
}

/// Builds the root data of a simple type; throws std::invalid_argument for an
/// invalid (type, rank) combination.
inline RootData make_root_data(LieType type, int rank) {
  detail::require_valid_type(type, rank);
  RootData rd;
  rd.type_ = type;
  rd.rank_ = rank;
  rd.cartan_ = detail::cartan_matrix(type, rank);
  rd.derive_symmetrizer();
  rd.build_quantized();
  rd.build_roots();
  rd.derive_dual_coxeter();
  rd.derive_bar();
  rd.build_cartan_inverse();
  return rd;
}

inline RootData make_root_data(const std::string& type, int rank) { return make_root_data(parse_lie_type(type), rank); }

}  // namespace qchar
