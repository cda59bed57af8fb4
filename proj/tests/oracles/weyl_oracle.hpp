#pragma once

// Test-only brute-force Lie theory. Deliberately shares nothing with the
// library beyond plain integer matrices: root systems come from reflecting
// simple roots, the symmetrizer from a per-type table, weight multiplicities
// from Freudenthal's formula.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using IntMatrix = std::vector<std::vector<int>>;
using Vec = std::vector<int>;
using Q = boost::rational<long long>;

/// Bourbaki Cartan matrices, C[i][j] = <alpha_i^vee, alpha_j>.
inline IntMatrix cartan(char type, int l) {
  IntMatrix c(l, Vec(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
  switch (type) {
    case 'A':
      for (int i = 1; i < l; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < l; ++i) link(i, i + 1);
      c[l - 1][l - 2] = -2;  // alpha_l short
      break;
    case 'C':
      for (int i = 1; i < l; ++i) link(i, i + 1);
      c[l - 2][l - 1] = -2;  // alpha_l long
      break;
    case 'D':
      for (int i = 1; i < l - 1; ++i) link(i, i + 1);
      link(l - 2, l);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < l; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(2, 3);
      link(3, 4);
      c[2][1] = -2;  // alpha_3 short
      break;
    case 'G':
      link(1, 2);
      c[0][1] = -3;  // node 1 short
      break;
    default:
      throw std::invalid_argument("type");
  }
  return c;
}

/// Squared root lengths up to scale (short = 1).
inline Vec root_lengths(char type, int l) {
  Vec r(l, 1);
  switch (type) {
    case 'B':
      for (int i = 0; i < l - 1; ++i) r[i] = 2;
      break;
    case 'C':
      r[l - 1] = 2;
      break;
    case 'F':
      r[0] = r[1] = 2;
      break;
    case 'G':
      r[1] = 3;
      break;
    default:
      break;
  }
  return r;
}

struct RootSystem {
  char type;
  int l;
  IntMatrix c;
  Vec r;
  std::vector<Vec> positive;  // alpha-coordinates

  /// (x, y) for x, y in alpha-coordinates; (alpha_i, alpha_j) = r_i C_ij.
  long long form(const Vec& x, const Vec& y) const {
    long long s = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) s += static_cast<long long>(x[i]) * y[j] * r[i] * c[i][j];
    return s;
  }

  Vec reflect_root(const Vec& beta, int i) const {
    int pairing = 0;  // <alpha_i^vee, beta>
    for (int k = 0; k < l; ++k) pairing += c[i][k] * beta[k];
    Vec out = beta;
    out[i] -= pairing;
    return out;
  }

  const Vec& highest_root() const {
    return *std::max_element(positive.begin(), positive.end(), [](const Vec& a, const Vec& b) {
      return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
  }

  /// h^vee = 1 + 2 (rho, theta) / (theta, theta), with 2 rho = sum of positive roots.
  int dual_coxeter() const {
    const Vec& th = highest_root();
    long long two_rho_theta = 0;
    for (const auto& b : positive) two_rho_theta += form(b, th);
    return static_cast<int>(1 + two_rho_theta / form(th, th));
  }

  int lacing() const { return *std::max_element(r.begin(), r.end()); }

  /// Weight in omega-coordinates -> alpha-coordinates (rational).
  std::vector<Q> to_alpha(const Vec& w) const {
    // w_j = sum_i C_ji x_i
    const int n = l;
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = c[i][j];
      a[i][n] = w[i];
    }
    for (int col = 0; col < n; ++col) {
      int p = col;
      while (a[p][col].numerator() == 0) ++p;
      std::swap(a[p], a[col]);
      for (int i = 0; i < n; ++i) {
        if (i == col || a[i][col].numerator() == 0) continue;
        Q f = a[i][col] / a[col][col];
        for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
      }
    }
    std::vector<Q> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
  }

  Q weight_form(const Vec& u, const Vec& v) const {
    auto x = to_alpha(u), y = to_alpha(v);
    Q s = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) s += x[i] * y[j] * Q(r[i] * c[i][j]);
    return s;
  }

  /// Simple reflection on a weight in omega-coordinates.
  Vec reflect_weight(const Vec& w, int i) const {
    Vec out = w;
    for (int j = 0; j < l; ++j) out[j] -= w[i] * c[j][i];  // alpha_i = sum_j C_ji omega_j
    return out;
  }

  Vec root_to_weight(const Vec& beta) const {
    Vec w(l, 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) w[j] += beta[i] * c[j][i];
    return w;
  }
};

inline RootSystem root_system(char type, int l) {
  RootSystem rs{type, l, cartan(type, l), root_lengths(type, l), {}};
  std::set<Vec> seen;
  std::vector<Vec> todo;
  for (int i = 0; i < l; ++i) {
    Vec e(l, 0);
    e[i] = 1;
    todo.push_back(e);
    seen.insert(e);
  }
  while (!todo.empty()) {
    Vec b = todo.back();
    todo.pop_back();
    for (int i = 0; i < l; ++i) {
      Vec s = rs.reflect_root(b, i);
      if (seen.insert(s).second) todo.push_back(s);
    }
  }
  for (const auto& b : seen)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) rs.positive.push_back(b);
  return rs;
}

/// Bar involution from the longest element, found by enumerating the Weyl
/// group as matrices acting on alpha-coordinates (small groups only).
inline Vec bar_by_weyl_group(const RootSystem& rs) {
  const int l = rs.l;
  using M = std::vector<Vec>;  // columns = images of simple roots
  M id(l, Vec(l, 0));
  for (int i = 0; i < l; ++i) id[i][i] = 1;
  std::set<M> group{id};
  std::vector<M> todo{id};
  while (!todo.empty()) {
    M w = todo.back();
    todo.pop_back();
    for (int i = 0; i < l; ++i) {
      M s = w;
      for (auto& col : s) col = rs.reflect_root(col, i);
      if (group.insert(s).second) todo.push_back(s);
    }
    if (group.size() > 200000) throw std::runtime_error("Weyl group too large for brute force");
  }
  for (const auto& w : group) {
    bool all_negative = true;
    for (const auto& col : w)
      if (std::any_of(col.begin(), col.end(), [](int x) { return x > 0; })) all_negative = false;
    if (!all_negative) continue;
    Vec bar(l, -1);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (w[i][j] == -1 && std::count(w[i].begin(), w[i].end(), 0) == l - 1) bar[i] = j + 1;
    return bar;
  }
  throw std::logic_error("no longest element");
}

inline Vec dominant_conjugate(const RootSystem& rs, Vec w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rs.l; ++i)
      if (w[i] < 0) {
        w = rs.reflect_weight(w, i);
        changed = true;
      }
  }
  return w;
}

/// Weight multiplicities of the irreducible g-module of highest weight
/// lambda, via Freudenthal's formula over dominant weights and Weyl orbits.
inline std::map<Vec, long long> classical_character(const RootSystem& rs, const Vec& lambda) {
  const int l = rs.l;
  // dominant weights below lambda: lambda - sum of positive roots, kept dominant
  std::set<Vec> dominant{lambda};
  std::vector<Vec> todo{lambda};
  std::vector<Vec> pos_w;
  for (const auto& b : rs.positive) pos_w.push_back(rs.root_to_weight(b));
  while (!todo.empty()) {
    Vec mu = todo.back();
    todo.pop_back();
    for (const auto& b : pos_w) {
      Vec nu(l);
      for (int k = 0; k < l; ++k) nu[k] = mu[k] - b[k];
      if (std::any_of(nu.begin(), nu.end(), [](int x) { return x < 0; })) continue;
      if (dominant.insert(nu).second) todo.push_back(nu);
    }
  }
  auto height_below = [&](const Vec& mu) {
    auto x = rs.to_alpha(lambda), y = rs.to_alpha(mu);
    Q h = 0;
    for (int i = 0; i < l; ++i) h += x[i] - y[i];
    return h;
  };
  std::vector<Vec> order(dominant.begin(), dominant.end());
  std::sort(order.begin(), order.end(), [&](const Vec& a, const Vec& b) { return height_below(a) < height_below(b); });

  Vec rho(l, 1);
  auto plus = [&](const Vec& a, const Vec& b) {
    Vec out(l);
    for (int k = 0; k < l; ++k) out[k] = a[k] + b[k];
    return out;
  };
  const Q top = rs.weight_form(plus(lambda, rho), plus(lambda, rho));
  std::map<Vec, long long> mult;
  mult[lambda] = 1;
  auto lookup = [&](const Vec& w) -> long long {
    auto it = mult.find(dominant_conjugate(rs, w));
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& mu : order) {
    if (mu == lambda) continue;
    Q sum = 0;
    for (const auto& b : pos_w) {
      for (int k = 1;; ++k) {
        Vec nu = mu;
        for (int t = 0; t < l; ++t) nu[t] += k * b[t];
        if (!dominant.count(dominant_conjugate(rs, nu))) break;
        sum += Q(lookup(nu)) * rs.weight_form(nu, b);
      }
    }
    const Q denom = top - rs.weight_form(plus(mu, rho), plus(mu, rho));
    const Q m = 2 * sum / denom;
    if (m.denominator() != 1) throw std::logic_error("non-integral multiplicity");
    if (m.numerator() != 0) mult[mu] = m.numerator();
  }
  // expand orbits
  std::map<Vec, long long> out;
  for (const auto& [mu, m] : mult) {
    std::set<Vec> orbit{mu};
    std::vector<Vec> st{mu};
    while (!st.empty()) {
      Vec w = st.back();
      st.pop_back();
      for (int i = 0; i < l; ++i) {
        Vec s = rs.reflect_weight(w, i);
        if (orbit.insert(s).second) st.push_back(s);
      }
    }
    for (const auto& w : orbit) out[w] = m;
  }
  return out;
}

inline long long binomial(int n, int k) {
  long long b = 1;
  for (int t = 1; t <= k; ++t) b = b * (n - k + t) / t;
  return b;
}

}  // namespace oracle
