#pragma once

#include <map>
#include <vector>

#include "qchar/qpolynomial.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/ymonomial.hpp"

namespace qchar {

/// Image of S_i in the quotient module: one SignedPoly coefficient per class
/// representative n0 in {0, ..., 2 r_i - 1} of S_{i,q^n0}.
struct ScreeningImage {
  Node node{1};
  int period{2};
  std::map<int, SignedPoly> classes;

  bool is_zero() const {
    for (const auto& [n0, p] : classes)
      if (!p.is_zero()) return false;
    return true;
  }

  std::size_t residual_terms() const {
    std::size_t n = 0;
    for (const auto& [n0, p] : classes) n += p.size();
    return n;
  }
};

/// S_i(m) = m * sum_n u_{i,n} S_{i,n}, with every S_{i,n} rewritten to its
/// class representative through S_{i,n+2r} = A_{i,n+r} S_{i,n}.
template <class Policy>
ScreeningImage screen(const RootData& rd, Node i, const MonomialSum<Policy>& p) {
  const int r = rd.r(i);
  ScreeningImage out{i, 2 * r, {}};
  std::map<int, YMonomial> rewrite_cache;
  auto rewrite = [&](int n) -> const YMonomial& {
    auto it = rewrite_cache.find(n);
    if (it != rewrite_cache.end()) return it->second;
    const int n0 = detail::floor_mod(n, 2 * r);
    const int k = (n - n0) / (2 * r);
    YMonomial factor;
    for (int j = 1; j <= k; ++j) factor *= a_monomial(rd, i, n - (2 * j - 1) * r);
    for (int j = 1; j <= -k; ++j) factor *= a_monomial(rd, i, n + (2 * j - 1) * r).inverse();
    return rewrite_cache.emplace(n, std::move(factor)).first->second;
  };
  for (const auto& [m, c] : p.terms()) {
    for (const auto& f : m.factors()) {
      if (f.node != i) continue;
      const int n0 = detail::floor_mod(f.shift, 2 * r);
      out.classes[n0].add(m * rewrite(f.shift), c * f.exponent);
    }
  }
  for (auto it = out.classes.begin(); it != out.classes.end();) {
    if (it->second.is_zero()) it = out.classes.erase(it);
    else ++it;
  }
  return out;
}

template <class Policy>
bool in_kernel(const RootData& rd, Node i, const MonomialSum<Policy>& p) {
  return screen(rd, i, p).is_zero();
}

/// Membership in the intersection of the kernels of all S_i.
template <class Policy>
bool in_kernel_all(const RootData& rd, const MonomialSum<Policy>& p) {
  for (Node i = 1; i <= rd.rank(); ++i)
    if (!in_kernel(rd, i, p)) return false;
  return true;
}

}  // namespace qchar
