#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qchar/qpolynomial.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/ymonomial.hpp"

namespace qchar {

/// Monomial of the restriction ring: Y-variables of nodes in J times
/// Z-variables of nodes outside J.
struct ZMonomial {
  YMonomial y_part;
  ZPart z_part;

  friend ZMonomial operator*(const ZMonomial& a, const ZMonomial& b) {
    return {a.y_part * b.y_part, a.z_part * b.z_part};
  }
  friend bool operator==(const ZMonomial&, const ZMonomial&) = default;
  friend auto operator<=>(const ZMonomial&, const ZMonomial&) = default;

  std::string to_string() const {
    if (y_part.is_one()) return z_part.to_string();
    if (z_part.is_one()) return y_part.to_string();
    return y_part.to_string() + " * " + z_part.to_string();
  }
};

/// Node subset J, stored sorted and deduplicated.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<Node> nodes) : nodes_(nodes) { normalize(); }
  explicit NodeSet(std::vector<Node> nodes) : nodes_(std::move(nodes)) { normalize(); }

  bool contains(Node i) const { return std::binary_search(nodes_.begin(), nodes_.end(), i); }
  const std::vector<Node>& nodes() const { return nodes_; }

  void validate(const RootData& rd) const {
    for (Node i : nodes_)
      if (i < 1 || i > rd.rank()) throw std::out_of_range("node " + std::to_string(i) + " outside " + rd.name());
  }

  static NodeSet all(const RootData& rd) {
    NodeSet s;
    for (Node i = 1; i <= rd.rank(); ++i) s.nodes_.push_back(i);
    return s;
  }

 private:
  void normalize() {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  }
  std::vector<Node> nodes_;
};

/// tau_J on one generator Y_{i,q^n}.
inline ZMonomial tau_generator(const RootData& rd, const NodeSet& J, Node i, int n) {
  ZMonomial out;
  if (J.contains(i)) out.y_part.multiply_factor(i, n, 1);
  for (Node j = 1; j <= rd.rank(); ++j) {
    if (J.contains(j)) continue;
    for (auto [k, p] : rd.p_poly(i, j).terms()) out.z_part.multiply_factor(j, n + k, static_cast<int>(p));
  }
  return out;
}

inline ZMonomial tau_J(const RootData& rd, const NodeSet& J, const YMonomial& m) {
  ZMonomial out;
  for (const auto& f : m.factors()) {
    ZMonomial g = tau_generator(rd, J, f.node, f.shift);
    out = out * ZMonomial{g.y_part.pow(f.exponent), g.z_part.pow(f.exponent)};
  }
  return out;
}

/// Drops all factors at nodes outside J.
inline YMonomial beta_J(const NodeSet& J, const YMonomial& m) {
  YMonomial out;
  for (const auto& f : m.factors())
    if (J.contains(f.node)) out.multiply_factor(f.node, f.shift, f.exponent);
  return out;
}

/// B_{i,q^n} = prod_k Z_{i,q^{n+k}}^{s_i(k)}.
inline ZPart b_monomial(const RootData& rd, Node i, int n) {
  ZPart out;
  for (auto [k, s] : rd.s_poly(i).terms()) out.multiply_factor(i, n + k, static_cast<int>(s));
  return out;
}

struct RestrictionGroup {
  QCharacter y_character;
  ZPart z_part;
};

/// Applies tau_J termwise and groups by Z-part; each group is the character of
/// one summand of the restriction to the subalgebra of J. Groups come in
/// canonical Z-part order.
inline std::vector<RestrictionGroup> group_by_z(const RootData& rd, const NodeSet& J, const QCharacter& p) {
  std::map<ZPart, QCharacter> groups;
  for (const auto& [m, c] : p.terms()) {
    ZMonomial t = tau_J(rd, J, m);
    groups[t.z_part].add(t.y_part, c);
  }
  std::vector<RestrictionGroup> out;
  for (auto& [z, y] : groups) out.push_back({std::move(y), z});
  return out;
}

}  // namespace qchar
