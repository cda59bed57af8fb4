#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qchar/fm_engine.hpp"
#include "qchar/qpolynomial.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/ymonomial.hpp"

namespace qchar {

/// Lazily computed q-characters of V_{omega_i}(1) for one root datum.
class FundamentalTable {
 public:
  explicit FundamentalTable(const RootData& rd, RunOptions options = {}, bool compute_missing = true)
      : rd_(&rd), options_(std::move(options)), compute_missing_(compute_missing) {}

  const RootData& root_data() const { return *rd_; }

  void put(Node i, QCharacter chi) { table_[i] = std::move(chi); }
  bool has(Node i) const { return table_.count(i) != 0; }

  const QCharacter& get(Node i) {
    if (i < 1 || i > rd_->rank()) throw std::out_of_range("node " + std::to_string(i) + " outside " + rd_->name());
    auto it = table_.find(i);
    if (it != table_.end()) return it->second;
    if (!compute_missing_)
      throw std::runtime_error("character of " + YMonomial::variable(i, 0).to_string() + " (" + rd_->name() +
                               ") is not available");
    RunResult res = run_fundamental(*rd_, i, 0, options_);
    if (!res.ok())
      throw std::runtime_error("engine did not produce the character of node " + std::to_string(i) + ": " +
                               res.message);
    return table_.emplace(i, std::move(res.character)).first->second;
  }

 private:
  const RootData* rd_;
  RunOptions options_;
  bool compute_missing_;
  std::map<Node, QCharacter> table_;
};

// ---------------------------------------------------------------------------
// Monomial graph

struct GraphEdge {
  std::size_t from;
  std::size_t to;
  Node color;
  int shift;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Vertices are the monomials of a character with multiplicity; an arrow
/// alpha -> beta of color i means m_beta = m_alpha A_{i,q^x}^{-1}.
struct MonomialGraph {
  std::vector<YMonomial> vertices;
  std::vector<GraphEdge> edges;
};

inline MonomialGraph build_graph(const RootData& rd, const QCharacter& chi) {
  MonomialGraph g;
  std::map<YMonomial, std::pair<std::size_t, std::size_t>> copies;  // first vertex, count
  int lo = 0, hi = 0;
  bool any = false;
  for (const auto& [m, c] : chi.terms()) {
    const auto count = c.convert_to<std::size_t>();
    copies[m] = {g.vertices.size(), count};
    for (std::size_t k = 0; k < count; ++k) g.vertices.push_back(m);
    if (!m.is_one()) {
      lo = any ? std::min(lo, min_shift(m)) : min_shift(m);
      hi = any ? std::max(hi, max_shift(m)) : max_shift(m);
      any = true;
    }
  }
  if (!any) return g;
  for (const auto& [m, range] : copies) {
    for (Node i = 1; i <= rd.rank(); ++i) {
      // Y_{i,x+r_i} must occur in the source or the target.
      for (int x = lo - rd.r(i); x <= hi - rd.r(i); ++x) {
        auto target = copies.find(m * a_monomial(rd, i, x).inverse());
        if (target == copies.end()) continue;
        for (std::size_t a = 0; a < range.second; ++a)
          for (std::size_t b = 0; b < target->second.second; ++b)
            g.edges.push_back({range.first + a, target->second.first + b, i, x});
      }
    }
  }
  return g;
}

/// Connectivity ignoring orientation.
inline bool is_connected(const MonomialGraph& g) {
  if (g.vertices.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(g.vertices.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        todo.push(w);
      }
  }
  return reached == g.vertices.size();
}

/// Every vertex is reachable from root along arrows.
inline bool is_rooted_at(const MonomialGraph& g, std::size_t root) {
  if (root >= g.vertices.size()) return false;
  std::vector<std::vector<std::size_t>> out(g.vertices.size());
  for (const auto& e : g.edges) out[e.from].push_back(e.to);
  std::vector<bool> seen(g.vertices.size(), false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : out[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertices.size();
}

// ---------------------------------------------------------------------------
// Tensor products

struct TensorFactor {
  Node node;
  int shift;
};

struct TensorScanResult {
  YMonomial highest;
  /// Dominant monomials of the product other than one copy of the product of
  /// highest monomials, with their multiplicities.
  std::vector<std::pair<YMonomial, Coeff>> witnesses;
  bool reducible() const { return !witnesses.empty(); }
};

/// Dominant monomials of p*q with multiplicity, without forming the product.
inline std::map<YMonomial, Coeff> dominant_products(const QCharacter& p, const QCharacter& q) {
  std::vector<std::pair<YMonomial, Coeff>> qs(q.terms().begin(), q.terms().end());
  std::map<std::pair<Node, int>, std::vector<std::size_t>> positive_at;
  for (std::size_t k = 0; k < qs.size(); ++k)
    for (const auto& f : qs[k].first.factors())
      if (f.exponent > 0) positive_at[{f.node, f.shift}].push_back(k);

  std::map<YMonomial, Coeff> out;
  static const std::vector<std::size_t> none;
  for (const auto& [m1, c1] : p.terms()) {
    // Some monomial of q must cancel each negative factor of m1; scan only
    // the candidates for the rarest one.
    const std::vector<std::size_t>* candidates = nullptr;
    bool has_negative = false;
    for (const auto& f : m1.factors()) {
      if (f.exponent >= 0) continue;
      has_negative = true;
      auto it = positive_at.find({f.node, f.shift});
      const auto* list = it == positive_at.end() ? &none : &it->second;
      if (!candidates || list->size() < candidates->size()) candidates = list;
    }
    auto consider = [&](std::size_t k) {
      YMonomial prod = m1 * qs[k].first;
      if (is_dominant(prod)) out[prod] += c1 * qs[k].second;
    };
    if (has_negative) {
      for (auto k : *candidates) consider(k);
    } else {
      for (std::size_t k = 0; k < qs.size(); ++k) consider(k);
    }
  }
  return out;
}

inline TensorScanResult tensor_scan(const RootData& rd, FundamentalTable& table, const std::vector<TensorFactor>& factors) {
  TensorScanResult result;
  if (factors.empty()) return result;
  std::vector<QCharacter> chars;
  for (const auto& f : factors) {
    chars.push_back(table.get(f.node).shifted(f.shift));
    result.highest *= YMonomial::variable(f.node, f.shift);
  }
  if (chars.size() == 1) return result;
  QCharacter head = chars[0];
  for (std::size_t k = 1; k + 1 < chars.size(); ++k) head = head * chars[k];
  auto dominant = dominant_products(head, chars.back());
  auto it = dominant.find(result.highest);
  if (it != dominant.end()) {
    it->second -= 1;
    if (it->second == 0) dominant.erase(it);
  }
  (void)rd;
  result.witnesses.assign(dominant.begin(), dominant.end());
  return result;
}

/// Shifts k for which V_{omega_i}(1) (x) V_{omega_j}(q^k) is reducible, i.e.
/// the poles of the normalized R-matrix. Scans [lo, hi] (default
/// [-r^vee h^vee, r^vee h^vee] without -1, 0, 1) and reports both signs.
inline std::vector<int> pole_candidates(const RootData& rd, Node i, Node j, FundamentalTable& table,
                                        std::optional<std::pair<int, int>> window = std::nullopt) {
  std::vector<int> ks;
  if (window) {
    for (int k = window->first; k <= window->second; ++k) ks.push_back(k);
  } else {
    for (int k = -rd.rh(); k <= rd.rh(); ++k)
      if (k < -1 || k > 1) ks.push_back(k);
  }
  std::vector<int> poles;
  for (int k : ks)
    if (tensor_scan(rd, table, {{i, 0}, {j, k}}).reducible()) poles.push_back(k);
  return poles;
}

// ---------------------------------------------------------------------------
// Diagonal entries of normalized R-matrices

/// prod_k q_i (1 - q^{a_k} z q^{-b} q_i^{-1}) / (1 - q^{a_k} z q^{-b} q_i) as
/// a formal rational function of z.
struct DiagonalEntry {
  Node node{1};
  int r{1};
  int base{0};
  std::vector<int> a_shifts;

  bool is_one() const { return a_shifts.empty(); }
  /// z = q^{b - a_k - r_i}: the denominators vanish.
  std::vector<int> pole_exponents() const {
    std::vector<int> out;
    for (int a : a_shifts) out.push_back(base - a - r);
    return out;
  }
  std::vector<int> zero_exponents() const {
    std::vector<int> out;
    for (int a : a_shifts) out.push_back(base - a + r);
    return out;
  }

  std::string to_string() const {
    if (a_shifts.empty()) return "1";
    std::ostringstream os;
    for (std::size_t k = 0; k < a_shifts.size(); ++k) {
      const int e = a_shifts[k] - base;
      if (k) os << " * ";
      os << "q^" << r << "(1 - q^" << e - r << " z)/(1 - q^" << e + r << " z)";
    }
    return os.str();
  }
};

struct FactorizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline DiagonalEntry diagonal_entry(const RootData& rd, const YMonomial& m_plus, const YMonomial& m, Node i, int b) {
  auto fs = factor_over_A(rd, m_plus, m);
  if (!fs) throw FactorizationError(m.to_string() + " is not " + m_plus.to_string() + " times A^{-1} factors");
  DiagonalEntry e{i, rd.r(i), b, {}};
  for (const auto& f : *fs)
    if (f.node == i) e.a_shifts.insert(e.a_shifts.end(), f.count, f.shift);
  return e;
}

// ---------------------------------------------------------------------------
// Duals and lowest monomials

/// Y_{j,q^n}^{+-1} -> Y_{j,q^{-n}}^{-+1}, termwise.
inline QCharacter dual_character(const QCharacter& chi) {
  QCharacter out;
  for (const auto& [m, c] : chi.terms()) {
    YMonomial d;
    for (const auto& f : m.factors()) d.multiply_factor(f.node, -f.shift, -f.exponent);
    out.add(d, c);
  }
  return out;
}

/// The unique lowest term of chi(V_{omega_i}(1)) is Y_{bar i, r^vee h^vee}^{-1}.
inline bool lowest_monomial_check(const RootData& rd, Node i, const QCharacter& chi) {
  auto low = lowest_terms(rd, chi);
  return low.size() == 1 && low[0].second == 1 && low[0].first == YMonomial::variable(rd.bar(i), rd.rh(), -1);
}

}  // namespace qchar
