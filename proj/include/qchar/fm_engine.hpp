#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qchar/qpolynomial.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/sl2char.hpp"
#include "qchar/ymonomial.hpp"

namespace qchar {

/// Total orders refining the weight partial order. Both sort by height of
/// lambda_seed - mu first; ties are broken lexicographically on the
/// alpha-coefficient vector, ascending or descending.
enum class TotalOrder { HeightLex, HeightRevLex };

struct Limits {
  std::size_t max_terms = 2'000'000;
  std::size_t max_steps = 10'000'000;
};

struct EngineStats {
  std::size_t expansions = 0;  // i-expansions that did work
  std::size_t merges = 0;      // max-merges into an existing monomial
  std::size_t max_terms = 0;
  std::size_t batches = 0;
};

/// Colored monomial: coefficient s, colorings s_i <= s, and the alpha-depth
/// vector c with weight = weight(seed) - sum c_i alpha_i.
struct ColoredEntry {
  std::int64_t coeff = 0;
  std::vector<std::int64_t> colors;
  std::vector<int> depth;
};

using ColoredCharacter = std::unordered_map<YMonomial, ColoredEntry>;

struct AdmissibilityFailure : std::runtime_error {
  AdmissibilityFailure(YMonomial m, Node i)
      : std::runtime_error("algorithm fails at " + m.to_string() + " (direction " + std::to_string(i) + ")"),
        monomial(std::move(m)),
        direction(i) {}
  YMonomial monomial;
  Node direction;
};

struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// State of the colored expansion started from a dominant seed.
class ExpansionState {
 public:
  ExpansionState(const RootData& rd, YMonomial seed, Limits limits = {}, TotalOrder order = TotalOrder::HeightLex)
      : rd_(&rd), seed_(std::move(seed)), limits_(limits), order_(order) {
    if (!is_dominant(seed_)) throw std::invalid_argument("seed monomial is not dominant: " + seed_.to_string());
    for (const auto& f : seed_.factors())
      if (f.node < 1 || f.node > rd.rank()) throw std::out_of_range("seed node outside the Dynkin diagram");
    const auto l = static_cast<std::size_t>(rd.rank());
    ColoredEntry e{1, std::vector<std::int64_t>(l, 0), std::vector<int>(l, 0)};
    chi_.emplace(seed_, std::move(e));
    enqueue(seed_, chi_.at(seed_).depth);
    stats_.max_terms = 1;
  }

  const ColoredCharacter& colored() const { return chi_; }
  const YMonomial& seed() const { return seed_; }
  const EngineStats& stats() const { return stats_; }
  bool finished() const { return frontier_.empty(); }

  /// m is admissible iff it is j-dominant for every j with s_j < s.
  bool admissible(const YMonomial& m) const {
    const auto& e = chi_.at(m);
    for (Node j = 1; j <= rd_->rank(); ++j)
      if (e.colors[j - 1] < e.coeff && !is_i_dominant(m, j)) return false;
    return true;
  }

  /// The i-expansion of the current colored polynomial with respect to m.
  /// Throws AdmissibilityFailure if s_i < s and m is not i-dominant.
  void i_expand(const YMonomial& m, Node i) {
    auto it = chi_.find(m);
    if (it == chi_.end()) throw std::invalid_argument("monomial not present: " + m.to_string());
    const std::int64_t s = it->second.coeff;
    const std::int64_t si = it->second.colors[i - 1];
    if (si == s) return;
    if (!is_i_dominant(m, i)) throw AdmissibilityFailure(m, i);
    if (++stats_.expansions > limits_.max_steps)
      throw LimitExceeded("expansion step limit " + std::to_string(limits_.max_steps) + " exceeded");

    const int r = rd_->r(i);
    std::vector<int> shifts;
    for (const auto& f : m.factors())
      if (f.node == i) shifts.insert(shifts.end(), f.exponent, f.shift);
    const auto base_depth = it->second.depth;
    const std::int64_t gap = s - si;

    // Resolve all targets before mutating chi_, which may rehash.
    for (const auto& [a_shifts, t_big] : sl2_expansion(shifts, r)) {
      const auto t = t_big.convert_to<std::int64_t>();
      YMonomial n = m;
      for (int a : a_shifts) n *= a_inverse(i, a);
      const std::int64_t add = detail::checked_mul(t, gap);
      auto found = chi_.find(n);
      if (found == chi_.end()) {
        ColoredEntry e;
        e.coeff = add;
        e.colors.assign(static_cast<std::size_t>(rd_->rank()), 0);
        e.colors[i - 1] = add;
        e.depth = base_depth;
        e.depth[i - 1] += static_cast<int>(a_shifts.size());
        auto depth = e.depth;
        chi_.emplace(n, std::move(e));
        enqueue(n, depth);
        if (chi_.size() > limits_.max_terms)
          throw LimitExceeded("term limit " + std::to_string(limits_.max_terms) + " exceeded");
      } else {
        auto& e = found->second;
        const std::int64_t ri = detail::checked_add(e.colors[i - 1], add);
        e.coeff = std::max(e.coeff, ri);
        e.colors[i - 1] = ri;
        if (!a_shifts.empty()) ++stats_.merges;
      }
    }
    stats_.max_terms = std::max(stats_.max_terms, chi_.size());
  }

  /// Expands every monomial of the next weight in all directions.
  /// Returns false when the frontier is empty.
  bool step_batch() {
    if (frontier_.empty()) return false;
    auto node = frontier_.extract(frontier_.begin());
    auto& batch = node.mapped();
    std::sort(batch.begin(), batch.end());
    for (const auto& m : batch) {
      if (!admissible(m)) {
        const auto& e = chi_.at(m);
        Node bad = 1;
        for (Node j = 1; j <= rd_->rank(); ++j)
          if (e.colors[j - 1] < e.coeff && !is_i_dominant(m, j)) {
            bad = j;
            break;
          }
        throw AdmissibilityFailure(m, bad);
      }
      for (Node i = 1; i <= rd_->rank(); ++i) i_expand(m, i);
    }
    ++stats_.batches;
    return true;
  }

  QCharacter character() const {
    QCharacter out;
    for (const auto& [m, e] : chi_) out.add(m, Coeff(e.coeff));
    return out;
  }

 private:
  struct FrontierKey {
    int height;
    std::vector<int> depth;
  };
  struct KeyLess {
    TotalOrder order;
    bool operator()(const FrontierKey& a, const FrontierKey& b) const {
      if (a.height != b.height) return a.height < b.height;
      return order == TotalOrder::HeightLex ? a.depth < b.depth : a.depth > b.depth;
    }
  };

  void enqueue(const YMonomial& m, const std::vector<int>& depth) {
    FrontierKey key{std::accumulate(depth.begin(), depth.end(), 0), depth};
    frontier_[std::move(key)].push_back(m);
  }

  const YMonomial& a_inverse(Node i, int shift) {
    auto key = std::pair{i, shift};
    auto it = a_cache_.find(key);
    if (it == a_cache_.end()) it = a_cache_.emplace(key, a_monomial(*rd_, i, shift).inverse()).first;
    return it->second;
  }

  const RootData* rd_;
  YMonomial seed_;
  Limits limits_;
  TotalOrder order_;
  ColoredCharacter chi_;
  std::map<FrontierKey, std::vector<YMonomial>, KeyLess> frontier_{KeyLess{order_}};
  std::map<std::pair<Node, int>, YMonomial> a_cache_;
  EngineStats stats_;
};

enum class RunStatus { Ok, AlgorithmFailure, LimitExceeded };

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::AlgorithmFailure: return "algorithm_failure";
    case RunStatus::LimitExceeded: return "limit_exceeded";
  }
  return "?";
}

struct RunOptions {
  Limits limits{};
  TotalOrder order = TotalOrder::HeightLex;
  /// Called after every batch with the running statistics.
  std::function<void(const EngineStats&)> progress;
};

struct RunResult {
  RunStatus status = RunStatus::Ok;
  /// Final character, or the partial one when the run did not finish.
  QCharacter character;
  std::optional<YMonomial> failed_at;
  std::optional<Node> failed_direction;
  std::string message;
  EngineStats stats;

  bool ok() const { return status == RunStatus::Ok; }
};

/// Runs the colored expansion from a dominant seed until the frontier is
/// empty. Non-dominant seeds are rejected with std::invalid_argument.
inline RunResult run(const RootData& rd, const YMonomial& seed, const RunOptions& options = {}) {
  ExpansionState state(rd, seed, options.limits, options.order);
  RunResult result;
  try {
    while (state.step_batch())
      if (options.progress) options.progress(state.stats());
  } catch (const AdmissibilityFailure& f) {
    result.status = RunStatus::AlgorithmFailure;
    result.failed_at = f.monomial;
    result.failed_direction = f.direction;
    result.message = f.what();
  } catch (const LimitExceeded& e) {
    result.status = RunStatus::LimitExceeded;
    result.message = e.what();
  }
  result.character = state.character();
  result.stats = state.stats();
  return result;
}

/// q-character of the fundamental representation V_{omega_i}(q^base).
inline RunResult run_fundamental(const RootData& rd, Node i, int base = 0, const RunOptions& options = {}) {
  if (i < 1 || i > rd.rank()) throw std::out_of_range("node " + std::to_string(i) + " outside " + rd.name());
  return run(rd, YMonomial::variable(i, base), options);
}

}  // namespace qchar
