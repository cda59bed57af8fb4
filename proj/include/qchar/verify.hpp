#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "qchar/analysis.hpp"
#include "qchar/qpolynomial.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/screening.hpp"
#include "qchar/ymonomial.hpp"

namespace qchar {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline CheckResult check_kernel(const RootData& rd, const QCharacter& chi) {
  CheckResult c{"kernel", true, ""};
  std::ostringstream os;
  for (Node i = 1; i <= rd.rank(); ++i) {
    auto img = screen(rd, i, chi);
    if (!img.is_zero()) {
      c.passed = false;
      os << "S_" << i << " leaves " << img.residual_terms() << " terms; ";
    }
  }
  c.detail = c.passed ? "annihilated by every screening operator" : os.str();
  return c;
}

inline CheckResult check_factorization(const RootData& rd, const YMonomial& top, const QCharacter& chi) {
  for (const auto& [m, c] : chi.terms())
    if (!factor_over_A(rd, top, m)) return {"factorization", false, m.to_string() + " does not factor over A^{-1}"};
  return {"factorization", true, "every monomial is " + top.to_string() + " times A^{-1} factors"};
}

inline CheckResult check_graph(const RootData& rd, const YMonomial& top, const QCharacter& chi) {
  auto g = build_graph(rd, chi);
  std::size_t root = 0;
  while (root < g.vertices.size() && g.vertices[root] != top) ++root;
  const bool connected = is_connected(g);
  const bool rooted = is_rooted_at(g, root);
  std::ostringstream os;
  os << g.vertices.size() << " vertices, " << g.edges.size() << " arrows"
     << (connected ? ", connected" : ", disconnected") << (rooted ? ", all reachable from the highest monomial" : "");
  return {"graph", connected && rooted, os.str()};
}

}  // namespace detail

/// Checks that chi is the q-character of V_{omega_i}(1): membership in the
/// screening kernels, the dominant monomial, right-negativity, the support
/// window [0, r^vee h^vee], the lowest monomial, factorization over A^{-1}
/// and the monomial graph.
inline VerificationReport verify_fundamental(const RootData& rd, Node i, const QCharacter& chi) {
  VerificationReport rep;
  const YMonomial top = YMonomial::variable(i, 0);

  rep.checks.push_back(detail::check_kernel(rd, chi));

  {
    auto dom = dominant_monomials(chi);
    const bool ok = dom.size() == 1 && dom[0].first == top && dom[0].second == 1;
    std::ostringstream os;
    os << dom.size() << " dominant monomial(s)";
    if (!dom.empty()) os << ", first " << dom[0].first.to_string();
    rep.checks.push_back({"unique_dominant", ok, os.str()});
  }

  {
    CheckResult c{"right_negative", true, "every other monomial is right-negative"};
    for (const auto& [m, k] : chi.terms()) {
      if (m == top) continue;
      if (!is_right_negative(m) || max_shift(m) < 2 * rd.r(i)) {
        c = {"right_negative", false, m.to_string() + " is not right-negative beyond " + std::to_string(2 * rd.r(i))};
        break;
      }
    }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"support", true, "shifts within [0, " + std::to_string(rd.rh()) + "]"};
    for (const auto& [m, k] : chi.terms()) {
      if (m.is_one()) continue;
      if (min_shift(m) < 0 || max_shift(m) > rd.rh() || (m != top && min_shift(m) == 0)) {
        c = {"support", false, m.to_string() + " leaves the window (0, " + std::to_string(rd.rh()) + "]"};
        break;
      }
    }
    rep.checks.push_back(c);
  }

  {
    const bool ok = lowest_monomial_check(rd, i, chi);
    auto low = lowest_terms(rd, chi);
    std::string d = low.size() == 1 ? "lowest " + low[0].first.to_string()
                                    : std::to_string(low.size()) + " lowest monomials";
    rep.checks.push_back({"lowest", ok, d});
  }

  {
    // The only monomial one A^{-1} below the top is Y_{i,0} A_{i,r_i}^{-1}.
    const YMonomial first = top * a_monomial(rd, i, rd.r(i)).inverse();
    std::size_t depth_one = 0;
    bool found = false;
    for (const auto& [m, k] : chi.terms()) {
      auto fs = factor_over_A(rd, top, m);
      if (!fs) continue;
      int total = 0;
      for (const auto& f : *fs) total += f.count;
      if (total == 1) {
        ++depth_one;
        found = found || (m == first && k == 1);
      }
    }
    rep.checks.push_back({"first_step", found && depth_one == 1,
                          std::to_string(depth_one) + " monomial(s) at depth one, expected " + first.to_string()});
  }

  rep.checks.push_back(detail::check_factorization(rd, top, chi));
  rep.checks.push_back(detail::check_graph(rd, top, chi));
  return rep;
}

/// Verifies an arbitrary character. A character whose only dominant monomial
/// is a single Y_{i,b} is normalized to b = 0 and checked as a fundamental
/// character; anything else gets the kernel, factorization and graph checks
/// plus a failing "fundamental" entry.
inline VerificationReport verify_character(const RootData& rd, const QCharacter& chi) {
  auto dom = dominant_monomials(chi);
  if (dom.size() == 1 && dom[0].first.factors().size() == 1 && dom[0].first.factors()[0].exponent == 1) {
    const auto f = dom[0].first.factors()[0];
    return verify_fundamental(rd, f.node, chi.shifted(-f.shift));
  }
  VerificationReport rep;
  rep.checks.push_back({"fundamental", false,
                        std::to_string(dom.size()) + " dominant monomial(s); not of the form Y_{i,b}"});
  rep.checks.push_back(detail::check_kernel(rd, chi));
  auto high = highest_terms(rd, chi);
  if (high.size() == 1) {
    rep.checks.push_back(detail::check_factorization(rd, high[0].first, chi));
    rep.checks.push_back(detail::check_graph(rd, high[0].first, chi));
  }
  return rep;
}

}  // namespace qchar
