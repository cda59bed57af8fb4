#include <random>

#include <gtest/gtest.h>

#include "oracles/sl2_oracle.hpp"
#include "qchar/screening.hpp"
#include "qchar/sl2char.hpp"

using namespace qchar;

namespace {

YMonomial Y(Node i, int n, int e = 1) { return YMonomial::variable(i, n, e); }

std::vector<std::pair<int, int>> as_pairs(const StringSet& s) {
  std::vector<std::pair<int, int>> v;
  for (const auto& x : s.strings) v.push_back({x.start, x.length});
  std::sort(v.begin(), v.end());
  return v;
}

QCharacter from_oracle(Node i, const oracle::RankOneChar& c) {
  QCharacter out;
  for (const auto& [e, k] : c) {
    YMonomial m;
    for (auto [s, x] : e) m.multiply_factor(i, s, x);
    out.add(m, k);
  }
  return out;
}

/// m_bar (1 + sum M_p) with the full A_{i,.}^{-1}, as used by the engine.
QCharacter lift(const RootData& rd, Node i, const YMonomial& m_bar) {
  std::vector<int> shifts;
  for (const auto& f : m_bar.factors()) shifts.insert(shifts.end(), f.exponent, f.shift);
  QCharacter out;
  for (const auto& [a, c] : sl2_expansion(shifts, rd.r(i))) {
    YMonomial m = m_bar;
    for (int x : a) m *= a_monomial(rd, i, x).inverse();
    out.add(m, c);
  }
  return out;
}

}  // namespace

TEST(StringDecompose, Examples) {
  EXPECT_EQ(as_pairs(string_decompose({0}, 2)), (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(as_pairs(string_decompose({0, 2}, 2)), (std::vector<std::pair<int, int>>{{0, 2}}));
  EXPECT_EQ(as_pairs(string_decompose({0, 0, 2}, 2)), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}}));
  EXPECT_TRUE(string_decompose({}, 2).strings.empty());
  EXPECT_THROW(string_decompose({0}, 0), std::invalid_argument);
}

TEST(StringDecompose, IncongruentClassesSplit) {
  EXPECT_EQ(as_pairs(string_decompose({0, 1, 2, 3}, 2)), (std::vector<std::pair<int, int>>{{0, 2}, {1, 2}}));
}

TEST(StringDecompose, GeneralPositionDefinition) {
  EXPECT_TRUE(in_general_position({0, 3}, {2, 1}, 2));   // containment
  EXPECT_FALSE(in_general_position({0, 1}, {2, 1}, 2));  // adjacent: union is a string
  EXPECT_FALSE(in_general_position({0, 2}, {2, 2}, 2));  // overlap
  EXPECT_TRUE(in_general_position({0, 1}, {4, 1}, 2));   // gap
  EXPECT_TRUE(in_general_position({0, 1}, {1, 1}, 2));   // different classes
}

TEST(StringDecompose, AgreesWithExhaustiveSearch) {
  std::mt19937 rng(2024);
  for (int step : {2, 4, 6}) {
    std::uniform_int_distribution<int> pt(0, 4), size(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> shifts;
      const int n = size(rng);
      for (int k = 0; k < n; ++k) shifts.push_back(pt(rng) * step / 2 * (trial % 3 == 0 ? 1 : 2));
      auto good = oracle::general_position_decompositions(shifts, step);
      ASSERT_EQ(good.size(), 1u) << "step " << step;
      EXPECT_EQ(as_pairs(string_decompose(shifts, step)), good[0]);
    }
  }
}

TEST(StringCharacter, Examples) {
  const auto a1 = make_root_data("A", 1);
  QCharacter k1;
  k1.add(Y(1, 0), 1);
  k1.add(Y(1, 2, -1), 1);
  EXPECT_EQ(string_character(1, 0, 1, a1), k1);

  QCharacter k2;
  k2.add(Y(1, 0) * Y(1, 2), 1);
  k2.add(Y(1, 0) * Y(1, 4, -1), 1);
  k2.add(Y(1, 2, -1) * Y(1, 4, -1), 1);
  EXPECT_EQ(string_character(1, 0, 2, a1), k2);

  const auto b2 = make_root_data("B", 2);  // r_1 = 2
  QCharacter r2;
  r2.add(Y(1, 0), 1);
  r2.add(Y(1, 4, -1), 1);
  EXPECT_EQ(string_character(1, 0, 1, b2), r2);
  EXPECT_THROW(string_character(1, 0, 0, a1), std::invalid_argument);
}

TEST(StringCharacter, MatchesClosedFormOracle) {
  for (auto [t, l] : std::vector<std::pair<std::string, int>>{{"A", 1}, {"B", 2}, {"G", 2}}) {
    const auto rd = make_root_data(t, l);
    for (Node i = 1; i <= l; ++i)
      for (int k = 1; k <= 5; ++k) {
        const auto got = string_character(i, -3, k, rd);
        EXPECT_EQ(got, from_oracle(i, oracle::string_char(-3, k, rd.r(i))));
        EXPECT_EQ(got.size(), static_cast<std::size_t>(k + 1));
      }
  }
}

TEST(IrreducibleSl2, Examples) {
  const auto a1 = make_root_data("A", 1);
  EXPECT_EQ(irreducible_sl2_character(1, Y(1, 0), a1), string_character(1, 0, 1, a1));
  const auto c = irreducible_sl2_character(1, Y(1, 0) * Y(1, 4), a1);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c, string_character(1, 0, 1, a1) * string_character(1, 4, 1, a1));
  EXPECT_EQ(irreducible_sl2_character(1, YMonomial{}, a1), QCharacter::one());
}

TEST(IrreducibleSl2, RejectsBadInput) {
  const auto a2 = make_root_data("A", 2);
  EXPECT_THROW(irreducible_sl2_character(1, Y(1, 0, -1), a2), std::invalid_argument);
  EXPECT_THROW(irreducible_sl2_character(1, Y(2, 0), a2), std::invalid_argument);
}

TEST(IrreducibleSl2, KernelAndOracleOnRandomSeeds) {
  std::mt19937 rng(99);
  for (auto [t, l] : std::vector<std::pair<std::string, int>>{{"A", 1}, {"B", 2}, {"G", 2}, {"C", 3}}) {
    const auto rd = make_root_data(t, l);
    for (Node i = 1; i <= l; ++i) {
      const int r = rd.r(i);
      std::uniform_int_distribution<int> pt(-3, 3), size(1, 6);
      for (int trial = 0; trial < 60; ++trial) {
        YMonomial m;
        std::vector<int> shifts;
        const int n = size(rng);
        for (int k = 0; k < n; ++k) {
          const int s = pt(rng) * 2 * r + (trial % 2 ? 0 : r);
          m *= Y(i, s);
          shifts.push_back(s);
        }
        const auto chi = irreducible_sl2_character(i, m, rd);
        oracle::RankOneChar want{{{}, 1}};
        const auto decompositions = oracle::general_position_decompositions(shifts, 2 * r);
        for (const auto& [start, len] : decompositions.at(0))
          want = oracle::multiply(want, oracle::string_char(start, len, r));
        EXPECT_EQ(chi, from_oracle(i, want));
        EXPECT_TRUE(in_kernel(rd, i, lift(rd, i, m))) << t << l << " " << m;
        EXPECT_EQ(chi.coeff(m), 1);
      }
    }
  }
}
