#include <gtest/gtest.h>

#include "oracles/weyl_oracle.hpp"
#include "qchar/rootdata.hpp"

using namespace qchar;

namespace {

struct TypeCase {
  char type;
  int rank;
};

std::vector<TypeCase> all_small_types() {
  std::vector<TypeCase> v;
  for (int l = 1; l <= 7; ++l) v.push_back({'A', l});
  for (int l = 2; l <= 6; ++l) v.push_back({'B', l});
  for (int l = 2; l <= 6; ++l) v.push_back({'C', l});
  for (int l = 4; l <= 7; ++l) v.push_back({'D', l});
  for (int l = 6; l <= 8; ++l) v.push_back({'E', l});
  v.push_back({'F', 4});
  v.push_back({'G', 2});
  return v;
}

std::string case_name(const testing::TestParamInfo<TypeCase>& info) {
  return std::string(1, info.param.type) + std::to_string(info.param.rank);
}

QLaurent q(int e) { return QLaurent::monomial(e); }

}  // namespace

TEST(QLaurent, DifferenceOfSquares) {
  EXPECT_EQ((q(1) + q(-1)) * (q(1) - q(-1)), q(2) - q(-2));
}

TEST(QLaurent, AddZeroIsIdentity) {
  const QLaurent p = q(3) + QLaurent(2) + q(-5);
  EXPECT_EQ(p + QLaurent{}, p);
}

TEST(QLaurent, QuantumTwoTimesThree) {
  const auto prod = QLaurent::quantum_int(2) * QLaurent::quantum_int(3);
  EXPECT_EQ(prod, q(3) + QLaurent::monomial(1, 2) + QLaurent::monomial(-1, 2) + q(-3));
  EXPECT_EQ(prod.at_one(), 6);
}

TEST(QLaurent, NormalizationDropsZeros) {
  QLaurent p = q(2) - q(2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}

TEST(QLaurent, NegativeQuantumInteger) {
  EXPECT_EQ(QLaurent::quantum_int(-2), -(q(1) + q(-1)));
  EXPECT_TRUE(QLaurent::quantum_int(0).is_zero());
}

TEST(QLaurent, ExactDivision) {
  const QLaurent a = q(2) + QLaurent(1) + q(-2);
  const QLaurent b = q(5) - q(-1) + QLaurent(3);
  auto d = divide_exact(a * b, a);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, b);
  EXPECT_FALSE(divide_exact(a * b + QLaurent(1), a).has_value());
}

TEST(QLaurent, OverflowIsDetected) {
  const QLaurent big = QLaurent::monomial(0, std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + big, std::overflow_error);
  EXPECT_THROW(big * QLaurent(2), std::overflow_error);
}

TEST(RootData, G2Denominator) {
  EXPECT_EQ(make_root_data("G", 2).d_poly(), q(6) + q(-6));
}

TEST(RootData, A1Data) {
  const auto rd = make_root_data("A", 1);
  EXPECT_EQ(rd.cartan(1, 1), 2);
  EXPECT_EQ(rd.r_values(), std::vector<int>{1});
  EXPECT_EQ(rd.d_poly(), q(1) + q(-1));
  EXPECT_EQ(rd.rh(), 2);
}

TEST(RootData, A2BarAndCoxeter) {
  const auto rd = make_root_data("A", 2);
  EXPECT_EQ(rd.bar(1), 2);
  EXPECT_EQ(rd.bar(2), 1);
  EXPECT_EQ(rd.h_dual(), 3);
  EXPECT_EQ(rd.r_dual(), 1);
}

TEST(RootData, ListedDenominators) {
  EXPECT_EQ(make_root_data("A", 3).d_poly(), QLaurent::quantum_int(4));
  EXPECT_EQ(make_root_data("C", 3).d_poly(), q(4) + q(-4));
  EXPECT_EQ(make_root_data("D", 5).d_poly(), (q(1) + q(-1)) * (q(4) + q(-4)));
  EXPECT_EQ(make_root_data("E", 6).d_poly(), QLaurent::quantum_int(3) * (q(6) + q(-6)));
  EXPECT_EQ(make_root_data("E", 7).d_poly(), (q(1) + q(-1)) * (q(9) + q(-9)));
  EXPECT_EQ(make_root_data("E", 8).d_poly(), (q(1) + q(-1)) * (q(15) + q(-15)));
  EXPECT_EQ(make_root_data("F", 4).d_poly(), q(9) + q(-9));
  EXPECT_EQ(make_root_data("B", 3).d_poly(), q(5) + q(-5));
}

TEST(RootData, InvalidTypesRejected) {
  EXPECT_THROW(make_root_data("B", 1), std::invalid_argument);
  EXPECT_THROW(make_root_data("C", 1), std::invalid_argument);
  EXPECT_THROW(make_root_data("D", 3), std::invalid_argument);
  EXPECT_THROW(make_root_data("E", 5), std::invalid_argument);
  EXPECT_THROW(make_root_data("E", 9), std::invalid_argument);
  EXPECT_THROW(make_root_data("F", 5), std::invalid_argument);
  EXPECT_THROW(make_root_data("G", 3), std::invalid_argument);
  EXPECT_THROW(make_root_data("A", 0), std::invalid_argument);
  EXPECT_THROW(make_root_data("X", 2), std::invalid_argument);
}

class RootDataInvariants : public testing::TestWithParam<TypeCase> {};

TEST_P(RootDataInvariants, CartanMatchesOracle) {
  const auto [t, l] = GetParam();
  const auto rd = make_root_data(std::string(1, t), l);
  EXPECT_EQ(rd.cartan_matrix(), oracle::cartan(t, l));
}

TEST_P(RootDataInvariants, SymmetrizerAndLacing) {
  const auto [t, l] = GetParam();
  const auto rd = make_root_data(std::string(1, t), l);
  EXPECT_EQ(rd.r_values(), oracle::root_lengths(t, l));
  for (Node i = 1; i <= l; ++i)
    for (Node j = 1; j <= l; ++j) EXPECT_EQ(rd.r(i) * rd.cartan(i, j), rd.r(j) * rd.cartan(j, i));
  EXPECT_EQ(rd.r_dual(), oracle::root_system(t, l).lacing());
}

TEST_P(RootDataInvariants, InverseIdentity) {
  const auto [t, l] = GetParam();
  const auto rd = make_root_data(std::string(1, t), l);
  for (Node i = 1; i <= l; ++i)
    for (Node j = 1; j <= l; ++j) {
      QLaurent s;
      for (Node k = 1; k <= l; ++k) s += rd.cartan_q(i, k) * rd.c_tilde_prime(k, j);
      EXPECT_EQ(s, i == j ? rd.d_poly() : QLaurent{}) << i << "," << j;
    }
}

TEST_P(RootDataInvariants, PositivityPalindromeDegree) {
  const auto [t, l] = GetParam();
  const auto rd = make_root_data(std::string(1, t), l);
  EXPECT_TRUE(rd.d_poly().is_palindromic());
  EXPECT_TRUE(rd.d_poly().has_nonnegative_coefficients());
  for (Node i = 1; i <= l; ++i)
    for (Node j = 1; j <= l; ++j) {
      const auto& c = rd.c_tilde_prime(i, j);
      EXPECT_FALSE(c.is_zero());
      EXPECT_TRUE(c.is_palindromic());
      EXPECT_TRUE(c.has_nonnegative_coefficients());
      EXPECT_LT(c.max_exponent(), rd.d_poly().max_exponent());
    }
}

TEST_P(RootDataInvariants, PAndSCoefficients) {
  const auto [t, l] = GetParam();
  const auto rd = make_root_data(std::string(1, t), l);
  for (Node i = 1; i <= l; ++i) {
    EXPECT_EQ(rd.s_poly(i), rd.d_poly() * QLaurent::quantum_int(rd.r(i)));
    for (Node j = 1; j <= l; ++j) EXPECT_EQ(rd.p_poly(i, j), QLaurent::quantum_int(rd.r(i)) * rd.c_tilde_prime(i, j));
  }
}

TEST_P(RootDataInvariants, DualCoxeterMatchesOracle) {
  const auto [t, l] = GetParam();
  const auto rd = make_root_data(std::string(1, t), l);
  const auto rs = oracle::root_system(t, l);
  EXPECT_EQ(rd.h_dual(), rs.dual_coxeter());
  EXPECT_EQ(rd.positive_roots().size(), rs.positive.size());
  EXPECT_EQ(rd.highest_root(), rs.highest_root());
}

TEST_P(RootDataInvariants, BarIsInvolutionWithExpectedSupport) {
  const auto [t, l] = GetParam();
  const auto rd = make_root_data(std::string(1, t), l);
  bool nontrivial = false;
  for (Node i = 1; i <= l; ++i) {
    EXPECT_EQ(rd.bar(rd.bar(i)), i);
    nontrivial = nontrivial || rd.bar(i) != i;
  }
  const bool expect = (t == 'A' && l > 1) || (t == 'D' && l % 2 == 1) || (t == 'E' && l == 6);
  EXPECT_EQ(nontrivial, expect);
}

INSTANTIATE_TEST_SUITE_P(Types, RootDataInvariants, testing::ValuesIn(all_small_types()), case_name);

TEST(RootData, BarAgainstWeylGroupBruteForce) {
  for (auto [t, l] : std::vector<TypeCase>{{'A', 2}, {'A', 3}, {'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'D', 5}, {'G', 2}, {'F', 4}, {'E', 6}}) {
    const auto rd = make_root_data(std::string(1, t), l);
    const auto bar = oracle::bar_by_weyl_group(oracle::root_system(t, l));
    for (Node i = 1; i <= l; ++i) EXPECT_EQ(rd.bar(i), bar[i - 1]) << t << l << " node " << i;
  }
}

TEST(RootData, KnownDualCoxeterNumbers) {
  EXPECT_EQ(make_root_data("G", 2).h_dual(), 4);
  EXPECT_EQ(make_root_data("F", 4).h_dual(), 9);
  EXPECT_EQ(make_root_data("E", 8).h_dual(), 30);
  EXPECT_EQ(make_root_data("B", 3).h_dual(), 5);
  EXPECT_EQ(make_root_data("C", 3).h_dual(), 4);
  EXPECT_EQ(make_root_data("G", 2).rh(), 12);
}

TEST(RootData, A2CTildePrimeClosedForm) {
  const auto rd = make_root_data("A", 2);
  EXPECT_EQ(rd.c_tilde_prime(1, 1), q(1) + q(-1));
  EXPECT_EQ(rd.c_tilde_prime(1, 2), QLaurent(1));
}

TEST(Oracle, FreudenthalDimensions) {
  auto dim = [](char t, int l, int i) {
    const auto rs = oracle::root_system(t, l);
    oracle::Vec w(l, 0);
    w[i - 1] = 1;
    long long d = 0;
    for (const auto& [v, m] : oracle::classical_character(rs, w)) d += m;
    return d;
  };
  EXPECT_EQ(dim('G', 2, 1), 7);
  EXPECT_EQ(dim('G', 2, 2), 14);
  EXPECT_EQ(dim('B', 3, 1), 7);
  EXPECT_EQ(dim('B', 3, 3), 8);
  EXPECT_EQ(dim('C', 3, 2), 14);
  EXPECT_EQ(dim('F', 4, 4), 26);
  EXPECT_EQ(dim('F', 4, 1), 52);
  EXPECT_EQ(dim('E', 6, 1), 27);
  EXPECT_EQ(dim('D', 4, 2), 28);
}
