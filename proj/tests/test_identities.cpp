#include <gtest/gtest.h>

#include "reference_tables.hpp"
#include "test_support.hpp"

namespace tornheim {
namespace {

using testing::combo;

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(2, 0, 2));
  EXPECT_FALSE(is_admissible(3, 0, 1));
  EXPECT_TRUE(is_admissible(0, 0, 3));
  EXPECT_FALSE(is_admissible(1, 1, 0));
  EXPECT_FALSE(is_admissible(0, 0, 2));
  EXPECT_THROW(require_admissible(5, 0, 1), DomainError);
}

TEST(HuardExpand, Examples) {
  using V = std::vector<std::pair<int, BigInteger>>;
  EXPECT_EQ(huard_expand(5, 2, 1), (V{{1, 10}, {2, 5}, {3, 3}, {4, 2}, {5, 1}}));
  EXPECT_EQ(huard_expand(1, 1, 4), (V{{1, 2}}));
  EXPECT_EQ(huard_expand(4, 4, 0), (V{{1, 40}, {2, 20}, {3, 8}, {4, 2}}));
  EXPECT_THROW(huard_expand(3, 0, 1), DomainError);
}

TEST(HuardExpand, WeightEightTable) {
  for (const auto& row : testing::weight8_expansions()) {
    std::vector<int> got(6, 0);
    for (const auto& [i, c] : huard_expand(row.m, row.k, row.n)) got[i - 1] = static_cast<int>(c.get_si());
    EXPECT_EQ(got, row.coefficients) << row.m << row.k << row.n;
  }
}

TEST(HuardExpand, NonNegativeAndSymmetric) {
  for (int N = 3; N <= 16; ++N) {
    for (int m = 0; m <= N; ++m) {
      for (int k = 0; m + k <= N; ++k) {
        const int n = N - m - k;
        if (!is_admissible(m, k, n) || (m == 0 && k == 0)) continue;
        auto e = huard_expand(m, k, n);
        EXPECT_EQ(e, huard_expand(k, m, n));
        for (const auto& [i, c] : e) {
          EXPECT_GE(c, 0);
          EXPECT_GE(i, 1);
          EXPECT_LE(i, N - 1);
        }
      }
    }
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(known_closed_form(1, 0, 3)->value, combo({{"zeta(4)", "1/4"}}));
  EXPECT_EQ(known_closed_form(2, 0, 3)->value, combo({{"zeta(5)", "-11/2"}, {"zeta(2)*zeta(3)", "3"}}));
  EXPECT_EQ(known_closed_form(4, 0, 4)->value, combo({{"zeta(8)", "1/12"}}));
  EXPECT_EQ(known_closed_form(1, 1, 1)->value, combo({{"zeta(3)", "2"}}));
  EXPECT_EQ(known_closed_form(1, 0, 2)->value, combo({{"zeta(3)", "1"}}));
  EXPECT_FALSE(known_closed_form(6, 0, 2).has_value());
  EXPECT_FALSE(known_closed_form(3, 2, 5).has_value());
}

TEST(ClosedForm, OddWeightAgainstDirectSum) {
  NumericContext ctx(15);
  ComboEvaluator ev(ctx);
  for (auto [m, n] : {std::pair{2, 3}, {3, 2}, {4, 3}, {2, 5}, {5, 4}}) {
    BigReal exact = ev.evaluate(known_closed_form(m, 0, n)->value);
    EXPECT_LT(testing::abs_diff(exact, oracle::tornheim_direct(m, 0, n, ctx)), 1e-12) << m << "," << n;
  }
}

TEST(ClosedForm, Symmetric) {
  for (int N = 3; N <= 14; ++N) {
    for (int m = 0; m <= N; ++m) {
      for (int k = 0; m + k <= N; ++k) {
        const int n = N - m - k;
        if (!is_admissible(m, k, n)) continue;
        auto a = known_closed_form(m, k, n), b = known_closed_form(k, m, n);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
          EXPECT_EQ(a->value, b->value);
        }
      }
    }
  }
}

TEST(ClosedForm, OddWeightAgreesWithEuler) {
  for (int m = 2; m <= 12; ++m) {
    for (int n = 2; n <= 12; ++n) {
      if ((m + n) % 2 == 0) continue;
      auto sum = known_closed_form(m, 0, n)->value + known_closed_form(n, 0, m)->value;
      EXPECT_EQ(sum, euler_relation(m, n).rhs) << m << "," << n;
    }
  }
}

TEST(ClosedForm, ProductsAtOddWeightThroughExpansion) {
  for (int N = 5; N <= 25; N += 2) {
    for (int m = 2; 2 * m <= N + 1 && N - m >= 2; ++m) {
      const int k = N - m;
      SymbolicCombo via;
      for (const auto& [i, c] : huard_expand(m, k, 0)) via += known_closed_form(i, 0, N - i)->value * BigRational(c);
      EXPECT_EQ(via, zeta_pair(m, k)) << m << "," << k;
    }
  }
}

TEST(EulerRelation, Examples) {
  EXPECT_EQ(euler_relation(2, 4).rhs, combo({{"zeta(6)", "3/4"}}));
  EXPECT_EQ(euler_relation(3, 5).rhs, combo({{"zeta(3)*zeta(5)", "1"}, {"zeta(8)", "-1"}}));
  EXPECT_EQ(euler_relation(2, 6).rhs, combo({{"zeta(8)", "2/3"}}));
  EXPECT_EQ(euler_relation(2, 6).lhs.size(), 2u);
  EXPECT_THROW(euler_relation(1, 4), DomainError);
}

TEST(GranvilleRelation, ChecksAgainstTables) {
  auto r4 = granville_relation(4);
  ASSERT_EQ(r4.lhs.size(), 2u);
  EXPECT_EQ(known_closed_form(1, 0, 3)->value + known_closed_form(2, 0, 2)->value, r4.rhs);

  SymbolicCombo s6;
  for (const auto& row : testing::weight6_table())
    if (row.k == 0) s6 += testing::combo(row);
  EXPECT_EQ(s6, granville_relation(6).rhs);

  SymbolicCombo s8;
  for (const auto& row : testing::weight8_coefficients())
    if (row.k == 0) s8 += testing::combo(row);
  EXPECT_EQ(s8, granville_relation(8).rhs);
  EXPECT_THROW(granville_relation(2), DomainError);
}

}  // namespace
}  // namespace tornheim
