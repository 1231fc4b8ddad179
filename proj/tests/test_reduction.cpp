#include <gtest/gtest.h>

#include <set>

#include "reference_tables.hpp"
#include "test_support.hpp"

namespace tornheim {
namespace {

using testing::combo;

void expect_table(int N, const std::vector<testing::ReferenceRow>& ref) {
  auto rows = weight_table(N);
  ASSERT_EQ(rows.size(), ref.size()) << "weight " << N;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].index, (TornheimIndex{ref[i].m, ref[i].k, ref[i].n}));
    EXPECT_EQ(rows[i].combo, testing::combo(ref[i])) << rows[i].index.to_string() << " = " << rows[i].combo.to_text();
  }
}

TEST(WeightTable, Weight3) { expect_table(3, testing::weight3_table()); }
TEST(WeightTable, Weight4) { expect_table(4, testing::weight4_table()); }
TEST(WeightTable, Weight6) { expect_table(6, testing::weight6_table()); }

TEST(WeightTable, Weight8) {
  auto rows = weight_table(8);
  const auto& ref = testing::weight8_coefficients();
  ASSERT_EQ(rows.size(), ref.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].index, (TornheimIndex{ref[i].m, ref[i].k, ref[i].n}));
    EXPECT_EQ(rows[i].combo, testing::combo(ref[i])) << rows[i].index.to_string();
  }
}

TEST(WeightTable, ZeroZeroOnRequest) {
  auto rows = weight_table(8, true);
  ASSERT_EQ(rows.size(), 22u);
  EXPECT_EQ(rows.front().combo, combo({{"zeta(7)", "1"}, {"zeta(8)", "-1"}}));
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(3, 2, 5).combo, testing::combo(testing::weight10_example()));
  EXPECT_EQ(reduce(2, 0, 2).combo, combo({{"zeta(4)", "3/4"}}));
  EXPECT_EQ(reduce(3, 0, 5).combo.to_text(), "-187/24*zeta(8) + 5*zeta(3)*zeta(5) + 5/2*T(6,0,2)");
  EXPECT_EQ(reduce(2, 3, 5).combo, reduce(3, 2, 5).combo);
  EXPECT_THROW(reduce(3, 0, 1), DomainError);
}

TEST(Reduce, Weight14List) {
  for (const auto& row : testing::weight14_list()) {
    auto r = reduce(row.m, row.k, row.n);
    EXPECT_EQ(r.combo, testing::combo(row)) << r.index.to_string() << " = " << r.combo.to_text();
  }
}

TEST(Reduce, BasisSumIsItself) {
  for (int N = 8; N <= 24; N += 2) {
    for (int r = 1; r <= basis_count(N); ++r) {
      EXPECT_EQ(reduce(N - 2 * r, 0, 2 * r).combo, SymbolicCombo(ZetaSymbol::t_sum(N - 2 * r, 2 * r), 1));
    }
  }
}

TEST(Reduce, ResultsStayInGeneratingSet) {
  for (int N = 3; N <= 16; ++N) {
    const GeneratingSet g = generating_set(N);
    for (const auto& r : weight_table(N)) EXPECT_TRUE(g.spans(r.combo)) << r.index.to_string();
  }
}

TEST(Reduce, OddWeightIsClosedForm) {
  for (int N = 3; N <= 25; N += 2) {
    for (const auto& r : weight_table(N, true)) {
      EXPECT_FALSE(r.combo.contains_kind(SymbolKind::TBasis)) << r.index.to_string();
      EXPECT_FALSE(r.combo.contains_kind(SymbolKind::YStar));
    }
  }
  for (int N : {4, 6})
    for (const auto& r : weight_table(N, true)) EXPECT_FALSE(r.combo.contains_kind(SymbolKind::TBasis));
}

TEST(Reduce, ZetaNMinusOneOnlyForZeroZero) {
  for (int N = 4; N <= 14; ++N) {
    for (const auto& r : weight_table(N, true)) {
      const bool has = r.combo.coefficient(ZetaSymbol::zeta(N - 1)) != 0;
      EXPECT_EQ(has, r.index.m == 0 && r.index.k == 0) << r.index.to_string();
    }
  }
}

TEST(Reduce, HuardRelationAtWeightEight) {
  auto lhs = reduce(6, 0, 2).combo * BigRational(5) + reduce(5, 0, 3).combo * BigRational(2);
  EXPECT_EQ(lhs, combo({{"zeta(8)", "163/12"}, {"zeta(3)*zeta(5)", "-8"}}));
}

TEST(GeneratingSet, Examples) {
  auto g8 = generating_set(8);
  EXPECT_EQ(g8.basis_sums, (std::vector<ZetaSymbol>{ZetaSymbol::t_sum(6, 2)}));
  EXPECT_TRUE(g8.contains(ZetaSymbol::zeta(8)));
  EXPECT_TRUE(g8.contains(ZetaSymbol::zeta_prod(3, 5)));

  auto g14 = generating_set(14);
  std::set<ZetaSymbol> want = {ZetaSymbol::zeta(14),         ZetaSymbol::zeta_prod(7, 7), ZetaSymbol::zeta_prod(5, 9),
                               ZetaSymbol::zeta_prod(3, 11), ZetaSymbol::t_sum(12, 2),    ZetaSymbol::t_sum(10, 4)};
  for (const auto& s : want) EXPECT_TRUE(g14.contains(s)) << s.to_string();
  EXPECT_EQ(g14.basis_sums.size(), 2u);

  auto g6 = generating_set(6);
  EXPECT_TRUE(g6.basis_sums.empty());
  EXPECT_TRUE(g6.contains(ZetaSymbol::zeta_prod(3, 3)));
  EXPECT_TRUE(generating_set(11).basis_sums.empty());
  EXPECT_THROW(generating_set(2), DomainError);
}

TEST(BasisCounts, FreeUnknownsAreTheBasis) {
  for (int N = 8; N <= 24; N += 2) {
    const WeightSolution& w = weight_solution(N);
    std::vector<ZetaSymbol> free = w.free_unknowns;
    std::sort(free.begin(), free.end());
    EXPECT_EQ(free, generating_set(N).basis_sums) << "weight " << N;
    EXPECT_EQ(static_cast<int>(free.size()), (N - 2) / 6);
  }
}

TEST(BasisInYstar, Examples) {
  for (const auto& row : testing::basis_ystar_rows()) {
    const int N = row.m + row.n;
    EXPECT_EQ(basis_in_ystar(N, row.n / 2), testing::combo(row)) << "T(" << row.m << ",0," << row.n << ")";
  }
  EXPECT_THROW(basis_in_ystar(8, 2), DomainError);
  EXPECT_THROW(basis_in_ystar(9, 1), DomainError);
}

TEST(BasisInYstar, RelationsStayExact) {
  for (int N = 8; N <= 16; N += 2) {
    for (int m = 2; m < N - 1; ++m) {
      const int n = N - m;
      if (n < 2) continue;
      auto lhs = expand_basis(reduce(m, 0, n).combo) + expand_basis(reduce(n, 0, m).combo);
      EXPECT_EQ(lhs, euler_relation(m, n).rhs) << m << "," << n;
    }
    SymbolicCombo g;
    for (int m = 1; m <= N - 2; ++m) g += expand_basis(reduce(m, 0, N - m).combo);
    EXPECT_EQ(g, granville_relation(N).rhs);
  }
}

}  // namespace
}  // namespace tornheim
