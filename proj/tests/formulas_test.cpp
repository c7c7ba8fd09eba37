#include "asmtk/formulas.hpp"

#include "asmtk/combinatorics.hpp"

#include <gtest/gtest.h>

using namespace asmtk;

TEST(AsmTotal, KnownValues) {
  const std::vector<std::string> expected{"1",     "2",        "7",         "42",          "429",
                                          "7436",  "218348",   "10850216",  "911835460",   "129534272700"};
  for (std::size_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(to_string(asm_total(n)), expected[n - 1]);
  EXPECT_THROW(asm_total(0), std::invalid_argument);
}

TEST(RefinedFormula, Examples) {
  EXPECT_EQ(refined_formula(1, 1), 1);
  EXPECT_EQ(refined_formula(2, 1), 1);
  EXPECT_EQ(refined_formula(3, 2), 3);
  EXPECT_EQ(refined_formula(4, 1), 7);
  EXPECT_EQ(refined_table(5), (std::vector<Integer>{42, 105, 135, 105, 42}));
  EXPECT_THROW(refined_formula(3, 0), std::out_of_range);
  EXPECT_THROW(refined_formula(3, 4), std::out_of_range);
}

TEST(RefinedFormula, SumSymmetryAndStacking) {
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto row = refined_table(n);
    Integer sum = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      sum += row[i - 1];
      EXPECT_EQ(row[i - 1], row[n - i]);
    }
    EXPECT_EQ(sum, asm_total(n)) << n;
    if (n >= 2) {
      EXPECT_EQ(row.front(), asm_total(n - 1)) << n;
    }
  }
}

TEST(LemmaKRhs, Examples) {
  EXPECT_EQ(lemma_k_rhs(3, 3), 7);
  EXPECT_EQ(lemma_k_rhs(3, 4), 14);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(lemma_k_rhs(n, static_cast<std::int64_t>(n)), asm_total(n));
  // Odd in k for even n.
  EXPECT_EQ(lemma_k_rhs(4, -4), -lemma_k_rhs(4, 4));
}

TEST(SideFormula, Examples) {
  EXPECT_EQ(side_formula(2, 3), 3);
  EXPECT_EQ(side_formula(1, 2), 1);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(side_formula(n, n), asm_total(n));
  EXPECT_THROW(side_formula(3, 2), std::invalid_argument);
}

TEST(SideFormula, FrozenTable) {
  // Triangle counts with bottom row (1, ..., n-1, k), k = n..7.
  const std::vector<std::vector<long>> expected{
      {1, 1, 1, 1, 1, 1, 1}, {2, 3, 4, 5, 6, 7}, {7, 14, 23, 34, 47}, {42, 105, 203, 343}};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = n; k <= 7; ++k) {
      EXPECT_EQ(side_formula(n, k), expected[n - 1][k - n]) << n << "," << k;
      EXPECT_EQ(lemma_k_rhs(n, static_cast<std::int64_t>(k)), expected[n - 1][k - n]);
    }
  }
}

TEST(EigenMatrix, Examples) {
  EXPECT_EQ(eigen_matrix(1), (Matrix{{1}}));
  EXPECT_EQ(eigen_matrix(2), (Matrix{{2, -1}, {1, 0}}));
  EXPECT_EQ(eigen_matrix(3)(1, 1), 6);
}

TEST(EigenMatrix, FixesRefinedVector) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<Rational> v;
    for (const auto& x : refined_table(n)) v.emplace_back(x);
    EXPECT_EQ(eigen_matrix(n).apply(v), v) << n;
  }
}

TEST(EigenMatrix, FixedSpaceIsOneDimensional) {
  // rank(M - I) = n - 1 exactly: some (n-1)-minor is nonzero, the full
  // determinant vanishes.
  for (std::size_t n = 2; n <= 10; ++n) {
    const Matrix shifted = eigen_matrix(n) - Matrix::identity(n);
    EXPECT_EQ(det_exact(shifted), 0);
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 2; i <= n; ++i) {
      for (std::size_t j = 2; j <= n; ++j) minor(i - 1, j - 1) = shifted(i, j);
    }
    EXPECT_NE(det_exact(minor), 0) << n;
  }
}

TEST(Dpp, Examples) {
  EXPECT_EQ(dpp_determinant(2), 1);
  EXPECT_EQ(dpp_determinant(3), 2);
  EXPECT_EQ(dpp_determinant(4), 7);
  EXPECT_EQ(andrews_matrix(2), (Matrix{{2, 3}, {1, 5}}));
  EXPECT_THROW(dpp_determinant(1), std::invalid_argument);
}

TEST(Dpp, EqualsAsmCounts) {
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_EQ(dpp_determinant(n), asm_total(n - 1)) << n;
}

TEST(Conjugation, Matrices) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto m = conjugation_matrices(n);
    const Matrix id = Matrix::identity(n - 1);
    EXPECT_EQ(m.R * m.R_inv, id) << n;
    EXPECT_EQ(m.R_inv * m.B * m.R, m.B_star + id) << n;
    for (std::size_t j = 1; j < n; ++j) EXPECT_EQ(m.B_star(n - 1, j), 0);
    EXPECT_EQ(det_exact(m.B), asm_total(n - 1)) << n;
  }
}

TEST(Conjugation, SmallCase) {
  const auto m = conjugation_matrices(3);
  EXPECT_EQ(m.B, (Matrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(det_exact(m.B), 2);
  EXPECT_EQ(conjugation_matrices(2).B, (Matrix{{1}}));
  EXPECT_THROW(conjugation_matrices(1), std::invalid_argument);
}
