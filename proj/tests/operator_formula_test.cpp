#include "asmtk/operator_formula.hpp"

#include "asmtk/combinatorics.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace asmtk;

namespace {

// The n = 3 expansion as printed, times 2.
constexpr const char* kDisplayedTimesTwo =
    "-3*k1 + k1^2 + 2*k1*k2 - k1^2*k2 - 2*k2^2 + k1*k2^2 + 3*k3 - 4*k1*k3 + k1^2*k3 + 2*k2*k3 "
    "- k2^2*k3 + k3^2 - k1*k3^2 + k2*k3^2";

}  // namespace

TEST(AlphaPoly, SmallCases) {
  EXPECT_EQ(alpha_poly(1).poly().to_string(), "1");
  EXPECT_EQ(alpha_poly(2).poly().to_string(), "-k1 + k2 + 1");
  EXPECT_THROW(alpha_poly(0), std::invalid_argument);
}

TEST(AlphaPoly, ReproducesDisplayedThreeRowExpansion) {
  const Poly displayed = Poly::parse(kDisplayedTimesTwo, 3) * make_rational(1, 2);
  const Poly computed = alpha_poly(3).poly();
  EXPECT_EQ(computed, displayed);
  EXPECT_EQ(computed.term_count(), 14u);
}

TEST(AlphaPoly, TermCountsAndDegreeBound) {
  // Term counts cross-checked with an independent symbolic expansion.
  EXPECT_EQ(alpha_poly(4).poly().term_count(), 108u);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Poly p = alpha_poly(n).poly();
    for (std::size_t v = 1; v <= n; ++v) EXPECT_LE(p.degree_in(VarIndex(v)), n - 1) << n;
  }
}

TEST(AlphaPoly, LimitIsEnforced) {
  FormulaLimits small;
  small.max_n = 3;
  EXPECT_NO_THROW(alpha_poly(3, small));
  EXPECT_THROW(alpha_poly(4, small), LimitError);
}

TEST(AlphaPoly, PairOrderIsImmaterial) {
  for (std::size_t n = 2; n <= 4; ++n) {
    Poly reversed = vandermonde_poly(n);
    for (std::size_t a = n; a >= 1; --a) {
      for (std::size_t b = n; b > a; --b) reversed = apply_pair_operator(reversed, VarIndex(a), VarIndex(b));
    }
    EXPECT_EQ(reversed, alpha_poly(n).poly()) << n;
  }
}

TEST(AlphaEval, Examples) {
  EXPECT_EQ(alpha_eval(Row{1, 2, 3}), 7);
  EXPECT_EQ(alpha_eval(Row{1, 2, 4}), 14);
  EXPECT_EQ(alpha_eval(Row{2, 3, 4}), 7);
  EXPECT_EQ(alpha_eval(Row{2, 2}), 1);
  // Refined counts for n = 3 from rows (1, ..., i-1, i+1, ..., 3).
  EXPECT_EQ(alpha_eval(Row{2, 3}), 2);
  EXPECT_EQ(alpha_eval(Row{1, 3}), 3);
  EXPECT_EQ(alpha_eval(Row{1, 2}), 2);
  EXPECT_THROW(alpha_poly(2).eval(Row{1, 2, 3}), std::invalid_argument);
}

TEST(AlphaEval, MatchesRecursionOnGrid) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const AlphaPolynomial alpha = alpha_poly(n);
    TriangleCounter counter;
    Row row(n);
    std::function<void(std::size_t, std::int64_t)> place = [&](std::size_t j, std::int64_t from) {
      if (j == n) {
        ASSERT_EQ(alpha.eval(row), counter.count(row));
        return;
      }
      for (std::int64_t v = from; v <= static_cast<std::int64_t>(n) + 4; ++v) {
        row[j] = v;
        place(j + 1, v + 1);
      }
    };
    place(0, -2);
  }
}

TEST(AlphaEval, IntegralOffTheCombinatorialDomain) {
  const AlphaPolynomial alpha = alpha_poly(4);
  EXPECT_NO_THROW(alpha.eval(Row{3, 1, 4, 1}));
  EXPECT_NO_THROW(alpha.eval(Row{-7, 0, 0, 2}));
}

TEST(AlphaLastVar, Examples) {
  EXPECT_EQ(alpha_last_var_poly(1).to_string(), "1");
  EXPECT_EQ(alpha_last_var_poly(2).to_string(), "k");
  EXPECT_EQ(alpha_last_var_poly(3).to_string(), "k^2 - 2");
  EXPECT_EQ(alpha_last_var_poly(3).eval(std::vector<std::int64_t>{4}), 14);
  EXPECT_EQ(alpha_last_var_poly(4).to_string(), "7/6*k^3 - 49/6*k");
}

TEST(AlphaLastVar, ParityInK) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Poly p = alpha_last_var_poly(n);
    const std::vector<Poly> negate{-Poly::variable(1, VarIndex(1))};
    const Poly mirrored = substitute(p, negate, 1) * Rational((n % 2 == 1) ? 1 : -1);
    EXPECT_EQ(p, mirrored) << n;
    EXPECT_LE(p.total_degree(), n - 1);
  }
}

TEST(AlphaPoly, SymmetricShiftsActAsBinomials) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const AlphaPolynomial alpha = alpha_poly(n);
    const auto vars = all_vars(n);
    for (std::size_t r = 0; r <= n; ++r) {
      const Poly shifted = apply_elementary_symmetric_shift(alpha.poly(), vars, r);
      const Integer factor = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r));
      for (const Row& point : {Row(n, 0), Row(n, 3)}) {
        Row p = point;
        for (std::size_t v = 0; v < n; ++v) p[v] += static_cast<std::int64_t>(v * v);
        EXPECT_EQ(shifted.eval(p), factor * alpha.eval(p));
      }
    }
  }
}
