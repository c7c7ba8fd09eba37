#include "asmtk/exact_math.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace asmtk;

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(-1, 0), 1);
  EXPECT_EQ(binomial(-2, 3), -4);
  EXPECT_EQ(binomial(7, -1), 0);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, MatchesFallingProductOracle) {
  for (std::int64_t a = -30; a <= 30; ++a) {
    for (std::int64_t b = -2; b <= 30; ++b) {
      ASSERT_EQ(binomial(a, b), oracle::falling_binomial(a, b)) << a << " choose " << b;
    }
  }
}

TEST(Binomial, PascalRule) {
  for (std::int64_t a = -50; a <= 50; ++a) {
    for (std::int64_t b = 0; b <= 50; ++b) {
      ASSERT_EQ(binomial(a, b), binomial(a - 1, b) + binomial(a - 1, b - 1)) << a << "," << b;
    }
  }
}

TEST(Binomial, SignReflection) {
  for (std::int64_t a = -40; a <= 40; ++a) {
    for (std::int64_t b = 0; b <= 40; ++b) {
      ASSERT_EQ(binomial(a, b), sign_power(b) * binomial(b - a - 1, b)) << a << "," << b;
    }
  }
}

TEST(Binomial, ChuVandermonde) {
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t i = 1; i <= 20; ++i) {
      for (std::int64_t j = 1; j <= 20; ++j) {
        Integer sum = 0;
        for (std::int64_t l = 0; l <= j; ++l) sum += binomial(n, j - l) * binomial(-i, l);
        ASSERT_EQ(sum, binomial(n - i, j)) << n << "," << i << "," << j;
      }
    }
  }
}

TEST(Binomial, LargeArgumentsStayExact) {
  // binom(100, 50)
  EXPECT_EQ(to_string(binomial(100, 50)), "100891344545564193334812497256");
}

TEST(RisingFactorial, Examples) {
  EXPECT_EQ(rising_factorial(1, 0), 1);
  EXPECT_EQ(rising_factorial(2, 3), 24);
  EXPECT_EQ(rising_factorial(3, 2), 12);
  EXPECT_EQ(rising_factorial(-2, 3), 0);
  EXPECT_THROW(rising_factorial(1, -1), std::domain_error);
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(factorial(-1), std::domain_error);
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(8, 4)), "2");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_THROW(to_integer(make_rational(1, 2)), std::logic_error);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(det_exact(Matrix(0, 0)), 1);
  EXPECT_EQ(det_exact(Matrix{{2, 3}, {1, 5}}), 7);
  EXPECT_EQ(det_exact(Matrix{{2, -1}, {1, 0}}), 1);
  EXPECT_EQ(det_exact(Matrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det_exact(Matrix{{1, 2}, {2, 4}}), 0);
}

TEST(Determinant, RejectsNonSquare) {
  EXPECT_THROW(det_exact(Matrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, AgreesWithCofactorExpansionOnRandomRationals) {
  for (int round = 0; round < 300; ++round) {
    Matrix m(4, 4);
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t j = 1; j <= 4; ++j) {
        // Plenty of zeros to exercise pivoting.
        const auto num = oracle::uniform(-3, 3);
        const auto den = oracle::uniform(1, 4);
        m(i, j) = make_rational(static_cast<long>(num), static_cast<long>(den));
      }
    }
    ASSERT_EQ(det_exact(m), oracle::cofactor_det(m)) << m;
  }
}

TEST(Matrix, ProductAndIdentity) {
  const Matrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a * Matrix::identity(2), a);
  EXPECT_EQ(a * a, (Matrix{{7, 10}, {15, 22}}));
  EXPECT_THROW(a * Matrix(3, 3), std::invalid_argument);
  EXPECT_THROW(a(0, 1), std::out_of_range);
  EXPECT_EQ(a.to_string(), "[[1, 2]; [3, 4]]");
}
