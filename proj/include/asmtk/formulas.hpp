#pragma once

// Closed-form counts and the integer matrices used to pin down the refined
// ASM numbers. Matrix indices are 1-based.

#include "asmtk/exact_math.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmtk {

namespace detail {

inline std::int64_t as_signed(std::size_t x) { return static_cast<std::int64_t>(x); }

// prod_{j=1}^{m} (3j-2)! / (n+j-1)!
inline Rational asm_product(std::size_t m, std::size_t n) {
  Integer num = 1;
  Integer den = 1;
  for (std::size_t j = 1; j <= m; ++j) {
    num *= factorial(3 * as_signed(j) - 2);
    den *= factorial(as_signed(n + j) - 1);
  }
  return make_rational(num, den);
}

}  // namespace detail

/// Number of n x n alternating sign matrices,
/// prod_{j=1}^{n} (3j-2)! / (n+j-1)!.
inline Integer asm_total(std::size_t n) {
  if (n < 1) throw std::invalid_argument("asm_total needs n >= 1");
  return to_integer(detail::asm_product(n, n));
}

/// Number of n x n ASMs whose first-row 1 is in column i:
/// (i)_{n-1} (1+n-i)_{n-1} / (n-1)! * prod_{j=1}^{n-1} (3j-2)! / (n+j-1)!,
/// with (a)_m the m-factor rising factorial.
inline Integer refined_formula(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw std::out_of_range("refined_formula: i = " + std::to_string(i) + " outside 1.." +
                            std::to_string(n));
  }
  using detail::as_signed;
  const Integer rising = rising_factorial(as_signed(i), as_signed(n) - 1) *
                         rising_factorial(as_signed(n + 1 - i), as_signed(n) - 1);
  const Rational value =
      make_rational(rising, factorial(as_signed(n) - 1)) * detail::asm_product(n - 1, n);
  return to_integer(value);
}

inline std::vector<Integer> refined_table(std::size_t n) {
  std::vector<Integer> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(refined_formula(n, i));
  return out;
}

/// sum_i A_{n,i} binom(i+k-n-1, i-1); equals alpha(n; 1, ..., n-1, k).
inline Integer lemma_k_rhs(std::size_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("lemma_k_rhs needs n >= 1");
  const auto sn = detail::as_signed(n);
  Integer sum = 0;
  for (std::int64_t i = 1; i <= sn; ++i) {
    sum += refined_formula(n, static_cast<std::size_t>(i)) * binomial(i + k - sn - 1, i - 1);
  }
  return sum;
}

/// Number of n x k sign matrices with alternating rows and columns, row sums
/// 1, columns n..k-1 summing to 0 (first non-zero +1) and all other columns
/// summing to 1. The common product factor is pulled out of the sum.
inline Integer side_formula(std::size_t n, std::size_t k) {
  if (n < 1) throw std::invalid_argument("side_formula needs n >= 1");
  if (k < n) throw std::invalid_argument("side_formula needs k >= n");
  using detail::as_signed;
  const auto sn = as_signed(n);
  const auto sk = as_signed(k);
  Rational sum = 0;
  const Integer denominator = factorial(sn - 1);
  for (std::int64_t i = 1; i <= sn; ++i) {
    const Integer rising = rising_factorial(i, sn - 1) * rising_factorial(1 + sn - i, sn - 1);
    sum += make_rational(rising * binomial(i + sk - sn - 1, i - 1), denominator);
  }
  return to_integer(detail::asm_product(n - 1, n) * sum);
}

/// n x n matrix ((-1)^{j+1} binom(2n-i-1, n-i-j+1)); the refined ASM vector
/// is a fixed point of it.
inline Matrix eigen_matrix(std::size_t n) {
  const auto sn = detail::as_signed(n);
  Matrix m(n, n);
  for (std::int64_t i = 1; i <= sn; ++i) {
    for (std::int64_t j = 1; j <= sn; ++j) {
      m(i, j) = sign_power(j + 1) * binomial(2 * sn - i - 1, sn - i - j + 1);
    }
  }
  return m;
}

/// (binom(i+j, j-1) + delta_{ij}) for 1 <= i, j <= size.
inline Matrix andrews_matrix(std::size_t size) {
  const auto s = detail::as_signed(size);
  Matrix m(size, size);
  for (std::int64_t i = 1; i <= s; ++i) {
    for (std::int64_t j = 1; j <= s; ++j) {
      m(i, j) = binomial(i + j, j - 1) + (i == j ? 1 : 0);
    }
  }
  return m;
}

/// Descending plane partitions with parts at most n - 1, via the Andrews
/// determinant of size n - 2.
inline Integer dpp_determinant(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dpp_determinant needs n >= 2");
  return to_integer(det_exact(andrews_matrix(n - 2)));
}

/// The (n-1) x (n-1) matrices of the rank argument:
///   R      = (binom(n+j-i-1, j-i)),  R_inv = ((-1)^{i+j} binom(n, j-i)),
///   B      = ((-1)^{j+1} binom(2n-i-2, n-i-j-1) + delta_{ij}),
///   B_star = (binom(i+j, j-1)) with the last row zeroed.
/// They satisfy R_inv B R = B_star + I.
struct ConjugationMatrices {
  Matrix R;
  Matrix R_inv;
  Matrix B;
  Matrix B_star;
};

inline ConjugationMatrices conjugation_matrices(std::size_t n) {
  if (n < 2) throw std::invalid_argument("conjugation_matrices needs n >= 2");
  const auto sn = detail::as_signed(n);
  const std::size_t size = n - 1;
  ConjugationMatrices out{Matrix(size, size), Matrix(size, size), Matrix(size, size),
                          Matrix(size, size)};
  for (std::int64_t i = 1; i < sn; ++i) {
    for (std::int64_t j = 1; j < sn; ++j) {
      out.R(i, j) = binomial(sn + j - i - 1, j - i);
      out.R_inv(i, j) = sign_power(i + j) * binomial(sn, j - i);
      out.B(i, j) = sign_power(j + 1) * binomial(2 * sn - i - 2, sn - i - j - 1) + (i == j ? 1 : 0);
      out.B_star(i, j) = (i == sn - 1) ? Integer(0) : binomial(i + j, j - 1);
    }
  }
  return out;
}

}  // namespace asmtk
