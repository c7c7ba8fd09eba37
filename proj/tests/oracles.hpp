#pragma once

// Test-only reference computations, written independently of the library
// code paths they check.

#include "asmtk/exact_math.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace asmtk::oracle {

/// Falling-product binomial with rational arithmetic.
inline Integer falling_binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0) return 0;
  Rational value = 1;
  for (std::int64_t t = 0; t < bottom; ++t) {
    value *= Rational(static_cast<long>(top - t));
    value /= Rational(static_cast<long>(t + 1));
  }
  return to_integer(value);
}

/// Laplace expansion along the first row.
inline Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(1, 1);
  Rational total = 0;
  for (std::size_t col = 1; col <= n; ++col) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 2; i <= n; ++i) {
      std::size_t jj = 1;
      for (std::size_t j = 1; j <= n; ++j) {
        if (j == col) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    const Rational term = m(1, col) * cofactor_det(minor);
    total += (col % 2 == 1) ? term : Rational(-term);
  }
  return total;
}

/// Counts monotone triangles with the given bottom row by trying every
/// integer array with entries between the row's extremes and checking the
/// defining inequalities directly.
inline std::int64_t naive_triangle_count(const std::vector<std::int64_t>& bottom) {
  const std::size_t n = bottom.size();
  if (n == 0) return 1;
  const std::int64_t lo = bottom.front();
  const std::int64_t hi = bottom.back();
  std::vector<std::vector<std::int64_t>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i].assign(i + 1, lo);
  a[n - 1] = bottom;
  // Free cells: rows 0..n-2, enumerated as an odometer.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) cells.emplace_back(i, j);
  }
  auto valid = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j + 1 <= i; ++j) {
        if (!(a[i][j] < a[i][j + 1])) return false;
      }
      if (i == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        if (!(a[i][j] <= a[i - 1][j] && a[i - 1][j] <= a[i][j + 1])) return false;
      }
    }
    return true;
  };
  std::int64_t count = 0;
  for (;;) {
    if (valid()) ++count;
    std::size_t c = 0;
    while (c < cells.size()) {
      auto [i, j] = cells[c];
      if (a[i][j] < hi) {
        ++a[i][j];
        break;
      }
      a[i][j] = lo;
      ++c;
    }
    if (c == cells.size()) break;
  }
  return count;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261016);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace asmtk::oracle
