#pragma once

// Exact integer/rational arithmetic, generalized binomials and dense
// rational matrices. Everything here is a pure function of its arguments.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmtk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical decimal text of an integer.
inline std::string to_string(const Integer& value) { return value.get_str(); }

/// Canonical "num/den" text of a rational; the denominator is omitted when 1.
inline std::string to_string(const Rational& value) { return value.get_str(); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& value) {
  return value.get_den() == 1;
}

/// Extracts the integer value of an integral rational; throws otherwise.
inline Integer to_integer(const Rational& value) {
  if (!is_integral(value)) {
    throw std::logic_error("expected an integral value, got " + to_string(value));
  }
  return value.get_num();
}

/// Generalized binomial coefficient.
///
/// Zero for a negative lower argument; otherwise the falling product
/// top (top-1) ... (top-bottom+1) / bottom!, which is also defined for a
/// negative upper argument.
inline Integer binomial(const Integer& top, std::int64_t bottom) {
  if (bottom < 0) return 0;
  Integer result;
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(),
             static_cast<unsigned long>(bottom));
  return result;
}

inline Integer binomial(std::int64_t top, std::int64_t bottom) {
  return binomial(Integer(static_cast<long>(top)), bottom);
}

inline Integer factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

/// Rising factorial a (a+1) ... (a+n-1) with n factors; (a)_0 = 1.
inline Integer rising_factorial(const Integer& a, std::int64_t n) {
  if (n < 0) throw std::domain_error("rising factorial with negative length");
  Integer result = 1;
  Integer factor = a;
  for (std::int64_t t = 0; t < n; ++t) {
    result *= factor;
    ++factor;
  }
  return result;
}

inline Integer rising_factorial(std::int64_t a, std::int64_t n) {
  return rising_factorial(Integer(static_cast<long>(a)), n);
}

/// (-1)^e as an integer.
inline Integer sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// Dense rows x cols matrix of rationals. Indices are 1-based, matching the
/// subscripts of the matrices built in formulas.hpp.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[index(i, j)];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[index(i, j)];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t t = 0; t < out.entries_.size(); ++t) out.entries_[t] += b.entries_[t];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t t = 0; t < out.entries_.size(); ++t) out.entries_[t] -= b.entries_[t];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 1; i <= a.rows_; ++i) {
      for (std::size_t l = 1; l <= a.cols_; ++l) {
        const Rational& left = a(i, l);
        if (left == 0) continue;
        for (std::size_t j = 1; j <= b.cols_; ++j) out(i, j) += left * b(l, j);
      }
    }
    return out;
  }

  std::vector<Rational> apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 1; i <= rows_; ++i) {
      for (std::size_t j = 1; j <= cols_; ++j) out[i - 1] += (*this)(i, j) * v[j - 1];
    }
    return out;
  }

  /// Rows separated by "; ", entries by ", ", e.g. "[[2, -1]; [1, 0]]".
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 1; i <= rows_; ++i) {
      if (i > 1) out += "; ";
      out += "[";
      for (std::size_t j = 1; j <= cols_; ++j) {
        if (j > 1) out += ", ";
        out += asmtk::to_string((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw std::out_of_range("matrix index out of range");
    }
    return (i - 1) * cols_ + (j - 1);
  }

  void require_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw std::invalid_argument("matrix shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  return os << m.to_string();
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The 0x0 determinant is 1.
inline Rational det_exact(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  Rational previous = 1;
  int sign = 1;
  for (std::size_t k = 1; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot <= n && m(pivot, k) == 0) ++pivot;
      if (pivot > n) return 0;
      for (std::size_t j = 1; j <= n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i <= n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n, n);
}

}  // namespace asmtk
