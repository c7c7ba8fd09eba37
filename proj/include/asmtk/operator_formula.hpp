#pragma once

// The operator formula for the number of monotone triangles with prescribed
// bottom row:
//
//   alpha(n; k_1..k_n) = prod_{1<=p<q<=n} (id + E_{k_p} Delta_{k_q})
//                        prod_{1<=i<j<=n} (k_j - k_i) / (j - i)
//
// The operators are applied one at a time to a single accumulating
// polynomial, never expanded as an operator sum.

#include "asmtk/exact_math.hpp"
#include "asmtk/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmtk {

struct FormulaLimits {
  /// Largest n for which alpha_poly() will expand the operator formula.
  std::size_t max_n = 7;
};

class LimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// alpha(n; k_1, ..., k_n) as a polynomial in k_1..k_n. Per-variable degree
/// is at most n - 1.
class AlphaPolynomial {
 public:
  AlphaPolynomial(std::size_t n, Poly poly) : n_(n), poly_(std::move(poly)) {}

  std::size_t n() const { return n_; }
  const Poly& poly() const { return poly_; }

  /// Exact value at an integer row; the result is always integral.
  Integer eval(std::span<const std::int64_t> row) const {
    if (row.size() != n_) {
      throw std::invalid_argument("row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(n_));
    }
    const Rational value = poly_.eval(row);
    if (!is_integral(value)) {
      throw std::logic_error("operator formula produced non-integral value " + to_string(value));
    }
    return value.get_num();
  }

 private:
  std::size_t n_;
  Poly poly_;
};

inline AlphaPolynomial alpha_poly(std::size_t n, const FormulaLimits& limits = {}) {
  if (n == 0) throw std::invalid_argument("alpha_poly needs n >= 1");
  if (n > limits.max_n) {
    throw LimitError("alpha_poly: n = " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(limits.max_n));
  }
  Poly p = vandermonde_poly(n);
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) p = apply_pair_operator(p, VarIndex(a), VarIndex(b));
  }
  return AlphaPolynomial(n, std::move(p));
}

/// Value of the operator formula at any integer row. Combinatorially
/// meaningful only for strictly increasing rows.
inline Integer alpha_eval(std::span<const std::int64_t> row, const FormulaLimits& limits = {}) {
  return alpha_poly(row.size(), limits).eval(row);
}

/// alpha(n; 1, 2, ..., n-1, k) as a univariate polynomial in k (arity 1).
inline Poly alpha_last_var_poly(std::size_t n, const FormulaLimits& limits = {}) {
  const AlphaPolynomial alpha = alpha_poly(n, limits);
  std::vector<Poly> images;
  for (std::size_t v = 1; v < n; ++v) images.push_back(Poly::constant(1, static_cast<long>(v)));
  images.push_back(Poly::variable(1, VarIndex(1)));
  return substitute(alpha.poly(), images, 1);
}

}  // namespace asmtk
