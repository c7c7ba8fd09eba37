#pragma once

// Executable checks of the identities behind the refined ASM theorem. Every
// check computes both sides exactly and records them as canonical text; a
// check passes iff the two texts are equal.

#include "asmtk/combinatorics.hpp"
#include "asmtk/exact_math.hpp"
#include "asmtk/formulas.hpp"
#include "asmtk/operator_formula.hpp"
#include "asmtk/poly.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace asmtk {

using CheckParams = std::vector<std::pair<std::string, std::int64_t>>;

struct CheckResult {
  std::string name;
  CheckParams params;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  double elapsed_ms = 0.0;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  ReportSummary summary() const {
    ReportSummary s;
    s.total = checks.size();
    s.passed = static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
    s.failed = s.total - s.passed;
    return s;
  }

  bool all_passed() const { return summary().failed == 0; }
};

namespace detail {

template <typename T>
std::string join_witness(const std::vector<T>& values) {
  std::string out = "[";
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (t > 0) out += ", ";
    if constexpr (std::is_same_v<T, std::string>) {
      out += values[t];
    } else {
      out += to_string(values[t]);
    }
  }
  return out + "]";
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline CheckResult finish(std::string name, CheckParams params, std::string lhs, std::string rhs,
                          const Stopwatch& watch) {
  CheckResult r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.passed = (lhs == rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.elapsed_ms = watch.elapsed_ms();
  return r;
}

inline std::int64_t as_i64(std::size_t x) { return static_cast<std::int64_t>(x); }

// All strictly increasing rows of the given length with entries in [lo, hi].
inline std::vector<Row> increasing_rows(std::size_t length, std::int64_t lo, std::int64_t hi) {
  std::vector<Row> out;
  Row current(length);
  std::function<void(std::size_t, std::int64_t)> place = [&](std::size_t j, std::int64_t from) {
    if (j == length) {
      out.push_back(current);
      return;
    }
    for (std::int64_t v = from; v <= hi; ++v) {
      current[j] = v;
      place(j + 1, v + 1);
    }
  };
  place(0, lo);
  return out;
}

// Row (1, 2, ..., n-1, last).
inline Row staircase_with_last(std::size_t n, std::int64_t last) {
  Row row;
  for (std::size_t v = 1; v < n; ++v) row.push_back(as_i64(v));
  row.push_back(last);
  return row;
}

}  // namespace detail

/// Univariate Laurent polynomial, used while building the q_j sequence.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly from_poly(const Poly& p) {
    if (p.arity() != 1) throw std::invalid_argument("LaurentPoly needs a univariate polynomial");
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out.add(static_cast<int>(e[0]), c);
    return out;
  }

  void add(int exponent, const Rational& c) {
    if (c == 0) return;
    auto& slot = coeffs_[exponent];
    slot += c;
    if (slot == 0) coeffs_.erase(exponent);
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs_) add(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.coeffs_) add(e, -c);
    return *this;
  }

  /// Multiplication by X^shift.
  LaurentPoly shifted(int shift) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + shift, c);
    return out;
  }

  int min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  bool is_polynomial() const { return min_exponent() >= 0; }
  Rational constant_term() const {
    auto it = coeffs_.find(0);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  Poly to_poly() const {
    if (!is_polynomial()) throw std::domain_error("Laurent polynomial has negative powers");
    Poly out(1);
    for (const auto& [e, c] : coeffs_) out.add_term(Exponents{static_cast<std::uint32_t>(e)}, c);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, Rational> coeffs_;
};

namespace detail {

inline Poly univariate_power_of_x_plus_one(std::uint32_t e) {
  return power(Poly::variable(1, VarIndex(1)) + Poly::constant(1, 1), e);
}

}  // namespace detail

/// q_0 = 0, q_{j+1} = (X+1)^{2j+1} - X^j - q_j - q_j X^{-1}, for j <= order.
/// Throws if an intermediate dips below X^{-1}.
inline std::vector<LaurentPoly> q_sequence(std::size_t order) {
  std::vector<LaurentPoly> q{LaurentPoly()};
  for (std::size_t j = 0; j < order; ++j) {
    LaurentPoly next =
        LaurentPoly::from_poly(detail::univariate_power_of_x_plus_one(2 * static_cast<std::uint32_t>(j) + 1));
    next.add(static_cast<int>(j), -1);
    next -= q[j];
    next -= q[j].shifted(-1);
    if (next.min_exponent() < -1) throw std::logic_error("q-sequence left the X^{-1} range");
    q.push_back(std::move(next));
  }
  return q;
}

/// Coefficient of Y^j in XY / ((1 - XY)(1 - (X+1)^2 Y)), i.e.
/// X * sum_{a+b=j-1} X^a (X+1)^{2b}.
inline Poly q_series_coefficient(std::size_t j) {
  Poly out(1);
  if (j == 0) return out;
  for (std::size_t a = 0; a < j; ++a) {
    const std::size_t b = j - 1 - a;
    Poly term = detail::univariate_power_of_x_plus_one(2 * static_cast<std::uint32_t>(b));
    Exponents shift{static_cast<std::uint32_t>(a + 1)};
    Poly monomial(1);
    monomial.add_term(shift, 1);
    out += monomial * term;
  }
  return out;
}

/// p_j = q_j(X) (X+1)^{n-j} / X, for j <= n.
inline Poly p_polynomial(const LaurentPoly& q_j, std::size_t n, std::size_t j) {
  if (j > n) throw std::invalid_argument("p_j is only defined for j <= n");
  const Poly factor = detail::univariate_power_of_x_plus_one(static_cast<std::uint32_t>(n - j));
  const Poly product = q_j.to_poly() * factor;
  return LaurentPoly::from_poly(product).shifted(-1).to_poly();
}

/// e_r(X_1, ..., X_n) in a ring of the given arity.
inline Poly elementary_symmetric(std::size_t arity, std::size_t r) {
  Poly out(arity);
  if (r > arity) return out;
  std::vector<bool> mask(arity, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(r), true);
  std::sort(mask.begin(), mask.end());
  do {
    Exponents e(arity, 0);
    for (std::size_t v = 0; v < arity; ++v) e[v] = mask[v] ? 1 : 0;
    out.add_term(e, 1);
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

/// Operator formula against the triangle recursion on every strictly
/// increasing row with entries in [lo, hi].
inline CheckResult verify_alpha_consistency(std::size_t n, std::int64_t lo, std::int64_t hi) {
  detail::Stopwatch watch;
  const AlphaPolynomial alpha = alpha_poly(n);
  TriangleCounter counter;
  std::vector<Integer> formula;
  std::vector<Integer> brute;
  for (const auto& row : detail::increasing_rows(n, lo, hi)) {
    formula.push_back(alpha.eval(row));
    brute.push_back(counter.count(row));
  }
  return detail::finish("alpha_consistency", {{"n", detail::as_i64(n)}, {"lo", lo}, {"hi", hi}},
                        detail::join_witness(formula), detail::join_witness(brute), watch);
}

/// e_r(E_{k_1}, ..., E_{k_n}) alpha = binom(n, r) alpha as polynomials.
inline CheckResult verify_sym_action(std::size_t n, std::size_t r) {
  detail::Stopwatch watch;
  const AlphaPolynomial alpha = alpha_poly(n);
  const auto vars = all_vars(n);
  const Poly lhs = apply_elementary_symmetric_shift(alpha.poly(), vars, r);
  const Poly rhs = alpha.poly() * Rational(binomial(detail::as_i64(n), detail::as_i64(r)));
  return detail::finish("sym_action", {{"n", detail::as_i64(n)}, {"r", detail::as_i64(r)}},
                        lhs.to_string(), rhs.to_string(), watch);
}

namespace detail {

// Right-hand side of the e_{p-j} specialization with the sign (-1)^j either
// multiplying the whole bracket (as stated) or only binom(n-i, p).
inline Integer e_p_rhs(std::size_t n, std::size_t p, std::size_t j,
                       const std::vector<Integer>& refined, bool sign_on_whole_bracket) {
  const auto sn = as_i64(n);
  const auto sp = as_i64(p);
  const auto sj = as_i64(j);
  Integer total = 0;
  for (std::int64_t i = 1; i <= sn; ++i) {
    Integer tail = 0;
    for (std::int64_t l = 0; l < sj; ++l) {
      tail += binomial(sn, sp - l) * binomial(i + l - 1, l) * sign_power(l - 1);
    }
    const Integer head = binomial(sn - i, sp);
    const Integer bracket =
        sign_on_whole_bracket ? Integer(sign_power(sj) * (head + tail)) : Integer(sign_power(sj) * head + tail);
    total += refined[static_cast<std::size_t>(i - 1)] * bracket;
  }
  return total;
}

inline Integer e_p_lhs(const AlphaPolynomial& alpha, std::size_t p, std::size_t j) {
  const std::size_t n = alpha.n();
  const std::vector<VarIndex> first_vars = [&] {
    auto v = all_vars(n);
    v.pop_back();
    return v;
  }();
  const Poly shifted = apply_elementary_symmetric_shift(alpha.poly(), first_vars, p - j);
  const Row point = staircase_with_last(n, as_i64(n + j));
  return to_integer(shifted.eval(point));
}

}  // namespace detail

/// e_{p-j}(E_{k_1}, ..., E_{k_{n-1}}) alpha at (1, ..., n-1, n+j) against its
/// expression in the refined counts, for all 0 <= j <= p <= n-1. The j = 0
/// cases are the initial step of the induction.
inline CheckResult verify_e_p_specializations(std::size_t n) {
  detail::Stopwatch watch;
  const AlphaPolynomial alpha = alpha_poly(n);
  const std::vector<Integer> refined = refined_counts_brute(n);
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t j = 0; j <= p; ++j) {
      const std::string tag = "(p=" + std::to_string(p) + ",j=" + std::to_string(j) + "): ";
      lhs.push_back(tag + to_string(detail::e_p_lhs(alpha, p, j)));
      rhs.push_back(tag + to_string(detail::e_p_rhs(n, p, j, refined, true)));
    }
  }
  // p = j: alpha(n; 1..n-1, n+j) = sum_i A_{n,i} binom(i+j-1, i-1).
  for (std::size_t j = 0; j < n; ++j) {
    const std::string tag = "(j=" + std::to_string(j) + "): ";
    lhs.push_back(tag + to_string(alpha.eval(detail::staircase_with_last(n, detail::as_i64(n + j)))));
    Integer sum = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      sum += refined[i - 1] * binomial(detail::as_i64(i + j) - 1, detail::as_i64(i) - 1);
    }
    rhs.push_back(tag + to_string(sum));
  }
  return detail::finish("e_p_specializations", {{"n", detail::as_i64(n)}},
                        detail::join_witness(lhs), detail::join_witness(rhs), watch);
}

/// Number of (p, j) cases where moving (-1)^j onto binom(n-i, p) alone
/// breaks the identity. Zero would mean the two sign placements are
/// indistinguishable at this n.
inline std::size_t alternative_sign_placement_mismatches(std::size_t n) {
  const AlphaPolynomial alpha = alpha_poly(n);
  const std::vector<Integer> refined = refined_counts_brute(n);
  std::size_t mismatches = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t j = 0; j <= p; ++j) {
      if (detail::e_p_lhs(alpha, p, j) != detail::e_p_rhs(n, p, j, refined, false)) ++mismatches;
    }
  }
  return mismatches;
}

/// alpha(n; 1, ..., n-1, k) = sum_i A_{n,i} binom(i+k-n-1, i-1) as
/// polynomials in k.
inline CheckResult verify_lemma_k(std::size_t n) {
  detail::Stopwatch watch;
  const Poly lhs = alpha_last_var_poly(n);
  // binom(i+k-n-1, i-1) = prod_{t=0}^{i-2} (k + i-n-1-t) / (i-1)!
  Poly rhs(1);
  const Poly k = Poly::variable(1, VarIndex(1));
  const auto sn = detail::as_i64(n);
  for (std::int64_t i = 1; i <= sn; ++i) {
    Poly falling = Poly::constant(1, 1);
    for (std::int64_t t = 0; t <= i - 2; ++t) {
      falling = falling * (k + Poly::constant(1, static_cast<long>(i - sn - 1 - t)));
    }
    rhs += falling * make_rational(refined_formula(n, static_cast<std::size_t>(i)), factorial(i - 1));
  }
  return detail::finish("lemma_k", {{"n", sn}}, lhs.to_string(), rhs.to_string(), watch);
}

/// alpha(n; k_1, ..., k_n) = (-1)^{n-1} alpha(n; k_2, ..., k_n, k_1 - n).
inline CheckResult verify_shift(std::size_t n) {
  detail::Stopwatch watch;
  const AlphaPolynomial alpha = alpha_poly(n);
  std::vector<Poly> images;
  for (std::size_t v = 2; v <= n; ++v) images.push_back(Poly::variable(n, VarIndex(v)));
  images.push_back(Poly::variable(n, VarIndex(1)) - Poly::constant(n, static_cast<long>(n)));
  const Poly rotated = substitute(alpha.poly(), images, n) * Rational(sign_power(detail::as_i64(n) - 1));
  return detail::finish("shift", {{"n", detail::as_i64(n)}}, alpha.poly().to_string(),
                        rotated.to_string(), watch);
}

/// alpha(n; k) = alpha(n; -k_n, ..., -k_1) = alpha(n; k_1 + c, ..., k_n + c).
inline CheckResult verify_reflection_translation(std::size_t n, std::int64_t c) {
  detail::Stopwatch watch;
  const AlphaPolynomial alpha = alpha_poly(n);
  std::vector<Poly> reflected;
  std::vector<Poly> translated;
  for (std::size_t v = 1; v <= n; ++v) {
    reflected.push_back(-Poly::variable(n, VarIndex(n + 1 - v)));
    translated.push_back(Poly::variable(n, VarIndex(v)) + Poly::constant(n, static_cast<long>(c)));
  }
  const std::string original = alpha.poly().to_string();
  const std::string lhs = original + " | " + original;
  const std::string rhs = substitute(alpha.poly(), reflected, n).to_string() + " | " +
                          substitute(alpha.poly(), translated, n).to_string();
  return detail::finish("reflection_translation", {{"n", detail::as_i64(n)}, {"c", c}}, lhs, rhs,
                        watch);
}

/// The refined ASM vector is fixed by eigen_matrix(n).
inline CheckResult verify_eigenvector(std::size_t n) {
  detail::Stopwatch watch;
  std::vector<Rational> v;
  for (const auto& x : refined_table(n)) v.emplace_back(x);
  const std::vector<Rational> image = eigen_matrix(n).apply(v);
  return detail::finish("eigenvector", {{"n", detail::as_i64(n)}}, detail::join_witness(image),
                        detail::join_witness(v), watch);
}

/// R_inv B R = B_star + I, and det(B) = dpp_determinant(n) = asm_total(n-1).
inline CheckResult verify_conjugation(std::size_t n) {
  detail::Stopwatch watch;
  const ConjugationMatrices m = conjugation_matrices(n);
  const Matrix conjugated = m.R_inv * m.B * m.R;
  const Matrix target = m.B_star + Matrix::identity(n - 1);
  const bool inverse_ok = (m.R * m.R_inv == Matrix::identity(n - 1));
  const std::string det_b = to_string(det_exact(m.B));
  const std::string dpp = to_string(dpp_determinant(n));
  const std::string total = to_string(asm_total(n - 1));
  const std::string lhs = conjugated.to_string() + " | R*R_inv=I:" + (inverse_ok ? "yes" : "no") +
                          " | det " + det_b + " | dpp " + dpp;
  const std::string rhs = target.to_string() + " | R*R_inv=I:yes | det " + dpp + " | dpp " + total;
  return detail::finish("conjugation", {{"n", detail::as_i64(n)}}, lhs, rhs, watch);
}

/// sum_j (-1)^{j+1} binom(2n-i-1, n-j-i+1) binom(n+j-2, n-1) binom(2n-j-1, n-1)
///   = binom(n+i-2, n-1) binom(2n-i-1, n-1), for every 1 <= i <= n.
inline CheckResult verify_binomial_identity(std::size_t n) {
  detail::Stopwatch watch;
  const auto sn = detail::as_i64(n);
  std::vector<Integer> lhs;
  std::vector<Integer> rhs;
  for (std::int64_t i = 1; i <= sn; ++i) {
    Integer sum = 0;
    for (std::int64_t j = 1; j <= sn; ++j) {
      sum += sign_power(j + 1) * binomial(2 * sn - i - 1, sn - j - i + 1) *
             binomial(sn + j - 2, sn - 1) * binomial(2 * sn - j - 1, sn - 1);
    }
    lhs.push_back(sum);
    rhs.push_back(binomial(sn + i - 2, sn - 1) * binomial(2 * sn - i - 1, sn - 1));
  }
  return detail::finish("binomial_identity", {{"n", sn}}, detail::join_witness(lhs),
                        detail::join_witness(rhs), watch);
}

/// Sum of the refined formula equals the total, the table is symmetric, and
/// (n >= 2) the refined counts of size n-1 sum to A_{n,1}.
inline CheckResult verify_refined_sums(std::size_t n) {
  detail::Stopwatch watch;
  const std::vector<Integer> row = refined_table(n);
  Integer sum = 0;
  for (const auto& x : row) sum += x;
  std::vector<Integer> reversed(row.rbegin(), row.rend());
  std::string lhs = "sum " + to_string(sum) + " | " + detail::join_witness(row);
  std::string rhs = "sum " + to_string(asm_total(n)) + " | " + detail::join_witness(reversed);
  if (n >= 2) {
    Integer previous = 0;
    for (const auto& x : refined_table(n - 1)) previous += x;
    lhs += " | first " + to_string(previous);
    rhs += " | first " + to_string(row.front());
  }
  return detail::finish("refined_sums", {{"n", detail::as_i64(n)}}, lhs, rhs, watch);
}

/// Refined formula against exhaustive refined counts.
inline CheckResult verify_refined_theorem(std::size_t n) {
  detail::Stopwatch watch;
  return detail::finish("refined_theorem", {{"n", detail::as_i64(n)}},
                        detail::join_witness(refined_table(n)),
                        detail::join_witness(refined_counts_brute(n)), watch);
}

/// Product formula for the total against direct matrix enumeration and the
/// triangle recursion on (1, ..., n).
inline CheckResult verify_asm_total(std::size_t n) {
  detail::Stopwatch watch;
  Row staircase;
  for (std::size_t v = 1; v <= n; ++v) staircase.push_back(detail::as_i64(v));
  const std::string formula = to_string(asm_total(n));
  return detail::finish("asm_total", {{"n", detail::as_i64(n)}}, formula + " | " + formula,
                        to_string(count_asms_brute(n)) + " | " + to_string(alpha_brute(staircase)),
                        watch);
}

/// C_n = (sum of exhaustive refined counts) / (sum of refined formula) is 1.
inline CheckResult verify_induction_constant(std::size_t n) {
  detail::Stopwatch watch;
  Integer brute = 0;
  Integer formula = 0;
  for (const auto& x : refined_counts_brute(n)) brute += x;
  for (const auto& x : refined_table(n)) formula += x;
  return detail::finish("induction_constant", {{"n", detail::as_i64(n)}},
                        to_string(make_rational(brute, formula)), "1", watch);
}

/// Each q_j (j <= order) is a polynomial vanishing at 0 and equals the
/// Y^j coefficient of the generating function.
inline CheckResult verify_q_sequence(std::size_t order) {
  detail::Stopwatch watch;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::vector<LaurentPoly> q;
  try {
    q = q_sequence(order);
  } catch (const std::exception& e) {
    return detail::finish("q_sequence", {{"J", detail::as_i64(order)}},
                          std::string("error: ") + e.what(), "sequence", watch);
  }
  for (std::size_t j = 0; j <= order; ++j) {
    const std::string tag = "q" + std::to_string(j) + "=";
    if (!q[j].is_polynomial()) {
      lhs.push_back(tag + "not a polynomial");
    } else {
      const std::string zero = (q[j].constant_term() == 0) ? "" : " (nonzero at 0)";
      lhs.push_back(tag + q[j].to_poly().to_string("X") + zero);
    }
    rhs.push_back(tag + q_series_coefficient(j).to_string("X"));
  }
  return detail::finish("q_sequence", {{"J", detail::as_i64(order)}}, detail::join_witness(lhs),
                        detail::join_witness(rhs), watch);
}

/// (X_1+1)^n prod_{q>=2} (1 + (X_1+1) X_q) - prod_{q>=2} (1 + (X_q+1) X_1)
///   = sum_{j=0}^{n} p_j(X_1) e_j(X_1, ..., X_n).
inline CheckResult verify_ideal_decomposition(std::size_t n) {
  detail::Stopwatch watch;
  const Poly one = Poly::constant(n, 1);
  const Poly x1 = Poly::variable(n, VarIndex(1));
  Poly left = power(x1 + one, static_cast<std::uint32_t>(n));
  Poly right = one;
  for (std::size_t q = 2; q <= n; ++q) {
    const Poly xq = Poly::variable(n, VarIndex(q));
    left = left * (one + (x1 + one) * xq);
    right = right * (one + (xq + one) * x1);
  }
  const Poly lhs = left - right;

  const std::vector<LaurentPoly> q = q_sequence(n);
  Poly rhs(n);
  const std::vector<Poly> as_x1{x1};
  for (std::size_t j = 0; j <= n; ++j) {
    const Poly p_j = substitute(p_polynomial(q[j], n, j), as_x1, n);
    rhs += p_j * elementary_symmetric(n, j);
  }
  return detail::finish("ideal_decomposition", {{"n", detail::as_i64(n)}}, lhs.to_string("X"),
                        rhs.to_string("X"), watch);
}

/// Generalized n x k matrices: enumeration = closed form = operator formula
/// at (1, ..., n-1, k).
inline CheckResult verify_side(std::size_t n, std::size_t k) {
  detail::Stopwatch watch;
  const std::string formula = to_string(side_formula(n, k));
  const std::string alpha =
      to_string(alpha_eval(detail::staircase_with_last(n, detail::as_i64(k))));
  return detail::finish("side", {{"n", detail::as_i64(n)}, {"k", detail::as_i64(k)}},
                        to_string(count_side_matrices_brute(n, k)) + " | " + formula,
                        formula + " | " + alpha, watch);
}

// ---------------------------------------------------------------------------
// Suite runner
// ---------------------------------------------------------------------------

/// Sizes for each suite. Defaults are desk scale; hard caps live in
/// VerifyConfig::validate().
struct VerifyConfig {
  std::size_t poly_max_n = 5;         // polynomial identities in k_1..k_n
  std::size_t lemma_k_max_n = 6;      // univariate alpha(n; 1..n-1, k)
  std::size_t brute_max_n = 6;        // exhaustive enumeration
  std::size_t matrix_max_n = 12;      // eigenvector and conjugation
  std::size_t closed_form_max_n = 30; // binomial identity and refined sums
  std::size_t q_order = 30;           // q_0 .. q_J
  std::size_t ideal_max_n = 6;
  std::size_t side_max_n = 4;
  std::size_t side_max_k = 7;
  std::vector<std::int64_t> translations{-3, 5};
  /// Suites to run; empty means all.
  std::vector<std::string> suites;
  std::size_t threads = 0;  // 0: hardware concurrency

  /// Applies one cap to every size field.
  static VerifyConfig capped(std::size_t n_cap) {
    VerifyConfig c;
    for (auto* field : {&c.poly_max_n, &c.lemma_k_max_n, &c.brute_max_n, &c.matrix_max_n,
                        &c.closed_form_max_n, &c.ideal_max_n, &c.side_max_n}) {
      *field = std::min(*field, n_cap);
    }
    c.side_max_k = std::min(c.side_max_k, std::max(n_cap, c.side_max_n));
    return c;
  }

  void validate() const;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "alpha_consistency", "asm_total",       "binomial_identity", "conjugation",
      "e_p_specializations", "eigenvector",   "ideal_decomposition", "induction_constant",
      "lemma_k",           "q_sequence",      "reflection_translation", "refined_sums",
      "refined_theorem",   "shift",           "side",              "sym_action"};
  return names;
}

inline void VerifyConfig::validate() const {
  auto cap = [](const char* what, std::size_t value, std::size_t limit) {
    if (value > limit) {
      throw LimitError(std::string(what) + " = " + std::to_string(value) + " exceeds the limit " +
                       std::to_string(limit));
    }
  };
  cap("poly_max_n", poly_max_n, 6);
  cap("lemma_k_max_n", lemma_k_max_n, 7);
  cap("brute_max_n", brute_max_n, 7);
  cap("matrix_max_n", matrix_max_n, 40);
  cap("closed_form_max_n", closed_form_max_n, 200);
  cap("q_order", q_order, 200);
  cap("ideal_max_n", ideal_max_n, 8);
  cap("side_max_n", side_max_n, 5);
  cap("side_max_k", side_max_k, 9);
  for (auto c : translations) {
    if (c < -1000 || c > 1000) throw LimitError("translation constant out of range");
  }
  const auto& known = suite_names();
  for (const auto& s : suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw std::invalid_argument("unknown suite: " + s);
    }
  }
}

namespace detail {

struct PlannedCheck {
  std::string suite;
  std::function<CheckResult()> run;
};

inline std::vector<PlannedCheck> plan_checks(const VerifyConfig& c) {
  std::vector<PlannedCheck> plan;
  auto add = [&](const std::string& suite, std::function<CheckResult()> f) {
    plan.push_back({suite, std::move(f)});
  };
  for (std::size_t n = 1; n <= c.poly_max_n; ++n) {
    add("alpha_consistency", [n] { return verify_alpha_consistency(n, -2, as_i64(n) + 4); });
    for (std::size_t r = 0; r <= n; ++r) add("sym_action", [n, r] { return verify_sym_action(n, r); });
    add("e_p_specializations", [n] { return verify_e_p_specializations(n); });
    add("shift", [n] { return verify_shift(n); });
    for (auto t : c.translations) {
      add("reflection_translation", [n, t] { return verify_reflection_translation(n, t); });
    }
  }
  for (std::size_t n = 1; n <= c.lemma_k_max_n; ++n) add("lemma_k", [n] { return verify_lemma_k(n); });
  for (std::size_t n = 1; n <= c.brute_max_n; ++n) {
    add("refined_theorem", [n] { return verify_refined_theorem(n); });
    add("asm_total", [n] { return verify_asm_total(n); });
    add("induction_constant", [n] { return verify_induction_constant(n); });
  }
  for (std::size_t n = 1; n <= c.matrix_max_n; ++n) {
    add("eigenvector", [n] { return verify_eigenvector(n); });
    if (n >= 2) add("conjugation", [n] { return verify_conjugation(n); });
  }
  for (std::size_t n = 1; n <= c.closed_form_max_n; ++n) {
    add("binomial_identity", [n] { return verify_binomial_identity(n); });
    add("refined_sums", [n] { return verify_refined_sums(n); });
  }
  if (c.q_order >= 1) add("q_sequence", [J = c.q_order] { return verify_q_sequence(J); });
  for (std::size_t n = 2; n <= c.ideal_max_n; ++n) {
    add("ideal_decomposition", [n] { return verify_ideal_decomposition(n); });
  }
  for (std::size_t n = 1; n <= c.side_max_n; ++n) {
    for (std::size_t k = n; k <= c.side_max_k; ++k) add("side", [n, k] { return verify_side(n, k); });
  }
  if (!c.suites.empty()) {
    const std::set<std::string> wanted(c.suites.begin(), c.suites.end());
    std::erase_if(plan, [&](const PlannedCheck& p) { return !wanted.contains(p.suite); });
  }
  return plan;
}

inline CheckResult run_guarded(const PlannedCheck& check) {
  Stopwatch watch;
  try {
    return check.run();
  } catch (const std::exception& e) {
    CheckResult r;
    r.name = check.suite;
    r.passed = false;
    r.lhs = std::string("error: ") + e.what();
    r.rhs = "no exception";
    r.elapsed_ms = watch.elapsed_ms();
    return r;
  }
}

}  // namespace detail

/// Runs every configured check. Failures (including exceptions inside a
/// check) are recorded, never propagated. Results are ordered by suite name,
/// then parameters.
inline VerificationReport run_all(const VerifyConfig& config) {
  config.validate();
  const std::vector<detail::PlannedCheck> plan = detail::plan_checks(config);
  std::vector<CheckResult> results(plan.size());

  std::size_t workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(plan.size(), 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < plan.size(); t = next++) results[t] = detail::run_guarded(plan[t]);
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.params < b.params;
  });
  return VerificationReport{std::move(results)};
}

}  // namespace asmtk
