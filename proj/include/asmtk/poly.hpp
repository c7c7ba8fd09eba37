#pragma once

// Sparse multivariate polynomials with exact rational coefficients, and the
// shift / difference operator calculus acting on them.

#include "asmtk/exact_math.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace asmtk {

/// 1-based position of a variable k_index (or X_index) in a polynomial ring.
struct VarIndex {
  constexpr explicit VarIndex(std::size_t v) : value(v) {}
  std::size_t value;
  friend constexpr bool operator==(VarIndex, VarIndex) = default;
};

using Exponents = std::vector<std::uint32_t>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : e) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Graded lexicographic order: larger total degree first, ties broken
/// lexicographically with the first variable most significant.
inline bool graded_lex_greater(const Exponents& a, const Exponents& b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

class Poly {
 public:
  using TermMap = std::unordered_map<Exponents, Rational, ExponentsHash>;
  using Term = std::pair<Exponents, Rational>;

  explicit Poly(std::size_t arity = 0) : arity_(arity) {}

  static Poly constant(std::size_t arity, const Rational& c) {
    Poly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
  }

  static Poly variable(std::size_t arity, VarIndex v) {
    Poly p(arity);
    p.check_var(v);
    Exponents e(arity, 0);
    e[v.value - 1] = 1;
    p.add_term(e, 1);
    return p;
  }

  std::size_t arity() const { return arity_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void check_var(VarIndex v) const {
    if (v.value < 1 || v.value > arity_) {
      throw std::out_of_range("variable index " + std::to_string(v.value) +
                              " outside 1.." + std::to_string(arity_));
    }
  }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != arity_) throw std::invalid_argument("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_term(Exponents&& e, const Rational& c) {
    if (e.size() != arity_) throw std::invalid_argument("exponent vector has wrong length");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::uint32_t degree_in(VarIndex v) const {
    check_var(v);
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v.value - 1]);
    return d;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
      d = std::max(d, std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
    }
    return d;
  }

  /// Terms in canonical graded-lex order.
  std::vector<Term> sorted_terms() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
      return graded_lex_greater(a.first, b.first);
    });
    return out;
  }

  Rational eval(std::span<const Integer> point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluation point has wrong length");
    std::vector<std::vector<Integer>> powers(arity_);
    for (std::size_t v = 0; v < arity_; ++v) {
      const std::uint32_t d = degree_in(VarIndex(v + 1));
      powers[v].reserve(d + 1);
      powers[v].emplace_back(1);
      for (std::uint32_t t = 1; t <= d; ++t) powers[v].push_back(powers[v].back() * point[v]);
    }
    Rational sum = 0;
    Integer monomial;
    for (const auto& [e, c] : terms_) {
      monomial = 1;
      for (std::size_t v = 0; v < arity_; ++v) {
        if (e[v] != 0) monomial *= powers[v][e[v]];
      }
      sum += c * monomial;
    }
    return sum;
  }

  Rational eval(std::span<const std::int64_t> point) const {
    std::vector<Integer> big;
    big.reserve(point.size());
    for (auto x : point) big.emplace_back(static_cast<long>(x));
    return eval(std::span<const Integer>(big));
  }

  Poly& operator+=(const Poly& other) {
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    check_arity(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_arity(b);
    Poly out(a.arity_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t v = 0; v < a.arity_; ++v) e[v] = ea[v] + eb[v];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Canonical text, e.g. "1/2*k1^2*k3 - 2*k2^2 + 3*k3". A polynomial of
  /// arity 1 uses the bare variable name ("k^2 - 2").
  std::string to_string(std::string_view var = "k") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
      const bool negative = c < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const Rational magnitude = abs(c);
      const bool is_constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
      std::string monomial;
      for (std::size_t v = 0; v < arity_; ++v) {
        if (e[v] == 0) continue;
        if (!monomial.empty()) monomial += "*";
        monomial += var;
        if (arity_ > 1) monomial += std::to_string(v + 1);
        if (e[v] > 1) monomial += "^" + std::to_string(e[v]);
      }
      if (is_constant) {
        out += magnitude.get_str();
      } else if (magnitude == 1) {
        out += monomial;
      } else {
        out += magnitude.get_str() + "*" + monomial;
      }
    }
    return out;
  }

  /// Parses the canonical text form (whitespace-insensitive; terms may come
  /// in any order and repeat).
  static Poly parse(std::string_view text, std::size_t arity, std::string_view var = "k") {
    Parser parser{text, arity, var};
    return parser.run();
  }

 private:
  struct Parser {
    std::string_view text;
    std::size_t arity;
    std::string_view var;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
      throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                  ": " + what);
    }

    void skip_space() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_digit() const {
      return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    std::string digits() {
      const std::size_t start = pos;
      while (peek_digit()) ++pos;
      if (start == pos) fail("expected digits");
      return std::string(text.substr(start, pos - start));
    }

    std::uint32_t small_number() {
      const std::string d = digits();
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
      if (ec != std::errc()) fail("number out of range");
      return value;
    }

    Poly run() {
      Poly out(arity);
      skip_space();
      if (pos == text.size()) fail("empty input");
      bool negative = false;
      if (text[pos] == '-') {
        negative = true;
        ++pos;
      }
      for (;;) {
        parse_term(out, negative);
        skip_space();
        if (pos == text.size()) break;
        if (text[pos] == '+') {
          negative = false;
        } else if (text[pos] == '-') {
          negative = true;
        } else {
          fail("expected '+' or '-'");
        }
        ++pos;
      }
      return out;
    }

    void parse_term(Poly& out, bool negative) {
      skip_space();
      Rational coefficient = 1;
      Exponents e(arity, 0);
      bool need_factor = true;
      if (peek_digit()) {
        Integer num(digits());
        Integer den = 1;
        skip_space();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          skip_space();
          den = Integer(digits());
        }
        coefficient = make_rational(num, den);
        skip_space();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
        } else {
          need_factor = false;
        }
      }
      while (need_factor) {
        skip_space();
        if (text.substr(pos, var.size()) != var) fail("expected variable");
        pos += var.size();
        std::size_t index = 1;
        if (peek_digit()) {
          index = small_number();
        } else if (arity != 1) {
          fail("variable index required");
        }
        if (index < 1 || index > arity) fail("variable index out of range");
        std::uint32_t power = 1;
        skip_space();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_space();
          power = small_number();
        }
        e[index - 1] += power;
        skip_space();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
        } else {
          need_factor = false;
        }
      }
      out.add_term(std::move(e), negative ? Rational(-coefficient) : coefficient);
    }
  };

  void check_arity(const Poly& other) const {
    if (arity_ != other.arity_) throw std::invalid_argument("polynomial arity mismatch");
  }

  std::size_t arity_;
  TermMap terms_;
};

/// E_v^c: replaces k_v by k_v + c.
inline Poly shift(const Poly& p, VarIndex v, std::int64_t c) {
  p.check_var(v);
  if (c == 0) return p;
  const std::size_t slot = v.value - 1;
  const std::uint32_t degree = p.degree_in(v);
  const Integer step(static_cast<long>(c));
  std::vector<Integer> step_powers{Integer(1)};
  for (std::uint32_t t = 1; t <= degree; ++t) step_powers.push_back(step_powers.back() * step);

  Poly out(p.arity());
  Exponents e;
  for (const auto& [exps, coef] : p.terms()) {
    const std::uint32_t d = exps[slot];
    e = exps;
    for (std::uint32_t t = 0; t <= d; ++t) {
      e[slot] = t;
      out.add_term(e, coef * binomial(static_cast<std::int64_t>(d), t) * step_powers[d - t]);
    }
  }
  return out;
}

/// Delta_v = E_v - id.
inline Poly delta(const Poly& p, VarIndex v) { return shift(p, v, 1) - p; }

/// (id + E_{k_a} Delta_{k_b}) p.
inline Poly apply_pair_operator(const Poly& p, VarIndex a, VarIndex b) {
  if (a == b) throw std::invalid_argument("pair operator needs two distinct variables");
  p.check_var(a);
  return p + shift(delta(p, b), a, 1);
}

/// prod_{1 <= i < j <= n} (k_j - k_i) / (j - i).
inline Poly vandermonde_poly(std::size_t n) {
  if (n == 0) throw std::invalid_argument("vandermonde_poly needs n >= 1");
  Poly out = Poly::constant(n, 1);
  Integer normalization = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      out = out * (Poly::variable(n, VarIndex(j)) - Poly::variable(n, VarIndex(i)));
      normalization *= static_cast<unsigned long>(j - i);
    }
  }
  return out * make_rational(1, normalization);
}

/// e_r(E_{v_1}, ..., E_{v_m}) p: sum over all r-subsets S of `vars` of p with
/// every variable in S shifted by one.
inline Poly apply_elementary_symmetric_shift(const Poly& p, std::span<const VarIndex> vars,
                                             std::size_t r) {
  if (r > vars.size()) throw std::invalid_argument("subset size exceeds variable count");
  for (std::size_t s = 0; s < vars.size(); ++s) {
    p.check_var(vars[s]);
    for (std::size_t t = s + 1; t < vars.size(); ++t) {
      if (vars[s] == vars[t]) throw std::invalid_argument("variables must be distinct");
    }
  }
  Poly out(p.arity());
  // Walk r-subsets in lexicographic order of positions.
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  for (;;) {
    Poly term = p;
    for (auto s : pick) term = shift(term, vars[s], 1);
    out += term;
    std::size_t t = r;
    while (t > 0 && pick[t - 1] == vars.size() - r + t - 1) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t u = t; u < r; ++u) pick[u] = pick[u - 1] + 1;
  }
  return out;
}

/// All variables 1..arity of p, for use with apply_elementary_symmetric_shift.
inline std::vector<VarIndex> all_vars(std::size_t arity) {
  std::vector<VarIndex> vars;
  for (std::size_t v = 1; v <= arity; ++v) vars.emplace_back(v);
  return vars;
}

inline Poly power(const Poly& base, std::uint32_t exponent) {
  Poly out = Poly::constant(base.arity(), 1);
  for (std::uint32_t t = 0; t < exponent; ++t) out = out * base;
  return out;
}

/// Replaces variable v of p by images[v-1]; every image must have the same
/// arity, which becomes the arity of the result.
inline Poly substitute(const Poly& p, std::span<const Poly> images, std::size_t result_arity) {
  if (images.size() != p.arity()) throw std::invalid_argument("one image per variable required");
  for (const auto& img : images) {
    if (img.arity() != result_arity) throw std::invalid_argument("image arity mismatch");
  }
  std::vector<std::vector<Poly>> powers(p.arity());
  auto power_of = [&](std::size_t v, std::uint32_t e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(result_arity, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Poly out(result_arity);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(result_arity, c);
    for (std::size_t v = 0; v < p.arity(); ++v) {
      if (e[v] != 0) term = term * power_of(v, e[v]);
    }
    out += term;
  }
  return out;
}

}  // namespace asmtk
