#pragma once

// Brute-force ground truth: monotone triangles, alternating sign matrices,
// the bijection between them and the n x k generalization with sum-0
// columns.

#include "asmtk/exact_math.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asmtk {

/// A bottom row (k_1, ..., k_n), or any integer row of a triangle.
using Row = std::vector<std::int64_t>;

inline bool strictly_increasing(const Row& row) {
  return std::adjacent_find(row.begin(), row.end(), std::greater_equal<>()) == row.end();
}

inline void require_strictly_increasing(const Row& row) {
  if (!strictly_increasing(row)) {
    throw std::invalid_argument("bottom row must be strictly increasing");
  }
}

/// Every row l with k_1 <= l_1 <= k_2 <= ... <= l_{n-1} <= k_n and
/// l_1 < l_2 < ... < l_{n-1}, in lexicographic order.
inline std::vector<Row> interlacing_rows(const Row& below) {
  std::vector<Row> out;
  if (below.size() < 2) return out;
  const std::size_t m = below.size() - 1;
  Row current(m);
  std::function<void(std::size_t)> place = [&](std::size_t j) {
    if (j == m) {
      out.push_back(current);
      return;
    }
    std::int64_t lo = below[j];
    if (j > 0) lo = std::max(lo, current[j - 1] + 1);
    for (std::int64_t value = lo; value <= below[j + 1]; ++value) {
      current[j] = value;
      place(j + 1);
    }
  };
  place(0);
  return out;
}

/// Triangular array (a_{i,j}), 1 <= j <= i <= n, with
/// a_{i,j} <= a_{i-1,j} <= a_{i,j+1} and a_{i,j} < a_{i,j+1}.
class MonotoneTriangle {
 public:
  /// rows[0] is the top (one entry), rows.back() the bottom row.
  explicit MonotoneTriangle(std::vector<Row> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].size() != i + 1) {
        throw std::invalid_argument("row " + std::to_string(i + 1) + " must have " +
                                    std::to_string(i + 1) + " entries");
      }
      if (!strictly_increasing(rows_[i])) {
        throw std::invalid_argument("triangle rows must be strictly increasing");
      }
      if (i == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        if (!(rows_[i][j] <= rows_[i - 1][j] && rows_[i - 1][j] <= rows_[i][j + 1])) {
          throw std::invalid_argument("triangle violates the interlacing condition");
        }
      }
    }
  }

  std::size_t size() const { return rows_.size(); }
  /// Row i (1-based from the top), holding i entries.
  const Row& row(std::size_t i) const { return rows_.at(i - 1); }
  /// a_{i,j}, both indices 1-based.
  std::int64_t at(std::size_t i, std::size_t j) const { return row(i).at(j - 1); }
  const Row& bottom() const { return rows_.back(); }
  std::int64_t top() const { return rows_.front().front(); }
  const std::vector<Row>& rows() const { return rows_; }

  friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;

  /// Centered layout: each entry right-aligned in a cell of width w, entries
  /// of a row 2w apart and row i indented by (n - i) w.
  std::string to_string() const {
    std::size_t width = 1;
    for (const auto& r : rows_) {
      for (auto x : r) width = std::max(width, std::to_string(x).size());
    }
    std::string out;
    const std::size_t n = rows_.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::string line((n - 1 - i) * width, ' ');
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j > 0) line += std::string(width, ' ');
        const std::string cell = std::to_string(rows_[i][j]);
        line += std::string(width - cell.size(), ' ') + cell;
      }
      out += line + "\n";
    }
    return out;
  }

  /// Inverse of to_string(); any whitespace layout is accepted as long as
  /// line i carries i integers.
  static MonotoneTriangle parse(std::string_view text) {
    std::vector<Row> rows;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream fields(line);
      Row r;
      std::int64_t x;
      while (fields >> x) r.push_back(x);
      if (!fields.eof()) throw std::invalid_argument("malformed triangle line: " + line);
      if (!r.empty()) rows.push_back(std::move(r));
    }
    return MonotoneTriangle(std::move(rows));
  }

 private:
  std::vector<Row> rows_;
};

/// Rectangular matrix over {-1, 0, 1}. Indices are 1-based.
class SignMatrix {
 public:
  SignMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  explicit SignMatrix(const std::vector<std::vector<int>>& entries)
      : SignMatrix(entries.size(), entries.empty() ? 0 : entries.front().size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (entries[i].size() != cols_) throw std::invalid_argument("ragged sign matrix");
      for (std::size_t j = 0; j < cols_; ++j) set(i + 1, j + 1, entries[i][j]);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int operator()(std::size_t i, std::size_t j) const { return entries_.at(index(i, j)); }

  void set(std::size_t i, std::size_t j, int value) {
    if (value < -1 || value > 1) throw std::invalid_argument("sign matrix entries are -1, 0, 1");
    entries_.at(index(i, j)) = static_cast<std::int8_t>(value);
  }

  std::vector<std::vector<int>> to_nested() const {
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i + 1, j + 1);
    }
    return out;
  }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

  /// One line per row, entries separated by single spaces.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 1; i <= rows_; ++i) {
      for (std::size_t j = 1; j <= cols_; ++j) {
        if (j > 1) out += ' ';
        out += std::to_string((*this)(i, j));
      }
      out += '\n';
    }
    return out;
  }

  static SignMatrix parse(std::string_view text) {
    std::vector<std::vector<int>> entries;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream fields(line);
      std::vector<int> r;
      int x;
      while (fields >> x) r.push_back(x);
      if (!fields.eof()) throw std::invalid_argument("malformed matrix line: " + line);
      if (!r.empty()) entries.push_back(std::move(r));
    }
    return SignMatrix(entries);
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("sign matrix index");
    return (i - 1) * cols_ + (j - 1);
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int8_t> entries_;
};

namespace detail {

// Partial sums of a {-1,0,1} sequence stay in {0, 1} exactly when its
// non-zero entries alternate starting with +1. Returns the total, or nullopt
// if a partial sum leaves {0, 1}.
template <typename Get>
std::optional<int> alternating_prefix_sum(std::size_t length, Get get) {
  int sum = 0;
  for (std::size_t t = 1; t <= length; ++t) {
    sum += get(t);
    if (sum < 0 || sum > 1) return std::nullopt;
  }
  return sum;
}

}  // namespace detail

inline bool validate_asm(const SignMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 1; i <= n; ++i) {
    auto s = detail::alternating_prefix_sum(n, [&](std::size_t j) { return m(i, j); });
    if (s != 1) return false;
  }
  for (std::size_t j = 1; j <= n; ++j) {
    auto s = detail::alternating_prefix_sum(n, [&](std::size_t i) { return m(i, j); });
    if (s != 1) return false;
  }
  return true;
}

/// Row i of the triangle lists the columns whose partial column sums through
/// row i equal 1.
inline MonotoneTriangle asm_to_triangle(const SignMatrix& m) {
  if (!validate_asm(m)) throw std::invalid_argument("input is not an alternating sign matrix");
  const std::size_t n = m.rows();
  std::vector<int> partial(n, 0);
  std::vector<Row> rows;
  for (std::size_t i = 1; i <= n; ++i) {
    Row r;
    for (std::size_t j = 1; j <= n; ++j) {
      partial[j - 1] += m(i, j);
      if (partial[j - 1] == 1) r.push_back(static_cast<std::int64_t>(j));
    }
    rows.push_back(std::move(r));
  }
  return MonotoneTriangle(std::move(rows));
}

inline SignMatrix triangle_to_asm(const MonotoneTriangle& t) {
  const std::size_t n = t.size();
  for (std::size_t j = 1; j <= n; ++j) {
    if (t.bottom()[j - 1] != static_cast<std::int64_t>(j)) {
      throw std::invalid_argument("triangle bottom row must be (1, ..., n)");
    }
  }
  SignMatrix m(n, n);
  std::vector<int> previous(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<int> current(n, 0);
    for (auto column : t.row(i)) current[static_cast<std::size_t>(column) - 1] = 1;
    for (std::size_t j = 1; j <= n; ++j) m.set(i, j, current[j - 1] - previous[j - 1]);
    previous = std::move(current);
  }
  return m;
}

/// Counts monotone triangles with a given bottom row through the recursion
/// obtained by deleting the bottom row. Results are cached by the row
/// translated to start at 0, since counts are translation invariant.
class TriangleCounter {
 public:
  explicit TriangleCounter(bool memoize = true) : memoize_(memoize) {}

  Integer count(const Row& row) {
    require_strictly_increasing(row);
    return count_unchecked(row);
  }

  std::size_t cache_size() const { return cache_.size(); }

 private:
  Integer count_unchecked(const Row& row) {
    if (row.size() <= 1) return 1;
    Row key = row;
    const std::int64_t base = key.front();
    for (auto& x : key) x -= base;
    if (memoize_) {
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Integer total = 0;
    for (const auto& above : interlacing_rows(key)) total += count_unchecked(above);
    if (memoize_) cache_.emplace(std::move(key), total);
    return total;
  }

  bool memoize_;
  std::map<Row, Integer> cache_;
};

/// Number of monotone triangles with bottom row `row` (strictly increasing).
inline Integer alpha_brute(const Row& row) { return TriangleCounter().count(row); }

/// Yields every monotone triangle with a given bottom row exactly once.
/// Order: lexicographic in the row above the bottom, then the row above
/// that, and so on up to the top.
class TriangleEnumerator {
 public:
  explicit TriangleEnumerator(Row bottom) : bottom_(std::move(bottom)) {
    require_strictly_increasing(bottom_);
    if (bottom_.empty()) throw std::invalid_argument("bottom row must be non-empty");
    descend_from(0);
  }

  std::optional<MonotoneTriangle> next() {
    if (done_) return std::nullopt;
    if (started_ && !advance()) {
      done_ = true;
      return std::nullopt;
    }
    started_ = true;
    std::vector<Row> rows;
    rows.reserve(bottom_.size());
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
      rows.push_back(it->candidates[it->position]);
    }
    rows.push_back(bottom_);
    return MonotoneTriangle(std::move(rows));
  }

 private:
  struct Level {
    std::vector<Row> candidates;
    std::size_t position = 0;
  };

  const Row& current_row(std::size_t depth) const {
    return depth == 0 ? bottom_ : levels_[depth - 1].candidates[levels_[depth - 1].position];
  }

  // Rebuilds levels below `depth` (towards the top) at their first candidates.
  void descend_from(std::size_t depth) {
    levels_.resize(depth);
    while (levels_.size() + 1 < bottom_.size()) {
      Level level{interlacing_rows(current_row(levels_.size())), 0};
      levels_.push_back(std::move(level));
    }
  }

  bool advance() {
    for (std::size_t d = levels_.size(); d > 0; --d) {
      Level& level = levels_[d - 1];
      if (level.position + 1 < level.candidates.size()) {
        ++level.position;
        descend_from(d);
        return true;
      }
    }
    return false;
  }

  Row bottom_;
  std::vector<Level> levels_;
  bool started_ = false;
  bool done_ = false;
};

inline std::vector<MonotoneTriangle> enumerate_triangles(const Row& bottom) {
  std::vector<MonotoneTriangle> out;
  TriangleEnumerator it(bottom);
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

/// Walks all n x k {-1,0,1} matrices whose rows sum to 1 with alternating
/// non-zero entries, and whose columns alternate with first non-zero entry +1
/// and sum to column_sums[j-1] (0 or 1). Rows are enumerated one at a time
/// against the running column sums, which must stay in {0, 1}.
inline void for_each_sign_matrix(std::size_t n, const std::vector<int>& column_sums,
                                 const std::function<void(const SignMatrix&)>& visit) {
  const std::size_t k = column_sums.size();
  for (int s : column_sums) {
    if (s != 0 && s != 1) throw std::invalid_argument("column sums must be 0 or 1");
  }
  SignMatrix m(n, k);
  std::vector<int> state(k, 0);

  std::function<void(std::size_t)> fill_row;
  // Column-by-column construction of row i; `expect` is the sign the next
  // non-zero entry must carry.
  std::function<void(std::size_t, std::size_t, int)> place = [&](std::size_t i, std::size_t j,
                                                                 int expect) {
    if (j > k) {
      if (expect == -1) fill_row(i + 1);  // last non-zero was +1
      return;
    }
    const std::size_t rows_left = n - i;
    // Leaving the entry 0 must keep the column completable.
    auto completable = [&](int s) {
      if (rows_left == 0) return s == column_sums[j - 1];
      return true;
    };
    if (completable(state[j - 1])) {
      m.set(i, j, 0);
      place(i, j + 1, expect);
    }
    const int value = expect;
    const int next_state = state[j - 1] + value;
    if (next_state == 0 || next_state == 1) {
      if (completable(next_state)) {
        state[j - 1] = next_state;
        m.set(i, j, value);
        place(i, j + 1, -expect);
        state[j - 1] -= value;
        m.set(i, j, 0);
      }
    }
  };
  fill_row = [&](std::size_t i) {
    if (i > n) {
      visit(m);
      return;
    }
    place(i, 1, +1);
  };
  if (n == 0) return;
  fill_row(1);
}

/// All n x n alternating sign matrices, enumerated directly as matrices.
inline std::vector<SignMatrix> enumerate_asms(std::size_t n) {
  std::vector<SignMatrix> out;
  for_each_sign_matrix(n, std::vector<int>(n, 1), [&](const SignMatrix& m) { out.push_back(m); });
  return out;
}

inline Integer count_asms_brute(std::size_t n) {
  Integer count = 0;
  for_each_sign_matrix(n, std::vector<int>(n, 1), [&](const SignMatrix&) { ++count; });
  return count;
}

/// Column sums for the n x k generalization: columns n, ..., k-1 sum to 0,
/// every other column sums to 1.
inline std::vector<int> side_column_sums(std::size_t n, std::size_t k) {
  std::vector<int> sums(k, 1);
  for (std::size_t j = n; j < k; ++j) sums[j - 1] = 0;
  return sums;
}

inline Integer count_side_matrices_brute(std::size_t n, std::size_t k) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < n) throw std::invalid_argument("k must be at least n");
  Integer count = 0;
  for_each_sign_matrix(n, side_column_sums(n, k), [&](const SignMatrix&) { ++count; });
  return count;
}

/// Entry i: number of n x n ASMs whose first-row 1 sits in column i, counted
/// as triangles with n-1 rows and bottom row (1, ..., i-1, i+1, ..., n).
inline std::vector<Integer> refined_counts_brute(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  TriangleCounter counter;
  std::vector<Integer> out;
  for (std::size_t i = 1; i <= n; ++i) {
    Row row;
    for (std::size_t c = 1; c <= n; ++c) {
      if (c != i) row.push_back(static_cast<std::int64_t>(c));
    }
    out.push_back(counter.count(row));
  }
  return out;
}

}  // namespace asmtk
