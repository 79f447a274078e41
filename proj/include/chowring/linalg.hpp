#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chowring {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sparse vector with integer entries, keyed by column.
using SparseRow = std::map<std::size_t, Integer>;

/// Incremental row echelon form over the rationals. Rows are kept as
/// primitive integer vectors; elimination uses cross-multiplication so every
/// step is exact.
class RowEchelon {
 public:
  /// Reduces `row` against the current pivots. Returns true (and keeps the
  /// reduced row as a new pivot) iff it was independent.
  bool insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    std::size_t lead = row.begin()->first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  /// Whether `row` lies in the span of the inserted rows.
  bool contains(SparseRow row) const {
    reduce(row);
    return row.empty();
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  void reduce(SparseRow& row) const {
    drop_zeros(row);
    auto it = row.begin();
    while (it != row.end()) {
      auto pivot = pivots_.find(it->first);
      if (pivot == pivots_.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const Integer a = pivot->second.begin()->second;
      const Integer b = it->second;
      for (auto& [c, v] : row) v *= a;
      for (const auto& [c, v] : pivot->second) row[c] -= b * v;
      drop_zeros(row);
      normalize(row);
      it = row.upper_bound(col);
    }
  }

  static void drop_zeros(SparseRow& row) {
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
  }

  static void normalize(SparseRow& row) {
    Integer g = 0;
    for (const auto& [c, v] : row) g = gcd(g, v);
    if (g > 1)
      for (auto& [c, v] : row) v /= g;
  }

  std::map<std::size_t, SparseRow> pivots_;
};

/// Rank over the rationals of a dense integer matrix given by rows.
inline std::size_t exact_rank(const std::vector<std::vector<Integer>>& rows) {
  RowEchelon echelon;
  for (const auto& r : rows) {
    SparseRow s;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] != 0) s.emplace(c, r[c]);
    echelon.insert(std::move(s));
  }
  return echelon.rank();
}

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
inline Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Solves A x = b exactly where A is given column-wise (`columns[j]` is the
/// j-th column). Returns nullopt when the system is inconsistent or the
/// columns are dependent (solution not unique).
inline std::optional<std::vector<Rational>> solve_unique(const std::vector<std::vector<Integer>>& columns,
                                                         const std::vector<Integer>& b) {
  const std::size_t k = columns.size();
  const std::size_t n = b.size();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = Rational(columns[j][i]);
    aug[i][k] = Rational(b[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = row;
    while (p < n && aug[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(aug[p], aug[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rational f = aug[i][col] / aug[row][col];
      for (std::size_t j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (aug[i][k] != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < k; ++r) x[pivot_col[r]] = aug[r][k] / aug[r][pivot_col[r]];
  return x;
}

/// Exact phase-one simplex: is {x >= 0 : A x = b} nonempty? Bland's rule,
/// so it terminates.
inline bool feasible_nonnegative(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  if (m == 0) return true;
  const std::size_t n = a[0].size();
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
  // Tableau columns: n originals, m artificials, then rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  // Objective row: minimise the sum of artificials, stored as reduced costs.
  for (std::size_t j = 0; j < width; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    t[m][j] = (j >= n && j < n + m) ? Rational(0) : -s;
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    Rational pv = t[leave][enter];
    for (auto& v : t[leave]) v /= pv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return t[m][width - 1] == 0;
}

}  // namespace chowring
