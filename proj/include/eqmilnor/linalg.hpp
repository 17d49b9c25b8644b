#pragma once

// Exact linear algebra over Q: an incremental sparse row-echelon form and a
// dense rank routine for small matrices.

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace eqm {

/// Sparse vector: (column, nonzero value) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

namespace detail {

// a - s*b, both sorted; drops cancellations.
inline SparseRow axpy(const SparseRow& a, const Rational& s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -s * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - s * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Row-echelon form built one row at a time. The pivot of a row is its
/// leftmost (smallest-column) nonzero entry; stored rows have pivot value 1
/// and no entries left of their pivot.
class SparseEchelon {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit SparseEchelon(std::size_t ncols) : pivot_of_col_(ncols, npos) {}

  std::size_t ncols() const noexcept { return pivot_of_col_.size(); }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_of_col_[col] != npos; }

  /// Stored row whose pivot is `col`; `col` must be a pivot column.
  const SparseRow& pivot_row(std::size_t col) const { return rows_[pivot_of_col_[col]]; }
  const std::vector<SparseRow>& rows() const noexcept { return rows_; }

  /// Adds a row to the span. Returns true iff the rank grew.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      const std::size_t at = pivot_of_col_[lead];
      if (at == npos) {
        Rational inv = 1 / row.front().second;
        for (auto& e : row) e.second *= inv;
        pivot_of_col_[lead] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
      }
      Rational s = row.front().second;
      row = detail::axpy(row, s, rows_[at]);
    }
    return false;
  }

  /// Remainder of v after eliminating every pivot column; it is supported
  /// on non-pivot columns only.
  SparseRow reduce(SparseRow v) const {
    std::size_t i = 0;
    while (i < v.size()) {
      const std::size_t at = pivot_of_col_[v[i].first];
      if (at == npos) {
        ++i;
        continue;
      }
      // Entries before i are left of the pivot row's support and survive as is.
      Rational s = v[i].second;
      v = detail::axpy(v, s, rows_[at]);
    }
    return v;
  }

 private:
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_of_col_;
};

/// Rank of a dense matrix by fraction-exact Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational s = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= s * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace eqm
