#pragma once

// The Jacobian algebra Q_f = O_n / J_f of an isolated critical point at the
// origin, computed by degree-truncated elimination.
//
// Let M_T be the matrix whose rows are the products m * df/dx_i
// (deg m <= T-1) truncated to degree <= T, with columns ordered by
// LocalOrderLess. Its row space is (J_f + m^{T+1}) / m^{T+1}. Because the
// columns are ordered by ascending degree, for every D <= T the pivots of
// M_T lying in degree < D are exactly the pivots of the projection onto
// degree < D, i.e. of (J_f + m^D) / m^D. Hence one elimination answers, for
// all D <= T at once, whether m^D is in J_f + m^{D+1} (all degree-D columns
// are pivots), which by Nakayama's lemma gives m^D in J_f in the local ring.
// For the least such D, Q_f = C[x]_{<D} / (J_f + m^D) and the non-pivot
// columns of degree < D form a monomial basis.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace eqm {

inline constexpr unsigned kDefaultDegreeBound = 50;

/// Dense ranking of the monomials of degree <= max_degree in LocalOrderLess order.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, unsigned max_degree)
      : nvars_(nvars), max_degree_(max_degree) {
    const std::size_t rows = max_degree + nvars + 2;
    binom_.assign(rows, std::vector<std::uint64_t>(rows, 0));
    for (std::size_t a = 0; a < rows; ++a) {
      binom_[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + binom_[a - 1][b];
    }
  }

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned max_degree() const noexcept { return max_degree_; }

  /// Number of monomials of degree < d.
  std::size_t count_below(unsigned d) const {
    return d == 0 ? 0 : static_cast<std::size_t>(binom_[d - 1 + nvars_][nvars_]);
  }

  std::size_t count_of_degree(unsigned d) const { return count_below(d + 1) - count_below(d); }
  std::size_t size() const { return count_below(max_degree_ + 1); }

  std::size_t rank(const Monomial& m) const {
    unsigned left = m.degree();
    std::size_t r = count_below(left);
    for (std::size_t i = 0; i + 1 < nvars_; ++i) {
      for (unsigned e = m[i] + 1; e <= left; ++e) r += in_vars(nvars_ - i - 1, left - e);
      left -= m[i];
    }
    return r;
  }

 private:
  std::size_t in_vars(std::size_t k, unsigned degree) const {
    return static_cast<std::size_t>(binom_[degree + k - 1][k - 1]);
  }

  std::size_t nvars_;
  unsigned max_degree_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// Row-echelon form of the truncated Jacobian matrix M_T. An optional column
/// filter restricts the computation to one graded block; it must be
/// compatible with f, in the sense that every row lies wholly inside or
/// wholly outside the kept columns.
class JacobianTruncation {
 public:
  using ColumnFilter = std::function<bool(const Monomial&)>;

  JacobianTruncation(const Polynomial& f, unsigned truncation, const ColumnFilter& keep = {})
      : nvars_(f.nvars()),
        truncation_(truncation),
        filtered_(static_cast<bool>(keep)),
        index_(f.nvars(), truncation),
        echelon_(0) {
    const auto all = monomials_up_to(nvars_, truncation_);
    std::vector<std::size_t> col_of_rank(all.size(), SparseEchelon::npos);
    for (std::size_t r = 0; r < all.size(); ++r) {
      if (keep && !keep(all[r])) continue;
      col_of_rank[r] = columns_.size();
      columns_.push_back(all[r]);
    }
    echelon_ = SparseEchelon(columns_.size());

    const auto grad = gradient(f);
    const std::size_t multipliers = index_.count_below(truncation_);
    for (std::size_t r = 0; r < multipliers; ++r) {
      const Monomial& m = all[r];
      for (const auto& g : grad) {
        if (g.is_zero() || g.order() + m.degree() > truncation_) continue;
        SparseRow row;
        std::size_t dropped = 0;
        for (const auto& [t, c] : g.terms()) {
          if (t.degree() + m.degree() > truncation_) continue;
          const std::size_t col = col_of_rank[index_.rank(t * m)];
          if (col == SparseEchelon::npos) {
            ++dropped;
            continue;
          }
          row.emplace_back(col, c);
        }
        if (dropped > 0 && !row.empty())
          throw std::logic_error("column filter splits a Jacobian row");
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        echelon_.insert(std::move(row));
      }
    }

    pivots_by_degree_.assign(truncation_ + 1, 0);
    columns_by_degree_.assign(truncation_ + 1, 0);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      ++columns_by_degree_[columns_[c].degree()];
      if (echelon_.is_pivot(c)) ++pivots_by_degree_[columns_[c].degree()];
    }
  }

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned truncation() const noexcept { return truncation_; }
  const std::vector<Monomial>& columns() const noexcept { return columns_; }
  const SparseEchelon& echelon() const noexcept { return echelon_; }
  bool is_pivot(std::size_t col) const { return echelon_.is_pivot(col); }

  /// Least D in [1, T] with every degree-D monomial a pivot, if any.
  std::optional<unsigned> least_certificate_degree() const {
    if (filtered_) throw std::logic_error("certificate needs the unfiltered matrix");
    for (unsigned d = 1; d <= truncation_; ++d)
      if (pivots_by_degree_[d] == columns_by_degree_[d]) return d;
    return std::nullopt;
  }

  /// Non-pivot columns of degree < d: dim of the kept block of C[x]/(J_f + m^d).
  std::size_t standard_count_below(unsigned d) const {
    std::size_t n = 0;
    for (unsigned k = 0; k < d && k <= truncation_; ++k)
      n += columns_by_degree_[k] - pivots_by_degree_[k];
    return n;
  }

 private:
  std::size_t nvars_;
  unsigned truncation_;
  bool filtered_;
  MonomialIndex index_;
  std::vector<Monomial> columns_;
  SparseEchelon echelon_;
  std::vector<std::size_t> pivots_by_degree_;
  std::vector<std::size_t> columns_by_degree_;
};

/// Milnor number, monomial basis of Q_f and the data needed to reduce
/// polynomials to basis coordinates.
class MilnorData {
 public:
  MilnorData(const JacobianTruncation& jt, unsigned certificate_degree)
      : nvars_(jt.nvars()),
        certificate_degree_(certificate_degree),
        index_(jt.nvars(), certificate_degree == 0 ? 0 : certificate_degree - 1),
        reducer_(index_.count_below(certificate_degree)) {
    const std::size_t low = index_.count_below(certificate_degree);
    basis_position_.assign(low, SparseEchelon::npos);
    for (std::size_t c = 0; c < low; ++c) {
      if (jt.is_pivot(c)) {
        SparseRow projected;
        for (const auto& e : jt.echelon().pivot_row(c))
          if (e.first < low) projected.push_back(e);
        reducer_.insert(std::move(projected));
      } else {
        basis_position_[c] = basis_.size();
        basis_.push_back(jt.columns()[c]);
      }
    }
  }

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t mu() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  unsigned certificate_degree() const noexcept { return certificate_degree_; }

  /// Coordinates of the class of g in Q_f with respect to basis().
  std::vector<Rational> reduce(const Polynomial& g) const {
    if (g.nvars() != nvars_) throw DimensionError("polynomial and Milnor data differ in dimension");
    SparseRow v;
    for (const auto& [m, c] : g.terms())
      if (m.degree() < certificate_degree_) v.emplace_back(index_.rank(m), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Rational> coords(basis_.size(), 0);
    for (auto& [col, val] : reducer_.reduce(std::move(v))) coords[basis_position_[col]] = val;
    return coords;
  }

 private:
  std::size_t nvars_;
  unsigned certificate_degree_;
  MonomialIndex index_;
  SparseEchelon reducer_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> basis_position_;
};

/// Called after each truncation level; returning false abandons the computation.
using TruncationMonitor = std::function<bool(const JacobianTruncation&)>;

namespace detail {

inline void check_critical_point(const Polynomial& f) {
  for (const auto& [m, c] : f.terms())
    if (m.degree() <= 1)
      throw PreconditionError("f must vanish to order two at the origin (no constant or linear terms)");
}

// Truncation levels tried in turn: 2, 3, 4, 6, 9, 13, ... capped at d_max.
inline unsigned next_truncation(unsigned t, unsigned d_max) {
  return std::min(d_max, t + std::max(1u, t / 2));
}

}  // namespace detail

/// As milnor_basis, but consults `keep_going` after every truncation level.
/// Returns nullopt if the monitor gave up.
inline std::optional<MilnorData> milnor_basis_monitored(const Polynomial& f, unsigned d_max,
                                                        const TruncationMonitor& keep_going) {
  if (d_max < 2) throw PreconditionError("degree bound must be at least 2");
  detail::check_critical_point(f);
  for (unsigned t = 2;; t = detail::next_truncation(t, d_max)) {
    JacobianTruncation jt(f, t);
    if (auto d = jt.least_certificate_degree()) return MilnorData(jt, *d);
    if (keep_going && !keep_going(jt)) return std::nullopt;
    if (t >= d_max) throw NotIsolatedWithinBound(d_max);
  }
}

/// Milnor number and monomial basis of Q_f for f with a critical point at 0.
/// Throws NotIsolatedWithinBound if m^D is not in J_f for any D <= d_max.
inline MilnorData milnor_basis(const Polynomial& f, unsigned d_max = kDefaultDegreeBound) {
  return *milnor_basis_monitored(f, d_max, {});
}

inline std::vector<Rational> reduce_mod_jacobian(const Polynomial& g, const MilnorData& data) {
  return data.reduce(g);
}

/// Positive variable weights and a total weighted degree.
struct QuasiHomogeneousSpec {
  std::vector<unsigned> weights;
  unsigned degree = 0;
};

inline bool is_quasi_homogeneous(const Polynomial& f, const QuasiHomogeneousSpec& spec) {
  if (spec.weights.size() != f.nvars()) return false;
  for (const auto& [m, c] : f.terms()) {
    unsigned long long wd = 0;
    for (std::size_t i = 0; i < f.nvars(); ++i) wd += 1ull * spec.weights[i] * m[i];
    if (wd != spec.degree) return false;
  }
  return true;
}

/// prod_i (d/d_i - 1), the Milnor number of an isolated weighted-homogeneous germ.
inline unsigned long quasi_homogeneous_mu(const QuasiHomogeneousSpec& spec) {
  if (spec.weights.empty() || spec.degree == 0)
    throw PreconditionError("quasi-homogeneous data needs weights and a positive degree");
  Rational product = 1;
  for (unsigned w : spec.weights) {
    if (w == 0) throw PreconditionError("weights must be positive");
    Rational factor = Rational(spec.degree, w) - 1;
    factor.canonicalize();
    if (factor <= 0) throw PreconditionError("every d/d_i must exceed 1");
    product *= factor;
  }
  product.canonicalize();
  if (product.get_den() != 1)
    throw PreconditionError("non-integral Milnor product " + to_string(product) +
                            ": the weights do not describe an isolated weighted-homogeneous germ");
  return product.get_num().get_ui();
}

}  // namespace eqm
