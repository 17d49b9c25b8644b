#pragma once

// Screening of Z_p-representations for equivariantly simple germs, the
// Milnor-number constraints on stable germs, identity checks (Roberts'
// equality, doubling) and a bounded search for stable germs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "equivariant.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "localalg.hpp"
#include "poly.hpp"
#include "repn.hpp"

namespace eqm {

enum class DetCase { det_nontrivial, det_trivial };

inline const char* to_string(DetCase c) {
  return c == DetCase::det_nontrivial ? "det_nontrivial" : "det_trivial";
}

/// Necessary condition for simple germs. The log2 bound is evaluated as
/// 2^corank <= threshold with threshold = p+1 (det != 1) or 2p-1 (det = 1).
struct ScreeningVerdict {
  DetCase case_tag = DetCase::det_trivial;
  unsigned det_weight = 0;
  std::size_t rank = 0;
  std::size_t corank = 0;
  std::uint64_t power = 1;
  std::uint64_t threshold = 0;
  /// false: cannot admit simple germs. true: may admit them.
  bool passes = false;
};

inline ScreeningVerdict screen_representation(const CyclicAction& tau) {
  ScreeningVerdict v;
  v.det_weight = det_weight(tau);
  v.case_tag = v.det_weight == 0 ? DetCase::det_trivial : DetCase::det_nontrivial;
  v.rank = max_invariant_quadratic_rank(tau);
  v.corank = tau.nvars() - v.rank;
  v.power = std::uint64_t{1} << v.corank;
  v.threshold = v.case_tag == DetCase::det_nontrivial ? tau.p() + 1ull : 2ull * tau.p() - 1;
  v.passes = v.power <= v.threshold;
  return v;
}

/// The only Milnor numbers a stable germ can have: {p-1, p+1} if det != 1,
/// {1, 2p-1} if det = 1.
inline std::vector<unsigned> stable_mu_values(const CyclicAction& tau) {
  const unsigned p = tau.p();
  if (det_weight(tau) != 0) return {p - 1, p + 1};
  return {1, 2 * p - 1};
}

enum class CheckStatus { passed, failed, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "pass";
    case CheckStatus::failed: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string name;
  long long expected = 0;
  long long computed = 0;
  CheckStatus status = CheckStatus::failed;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passes() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.status == CheckStatus::failed; });
  }

  void add(std::string name, long long expected, long long computed, bool ok,
           std::string detail = {}) {
    checks.push_back({std::move(name), expected, computed,
                      ok ? CheckStatus::passed : CheckStatus::failed, std::move(detail)});
  }

  void skip(std::string name, std::string why) {
    checks.push_back({std::move(name), 0, 0, CheckStatus::skipped, std::move(why)});
  }

  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

/// mu(f) = (nu(f) - 1) p + 1, for real actions without fixed points off the origin.
inline VerificationReport verify_roberts(const Polynomial& f, const CyclicAction& tau,
                                         unsigned d_max = kDefaultDegreeBound) {
  require_invariant(f, tau);
  if (!is_real(tau)) throw PreconditionNotReal(to_string(tau) + " is not a real action");
  if (has_nonzero_fixed_points(tau))
    throw PreconditionFixedPoints(to_string(tau) + " fixes a coordinate axis");
  const auto eq = analyze_equivariant(f, tau, d_max);
  const long long mu = static_cast<long long>(eq.milnor.mu());
  const long long nu_value = static_cast<long long>(eq.nu());
  VerificationReport r;
  const long long expected = (nu_value - 1) * tau.p() + 1;
  r.add("roberts_equality", expected, mu, expected == mu,
        "mu=" + std::to_string(mu) + " nu=" + std::to_string(nu_value));
  return r;
}

/// Doubling identities for f + f(y):
///   mu(f+f) = mu(f)^2,
///   the mu^2 products p_i(x) p_j(y) of basis monomials are independent in Q_{f+f},
///   nu(f+f) under tau_R equals the sum of squared character multiplicities.
inline VerificationReport verify_double_identities(const Polynomial& f, const CyclicAction& tau,
                                                   unsigned d_max = kDefaultDegreeBound) {
  require_invariant(f, tau);
  const auto eq = analyze_equivariant(f, tau, d_max);
  const Polynomial ff = direct_double(f);
  const CyclicAction tau_r = realify(tau);
  const auto eq2 = analyze_equivariant(ff, tau_r, d_max);

  VerificationReport r;
  const long long mu = static_cast<long long>(eq.milnor.mu());
  const long long mu2 = static_cast<long long>(eq2.milnor.mu());
  r.add("double_mu", mu * mu, mu2, mu * mu == mu2);

  const std::size_t n = f.nvars();
  SparseEchelon span(eq2.milnor.mu());
  for (const auto& px : eq.milnor.basis()) {
    for (const auto& py : eq.milnor.basis()) {
      Monomial prod = shift_monomial(px, 2 * n, 0) * shift_monomial(py, 2 * n, n);
      const auto coords = eq2.milnor.reduce(Polynomial::term(prod));
      SparseRow row;
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] != 0) row.emplace_back(k, coords[k]);
      span.insert(std::move(row));
    }
  }
  const long long rank = static_cast<long long>(span.rank());
  r.add("basis_product_rank", mu * mu, rank, rank == mu * mu);

  const long long squares = static_cast<long long>(eq.character.sum_of_squares());
  const long long nu2 = static_cast<long long>(eq2.nu());
  r.add("double_nu", squares, nu2, squares == nu2);
  return r;
}

/// mu(f) >= 2^(corank of the Hessian); for stable germs also Hessian rank = rk(tau).
inline VerificationReport corank_bound_check(const Polynomial& f, const CyclicAction& tau,
                                             unsigned d_max = kDefaultDegreeBound) {
  require_invariant(f, tau);
  const auto eq = analyze_equivariant(f, tau, d_max);
  const auto h = hessian_rank(f);
  VerificationReport r;
  const long long mu = static_cast<long long>(eq.milnor.mu());
  const long long bound = h.corank >= 62 ? (1ll << 62) : (1ll << h.corank);
  r.add("corank_bound", bound, mu, mu >= bound, "mu >= 2^" + std::to_string(h.corank));
  const long long rk = static_cast<long long>(max_invariant_quadratic_rank(tau));
  if (eq.nu() == 1) {
    r.add("stable_hessian_rank", rk, static_cast<long long>(h.rank),
          static_cast<long long>(h.rank) == rk);
  } else {
    r.skip("stable_hessian_rank", "germ is not stable (nu=" + std::to_string(eq.nu()) + ")");
  }
  return r;
}

enum class CoefficientMode { unit, random };

inline const char* to_string(CoefficientMode m) {
  return m == CoefficientMode::unit ? "unit" : "random";
}

struct SearchOptions {
  unsigned degree_bound = 2;
  CoefficientMode mode = CoefficientMode::unit;
  std::uint64_t seed = 0;
  unsigned d_max = kDefaultDegreeBound;
  /// Largest number of terms per candidate; 0 means no limit.
  std::size_t max_terms = 0;
  /// Visit one support per orbit of the weight-preserving variable permutations.
  bool dedupe_permutations = true;
};

struct StableGerm {
  Polynomial germ;
  MilnorData milnor;
  CharacterVector character;
};

struct SearchReport {
  CyclicAction action;
  SearchOptions options;
  std::vector<Monomial> pool;
  std::vector<StableGerm> germs;
  std::uint64_t supports = 0;
  std::uint64_t symmetric_duplicates = 0;
  std::uint64_t skipped_non_isolated = 0;
  std::uint64_t skipped_bound = 0;
  /// nu > 1 shown by counting weight-0 monomials against weight-0 Jacobian rows.
  std::uint64_t rejected_by_count = 0;
  /// nu > 1 shown by elimination.
  std::uint64_t rejected_unstable = 0;

  /// An empty search is only ever a statement about the probed range.
  std::string label() const {
    return germs.empty() ? "no stable germ found up to bound" : "stable germs found";
  }
};

namespace detail {

// Variable i is "covered" by x_i^k x_j (j arbitrary, possibly i). A germ
// missing a cover for some i is critical along the x_i axis.
inline std::uint64_t axis_cover_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] >= 1 && m[i] + 1 >= m.degree()) mask |= std::uint64_t{1} << i;
  return mask;
}

inline std::vector<std::vector<std::size_t>> weight_preserving_permutations(const CyclicAction& tau) {
  std::vector<std::size_t> perm(tau.nvars());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = tau.weight(perm[i]) == tau.weight(i);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline Monomial permute(const Monomial& m, const std::vector<std::size_t>& perm) {
  std::vector<unsigned> e(m.nvars());
  for (std::size_t i = 0; i < perm.size(); ++i) e[perm[i]] = m[i];
  return Monomial(std::move(e));
}

// Nonzero rational with numerator and denominator in 1..9 and a random sign.
inline Rational draw_coefficient(std::mt19937_64& rng) {
  const std::uint64_t r = rng();
  const long num = static_cast<long>(1 + r % 9);
  const long den = static_cast<long>(1 + (r >> 8) % 9);
  Rational q((r >> 16) & 1 ? -num : num, den);
  q.canonicalize();
  return q;
}

}  // namespace detail

/// Sums of distinct invariant monomials of degree 2..degree_bound, with
/// unit or seeded random coefficients, filtered to nu = 1. Visits supports
/// by increasing size, lexicographically in the LocalOrderLess pool.
inline SearchReport search_stable_germs(const CyclicAction& tau, const SearchOptions& opts) {
  if (opts.degree_bound < 2) throw PreconditionError("degree bound must be at least 2");
  SearchReport report{tau, opts, {}, {}};
  const std::size_t n = tau.nvars();
  for (unsigned d = 2; d <= opts.degree_bound; ++d)
    for (auto& m : monomials_of_degree(n, d))
      if (monomial_weight(m, tau) == 0) report.pool.push_back(std::move(m));
  const auto& pool = report.pool;
  const std::size_t total = pool.size();
  const std::size_t max_terms = opts.max_terms == 0 ? total : std::min(opts.max_terms, total);

  std::vector<std::uint64_t> cover(total);
  for (std::size_t i = 0; i < total; ++i) cover[i] = detail::axis_cover_mask(pool[i]);
  const std::uint64_t all_axes = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  // Pool positions of each permuted monomial, one table per permutation.
  std::vector<std::vector<std::size_t>> images;
  if (opts.dedupe_permutations && n <= 8) {
    std::map<Monomial, std::size_t, LocalOrderLess> position;
    for (std::size_t i = 0; i < total; ++i) position.emplace(pool[i], i);
    for (const auto& perm : detail::weight_preserving_permutations(tau)) {
      bool identity = std::is_sorted(perm.begin(), perm.end());
      if (identity) continue;
      std::vector<std::size_t> img(total);
      for (std::size_t i = 0; i < total; ++i) img[i] = position.at(detail::permute(pool[i], perm));
      images.push_back(std::move(img));
    }
  }

  auto is_canonical = [&](const std::vector<std::size_t>& support) {
    std::vector<std::size_t> mapped(support.size());
    for (const auto& img : images) {
      for (std::size_t k = 0; k < support.size(); ++k) mapped[k] = img[support[k]];
      std::sort(mapped.begin(), mapped.end());
      if (mapped < support) return false;
    }
    return true;
  };

  // ord[i] = lowest degree of df/dx_i. Weight-0 rows of M_T come from
  // multipliers of weight a_i and degree <= T - ord[i]; if the weight-0
  // columns outnumber them by more than one, nu > 1 without elimination.
  const unsigned count_horizon = 3 * opts.degree_bound;
  std::vector<std::vector<std::uint64_t>> upto(tau.p(), std::vector<std::uint64_t>(count_horizon + 1, 0));
  for (unsigned d = 0; d <= count_horizon; ++d) {
    for (const auto& m : monomials_of_degree(n, d)) ++upto[monomial_weight(m, tau)][d];
    if (d > 0)
      for (unsigned w = 0; w < tau.p(); ++w) upto[w][d] += upto[w][d - 1];
  }
  auto count_rejects = [&](const std::vector<std::size_t>& sup) {
    std::vector<unsigned> ord(n, count_horizon + 1);
    for (auto i : sup)
      for (std::size_t v = 0; v < n; ++v)
        if (pool[i][v] > 0) ord[v] = std::min(ord[v], pool[i].degree() - 1);
    for (unsigned t = 1; t <= count_horizon; ++t) {
      std::uint64_t rows = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (ord[v] <= t) rows += upto[tau.weight(v)][t - ord[v]];
      if (upto[0][t] > rows + 1) return true;
    }
    return false;
  };

  auto nu_lower_bound_ok = [&](const JacobianTruncation& jt) {
    std::size_t invariant_standard = 0;
    for (std::size_t c = 0; c < jt.columns().size(); ++c)
      if (!jt.is_pivot(c) && monomial_weight(jt.columns()[c], tau) == 0) ++invariant_standard;
    return invariant_standard <= 1;
  };

  std::vector<std::size_t> support;
  for (std::size_t k = 1; k <= max_terms; ++k) {
    support.resize(k);
    std::iota(support.begin(), support.end(), 0);
    for (;;) {
      const std::uint64_t ordinal = report.supports++;
      std::uint64_t mask = 0;
      for (auto i : support) mask |= cover[i];
      if (mask != all_axes) {
        ++report.skipped_non_isolated;
      } else if (!is_canonical(support)) {
        ++report.symmetric_duplicates;
      } else if (count_rejects(support)) {
        ++report.rejected_by_count;
      } else {
        std::vector<std::pair<Monomial, Rational>> terms;
        std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ull * (ordinal + 1)));
        for (auto i : support)
          terms.emplace_back(pool[i], opts.mode == CoefficientMode::unit
                                          ? Rational(1)
                                          : detail::draw_coefficient(rng));
        Polynomial f = Polynomial::from_terms(n, terms);
        try {
          auto data = milnor_basis_monitored(f, opts.d_max, nu_lower_bound_ok);
          if (!data) {
            ++report.rejected_unstable;
          } else {
            CharacterVector cv = character_of_basis(*data, tau);
            if (cv[0] == 1) {
              report.germs.push_back({std::move(f), std::move(*data), std::move(cv)});
            } else {
              ++report.rejected_unstable;
            }
          }
        } catch (const NotIsolatedWithinBound&) {
          ++report.skipped_bound;
        }
      }
      // Next k-subset in lexicographic order.
      std::size_t i = k;
      while (i > 0 && support[i - 1] == total - k + (i - 1)) --i;
      if (i == 0) break;
      ++support[i - 1];
      for (std::size_t j = i; j < k; ++j) support[j] = support[j - 1] + 1;
    }
  }
  return report;
}

}  // namespace eqm
