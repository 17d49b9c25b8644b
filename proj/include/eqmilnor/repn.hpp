#pragma once

// Diagonal actions of Z_p: x_i -> zeta^{a_i} x_i.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace eqm {

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// A prime p and weights a_1..a_n in [0, p). Dimensions up to 63 are
/// supported so that 2^(corank) fits a 64-bit word.
class CyclicAction {
 public:
  static constexpr std::size_t kMaxDimension = 63;

  CyclicAction(unsigned p, std::vector<unsigned> weights) : p_(p), weights_(std::move(weights)) {
    if (!is_prime(p_)) throw PreconditionError("group order " + std::to_string(p_) + " is not prime");
    if (weights_.empty()) throw PreconditionError("an action needs at least one variable");
    if (weights_.size() > kMaxDimension)
      throw PreconditionError("at most " + std::to_string(kMaxDimension) + " variables supported");
    for (unsigned a : weights_)
      if (a >= p_)
        throw PreconditionError("weight " + std::to_string(a) + " is not a residue mod " +
                                std::to_string(p_));
  }

  unsigned p() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return weights_.size(); }
  const std::vector<unsigned>& weights() const noexcept { return weights_; }
  unsigned weight(std::size_t i) const { return weights_[i]; }

  friend bool operator==(const CyclicAction&, const CyclicAction&) = default;

 private:
  unsigned p_;
  std::vector<unsigned> weights_;
};

inline std::string to_string(const CyclicAction& tau) {
  std::string out = "Z" + std::to_string(tau.p()) + "(";
  for (std::size_t i = 0; i < tau.nvars(); ++i) {
    if (i) out += ',';
    out += std::to_string(tau.weight(i));
  }
  return out + ")";
}

/// Multiplicities k_0..k_{p-1} of the characters of Z_p, indexed by weight.
struct CharacterVector {
  unsigned p = 0;
  std::vector<unsigned long> multiplicities;

  unsigned long total() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0ul);
  }
  unsigned long sum_of_squares() const {
    unsigned long s = 0;
    for (auto k : multiplicities) s += k * k;
    return s;
  }
  unsigned long operator[](unsigned w) const { return multiplicities[w]; }

  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

/// <a, alpha> mod p.
inline unsigned monomial_weight(const Monomial& m, const CyclicAction& tau) {
  if (m.nvars() != tau.nvars()) throw DimensionError("monomial and action differ in dimension");
  unsigned long long w = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) w += 1ull * tau.weight(i) * (m[i] % tau.p());
  return static_cast<unsigned>(w % tau.p());
}

inline bool is_invariant(const Polynomial& f, const CyclicAction& tau) {
  if (f.nvars() != tau.nvars()) throw DimensionError("polynomial and action differ in dimension");
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return monomial_weight(t.first, tau) == 0; });
}

/// Weight of det(tau): sum of a_i mod p. det(tau) = 1 iff this is 0.
inline unsigned det_weight(const CyclicAction& tau) {
  unsigned long long s = 0;
  for (unsigned a : tau.weights()) s += a;
  return static_cast<unsigned>(s % tau.p());
}

/// Number of variables carrying each weight.
inline std::vector<std::size_t> weight_counts(const CyclicAction& tau) {
  std::vector<std::size_t> m(tau.p(), 0);
  for (unsigned a : tau.weights()) ++m[a];
  return m;
}

/// rk(tau), the largest rank of a tau-invariant quadratic form. Weight-0
/// variables contribute their squares; weights w and p-w pair up through
/// the products x_i x_j. For p = 2 every square is invariant.
inline std::size_t max_invariant_quadratic_rank(const CyclicAction& tau) {
  if (tau.p() == 2) return tau.nvars();
  const auto m = weight_counts(tau);
  std::size_t rk = m[0];
  for (unsigned w = 1; w <= (tau.p() - 1) / 2; ++w) rk += 2 * std::min(m[w], m[tau.p() - w]);
  return rk;
}

inline bool is_real(const CyclicAction& tau) {
  return max_invariant_quadratic_rank(tau) == tau.nvars();
}

/// True iff some coordinate axis is fixed pointwise (a weight is 0).
inline bool has_nonzero_fixed_points(const CyclicAction& tau) {
  return std::find(tau.weights().begin(), tau.weights().end(), 0u) != tau.weights().end();
}

/// tau_R on 2n variables: weights (a_1..a_n, -a_1..-a_n) mod p.
inline CyclicAction realify(const CyclicAction& tau) {
  std::vector<unsigned> w = tau.weights();
  for (unsigned a : tau.weights()) w.push_back((tau.p() - a) % tau.p());
  return CyclicAction(tau.p(), std::move(w));
}

/// Minimal generators of the monoid of invariant monomials: weight-0
/// monomials of degree 1..p not divisible by a smaller non-constant
/// weight-0 monomial. Degree p suffices by Noether's bound. Sorted by LocalOrderLess.
inline std::vector<Monomial> invariant_monomial_generators(const CyclicAction& tau) {
  std::vector<Monomial> gens;
  for (unsigned d = 1; d <= tau.p(); ++d) {
    for (auto& m : monomials_of_degree(tau.nvars(), d)) {
      if (monomial_weight(m, tau) != 0) continue;
      // A reducible invariant monomial has an invariant proper divisor, and
      // then also a generator divisor found earlier.
      bool reducible = std::any_of(gens.begin(), gens.end(),
                                   [&](const Monomial& g) { return g.divides(m); });
      if (!reducible) gens.push_back(std::move(m));
    }
  }
  return gens;
}

/// Every weight vector up to permutation (non-decreasing), lexicographic.
inline std::vector<CyclicAction> enumerate_actions(unsigned p, std::size_t n) {
  if (!is_prime(p)) throw PreconditionError("group order " + std::to_string(p) + " is not prime");
  if (n == 0 || n > CyclicAction::kMaxDimension) throw PreconditionError("dimension out of range");
  std::vector<CyclicAction> out;
  std::vector<unsigned> w(n, 0);
  for (;;) {
    out.emplace_back(p, w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == p - 1) --i;
    if (i == 0) break;
    unsigned next = w[i - 1] + 1;
    for (std::size_t j = i - 1; j < n; ++j) w[j] = next;
  }
  return out;
}

struct ModuliCount {
  std::uint64_t invariant_dim = 0;
  std::uint64_t group_dim = 0;
  bool moduli_forced = false;

  friend bool operator==(const ModuliCount&, const ModuliCount&) = default;
};

/// Dimension count for Z_k acting by one scalar on C^n: degree-k forms,
/// C(n+k-1, k) of them, against the n^2-dimensional GL_n. k need not be prime.
inline ModuliCount moduli_dimension_test(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 2) throw PreconditionError("moduli test needs n >= 1 and k >= 2");
  using u128 = unsigned __int128;
  constexpr auto limit = std::numeric_limits<std::uint64_t>::max();
  // C(n+k-1, k) = C(n+k-1, n-1), built incrementally so each step stays integral.
  u128 c = 1;
  for (std::uint64_t i = 1; i < n; ++i) {
    c = c * (k + i) / i;
    if (c > limit) throw PreconditionError("binomial coefficient overflows 64 bits");
  }
  if (static_cast<u128>(n) * n > limit) throw PreconditionError("n^2 overflows 64 bits");
  ModuliCount r;
  r.invariant_dim = static_cast<std::uint64_t>(c);
  r.group_dim = n * n;
  r.moduli_forced = r.invariant_dim > r.group_dim;
  return r;
}

}  // namespace eqm
