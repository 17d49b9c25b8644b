#pragma once

// The equivariant Milnor number mu_G(f) as a character vector, nu(f), and
// the (a, b) splitting of mu_G(f) as a*chi + b*(every other character).
//
// Storage convention: basis monomial x^alpha is counted at weight <a, alpha>.
// The function action g.h(x) = h(g^{-1} x) negates weights; nu is unaffected
// since weight 0 is fixed by negation.

#include <optional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "localalg.hpp"
#include "poly.hpp"
#include "repn.hpp"

namespace eqm {

struct EquivariantData {
  MilnorData milnor;
  CharacterVector character;

  unsigned long nu() const { return character[0]; }
};

/// Counts basis monomials of Q_f by weight.
inline CharacterVector character_of_basis(const MilnorData& data, const CyclicAction& tau) {
  CharacterVector cv{tau.p(), std::vector<unsigned long>(tau.p(), 0)};
  for (const auto& m : data.basis()) ++cv.multiplicities[monomial_weight(m, tau)];
  return cv;
}

inline void require_invariant(const Polynomial& f, const CyclicAction& tau) {
  if (!is_invariant(f, tau))
    throw NotInvariant(to_string(f) + " is not invariant under " + to_string(tau));
}

inline EquivariantData analyze_equivariant(const Polynomial& f, const CyclicAction& tau,
                                           unsigned d_max = kDefaultDegreeBound) {
  require_invariant(f, tau);
  MilnorData data = milnor_basis(f, d_max);
  CharacterVector cv = character_of_basis(data, tau);
  return {std::move(data), std::move(cv)};
}

inline CharacterVector equivariant_milnor(const Polynomial& f, const CyclicAction& tau,
                                          unsigned d_max = kDefaultDegreeBound) {
  return analyze_equivariant(f, tau, d_max).character;
}

/// Dimension of the invariant part of Q_f.
inline unsigned long nu(const Polynomial& f, const CyclicAction& tau,
                        unsigned d_max = kDefaultDegreeBound) {
  return equivariant_milnor(f, tau, d_max)[0];
}

/// Equivariant stability: nu(f) = 1.
inline bool is_stable(const Polynomial& f, const CyclicAction& tau,
                      unsigned d_max = kDefaultDegreeBound) {
  return nu(f, tau, d_max) == 1;
}

struct ABDecomposition {
  unsigned long a = 0;
  unsigned long b = 0;
  unsigned w0 = 0;
  /// w0 was matched at -sum(a_i) rather than +sum(a_i).
  bool convention_flip = false;
  /// Exactly one of the two sign positions fits (and they differ mod p),
  /// so this character vector pins the sign convention.
  bool convention_determined = false;
};

namespace detail {

inline std::optional<ABDecomposition> fit_at(const CharacterVector& cv, unsigned w0) {
  const unsigned p = cv.p;
  ABDecomposition d;
  d.w0 = w0;
  d.a = cv[w0];
  d.b = cv[(w0 + 1) % p];
  for (unsigned w = 0; w < p; ++w)
    if (w != w0 && cv[w] != d.b) return std::nullopt;
  return d;
}

}  // namespace detail

/// Finds w0, a, b with k_{w0} = a and k_w = b elsewhere. Tries +det, then
/// -det, then the smallest fitting position. Throws NoDecomposition.
inline ABDecomposition ab_decomposition(const CharacterVector& cv, const CyclicAction& tau) {
  if (cv.p != tau.p() || cv.multiplicities.size() != tau.p())
    throw DimensionError("character vector and action have different group orders");
  const unsigned p = tau.p();
  const unsigned plus = det_weight(tau);
  const unsigned minus = (p - plus) % p;
  auto at_plus = detail::fit_at(cv, plus);
  auto at_minus = detail::fit_at(cv, minus);
  if (at_plus || at_minus) {
    ABDecomposition d = at_plus ? *at_plus : *at_minus;
    d.convention_flip = !at_plus;
    d.convention_determined = plus != minus && (at_plus.has_value() != at_minus.has_value());
    return d;
  }
  for (unsigned w = 0; w < p; ++w)
    if (auto d = detail::fit_at(cv, w)) return *d;
  std::string ks;
  for (auto k : cv.multiplicities) ks += (ks.empty() ? "" : ",") + std::to_string(k);
  throw NoDecomposition("character vector (" + ks + ") is not of the form a*chi + b*(others)");
}

/// a + b (p - 1).
inline unsigned long mu_from_ab(unsigned long a, unsigned long b, unsigned p) {
  return a + b * (p - 1);
}

}  // namespace eqm
