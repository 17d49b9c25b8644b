#pragma once

// Shared helpers for the test binaries: seeded random data and an
// independent dense-elimination oracle for local algebra dimensions.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "eqmilnor/eqmilnor.hpp"

namespace eqm::testing {

inline Rational small_rational(std::mt19937_64& rng) {
  std::uint64_t r = rng();
  long num = static_cast<long>(r % 11) - 5;
  long den = static_cast<long>(1 + (r >> 8) % 4);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Random polynomial with up to `terms` terms of degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree,
                                    std::size_t terms, unsigned min_degree = 0) {
  std::vector<std::pair<Monomial, Rational>> out;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<unsigned> e(nvars, 0);
    unsigned deg = min_degree + static_cast<unsigned>(rng() % (max_degree - min_degree + 1));
    for (unsigned k = 0; k < deg; ++k) ++e[rng() % nvars];
    out.emplace_back(Monomial(std::move(e)), small_rational(rng));
  }
  return Polynomial::from_terms(nvars, out);
}

/// Plain Gauss-Jordan rank, written independently of the library's echelon code.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational s = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= s * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// dim O / (J_f + m^T): the monomials of degree < T modulo every x^a df/dx_i
/// cut at degree < T. Equals mu(f) once m^T lies in the Jacobian ideal.
inline std::size_t oracle_colength(const Polynomial& f, unsigned T) {
  const std::size_t n = f.nvars();
  std::vector<Monomial> cols;
  for (unsigned d = 0; d < T; ++d)
    for (auto& m : monomials_of_degree(n, d)) cols.push_back(m);
  auto index_of = [&](const Monomial& m) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (cols[i] == m) return i;
    return cols.size();
  };
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial g = differentiate(f, i);
    for (const auto& mult : cols) {
      std::vector<Rational> row(cols.size(), 0);
      bool any = false;
      for (const auto& [m, c] : g.terms()) {
        Monomial prod = m * mult;
        if (prod.degree() >= T) continue;
        row[index_of(prod)] += c;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return cols.size() - oracle_rank(std::move(rows));
}

inline Polynomial P(const char* text, std::size_t n) { return parse_polynomial(text, n); }

inline std::vector<std::string> basis_strings(const MilnorData& d) {
  std::vector<std::string> out;
  for (const auto& m : d.basis()) out.push_back(to_string(m));
  return out;
}

struct CorpusGerm {
  const char* text;
  unsigned p;
  std::vector<unsigned> weights;

  CyclicAction action() const { return CyclicAction(p, weights); }
  Polynomial germ() const { return parse_polynomial(text, weights.size()); }
};

/// Invariant isolated germs in at most three variables. The first block has
/// real actions without nonzero fixed points.
inline const std::vector<CorpusGerm>& corpus() {
  static const std::vector<CorpusGerm> germs = {
      {"x1*x2", 5, {1, 4}},
      {"x1^3 + x2^3", 3, {1, 2}},
      {"x1^5 + x2^5", 5, {1, 4}},
      {"x1^4 + x2^4", 2, {1, 1}},
      {"x1^6 + x2^6", 3, {1, 2}},
      {"x1^2", 2, {1}},
      {"x1^4", 2, {1}},
      {"x1^3 + x1*x2 + x2^3", 3, {1, 2}},
      {"x1^3", 3, {1}},
      {"x1^3 + x2^3", 3, {1, 1}},
      {"x1^2*x2 + x2^3", 3, {1, 1}},
      {"x1^3 + x2^4", 3, {1, 0}},
      {"x1^3 + x1*x2^3", 3, {0, 1}},
      {"x1^3 + x2^5", 5, {0, 1}},
      {"x1^2*x2 + x2^4", 2, {1, 0}},
      {"x1^5", 5, {1}},
      {"x1^3 + x2^3 + x3^3", 3, {1, 1, 1}},
  };
  return germs;
}

}  // namespace eqm::testing
