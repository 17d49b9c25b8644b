#pragma once

#include <gmpxx.h>

#include <string>

namespace eqm {

/// Exact arbitrary-precision rational. Every coefficient and every matrix
/// entry in the library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace eqm
