#pragma once

// Sparse multivariate polynomials over Q in positional variables x1..xn.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace eqm {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps)
      : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

  /// x_{var+1}^power in `nvars` variables.
  static Monomial variable(std::size_t nvars, std::size_t var, unsigned power = 1) {
    if (var >= nvars) throw DimensionError("variable index out of range");
    std::vector<unsigned> e(nvars, 0);
    e[var] = power;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const {
    if (nvars() != other.nvars()) throw DimensionError("monomial dimension mismatch");
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& other) const {
    if (nvars() != other.nvars()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// Exponent vector of other / this; caller guarantees divisibility.
  Monomial cofactor_in(const Monomial& other) const {
    std::vector<unsigned> e(other.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Lexicographic comparison with x1 > x2 > ...: true iff a >lex b.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

/// Graded lex, descending. Storage and printing order of polynomial terms.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return lex_greater(a, b);
  }
};

/// Ascending degree, ties broken lexicographically with x1 first. Column
/// order of every Jacobian matrix, and the order in which bases are listed.
struct LocalOrderLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_greater(a, b);
  }
};

inline std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

/// All monomials of degree exactly `degree` in `nvars` variables, x1-heavy first.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  std::vector<unsigned> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      e[var] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

/// All monomials of degree <= max_degree in LocalOrderLess order.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw DimensionError("a polynomial needs at least one variable");
  }

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  static Polynomial term(const Monomial& m, const Rational& c = 1) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  static Polynomial from_terms(std::size_t nvars,
                               const std::vector<std::pair<Monomial, Rational>>& terms) {
    Polynomial p(nvars);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  /// Degree of the lowest-degree term; 0 for the zero polynomial.
  unsigned order() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  /// Drops every term of degree > max_degree.
  Polynomial truncated(unsigned max_degree) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() <= max_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  Polynomial homogeneous_part(unsigned degree) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  Polynomial operator-() const {
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial out(a);
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial out(a);
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial out(a.nvars_);
    if (s == 0) return out;
    out.terms_ = a.terms_;
    for (auto& [m, c] : out.terms_) c *= s;
    return out;
  }

  /// Multiplies by a monomial, keeping only terms of degree <= max_degree.
  Polynomial times_truncated(const Monomial& m, unsigned max_degree) const {
    Polynomial out(nvars_);
    for (const auto& [t, c] : terms_)
      if (t.degree() + m.degree() <= max_degree) out.terms_.emplace(t * m, c);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("polynomial dimension mismatch");
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw DimensionError("monomial dimension mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t nvars_;
  Terms terms_;
};

inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(m);
    } else {
      out += to_string(mag) + '*' + to_string(m);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial result(nvars_);
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    result = accumulate(result, parse_term(), negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+', '-' or '*'");
      ++pos_;
      result = accumulate(result, parse_term(), op == '-');
    }
    return result;
  }

 private:
  static Polynomial accumulate(const Polynomial& acc, const Polynomial& t, bool negate) {
    return negate ? acc - t : acc + t;
  }

  Polynomial parse_term() {
    Polynomial t = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return t;
      ++pos_;
      t = t * parse_factor();
    }
  }

  Polynomial parse_factor() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (c == 'x') {
      std::size_t start = pos_++;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected variable index after 'x'");
      std::string digits = read_digits();
      if (digits.size() > 9 || std::stoul(digits) == 0 || std::stoul(digits) > nvars_)
        throw DimensionError("variable x" + digits + " out of range 1.." +
                             std::to_string(nvars_) + " at position " + std::to_string(start));
      std::size_t var = std::stoul(digits) - 1;
      unsigned power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected exponent after '^'");
        std::size_t exp_pos = pos_;
        std::string e = read_digits();
        if (e.size() > 6) throw ParseError("exponent too large", exp_pos);
        power = static_cast<unsigned>(std::stoul(e));
      }
      return Polynomial::term(Monomial::variable(nvars_, var, power));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      skip_ws();
      Integer den(1);
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t den_pos = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected denominator after '/'");
        den = Integer(read_digits());
        if (den == 0) throw ParseError("zero denominator", den_pos);
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(nvars_, q);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the textual grammar
///   expr := term (('+'|'-') term)*,  term := factor ('*' factor)*,
///   factor := rational | var ('^' uint)?,  rational := int ('/' uint)?,  var := 'x' uint
/// with an optional leading '-'. Throws ParseError or DimensionError.
inline Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw DimensionError("a polynomial needs at least one variable");
  return detail::PolynomialParser(text, nvars).parse();
}

/// Formal partial derivative with respect to x_{var+1}.
inline Polynomial differentiate(const Polynomial& f, std::size_t var) {
  if (var >= f.nvars()) throw DimensionError("derivative index out of range");
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    std::vector<unsigned> e = m.exponents();
    --e[var];
    terms.emplace_back(Monomial(std::move(e)), c * m[var]);
  }
  return Polynomial::from_terms(f.nvars(), terms);
}

inline std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(differentiate(f, i));
  return out;
}

/// f(x1..xn) + f(x_{n+1}..x_{2n}).
inline Polynomial direct_double(const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> left(2 * n, 0), right(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      left[i] = m[i];
      right[n + i] = m[i];
    }
    terms.emplace_back(Monomial(std::move(left)), c);
    terms.emplace_back(Monomial(std::move(right)), c);
  }
  return Polynomial::from_terms(2 * n, terms);
}

/// Embeds a monomial of `m.nvars()` variables into `nvars` variables starting at `offset`.
inline Monomial shift_monomial(const Monomial& m, std::size_t nvars, std::size_t offset) {
  if (offset + m.nvars() > nvars) throw DimensionError("monomial does not fit");
  std::vector<unsigned> e(nvars, 0);
  for (std::size_t i = 0; i < m.nvars(); ++i) e[offset + i] = m[i];
  return Monomial(std::move(e));
}

struct HessianRank {
  std::size_t rank = 0;
  std::size_t corank = 0;

  friend bool operator==(const HessianRank&, const HessianRank&) = default;
};

/// Rank of the quadratic part of f as a symmetric matrix (the Hessian at 0).
inline HessianRank hessian_rank(const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (f.coefficient(Monomial(n)) != 0)
    throw PreconditionError("hessian_rank needs f(0) = 0");
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n, 0));
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != 2) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < m[i]; ++k) vars.push_back(i);
    if (vars[0] == vars[1]) {
      h[vars[0]][vars[0]] += 2 * c;
    } else {
      h[vars[0]][vars[1]] += c;
      h[vars[1]][vars[0]] += c;
    }
  }
  std::size_t r = dense_rank(std::move(h));
  return {r, n - r};
}

}  // namespace eqm
