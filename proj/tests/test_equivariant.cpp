#include <catch_amalgamated.hpp>

#include <optional>

#include "support.hpp"

using namespace eqm;
using eqm::testing::corpus;
using eqm::testing::P;

using Ks = std::vector<unsigned long>;

TEST_CASE("equivariant_milnor character vectors", "[equivariant]") {
  CHECK(equivariant_milnor(P("x1^3 + x2^3", 2), CyclicAction(3, {1, 1})).multiplicities == Ks{1, 2, 1});
  CHECK(equivariant_milnor(P("x1*x2", 2), CyclicAction(5, {1, 4})).multiplicities == Ks{1, 0, 0, 0, 0});
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    auto f = Polynomial::term(Monomial::variable(1, 0, p));
    auto cv = equivariant_milnor(f, CyclicAction(p, {1}));
    for (unsigned w = 0; w + 1 < p; ++w) CHECK(cv[w] == 1);
    CHECK(cv[p - 1] == 0);
  }
}

TEST_CASE("nu and stability", "[equivariant]") {
  CHECK(nu(P("x1^3 + x2^3", 2), CyclicAction(3, {1, 1})) == 1);
  CHECK(nu(P("x1^3 + x2^3", 2), CyclicAction(3, {1, 2})) == 2);
  CHECK(nu(P("x1^3 + x2^3 + x3^3", 3), CyclicAction(3, {1, 1, 1})) == 2);
  CHECK(is_stable(P("x1^3 + x2^3", 2), CyclicAction(3, {1, 1})));
  CHECK_FALSE(is_stable(P("x1^3 + x2^3", 2), CyclicAction(3, {1, 2})));
  CHECK(is_stable(P("x1*x2", 2), CyclicAction(5, {1, 4})));
  CHECK_THROWS_AS(nu(P("x1^2", 2), CyclicAction(3, {1, 1})), NotInvariant);
}

TEST_CASE("ab_decomposition examples", "[equivariant]") {
  auto d = ab_decomposition({3, {1, 2, 1}}, CyclicAction(3, {1, 1}));
  CHECK(d.a == 2);
  CHECK(d.b == 1);
  CHECK(d.w0 == 1);

  auto e = ab_decomposition({3, {2, 3, 3}}, CyclicAction(3, {1, 1, 1}));
  CHECK(e.a == 2);
  CHECK(e.b == 3);
  CHECK(e.w0 == 0);

  for (unsigned p : {3u, 5u, 7u}) {
    std::vector<unsigned long> k(p, 0);
    k[0] = 1;
    auto m = ab_decomposition({p, k}, CyclicAction(p, {1, p - 1}));
    CHECK(m.a == 1);
    CHECK(m.b == 0);
    CHECK(m.w0 == 0);
  }

  // All equal: the det position is used and a = b.
  auto flat = ab_decomposition({5, {2, 2, 2, 2, 2}}, CyclicAction(5, {1, 1}));
  CHECK(flat.w0 == 2);
  CHECK(flat.a == flat.b);
  CHECK_FALSE(flat.convention_flip);
  CHECK_FALSE(flat.convention_determined);

  CHECK_THROWS_AS(ab_decomposition({5, {1, 2, 3, 2, 2}}, CyclicAction(5, {1})), NoDecomposition);
  CHECK_THROWS_AS(ab_decomposition({3, {1, 2, 1}}, CyclicAction(5, {1})), DimensionError);
}

TEST_CASE("mu_from_ab", "[equivariant]") {
  CHECK(mu_from_ab(2, 1, 3) == 4);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    CHECK(mu_from_ab(1, 0, p) == 1);
    CHECK(mu_from_ab(0, 1, p) == p - 1);
  }
}

TEST_CASE("corpus: character sums, doubling of nu, ab reconstruction", "[equivariant][property]") {
  std::optional<bool> flip;
  for (const auto& g : corpus()) {
    INFO(g.text << " " << to_string(g.action()));
    const auto tau = g.action();
    const auto eq = analyze_equivariant(g.germ(), tau);
    CHECK(eq.character.total() == eq.milnor.mu());

    const auto d = ab_decomposition(eq.character, tau);
    CHECK(mu_from_ab(d.a, d.b, tau.p()) == eq.milnor.mu());
    if (d.convention_determined) {
      if (!flip) flip = d.convention_flip;
      CHECK(d.convention_flip == *flip);
    }

    if (eq.nu() == 1) {
      if (det_weight(tau) != 0) {
        CHECK(d.b == 1);
        CHECK((d.a == 0 || d.a == 2));
      } else {
        CHECK(d.a == 1);
        CHECK((d.b == 0 || d.b == 2));
      }
    }

    const auto doubled = analyze_equivariant(direct_double(g.germ()), realify(tau));
    CHECK(doubled.nu() == eq.character.sum_of_squares());
  }
  // At least one germ must pin the convention for the consistency check to mean anything.
  REQUIRE(flip.has_value());
  CHECK(*flip);
}

TEST_CASE("truncations bound nu from below and reach it at the certificate", "[equivariant][property]") {
  // Truncating at T computes O/(J + m^{T+1}), a quotient of Q_f.
  for (const auto& g : corpus()) {
    const auto tau = g.action();
    const auto eq = analyze_equivariant(g.germ(), tau);
    for (unsigned t = 2; t <= eq.milnor.certificate_degree() + 1; ++t) {
      JacobianTruncation jt(g.germ(), t);
      std::size_t invariant_free = 0;
      for (std::size_t c = 0; c < jt.columns().size(); ++c)
        if (!jt.is_pivot(c) && monomial_weight(jt.columns()[c], tau) == 0) ++invariant_free;
      CHECK(invariant_free <= eq.nu());
      if (t + 1 >= eq.milnor.certificate_degree()) CHECK(invariant_free == eq.nu());
    }
  }
}

TEST_CASE("weight-filtered elimination sees the same invariant part", "[equivariant][property]") {
  for (const auto& g : corpus()) {
    const auto tau = g.action();
    const auto eq = analyze_equivariant(g.germ(), tau);
    const unsigned D = eq.milnor.certificate_degree();
    JacobianTruncation jt(g.germ(), D, [&](const Monomial& m) { return monomial_weight(m, tau) == 0; });
    CHECK(jt.standard_count_below(D) == eq.nu());
  }
}
