#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace eqm;
using eqm::testing::P;

TEST_CASE("parse transcribes literal terms", "[poly][parse]") {
  auto f = P("x1^3 + x2^3", 2);
  CHECK(f.size() == 2);
  CHECK(f.coefficient(Monomial({3, 0})) == 1);
  CHECK(f.coefficient(Monomial({0, 3})) == 1);

  CHECK(P("0", 1).is_zero());

  auto g = P("x1^2*x2 - 1/2*x2^4", 2);
  CHECK(g.size() == 2);
  CHECK(g.coefficient(Monomial({2, 1})) == 1);
  CHECK(g.coefficient(Monomial({0, 4})) == Rational(-1, 2));
}

TEST_CASE("parse combines like terms and canonicalizes", "[poly][parse]") {
  CHECK(P("x1 + x1 - 2*x1", 1).is_zero());
  CHECK(P("2/4*x1", 1) == P("1/2*x1", 1));
  CHECK(P("-x1*x2 + 3", 2).coefficient(Monomial({1, 1})) == -1);
  CHECK(P("x2 * x1 ^ 2", 2) == P("x1^2*x2", 2));
}

TEST_CASE("parse rejects malformed input", "[poly][parse]") {
  CHECK_THROWS_AS(P("x1 +", 1), ParseError);
  CHECK_THROWS_AS(P("x1 ++ x1", 1), ParseError);
  CHECK_THROWS_AS(P("1/0", 1), ParseError);
  CHECK_THROWS_AS(P("y1", 1), ParseError);
  CHECK_THROWS_AS(P("x", 1), ParseError);
  CHECK_THROWS_AS(P("x1^", 1), ParseError);
  CHECK_THROWS_AS(P("x1^1234567", 1), ParseError);
  CHECK_THROWS_AS(P("", 1), ParseError);
  CHECK_THROWS_AS(P("x3", 2), DimensionError);
  CHECK_THROWS_AS(P("x0", 2), DimensionError);
  CHECK_THROWS_AS(P("x1", 0), DimensionError);
  try {
    P("x1 + $", 1);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("printing is canonical and round-trips", "[poly][print]") {
  CHECK(to_string(P("x1^2*x2 - 1/2*x2^4", 2)) == "-1/2*x2^4 + x1^2*x2");
  CHECK(to_string(P("0", 3)) == "0");
  CHECK(to_string(P("5 + x1", 1)) == "x1 + 5");
  CHECK(to_string(P("x1*x2 - x1^3", 2)) == "-x1^3 + x1*x2");

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto f = eqm::testing::random_polynomial(rng, 3, 5, 6);
    CHECK(parse_polynomial(to_string(f), 3) == f);
  }
}

TEST_CASE("differentiate follows the power rule", "[poly][diff]") {
  CHECK(differentiate(P("x1^3 + x2^3", 2), 0) == P("3*x1^2", 2));
  CHECK(differentiate(P("x1^3", 2), 1).is_zero());
  CHECK(differentiate(P("x1^2*x2 - 1/2*x2^4", 2), 0) == P("2*x1*x2", 2));
  CHECK_THROWS_AS(differentiate(P("x1", 1), 1), DimensionError);
}

TEST_CASE("direct_double places a copy in fresh variables", "[poly][double]") {
  CHECK(direct_double(P("x1^3", 1)) == P("x1^3 + x2^3", 2));
  CHECK(direct_double(P("x1*x2", 2)) == P("x1*x2 + x3*x4", 4));
  CHECK(direct_double(P("0", 2)).is_zero());
  CHECK(direct_double(P("0", 2)).nvars() == 4);
}

TEST_CASE("hessian_rank of the quadratic part", "[poly][hessian]") {
  CHECK(hessian_rank(P("x1*x2", 2)) == HessianRank{2, 0});
  CHECK(hessian_rank(P("x1^3 + x2^3", 2)) == HessianRank{0, 2});
  CHECK(hessian_rank(P("x1^2 + x2^3", 2)) == HessianRank{1, 1});
  CHECK(hessian_rank(P("x1^2 + 2*x1*x2 + x2^2", 2)) == HessianRank{1, 1});
  CHECK_THROWS_AS(hessian_rank(P("1 + x1^2", 1)), PreconditionError);
}

TEST_CASE("ring axioms on random polynomials", "[poly][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto a = eqm::testing::random_polynomial(rng, 3, 4, 5);
    auto b = eqm::testing::random_polynomial(rng, 3, 4, 5);
    auto c = eqm::testing::random_polynomial(rng, 3, 4, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial::constant(3, 1) == a);
  }
}

TEST_CASE("Leibniz rule and linearity of derivatives", "[poly][property]") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    auto a = eqm::testing::random_polynomial(rng, 3, 4, 4);
    auto b = eqm::testing::random_polynomial(rng, 3, 4, 4);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK(differentiate(a * b, v) == differentiate(a, v) * b + a * differentiate(b, v));
      CHECK(differentiate(a + b, v) == differentiate(a, v) + differentiate(b, v));
    }
  }
}

TEST_CASE("hessian rank doubles under direct_double", "[poly][property]") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    auto f = eqm::testing::random_polynomial(rng, 3, 3, 5, 1);
    auto h = hessian_rank(f);
    auto h2 = hessian_rank(direct_double(f));
    CHECK(h2.rank == 2 * h.rank);
    CHECK(h2.corank == 2 * h.corank);
  }
}

TEST_CASE("truncation and degree bookkeeping", "[poly]") {
  auto f = P("x1 + x1^2*x2 + x2^5", 2);
  CHECK(f.degree() == 5);
  CHECK(f.order() == 1);
  CHECK(f.truncated(3) == P("x1 + x1^2*x2", 2));
  CHECK(f.homogeneous_part(3) == P("x1^2*x2", 2));
  CHECK(f.times_truncated(Monomial({1, 0}), 4) == P("x1^2 + x1^3*x2", 2));
}

TEST_CASE("monomial enumeration orders", "[poly]") {
  auto layer = monomials_of_degree(2, 2);
  REQUIRE(layer.size() == 3);
  CHECK(to_string(layer[0]) == "x1^2");
  CHECK(to_string(layer[1]) == "x1*x2");
  CHECK(to_string(layer[2]) == "x2^2");
  auto all = monomials_up_to(3, 4);
  CHECK(all.size() == 35);
  CHECK(std::is_sorted(all.begin(), all.end(), LocalOrderLess{}));
}
