#include <gtest/gtest.h>

#include <stdexcept>

#include "contact/polynomial.hpp"
#include "contact/random.hpp"
#include "helpers.hpp"

using namespace contact;
using contact::testing::P;

TEST(Rational, LowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(sign_power(3), Rational(-1));
  EXPECT_EQ(abs(Rational(-2, 3)), Rational(2, 3));
}

TEST(Polynomial, ArithExamples) {
  const int n = 1;
  EXPECT_EQ(poly_arith(P("x1 + z", n), P("-x1", n), ArithKind::Add), P("z", n));
  EXPECT_EQ(poly_arith(P("x1", n), P("y1", n), ArithKind::Mul), P("x1*y1", n));
  EXPECT_EQ(poly_arith(P("x1 + 1", n), P("x1 - 1", n), ArithKind::Mul), P("x1^2 - 1", n));
  EXPECT_TRUE(poly_arith(P("x1", n), P("x1", n), ArithKind::Sub).is_zero());
}

TEST(Polynomial, NoStoredZeros) {
  Polynomial p = P("x1 + y1", 1);
  p.add_term(Monomial::variable(0), Rational(-1));
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p, P("y1", 1));
}

TEST(Polynomial, PartialExamples) {
  EXPECT_EQ(partial(P("z^2", 1), Coordinate::z()), P("2 z", 1));
  EXPECT_EQ(partial(P("x1*y2", 2), Coordinate::x(1)), P("y2", 2));
  EXPECT_TRUE(partial(P("3/2", 1), Coordinate::y(1)).is_zero());
}

TEST(Polynomial, SubstituteAndEvaluate) {
  const Polynomial p = P("x1*z + y1^2", 1);
  EXPECT_EQ(substitute(p, Coordinate::z().index(1), P("x1", 1)), P("x1^2 + y1^2", 1));
  const std::vector<Rational> point = {Rational(2), Rational(-1), Rational(1, 2)};
  EXPECT_EQ(evaluate(p, point), Rational(2));
}

TEST(Polynomial, DimensionMismatch) {
  EXPECT_THROW(P("x1", 1) + P("x1", 2), std::invalid_argument);
  EXPECT_THROW(poly_arith(P("x1", 1), P("x1", 2), ArithKind::Mul), std::invalid_argument);
}

TEST(Polynomial, Degree) {
  EXPECT_EQ(P("x1^2*y1 + z", 1).total_degree(), 3);
  EXPECT_TRUE(P("5", 2).is_constant());
}

class RingProperties : public ::testing::TestWithParam<int> {};

TEST_P(RingProperties, AxiomsAndDerivatives) {
  const int n = GetParam();
  FormSampler rng(100 + static_cast<std::uint64_t>(n));
  for (int s = 0; s < 40; ++s) {
    const Polynomial p = rng.polynomial(n, 3);
    const Polynomial q = rng.polynomial(n, 3);
    const Polynomial r = rng.polynomial(n, 3);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    for (int u = 0; u < coordinate_count(n); ++u) {
      EXPECT_EQ(partial(p * q, u), partial(p, u) * q + p * partial(q, u));
      for (int v = 0; v < coordinate_count(n); ++v) EXPECT_EQ(partial(partial(p, u), v), partial(partial(p, v), u));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, RingProperties, ::testing::Values(1, 2, 3));
