#include <gtest/gtest.h>

#include <random>

#include "evenzeta/error.hpp"
#include "evenzeta/polynomial.hpp"
#include "test_support.hpp"

namespace evenzeta {
namespace {

using testing::q;
using testing::random_polynomial;
using testing::random_rational;

TEST(PolynomialTest, AddTrimsCancellation) {
  const Polynomial p{7, 1};
  EXPECT_EQ(p + Polynomial{-7}, (Polynomial{0, 1}));
  EXPECT_EQ(p + Polynomial{}, p);
  EXPECT_EQ((Polynomial{1, 1}) + (Polynomial{1, -1}), Polynomial{2});
  EXPECT_EQ(((Polynomial{1, 1}) + (Polynomial{1, -1})).degree(), 0u);
}

TEST(PolynomialTest, ZeroHasNoDegree) {
  const Polynomial z{0, 0, 0};
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.degree().has_value());
  EXPECT_EQ(z.to_string(), "0");
}

TEST(PolynomialTest, Multiply) {
  EXPECT_EQ((Polynomial{3, 2}) * (Polynomial{5, 2}), (Polynomial{15, 16, 4}));
  EXPECT_TRUE(((Polynomial{3, 2}) * Polynomial{}).is_zero());
  // (2x-1)(2x+1), the k=2 numerator product
  EXPECT_EQ((Polynomial{-1, 2}) * (Polynomial{1, 2}), (Polynomial{-1, 0, 4}));
}

TEST(PolynomialTest, Evaluate) {
  // P_3(x) = 2x + 4
  EXPECT_EQ((Polynomial{4, 2}).eval(3), q(10));
  EXPECT_EQ(Polynomial{}.eval(q(5, 7)), q(0));
  EXPECT_EQ((Polynomial{1, 1, 1}).eval(q(1, 2)), q(7, 4));
}

TEST(PolynomialTest, ComposeAffine) {
  EXPECT_EQ((Polynomial{0, 1}).compose_affine(q(1, 2), q(5, 2)), (Polynomial{q(5, 2), q(1, 2)}));
  const Polynomial p{3, -1, 4};
  EXPECT_EQ(p.compose_affine(1, 0), p);
}

TEST(PolynomialTest, DivideLinearExact) {
  EXPECT_EQ((Polynomial{-16, 0, 4}).divide_linear_exact(2), (Polynomial{4, 2}));
  EXPECT_TRUE(Polynomial{}.divide_linear_exact(q(3, 5)).is_zero());
  EXPECT_THROW((Polynomial{-15, 0, 4}).divide_linear_exact(2), InexactDivision);
  EXPECT_THROW(Polynomial{1}.divide_linear_exact(0), InexactDivision);
}

TEST(PolynomialTest, DivideRecoversP3FromNumerator) {
  // k=2 numerator: P_2(2)(2x-1)(2x+1) - 15 P_2(x) = 4x^2 - 16.
  const Polynomial numerator = (Polynomial{-1, 2}) * (Polynomial{1, 2}) - Polynomial{15};
  const Polynomial p3 = numerator.divide_linear_exact(2);
  // P_3(x/2 + 3/2) = 7 + x
  EXPECT_EQ(p3.compose_affine(q(1, 2), q(3, 2)), (Polynomial{7, 1}));
  EXPECT_EQ(Polynomial::linear(2, -4) * p3, numerator);
}

TEST(PolynomialTest, Text) {
  EXPECT_EQ((Polynomial{465, 130, 10}).to_string(), "465 + 130*x + 10*x^2");
  EXPECT_EQ((Polynomial{7, 1}).to_string(), "7 + x");
  EXPECT_EQ((Polynomial{3, -8, 4}).to_string(), "3 - 8*x + 4*x^2");
  EXPECT_EQ((Polynomial{0, q(-1, 2)}).to_string(), "-1/2*x");
  EXPECT_EQ((Polynomial{q(5, 2), 0, 1}).to_strings(),
            (std::vector<std::string>{"5/2", "0", "1"}));
}

TEST(PolynomialPropertyTest, DivisionRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = random_polynomial(rng);
    const Rational c = random_rational(rng);
    const Polynomial product = Polynomial::linear(2, -(c + c)) * p;
    EXPECT_EQ(product.divide_linear_exact(c), p);
  }
}

TEST(PolynomialPropertyTest, ComposeThenEvaluate) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = random_polynomial(rng);
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational x = random_rational(rng);
    EXPECT_EQ(p.compose_affine(a, b).eval(x), p.eval(a * x + b));
  }
}

TEST(PolynomialPropertyTest, DegreeAddsUnderMultiplication) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = random_polynomial(rng);
    const Polynomial r = random_polynomial(rng);
    if (p.is_zero() || r.is_zero()) continue;
    EXPECT_EQ(*(p * r).degree(), *p.degree() + *r.degree());
  }
}

}  // namespace
}  // namespace evenzeta
