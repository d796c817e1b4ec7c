#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qmem/combinatorics.hpp"

using namespace qmem;

TEST(BinomialC, SmallValues) {
  EXPECT_EQ(binomial_c(2), Rational(1, 2));
  EXPECT_EQ(binomial_c(4), Rational(3, 8));
  EXPECT_EQ(binomial_c(8), Rational(70, 256));
}

TEST(BinomialC, RejectsBadArguments) {
  EXPECT_THROW(binomial_c(3), validation_error);
  EXPECT_THROW(binomial_c(0), validation_error);
  EXPECT_THROW(binomial_c(-2), validation_error);
}

TEST(BinomialC, ReducedForm) {
  for (long long m = 2; m <= 64; m += 2) {
    const Rational c = binomial_c(m);
    EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::numerator(c), boost::multiprecision::denominator(c)), 1);
    EXPECT_GT(boost::multiprecision::denominator(c), 0);
  }
}

TEST(BinomialC, LimitingRatioApproachesOne) {
  double previous = 1.0;
  for (long long m = 2; m <= 4096; m *= 2) {
    const double ratio = to_double(binomial_c(m)) * std::sqrt(std::numbers::pi * static_cast<double>(m) / 2.0);
    const double gap = std::abs(ratio - 1.0);
    EXPECT_LT(gap, previous);
    EXPECT_LE(gap, 1.0 / static_cast<double>(m));
    previous = gap;
  }
}

TEST(ToDouble, HugeRational) {
  const Rational r(factorial(200), factorial(199));
  EXPECT_DOUBLE_EQ(to_double(r), 200.0);
  EXPECT_DOUBLE_EQ(to_double(Rational(-3, 4)), -0.75);
  EXPECT_EQ(to_double(Rational(0)), 0.0);
  EXPECT_DOUBLE_EQ(to_double(Rational(BigInt(3), BigInt(1) << 1000)), 3 * std::ldexp(1.0, -1000));
  EXPECT_EQ(to_double(Rational(BigInt(1), BigInt(1) << 1100)), 0.0);
}

TEST(Factsum, HandExamples) {
  const auto a1 = factsum_identities(1, 0);
  ASSERT_TRUE(a1.central.has_value());
  EXPECT_EQ(a1.central->lhs, Rational(1));
  EXPECT_EQ(a1.central->rhs, Rational(1));

  const auto ab1 = factsum_identities(1, 1);
  EXPECT_EQ(ab1.even.lhs, Rational(1, 4));
  EXPECT_EQ(ab1.even.rhs, Rational(1, 4));

  const auto ab0 = factsum_identities(0, 0);
  EXPECT_EQ(ab0.odd.lhs, Rational(1, 2));
  EXPECT_EQ(ab0.odd.rhs, Rational(1, 2));
  EXPECT_FALSE(ab0.central.has_value());
  EXPECT_EQ(ab0.even.lhs, Rational(0));
  EXPECT_EQ(ab0.even.rhs, Rational(0));
}

TEST(Factsum, ExactForAllSmallArguments) {
  for (unsigned a = 0; a <= 20; ++a)
    for (unsigned b = 0; b <= 20; ++b) {
      const auto f = factsum_identities(a, b);
      EXPECT_TRUE(f.all_hold()) << "a=" << a << " b=" << b;
      EXPECT_EQ(f.central.has_value(), a >= 1);
    }
}

TEST(Stirling, NEqualsOne) {
  const auto b = stirling_bounds(1);
  EXPECT_EQ(b.exact_log, 0.0);
  EXPECT_NEAR(std::exp(b.lower), 0.9958, 1e-4);
  EXPECT_NEAR(std::exp(b.upper), 1.0023, 1e-4);
  EXPECT_TRUE(b.strict());
}

TEST(Stirling, StrictUpTo170AndBeyond) {
  for (long long n = 1; n <= 170; ++n) EXPECT_TRUE(stirling_bounds(n).strict()) << n;
  const auto big = stirling_bounds(1000);
  EXPECT_TRUE(std::isfinite(big.upper));
  EXPECT_LE(big.lower, big.upper);
}

TEST(Stirling, RejectsZero) { EXPECT_THROW(stirling_bounds(0), validation_error); }
