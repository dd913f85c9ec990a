#include <gtest/gtest.h>

#include "combid/exact.hpp"

namespace combid {
namespace {

TEST(BigRational, CanonicalForm) {
  const BigRational r(6, -4);
  EXPECT_EQ(r.numerator_string(), "-3");
  EXPECT_EQ(r.denominator_string(), "2");
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(BigRational(0, -7).to_string(), "0");
  EXPECT_EQ(BigRational(0, -7).denominator_string(), "1");
  EXPECT_EQ(BigRational(10, 5), BigRational(2));
  EXPECT_TRUE(BigRational(10, 5).is_integer());
  EXPECT_THROW(BigRational(1, 0), DivisionByZeroError);
}

TEST(BigRational, ParseAndPrint) {
  EXPECT_EQ(BigRational::parse("-12/8"), BigRational(-3, 2));
  EXPECT_EQ(BigRational::parse("42"), BigRational(42));
  EXPECT_EQ(BigRational::parse("123456789012345678901234567890/3").to_string(),
            "41152263004115226300411522630");
  EXPECT_THROW(BigRational::parse("1/0"), DivisionByZeroError);
  EXPECT_THROW(BigRational::parse("abc"), DomainError);
}

TEST(BigRational, Arithmetic) {
  const BigRational a(1, 3);
  const BigRational b(1, 6);
  EXPECT_EQ(a + b, BigRational(1, 2));
  EXPECT_EQ(a - b, BigRational(1, 6));
  EXPECT_EQ(a * b, BigRational(1, 18));
  EXPECT_EQ(a / b, BigRational(2));
  EXPECT_THROW(a / BigRational(0), DivisionByZeroError);
  EXPECT_LT(b, a);
  EXPECT_EQ(abs(BigRational(-5, 7)), BigRational(5, 7));
  EXPECT_EQ(pow(BigRational(-2, 3), 3), BigRational(-8, 27));
  EXPECT_EQ(pow(BigRational(-2, 3), -2), BigRational(9, 4));
  EXPECT_EQ(pow(BigRational(5), 0), BigRational(1));
  EXPECT_THROW(pow(BigRational(0), -1), DivisionByZeroError);
  EXPECT_DOUBLE_EQ(BigRational(1, 3).to_double(), 1.0 / 3.0);
  EXPECT_EQ(BigRational(-17).to_int64(), -17);
  EXPECT_FALSE(BigRational(1, 2).to_int64().has_value());
}

TEST(BinomialExact, Examples) {
  EXPECT_EQ(binomial_exact(4, 2), BigRational(6));
  EXPECT_EQ(binomial_exact(2, 5), BigRational(0));
  EXPECT_EQ(binomial_exact(3, -1), BigRational(0));
  EXPECT_EQ(binomial_exact(40, 20), BigRational::parse("137846528820"));
  EXPECT_THROW(binomial_exact(-1, 2), DomainError);
}

TEST(BinomialExact, PascalRule) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      EXPECT_EQ(binomial_exact(n, k), binomial_exact(n - 1, k - 1) + binomial_exact(n - 1, k))
          << n << "," << k;
    }
  }
}

TEST(BinomialExact, RationalUpperArgument) {
  for (std::int64_t n = 0; n <= 12; ++n) {
    for (std::int64_t k = -2; k <= 14; ++k) {
      EXPECT_EQ(binomial_exact(BigRational(n), k), binomial_exact(n, k));
    }
  }
  // C(-1, k) = (-1)^k and C(-n, k) = (-1)^k C(n+k-1, k)
  for (std::int64_t k = 0; k <= 10; ++k) {
    EXPECT_EQ(binomial_exact(BigRational(-1), k), BigRational(k % 2 == 0 ? 1 : -1));
    EXPECT_EQ(binomial_exact(BigRational(-4), k),
              BigRational(k % 2 == 0 ? 1 : -1) * binomial_exact(k + 3, k));
  }
  EXPECT_EQ(binomial_exact(BigRational(1, 2), 2), BigRational(-1, 8));
}

TEST(HarmonicExact, Examples) {
  EXPECT_EQ(harmonic_exact(0), BigRational(0));
  EXPECT_EQ(harmonic_exact(4), BigRational(25, 12));
  EXPECT_EQ(harmonic_exact(10), BigRational(7381, 2520));
}

TEST(HarmonicExact, Increments) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    EXPECT_EQ(harmonic_exact(n) - harmonic_exact(n - 1), BigRational(1, n));
  }
}

TEST(GenHarmonicExact, Examples) {
  EXPECT_EQ(gen_harmonic_exact(0, 3, 1), BigRational(11, 6));
  EXPECT_EQ(gen_harmonic_exact(2, 3, 1), BigRational(47, 60));
  EXPECT_EQ(gen_harmonic_exact(2, 3, 1), harmonic_exact(5) - harmonic_exact(2));
  EXPECT_EQ(gen_harmonic_exact(-7, 3, 2), BigRational(469, 3600));
  EXPECT_EQ(gen_harmonic_exact(1, 3, -2), BigRational(4 + 9 + 16));
  EXPECT_EQ(gen_harmonic_exact(5, 0, 3), BigRational(0));
  EXPECT_EQ(gen_harmonic_exact(BigRational(1, 2), 2, 1), BigRational(2, 3) + BigRational(2, 5));
}

TEST(GenHarmonicExact, SingularTerm) {
  try {
    gen_harmonic_exact(-3, 5, 1);
    FAIL() << "expected SingularTermError";
  } catch (const SingularTermError& e) {
    EXPECT_EQ(e.offending_k(), 3);
  }
  EXPECT_THROW(gen_harmonic_exact(-3, 5, -1), SingularTermError);
  EXPECT_NO_THROW(gen_harmonic_exact(-3, 2, 1));
}

}  // namespace
}  // namespace combid
