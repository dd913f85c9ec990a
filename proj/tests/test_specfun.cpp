#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "combid/exact.hpp"
#include "combid/rng.hpp"
#include "combid/specfun.hpp"
#include "reference_values.hpp"

namespace combid {
namespace {

double rel(Complex got, Complex want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

Complex draw(Xoshiro256& rng, double half_width) {
  const double re = rng.uniform(-half_width, half_width);
  return {re, rng.uniform(-half_width, half_width)};
}

TEST(Gamma, IntegersAreFactorials) {
  double factorial = 1.0;
  for (int n = 1; n <= 20; ++n) {
    if (n > 1) factorial *= n - 1;
    EXPECT_LE(rel(gamma(Complex(n)), factorial), 1e-13) << n;
  }
  EXPECT_EQ(gamma(1.0), Complex(1.0));
  EXPECT_LE(rel(gamma(6.0), 120.0), 1e-14);
}

TEST(Gamma, HalfIntegers) {
  double value = std::sqrt(std::numbers::pi);
  for (int k = 0; k < 12; ++k) {
    EXPECT_LE(rel(gamma(Complex(k + 0.5)), value), 1e-13) << k;
    value *= k + 0.5;
  }
  EXPECT_LE(rel(gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)), 1e-13);
}

TEST(Gamma, ComplexReferencePoints) {
  for (const auto& p : reference::kGamma) {
    EXPECT_LE(rel(gamma(p.argument), p.value), 1e-12) << p.argument;
  }
}

TEST(Gamma, SmallerCoefficientSetStillAccurate) {
  const GammaConfig small{LanczosSet::kG7N9, 1e-13};
  for (const auto& p : reference::kGamma) {
    EXPECT_LE(rel(gamma(p.argument, small), p.value), 1e-12) << p.argument;
  }
}

TEST(Gamma, PolesAndOverflow) {
  for (int n = 0; n >= -5; --n) {
    EXPECT_THROW(gamma(Complex(n)), PoleError) << n;
    EXPECT_THROW(log_gamma(Complex(n)), PoleError) << n;
  }
  EXPECT_THROW(gamma(Complex(-3.0, 1e-12)), PoleError);
  EXPECT_NO_THROW(gamma(Complex(-3.0, 1e-6)));
  EXPECT_THROW(gamma(Complex(200.0)), OverflowError);
  EXPECT_NO_THROW(log_gamma(Complex(200.0)));
}

TEST(Gamma, Recurrence) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = Xoshiro256::for_sample(3, "recurrence", i);
    const Complex s = draw(rng, 10.0);
    if (distance_to_pole(s) < 1e-3 || distance_to_pole(s + 1.0) < 1e-3) continue;
    const Complex next = gamma(s + 1.0);
    EXPECT_LE(std::abs(next - s * gamma(s)) / std::abs(next), 1e-11) << s;
  }
}

TEST(LogGamma, KnownValues) {
  EXPECT_NEAR(log_gamma(5.0).real(), std::log(24.0), 1e-14);
  EXPECT_EQ(log_gamma(5.0).imag(), 0.0);
  EXPECT_NEAR(log_gamma(0.5).real(), 0.5 * std::log(std::numbers::pi), 1e-14);
  for (const auto& p : reference::kLogGamma) {
    EXPECT_LE(std::abs(log_gamma(p.argument) - p.value), 1e-12 * std::max(1.0, std::abs(p.value)))
        << p.argument;
  }
}

TEST(LogGamma, RecurrenceOffTheCut) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = Xoshiro256::for_sample(4, "log-recurrence", i);
    Complex s = draw(rng, 8.0);
    if (std::abs(s.imag()) < 1e-3) s.imag(1e-3);
    const Complex diff = log_gamma(s + 1.0) - log_gamma(s) - std::log(s);
    EXPECT_LE(std::abs(diff), 1e-11 * std::max(1.0, std::abs(log_gamma(s)))) << s;
  }
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4.0, 2.0), Complex(6.0));
  EXPECT_LE(rel(binomial(2.5, 0.0), 1.0), 1e-15);
  EXPECT_LE(rel(binomial(0.5, 0.25), reference::kBinomialHalfQuarter), 1e-12);
  EXPECT_EQ(binomial(3.0, 5.0), Complex(0.0));
  EXPECT_EQ(binomial(3.0, -1.0), Complex(0.0));
}

TEST(Binomial, NumeratorPoleIsIndeterminate) {
  EXPECT_THROW(binomial(-1.0, 0.5), IndeterminateError);
  EXPECT_THROW(binomial(-3.0, 2.0), IndeterminateError);
}

TEST(Binomial, AgreesWithExactOnIntegerPairs) {
  for (int x = 0; x <= 40; ++x) {
    for (int y = 0; y <= x; ++y) {
      const double want = binomial_exact(x, y).to_double();
      EXPECT_LE(rel(binomial(Complex(x), Complex(y)), want), 1e-12) << x << "," << y;
    }
  }
}

TEST(Binomial, PascalRuleAtComplexArguments) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = Xoshiro256::for_sample(5, "pascal", i);
    const Complex x = draw(rng, 5.0);
    const Complex y = draw(rng, 5.0);
    const Complex whole = binomial(x, y);
    const Complex sum = binomial(x - 1.0, y - 1.0) + binomial(x - 1.0, y);
    const double scale =
        std::abs(binomial(x - 1.0, y - 1.0)) + std::abs(binomial(x - 1.0, y)) + std::abs(whole);
    EXPECT_LE(std::abs(whole - sum) / scale, 1e-12) << x << " " << y;
  }
}

TEST(Binomial, ProductAndGammaRoutesMeet) {
  // y = 3 takes the product route, y = 3 + tiny the gamma route.
  for (const Complex x : {Complex(2.3, 1.1), Complex(-4.7, 0.4), Complex(9.5, -3.0)}) {
    EXPECT_LE(rel(binomial(x, Complex(3.0, 1e-13)), binomial(x, 3.0)), 1e-11) << x;
  }
}

TEST(FallingProduct, Examples) {
  EXPECT_EQ(falling_product(5.0, 0, 3), Complex(60.0));
  EXPECT_EQ(falling_product(Complex(1.7, -2.0), 4, 4), Complex(1.0));
  EXPECT_EQ(falling_product(Complex(1.0, 1.0), -1, 2), reference::kFallingProduct);
  EXPECT_THROW(falling_product(1.0, 3, 2), DomainError);
  EXPECT_EQ(falling_product(-3.0, 0, 2), Complex(12.0));
}

TEST(FallingProduct, GammaRatioForms) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = Xoshiro256::for_sample(6, "falling", i);
    const Complex s = draw(rng, 6.0);
    const auto a = rng.uniform_int(-10, 10);
    const auto b = a + rng.uniform_int(0, 20);
    const Complex p = falling_product(s, a, b);
    const double da = static_cast<double>(a);
    const double db = static_cast<double>(b);
    if (distance_to_pole(s - da + 1.0) > 1e-3 && distance_to_pole(s - db + 1.0) > 1e-3) {
      EXPECT_LE(rel(std::exp(log_gamma(s - da + 1.0) - log_gamma(s - db + 1.0)), p), 1e-10);
    }
    if (distance_to_pole(db - s) > 1e-3 && distance_to_pole(da - s) > 1e-3) {
      const Complex other =
          exp_i_pi(Complex(db - da)) * std::exp(log_gamma(db - s) - log_gamma(da - s));
      EXPECT_LE(rel(other, p), 1e-10);
    }
  }
}

TEST(Harmonic, Examples) {
  EXPECT_EQ(harmonic(0), 0.0);
  EXPECT_DOUBLE_EQ(harmonic(4), 25.0 / 12.0);
  EXPECT_NEAR(harmonic(100), reference::kHarmonic100, 1e-15);
  EXPECT_NEAR(harmonic(100), harmonic_exact(100).to_double(), 1e-15);
}

TEST(GenHarmonic, Examples) {
  EXPECT_LE(rel(gen_harmonic(0.0, 3, 1.0), 11.0 / 6.0), 1e-15);
  EXPECT_EQ(gen_harmonic(Complex(3.2, -1.0), 0, Complex(0.4, 2.0)), Complex(0.0));
  EXPECT_LE(rel(gen_harmonic(0.5, 2, 2.0), 1.0 / 2.25 + 1.0 / 6.25), 1e-15);
}

TEST(GenHarmonic, SingularTermNamesIndex) {
  try {
    gen_harmonic(-2.0, 5, 1.0);
    FAIL() << "expected SingularTermError";
  } catch (const SingularTermError& e) {
    EXPECT_EQ(e.offending_k(), 2);
  }
}

TEST(GenHarmonic, OffsetShiftOfHarmonicNumbers) {
  for (int c = 0; c <= 20; ++c) {
    for (std::uint64_t n = 0; n <= 50; ++n) {
      const double want = harmonic(static_cast<std::uint64_t>(c) + n) - harmonic(static_cast<std::uint64_t>(c));
      EXPECT_LE(std::abs(gen_harmonic(Complex(c), n, 1.0) - want), 1e-12);
    }
  }
}

TEST(GenHarmonic, SymmetryForIntegerOrder) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = Xoshiro256::for_sample(7, "symmetry", i);
    const auto m = static_cast<double>(rng.uniform_int(-3, 5));
    const Complex c = draw(rng, 5.0);
    const auto n = static_cast<std::uint64_t>(rng.uniform_int(0, 30));
    const Complex left = gen_harmonic(c, n, m);
    const Complex right = exp_i_pi(m) * gen_harmonic(-(c + static_cast<double>(n) + 1.0), n, m);
    EXPECT_LE(rel(right, left), 1e-11) << c << " " << n << " " << m;
  }
}

TEST(ComplexPow, Examples) {
  EXPECT_EQ(complex_pow(2.0, 3.0), Complex(8.0));
  EXPECT_LE(rel(complex_pow(Complex(1.0, 1.0), 0.5), reference::kSqrtOnePlusI), 1e-15);
  for (const Complex w : {Complex(0.5), Complex(1.3, -0.7), Complex(-2.0, 4.0)}) {
    EXPECT_LE(rel(complex_pow(-1.0, w), exp_i_pi(w)), 1e-14) << w;
  }
}

TEST(ComplexPow, ZeroBase) {
  EXPECT_EQ(complex_pow(0.0, 2.5), Complex(0.0));
  EXPECT_THROW(complex_pow(0.0, 0.0), ZeroToNonpositivePowerError);
  EXPECT_THROW(complex_pow(0.0, -1.0), ZeroToNonpositivePowerError);
  EXPECT_THROW(complex_pow(0.0, Complex(1.0, 1.0)), ZeroToNonpositivePowerError);
}

TEST(ComplexPow, NegativeZeroImaginaryPartIsAboveTheCut) {
  EXPECT_EQ(complex_pow(Complex(-4.0, -0.0), 0.5), complex_pow(Complex(-4.0, 0.0), 0.5));
}

TEST(ComplexPow, IntegerExponentsMatchRepeatedMultiplication) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = Xoshiro256::for_sample(8, "pow", i);
    const Complex base = draw(rng, 3.0);
    if (std::abs(base) < 1e-3) continue;
    for (int e = -8; e <= 8; ++e) {
      Complex want = 1.0;
      for (int j = 0; j < std::abs(e); ++j) want *= base;
      if (e < 0) want = 1.0 / want;
      EXPECT_LE(rel(complex_pow(base, Complex(e)), want), 1e-13) << base << "^" << e;
    }
  }
}

TEST(Trig, ExactZeros) {
  for (int k = -6; k <= 6; ++k) {
    EXPECT_EQ(sinpi(k), 0.0);
    EXPECT_EQ(cospi(k + 0.5), 0.0);
  }
  EXPECT_EQ(exp_i_pi(Complex(3.0)), Complex(-1.0, 0.0));
  EXPECT_EQ(exp_i_pi(Complex(0.5)), Complex(0.0, 1.0));
}

}  // namespace
}  // namespace combid
