#include <gtest/gtest.h>

#include "combid/rng.hpp"
#include "combid/telescope.hpp"
#include "reference_values.hpp"

namespace combid {
namespace {

Complex draw(Xoshiro256& rng) {
  const double re = rng.uniform(-5.0, 5.0);
  return {re, rng.uniform(-5.0, 5.0)};
}

FactorSystem random_system(std::uint64_t i) {
  auto rng = Xoshiro256::for_sample(11, "factor-system", i);
  FactorSystem f;
  f.x = draw(rng);
  f.y = draw(rng);
  const auto n = rng.uniform_int(0, 12);
  for (std::int64_t k = 0; k < n; ++k) {
    f.z.push_back(draw(rng));
    f.w.push_back(draw(rng));
  }
  return f;
}

TEST(ProductDifference, EmptySystem) {
  const FactorSystem f{Complex(1.5, 2.0), Complex(-3.0, 0.5), {}, {}};
  EXPECT_EQ(product_difference_lhs(f), Complex(0.0));
  EXPECT_EQ(product_difference_rhs(f), Complex(0.0));
}

TEST(ProductDifference, PowerDifferenceCase) {
  const FactorSystem f{3.0, 2.0, {0.0, 0.0}, {1.0, 1.0}};
  EXPECT_EQ(product_difference_lhs(f), Complex(5.0));
  EXPECT_EQ(product_difference_rhs(f), Complex(5.0));
}

TEST(ProductDifference, ComplexReference) {
  const FactorSystem f{Complex(1.0, 1.0), Complex(2.0, -1.0), {Complex(0.5, 0.0), Complex(0.0, -0.5)},
                       {1.5, 2.0}};
  const Complex lhs = product_difference_lhs(f);
  const Complex rhs = product_difference_rhs(f);
  EXPECT_LE(std::abs(lhs - reference::kProductDifference) / std::abs(reference::kProductDifference),
            1e-13);
  EXPECT_LE(std::abs(lhs - rhs) / std::abs(lhs), 1e-12);
}

TEST(ProductDifference, Validation) {
  const FactorSystem mismatched{1.0, 2.0, {0.0}, {}};
  EXPECT_THROW(mismatched.validate(), DomainError);
  EXPECT_THROW(product_difference_lhs(mismatched), DomainError);
  const FactorSystem zero_base{1.0, 2.0, {1.0}, {Complex(-0.5, 0.0)}};
  EXPECT_THROW(zero_base.validate(), DomainError);
  const FactorSystem positive{1.0, 2.0, {1.0}, {Complex(2.5, 0.0)}};
  const FactorSystem complex_exponent{1.0, 2.0, {1.0}, {Complex(0.5, 3.0)}};
  EXPECT_THROW(complex_exponent.validate(), DomainError);
  EXPECT_NO_THROW(positive.validate());
}

TEST(ProductDifference, RandomComplexSystems) {
  std::size_t ill = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const auto f = random_system(i);
    const auto c = check_product_difference(f);
    if (c.ill_conditioned) {
      ++ill;
      continue;
    }
    EXPECT_LE(c.rel_err, 1e-10) << "system " << i;
  }
  EXPECT_LT(ill, 400u);
}

TEST(ProductDifference, CheckMeasures) {
  const FactorSystem f{3.0, 2.0, {0.0, 0.0}, {1.0, 1.0}};
  const auto c = check_product_difference(f);
  EXPECT_EQ(c.abs_err, 0.0);
  EXPECT_EQ(c.rel_err, 0.0);
  EXPECT_FALSE(c.ill_conditioned);
  // x = y cancels completely: the result is zero and the condition estimate infinite.
  const FactorSystem same{Complex(1.0, 2.0), Complex(1.0, 2.0), {0.5}, {Complex(0.3, 0.2)}};
  EXPECT_EQ(product_difference_lhs(same), Complex(0.0));
  EXPECT_EQ(product_difference_rhs(same), Complex(0.0));
}

TEST(ProductDifference, ExactSystems) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; checked < 300; ++i) {
    auto rng = Xoshiro256::for_sample(12, "exact-system", i);
    const auto q = [&] { return BigRational(rng.uniform_int(-30, 30), rng.uniform_int(1, 6)); };
    ExactFactorSystem f;
    f.x = q();
    f.y = q();
    const auto n = rng.uniform_int(0, 8);
    for (std::int64_t k = 0; k < n; ++k) {
      f.z.push_back(q());
      f.w.push_back(rng.uniform_int(-4, 4));
    }
    try {
      f.validate();
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    EXPECT_EQ(product_difference_lhs(f), product_difference_rhs(f)) << "system " << i;
  }
}

TEST(ProductDifference, ExactZeroBaseRejected) {
  const ExactFactorSystem f{BigRational(1), BigRational(2), {BigRational(1)}, {-1}};
  EXPECT_THROW(f.validate(), DomainError);
}

TEST(PowerDifference, Examples) {
  const auto same = power_difference(Complex(0.3, -1.2), Complex(0.3, -1.2), 9);
  EXPECT_EQ(same.lhs, Complex(0.0));
  EXPECT_EQ(same.rhs, Complex(0.0));
  const auto small = power_difference(3.0, 2.0, 2);
  EXPECT_EQ(small.lhs, Complex(5.0));
  EXPECT_EQ(small.rhs, Complex(5.0));
  const auto seventh = power_difference(Complex(1.0, 1.0), Complex(1.0, -1.0), 7);
  EXPECT_LE(std::abs(seventh.lhs - reference::kPowerDifference7), 1e-13);
  EXPECT_LE(std::abs(seventh.rhs - reference::kPowerDifference7), 1e-13);
}

TEST(PowerDifference, AgreesWithFactorSystem) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = Xoshiro256::for_sample(13, "power-difference", i);
    const Complex x = draw(rng);
    const Complex y = draw(rng);
    const auto n = static_cast<std::uint64_t>(rng.uniform_int(0, 12));
    const auto p = power_difference(x, y, n);
    const auto f = power_difference_system(x, y, n);
    const Complex lhs = product_difference_lhs(f);
    const Complex rhs = product_difference_rhs(f);
    const double scale = std::max({1.0, std::abs(p.lhs), std::abs(p.rhs)});
    EXPECT_LE(std::abs(p.lhs - lhs) / scale, 1e-13);
    EXPECT_LE(std::abs(p.rhs - rhs) / scale, 1e-13);
  }
}

}  // namespace
}  // namespace combid
