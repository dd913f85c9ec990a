#pragma once

// The product difference equation
//
//   prod_k (x - z_k)^{w_k} - prod_k (y - z_k)^{w_k}
//     = sum_k [(x - z_k)^{w_k} - (y - z_k)^{w_k}]
//             prod_{l<k} (x - z_l)^{w_l} prod_{l>k} (y - z_l)^{w_l}
//
// evaluated side by side, in floating point and exactly. Each power
// alpha_k = (x - z_k)^{w_k}, beta_k = (y - z_k)^{w_k} is computed once and the
// stored value is reused wherever it occurs, so the telescoping cancellation
// holds for any branch choice.

#include <cstdint>
#include <vector>

#include "combid/exact.hpp"
#include "combid/specfun.hpp"

namespace combid {

struct FactorSystem {
  Complex x;
  Complex y;
  std::vector<Complex> z;
  std::vector<Complex> w;

  /// Throws DomainError when z and w differ in length or a zero base meets
  /// an exponent with nonpositive real part.
  void validate() const;
  std::size_t size() const noexcept { return z.size(); }
};

/// Rational bases with integer exponents.
struct ExactFactorSystem {
  BigRational x;
  BigRational y;
  std::vector<BigRational> z;
  std::vector<std::int64_t> w;

  void validate() const;
  std::size_t size() const noexcept { return z.size(); }
};

Complex product_difference_lhs(const FactorSystem& f);
Complex product_difference_rhs(const FactorSystem& f);

BigRational product_difference_lhs(const ExactFactorSystem& f);
BigRational product_difference_rhs(const ExactFactorSystem& f);

struct PowerDifference {
  Complex lhs;
  Complex rhs;
};

/// x^n - y^n and (x - y) sum_{k=1}^{n} x^{k-1} y^{n-k}.
PowerDifference power_difference(Complex x, Complex y, std::uint64_t n);

/// The all-z = 0, all-w = 1 factor system of degree n.
FactorSystem power_difference_system(Complex x, Complex y, std::uint64_t n);

/// Both sides of the equation with the error measures used by the checks.
struct ProductDifferenceCheck {
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  /// |lhs - rhs| / max(|lhs|, |rhs|, 1e-3 * sum|rhs terms|)
  double rel_err = 0.0;
  /// (|prod alpha| + |prod beta| + sum|rhs terms|) / max(|lhs|, |rhs|)
  double condition = 0.0;
  bool ill_conditioned = false;
};

inline constexpr double kConditionCap = 1e6;

ProductDifferenceCheck check_product_difference(const FactorSystem& f,
                                                double condition_cap = kConditionCap);

}  // namespace combid
