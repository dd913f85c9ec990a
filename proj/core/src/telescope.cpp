#include "combid/telescope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "combid/summation.hpp"

namespace combid {
namespace {

struct CachedPowers {
  std::vector<Complex> alpha;
  std::vector<Complex> beta;
};

CachedPowers powers_of(const FactorSystem& f) {
  f.validate();
  CachedPowers p;
  p.alpha.reserve(f.size());
  p.beta.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    p.alpha.push_back(complex_pow(f.x - f.z[k], f.w[k]));
    p.beta.push_back(complex_pow(f.y - f.z[k], f.w[k]));
  }
  return p;
}

struct ExactPowers {
  std::vector<BigRational> alpha;
  std::vector<BigRational> beta;
};

ExactPowers powers_of(const ExactFactorSystem& f) {
  f.validate();
  ExactPowers p;
  for (std::size_t k = 0; k < f.size(); ++k) {
    p.alpha.push_back(pow(f.x - f.z[k], f.w[k]));
    p.beta.push_back(pow(f.y - f.z[k], f.w[k]));
  }
  return p;
}

template <class T>
T product(const std::vector<T>& values) {
  T result(1);
  for (const auto& v : values) result *= v;
  return result;
}

// suffix[k] = prod_{l >= k} beta_l, with suffix[n] = 1.
template <class T>
std::vector<T> suffix_products(const std::vector<T>& beta) {
  std::vector<T> suffix(beta.size() + 1, T(1));
  for (std::size_t k = beta.size(); k-- > 0;) suffix[k] = beta[k] * suffix[k + 1];
  return suffix;
}

// Calls sink(term_k) for each summand of the right side in order k = 1..n.
template <class T, class Sink>
void for_each_rhs_term(const std::vector<T>& alpha, const std::vector<T>& beta, Sink&& sink) {
  const auto suffix = suffix_products(beta);
  T prefix(1);
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    sink((alpha[k] - beta[k]) * prefix * suffix[k + 1]);
    prefix *= alpha[k];
  }
}

}  // namespace

void FactorSystem::validate() const {
  if (z.size() != w.size()) {
    throw DomainError("FactorSystem: z has " + std::to_string(z.size()) + " entries but w has " +
                      std::to_string(w.size()));
  }
  for (std::size_t k = 0; k < z.size(); ++k) {
    const bool nonpositive = !(w[k].real() > 0.0 && w[k].imag() == 0.0);
    if (nonpositive && (x == z[k] || y == z[k])) {
      throw DomainError("FactorSystem: zero base with nonpositive exponent at k = " +
                        std::to_string(k + 1));
    }
  }
}

void ExactFactorSystem::validate() const {
  if (z.size() != w.size()) {
    throw DomainError("ExactFactorSystem: z has " + std::to_string(z.size()) +
                      " entries but w has " + std::to_string(w.size()));
  }
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (w[k] <= 0 && (x == z[k] || y == z[k])) {
      throw DomainError("ExactFactorSystem: zero base with nonpositive exponent at k = " +
                        std::to_string(k + 1));
    }
  }
}

Complex product_difference_lhs(const FactorSystem& f) {
  const auto p = powers_of(f);
  return product(p.alpha) - product(p.beta);
}

Complex product_difference_rhs(const FactorSystem& f) {
  const auto p = powers_of(f);
  ComplexSum sum;
  for_each_rhs_term(p.alpha, p.beta, [&](Complex term) { sum.add(term); });
  return sum.total();
}

BigRational product_difference_lhs(const ExactFactorSystem& f) {
  const auto p = powers_of(f);
  return product(p.alpha) - product(p.beta);
}

BigRational product_difference_rhs(const ExactFactorSystem& f) {
  const auto p = powers_of(f);
  BigRational sum;
  for_each_rhs_term(p.alpha, p.beta, [&](const BigRational& term) { sum += term; });
  return sum;
}

PowerDifference power_difference(Complex x, Complex y, std::uint64_t n) {
  PowerDifference result;
  result.lhs = complex_pow(x, static_cast<double>(n)) - complex_pow(y, static_cast<double>(n));
  ComplexSum sum;
  for (std::uint64_t k = 1; k <= n; ++k) {
    sum.add(complex_pow(x, static_cast<double>(k - 1)) * complex_pow(y, static_cast<double>(n - k)));
  }
  result.rhs = (x - y) * sum.total();
  return result;
}

FactorSystem power_difference_system(Complex x, Complex y, std::uint64_t n) {
  return FactorSystem{x, y, std::vector<Complex>(n, 0.0), std::vector<Complex>(n, 1.0)};
}

ProductDifferenceCheck check_product_difference(const FactorSystem& f, double condition_cap) {
  const auto p = powers_of(f);
  ProductDifferenceCheck check;
  const Complex prod_alpha = product(p.alpha);
  const Complex prod_beta = product(p.beta);
  check.lhs = prod_alpha - prod_beta;

  ComplexSum sum;
  for_each_rhs_term(p.alpha, p.beta, [&](Complex term) { sum.add(term); });
  check.rhs = sum.total();

  check.abs_err = std::abs(check.lhs - check.rhs);
  const double scale = std::max(std::abs(check.lhs), std::abs(check.rhs));
  const double magnitude = std::abs(prod_alpha) + std::abs(prod_beta) + sum.magnitude();
  const double denominator = std::max(scale, 1e-3 * sum.magnitude());
  check.rel_err = denominator > 0.0 ? check.abs_err / denominator : 0.0;
  if (scale > 0.0) {
    check.condition = magnitude / scale;
  } else {
    check.condition = magnitude > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  }
  check.ill_conditioned = check.condition > condition_cap;
  return check;
}

}  // namespace combid
