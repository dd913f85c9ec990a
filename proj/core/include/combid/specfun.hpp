#pragma once

// Floating-point special functions over std::complex<double>: the complex
// gamma function, gamma-form binomial coefficients, falling products,
// principal powers and (generalized) harmonic numbers.
//
// All functions are pure and thread-safe. Failures are reported with the
// exception types in errors.hpp.

#include <complex>
#include <cstdint>

#include "combid/errors.hpp"

namespace combid {

using Complex = std::complex<double>;

/// Distance below which an argument counts as sitting on a gamma pole.
inline constexpr double kPoleTolerance = 1e-9;

enum class LanczosSet {
  kGodfrey15,  // g = 607/128, 15 terms
  kG7N9,       // g = 7, 9 terms
};

struct GammaConfig {
  LanczosSet coefficients = LanczosSet::kGodfrey15;
  double target_relative_accuracy = 1e-13;
};

/// Distance from `s` to the nearest point of {0, -1, -2, ...}.
double distance_to_pole(Complex s) noexcept;
bool near_pole(Complex s, double tolerance = kPoleTolerance) noexcept;

/// sin(pi x) and cos(pi x) with exact argument reduction; exact zeros at
/// integers and half-integers respectively.
double sinpi(double x) noexcept;
double cospi(double x) noexcept;

/// exp(i pi t). This is the meaning of (-1)^t everywhere in the library.
Complex exp_i_pi(Complex t) noexcept;

/// Principal branch of log Gamma(s): analytic off the cut (-inf, 0], with
/// values on the cut taken as the limit from above.
Complex log_gamma(Complex s, const GammaConfig& config = {});

/// Gamma(s). Uses the reflection formula for Re(s) < 1/2.
Complex gamma(Complex s, const GammaConfig& config = {});

/// Gamma(x+1) / (Gamma(y+1) Gamma(x-y+1)) through log-gamma differences.
///
/// A denominator pole with a regular numerator gives 0. A numerator pole
/// has no single limit in two variables and raises IndeterminateError.
/// When y or x - y is an integer in [0, 64] the finite product form is used.
Complex binomial(Complex x, Complex y, const GammaConfig& config = {});

/// prod_{k=a}^{b-1} (s - k), multiplied out factor by factor.
Complex falling_product(Complex s, std::int64_t a, std::int64_t b);

/// exp(exponent * Log(base)) with the principal logarithm. Integer
/// exponents are computed by repeated squaring.
Complex complex_pow(Complex base, Complex exponent);

/// H_n = sum_{k=1}^{n} 1/k.
double harmonic(std::uint64_t n);

/// H^{(m)}_{c,n} = sum_{k=1}^{n} (c+k)^{-m} with principal powers.
Complex gen_harmonic(Complex c, std::uint64_t n, Complex m);

}  // namespace combid
