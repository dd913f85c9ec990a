#pragma once

// Exact rational arithmetic for the integer and rational instances of the
// identities. BigRational is a thin value type over GMP's mpq_class that
// keeps the canonical form (reduced, positive denominator, zero = 0/1).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "combid/errors.hpp"

namespace combid {

class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t numerator, std::int64_t denominator);
  explicit BigRational(mpq_class value);

  /// Parses "p", "-p" or "p/q" in base 10.
  static BigRational parse(std::string_view text);

  std::string numerator_string() const;
  std::string denominator_string() const;
  std::string to_string() const;  // "p/q", or "p" when q == 1
  double to_double() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  /// The value as int64 when it is an integer in range.
  std::optional<std::int64_t> to_int64() const;

  const mpq_class& raw() const { return value_; }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws DivisionByZeroError for a zero divisor.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

/// Integer power; negative exponents invert (DivisionByZeroError on zero).
BigRational pow(const BigRational& base, std::int64_t exponent);
BigRational abs(const BigRational& value);

/// C(n, k) for n >= 0: n!/(k!(n-k)!) when 0 <= k <= n, else 0.
/// DomainError for n < 0.
BigRational binomial_exact(std::int64_t n, std::int64_t k);

/// C(upper, k) for rational upper and integer k: the falling product
/// upper (upper-1) ... (upper-k+1) / k! for k >= 0, and 0 for k < 0.
/// Agrees with binomial_exact for nonnegative integer upper.
BigRational binomial_exact(const BigRational& upper, std::int64_t k);

BigRational harmonic_exact(std::int64_t n);

/// sum_{k=1}^{n} (c+k)^{-m}; negative m gives positive integer powers.
/// SingularTermError when c + k = 0.
BigRational gen_harmonic_exact(std::int64_t c, std::int64_t n, std::int64_t m);
BigRational gen_harmonic_exact(const BigRational& c, std::int64_t n, std::int64_t m);

}  // namespace combid
