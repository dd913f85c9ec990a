#include "combid/exact.hpp"

#include <utility>

namespace combid {
namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no int64 constructor on every platform; go through text
  // only when long is narrower than int64.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return mpz_class(static_cast<long>(v));
  } else {
    return mpz_class(std::to_string(v));
  }
}

}  // namespace

BigRational::BigRational(std::int64_t value) : value_(to_mpz(value)) {}

BigRational::BigRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DivisionByZeroError("BigRational: zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  const std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw DomainError("BigRational: cannot parse '" + s + "'");
  }
  if (q.get_den() == 0) throw DivisionByZeroError("BigRational: zero denominator in '" + s + "'");
  return BigRational(std::move(q));
}

std::string BigRational::numerator_string() const { return value_.get_num().get_str(); }
std::string BigRational::denominator_string() const { return value_.get_den().get_str(); }

std::string BigRational::to_string() const {
  return is_integer() ? numerator_string() : numerator_string() + "/" + denominator_string();
}

double BigRational::to_double() const {
  // Truncates to 53 bits, i.e. within one ulp.
  return value_.get_d();
}

std::optional<std::int64_t> BigRational::to_int64() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(n.get_si());
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw DivisionByZeroError("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational pow(const BigRational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DivisionByZeroError("pow: zero to a negative power");
    return BigRational(1) / pow(base, -exponent);
  }
  mpz_class num;
  mpz_class den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den().get_mpz_t(), e);
  return BigRational(mpq_class(num, den));
}

BigRational abs(const BigRational& value) { return value.sign() < 0 ? -value : value; }

BigRational binomial_exact(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw DomainError("binomial_exact: negative n = " + std::to_string(n));
  }
  if (k < 0 || k > n) return BigRational(0);
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRational(mpq_class(result));
}

BigRational binomial_exact(const BigRational& upper, std::int64_t k) {
  if (k < 0) return BigRational(0);
  if (upper.is_integer() && upper.sign() >= 0) {
    if (const auto n = upper.to_int64()) return binomial_exact(*n, k);
  }
  mpq_class product(1);
  mpz_class factorial(1);
  for (std::int64_t j = 0; j < k; ++j) {
    product *= upper.raw() - mpq_class(to_mpz(j));
    factorial *= to_mpz(j + 1);
  }
  product /= factorial;
  return BigRational(std::move(product));
}

BigRational harmonic_exact(std::int64_t n) {
  if (n < 0) throw DomainError("harmonic_exact: negative n");
  mpq_class sum(0);
  for (std::int64_t k = 1; k <= n; ++k) sum += mpq_class(1, static_cast<unsigned long>(k));
  sum.canonicalize();
  return BigRational(std::move(sum));
}

BigRational gen_harmonic_exact(std::int64_t c, std::int64_t n, std::int64_t m) {
  return gen_harmonic_exact(BigRational(c), n, m);
}

BigRational gen_harmonic_exact(const BigRational& c, std::int64_t n, std::int64_t m) {
  if (n < 0) throw DomainError("gen_harmonic_exact: negative n");
  BigRational sum;
  for (std::int64_t k = 1; k <= n; ++k) {
    const BigRational base = c + BigRational(k);
    if (base.is_zero()) {
      throw SingularTermError(k, "gen_harmonic_exact: c + k vanishes at k = " + std::to_string(k));
    }
    sum += pow(base, -m);
  }
  return sum;
}

}  // namespace combid
