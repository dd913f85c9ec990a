#pragma once

// Evaluation contexts. Every identity side is written once as a function
// template over a context; the context decides what the primitives mean:
//
//   NumericContext  std::complex<double>, factored or principal powers
//   ExactContext    BigRational, integer powers only
//
// Binomial powers that telescope are requested through family(), which in
// the factored numeric convention decomposes them into one gamma-ratio
// constant and the per-factor powers of the product difference equation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "combid/errors.hpp"
#include "combid/exact.hpp"
#include "combid/identity.hpp"
#include "combid/specfun.hpp"
#include "combid/summation.hpp"

namespace combid {

enum class Convention { kFactored, kPrincipal };

/// The four binomial-power shapes whose ratios telescope.
enum class FamilyKind {
  kShiftedUpper,         // C(x+k, y)^w                  | boundary C(x+j, y+1)^w
  kShiftedLower,         // (-1)^{wk} C(x, y+k)^w        | (-1)^{wj} C(x-1, y+j-1)^w
  kInverseShiftedLower,  // (-1)^{wk} C(x, y+k)^{-w}     | (-1)^{wj} C(x+1, y+j)^{-w}
  kRatio,                // C(x, k)^w C(y, k)^{-w}       | C(x, j)^w C(y+1, j)^{-w}
};

/// Records the smallest distances to singular points seen during an
/// evaluation; used to screen samples before they are verified.
struct Probe {
  double min_pole_distance = std::numeric_limits<double>::infinity();
  std::string pole_what;
  double min_magnitude = std::numeric_limits<double>::infinity();
  std::string magnitude_what;

  void gamma_argument(Complex s, std::string_view what) {
    const double d = distance_to_pole(s);
    if (d < min_pole_distance) {
      min_pole_distance = d;
      pole_what = what;
    }
  }
  void magnitude(Complex v, std::string_view what) {
    const double m = std::abs(v);
    if (m < min_magnitude) {
      min_magnitude = m;
      magnitude_what = what;
    }
  }
};

template <class Ctx, class Value>
class LiteralFamily {
 public:

  LiteralFamily(Ctx& ctx, FamilyKind kind, Value x, Value y, Value w)
      : ctx_(&ctx), kind_(kind), x_(std::move(x)), y_(std::move(y)), w_(std::move(w)) {}

  Value summand(std::int64_t k) const {
    Ctx& c = *ctx_;
    switch (kind_) {
      case FamilyKind::kShiftedUpper:
        return c.pow(c.binom(x_ + c.num(k), y_), w_);
      case FamilyKind::kShiftedLower:
        return c.sign(w_, k) * c.pow(c.binom(x_, y_ + c.num(k)), w_);
      case FamilyKind::kInverseShiftedLower:
        return c.sign(w_, k) * c.pow_inverse(c.binom(x_, y_ + c.num(k)), w_);
      case FamilyKind::kRatio:
        return c.pow(c.binom(x_, c.num(k)), w_) * c.pow_inverse(c.binom(y_, c.num(k)), w_);
    }
    return Value(0);
  }

  Value boundary(std::int64_t j) const {
    Ctx& c = *ctx_;
    switch (kind_) {
      case FamilyKind::kShiftedUpper:
        return c.pow(c.binom(x_ + c.num(j), y_ + c.num(1)), w_);
      case FamilyKind::kShiftedLower:
        return c.sign(w_, j) * c.pow(c.binom(x_ - c.num(1), y_ + c.num(j - 1)), w_);
      case FamilyKind::kInverseShiftedLower:
        return c.sign(w_, j) * c.pow_inverse(c.binom(x_ + c.num(1), y_ + c.num(j)), w_);
      case FamilyKind::kRatio:
        return c.pow(c.binom(x_, c.num(j)), w_) *
               c.pow_inverse(c.binom(y_ + c.num(1), c.num(j)), w_);
    }
    return Value(0);
  }

 private:
  Ctx* ctx_;
  FamilyKind kind_;
  Value x_;
  Value y_;
  Value w_;
};

/// Factored binomial powers over the summation range [a, b).
///
/// With bases A_l, B_l (the two powers in each summand) and a gamma-ratio
/// constant K, every summand and boundary value is
///
///   summand(k)  = phase K^w prod_{l<k} A_l^w prod_{l>k}  B_l^w
///   boundary(j) = lead^{-w} phase K^w prod_{l<j} A_l^w prod_{l>=j} B_l^w
///
/// The powers A_l^w, B_l^w are evaluated once and shared.
class FactoredFamily {
 public:
  FactoredFamily(FamilyKind kind, std::int64_t a, std::int64_t b, Complex x, Complex y, Complex w,
                 Probe* probe);

  Complex summand(std::int64_t k) const;
  Complex boundary(std::int64_t j) const;

 private:
  std::size_t index(std::int64_t k) const;

  std::int64_t a_;
  std::int64_t b_;
  Complex common_;         // phase * K^w
  Complex lead_inverse_;   // lead^{-w}
  std::vector<Complex> prefix_;  // prefix_[i] = prod_{l < a+i} A_l^w
  std::vector<Complex> suffix_;  // suffix_[i] = prod_{l >= a+i} B_l^w
};

class NumericContext;

class NumericFamily {
 public:
  explicit NumericFamily(FactoredFamily f) : impl_(std::move(f)) {}
  explicit NumericFamily(LiteralFamily<NumericContext, Complex> f) : impl_(std::move(f)) {}

  Complex summand(std::int64_t k) const {
    return std::visit([k](const auto& f) { return f.summand(k); }, impl_);
  }
  Complex boundary(std::int64_t j) const {
    return std::visit([j](const auto& f) { return f.boundary(j); }, impl_);
  }

 private:
  std::variant<FactoredFamily, LiteralFamily<NumericContext, Complex>> impl_;
};

template <class Ctx>
class Accumulator;

template <>
class Accumulator<NumericContext> {
 public:
  explicit Accumulator(NumericContext& ctx) : ctx_(&ctx) {}
  void add(Complex term) { sum_.add(term); }
  Complex total();

 private:
  NumericContext* ctx_;
  ComplexSum sum_;
};

class NumericContext {
 public:
  using Value = Complex;

  NumericContext(const Assignment& assignment, Convention convention, bool reversed = false,
                 Probe* probe = nullptr)
      : assignment_(&assignment), convention_(convention), reversed_(reversed), probe_(probe) {}

  std::int64_t integer(std::string_view name) const { return assignment_->integer(name); }
  Complex value(std::string_view name) const { return assignment_->complex(name); }
  static Complex num(std::int64_t v) { return {static_cast<double>(v), 0.0}; }
  static Complex num(std::int64_t p, std::int64_t q) {
    return {static_cast<double>(p) / static_cast<double>(q), 0.0};
  }

  Complex pow(Complex base, Complex exponent) {
    note_power(base, exponent);
    return complex_pow(base, exponent);
  }
  Complex pow_inverse(Complex base, Complex exponent) {
    note_power(base, exponent);
    return complex_pow(base, -exponent);
  }
  /// (-1)^{w k} = exp(i pi w k).
  Complex sign(Complex w, std::int64_t k) {
    const Complex t = w * static_cast<double>(k);
    if (t.imag() != 0.0 || t.real() != std::nearbyint(t.real())) branch_sensitive_ = true;
    return exp_i_pi(t);
  }
  static Complex sign(std::int64_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

  Complex binom(Complex x, Complex y) {
    if (probe_) {
      probe_->gamma_argument(x + 1.0, "gamma argument");
      probe_->gamma_argument(y + 1.0, "gamma argument");
      probe_->gamma_argument(x - y + 1.0, "gamma argument");
    }
    return binomial(x, y);
  }
  Complex div(Complex numerator, Complex denominator, std::string_view what) {
    if (probe_) probe_->magnitude(denominator, what);
    return numerator / denominator;
  }
  static Complex inv(Complex value, std::string_view) { return 1.0 / value; }
  Complex harmonic(Complex offset, std::int64_t n, Complex order = 1.0) {
    if (n < 0) throw DomainError("harmonic: negative length");
    if (probe_) {
      for (std::int64_t k = 1; k <= n; ++k) {
        probe_->magnitude(offset + static_cast<double>(k), "harmonic term");
      }
    }
    return gen_harmonic(offset, static_cast<std::uint64_t>(n), order);
  }

  NumericFamily family(FamilyKind kind, std::int64_t a, std::int64_t b, Complex x, Complex y,
                       Complex w) {
    if (convention_ == Convention::kFactored) {
      return NumericFamily(FactoredFamily(kind, a, b, x, y, w, probe_));
    }
    return NumericFamily(LiteralFamily<NumericContext, Complex>(*this, kind, x, y, w));
  }

  /// Summation indices lo, ..., hi - 1 (reversed on request).
  std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = lo; k < hi; ++k) out.push_back(k);
    if (reversed_) std::reverse(out.begin(), out.end());
    return out;
  }

  Accumulator<NumericContext> sum() { return Accumulator<NumericContext>(*this); }

  void add_magnitude(double m) { magnitude_ += m; }
  double magnitude() const { return magnitude_; }
  bool branch_sensitive() const { return branch_sensitive_; }
  Convention convention() const { return convention_; }

 private:
  void note_power(Complex base, Complex exponent) {
    const bool integral = exponent.imag() == 0.0 && exponent.real() == std::nearbyint(exponent.real());
    if (!integral && base.real() <= 0.0) branch_sensitive_ = true;
  }

  const Assignment* assignment_;
  Convention convention_;
  bool reversed_;
  Probe* probe_;
  double magnitude_ = 0.0;
  bool branch_sensitive_ = false;
};

inline Complex Accumulator<NumericContext>::total() {
  ctx_->add_magnitude(sum_.magnitude());
  return sum_.total();
}

class ExactContext;

template <>
class Accumulator<ExactContext> {
 public:
  explicit Accumulator(ExactContext&) {}
  void add(const BigRational& term) { sum_ += term; }
  BigRational total() const { return sum_; }

 private:
  BigRational sum_;
};

class ExactContext {
 public:
  using Value = BigRational;

  explicit ExactContext(const Assignment& assignment, bool reversed = false)
      : assignment_(&assignment), reversed_(reversed) {}

  std::int64_t integer(std::string_view name) const { return assignment_->integer(name); }
  BigRational value(std::string_view name) const { return assignment_->rational(name); }
  static BigRational num(std::int64_t v) { return BigRational(v); }
  static BigRational num(std::int64_t p, std::int64_t q) { return BigRational(p, q); }

  static BigRational pow(const BigRational& base, const BigRational& exponent) {
    const std::int64_t e = integral(exponent, "power exponent");
    if (e < 0 && base.is_zero()) throw DivisionByZeroError("zero power base with negative exponent");
    return combid::pow(base, e);
  }
  /// base^{-exponent}; a vanishing base makes the instance non-exact-capable.
  static BigRational pow_inverse(const BigRational& base, const BigRational& exponent) {
    const std::int64_t e = integral(exponent, "power exponent");
    if (base.is_zero() && e > 0) {
      throw NotExactlyEvaluableError("binomial raised to a negative power vanishes");
    }
    return combid::pow(base, -e);
  }
  static BigRational sign(const BigRational& w, std::int64_t k) {
    const std::int64_t e = integral(w, "sign exponent");
    return ((e % 2 != 0) && (k % 2 != 0)) ? BigRational(-1) : BigRational(1);
  }
  static BigRational sign(std::int64_t k) { return (k % 2 == 0) ? BigRational(1) : BigRational(-1); }

  /// Rational upper argument, integer lower argument.
  static BigRational binom(const BigRational& x, const BigRational& y) {
    const auto k = y.to_int64();
    if (!k) {
      throw NotExactlyEvaluableError("binomial with non-integer lower argument " + y.to_string());
    }
    return binomial_exact(x, *k);
  }
  static BigRational div(const BigRational& numerator, const BigRational& denominator,
                         std::string_view what) {
    if (denominator.is_zero()) {
      throw DivisionByZeroError("vanishing denominator " + std::string(what));
    }
    return numerator / denominator;
  }
  static BigRational inv(const BigRational& value, std::string_view what) {
    if (value.is_zero()) throw NotExactlyEvaluableError("vanishing reciprocal " + std::string(what));
    return BigRational(1) / value;
  }
  static BigRational harmonic(const BigRational& offset, std::int64_t n,
                              const BigRational& order = BigRational(1)) {
    if (n < 0) throw DomainError("harmonic: negative length");
    return gen_harmonic_exact(offset, n, integral(order, "harmonic order"));
  }

  LiteralFamily<ExactContext, BigRational> family(FamilyKind kind, std::int64_t, std::int64_t,
                                     const BigRational& x, const BigRational& y,
                                     const BigRational& w) {
    return LiteralFamily<ExactContext, BigRational>(*this, kind, x, y, w);
  }

  std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = lo; k < hi; ++k) out.push_back(k);
    if (reversed_) std::reverse(out.begin(), out.end());
    return out;
  }

  Accumulator<ExactContext> sum() { return Accumulator<ExactContext>(*this); }

 private:
  static std::int64_t integral(const BigRational& v, std::string_view what) {
    const auto i = v.to_int64();
    if (!i) {
      throw NotExactlyEvaluableError(std::string(what) + " " + v.to_string() + " is not an integer");
    }
    return *i;
  }

  const Assignment* assignment_;
  bool reversed_;
};

}  // namespace combid
