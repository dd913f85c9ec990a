#include "combid/specfun.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>

#include "combid/summation.hpp"

namespace combid {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;
const double kLogMaxDouble = std::log(DBL_MAX);

// Godfrey's coefficients, g = 607/128.
constexpr std::array<double, 15> kGodfreyCoefficients = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5,
};
constexpr double kGodfreyG = 607.0 / 128.0;

constexpr std::array<double, 9> kG7Coefficients = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kG7G = 7.0;

struct Lanczos {
  std::span<const double> coefficients;
  double g;
};

Lanczos lanczos_for(LanczosSet set) {
  switch (set) {
    case LanczosSet::kG7N9:
      return {kG7Coefficients, kG7G};
    case LanczosSet::kGodfrey15:
      break;
  }
  return {kGodfreyCoefficients, kGodfreyG};
}

// log Gamma(s) for Re(s) >= 1/2.
Complex lanczos_log_gamma(Complex s, const Lanczos& l) {
  const Complex z = s - 1.0;
  Complex series = l.coefficients[0];
  for (std::size_t k = 1; k < l.coefficients.size(); ++k) {
    series += l.coefficients[k] / (z + static_cast<double>(k));
  }
  const Complex t = z + l.g + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

// Integer exponent with |n| small enough that repeated squaring is cheap.
bool small_integer_exponent(Complex e, std::int64_t& n) {
  if (e.imag() != 0.0) return false;
  const double r = e.real();
  if (r != std::nearbyint(r) || std::abs(r) > 1024.0) return false;
  n = static_cast<std::int64_t>(r);
  return true;
}

Complex integer_pow(Complex base, std::int64_t n) {
  const bool invert = n < 0;
  std::uint64_t e = invert ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Complex result = 1.0;
  Complex p = base;
  while (e != 0) {
    if (e & 1U) result *= p;
    e >>= 1U;
    if (e != 0) p *= p;
  }
  return invert ? 1.0 / result : result;
}

std::string describe(Complex s) {
  return "(" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")";
}

}  // namespace

double distance_to_pole(Complex s) noexcept {
  double nearest = std::nearbyint(s.real());
  if (nearest > 0.0) nearest = 0.0;
  return std::abs(s - nearest);
}

bool near_pole(Complex s, double tolerance) noexcept {
  return distance_to_pole(s) < tolerance;
}

double sinpi(double x) noexcept {
  double r = std::remainder(x, 2.0);  // [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double cospi(double x) noexcept {
  const double r = std::abs(std::remainder(x, 2.0));  // [0, 1]
  return std::sin(kPi * (0.5 - r));
}

Complex exp_i_pi(Complex t) noexcept {
  const double scale = std::exp(-kPi * t.imag());
  return {scale * cospi(t.real()), scale * sinpi(t.real())};
}

Complex log_gamma(Complex s, const GammaConfig& config) {
  if (near_pole(s)) throw PoleError("log_gamma: pole at " + describe(s));
  const Lanczos l = lanczos_for(config.coefficients);
  if (s.real() >= 0.5) return lanczos_log_gamma(s, l);

  // Shift right with the recurrence; the principal logs of s+j keep the
  // result on the branch that is analytic off the negative real axis.
  const auto shift = static_cast<std::int64_t>(std::ceil(0.5 - s.real()));
  ComplexSum logs;
  for (std::int64_t j = 0; j < shift; ++j) {
    logs.add(std::log(s + static_cast<double>(j)));
  }
  return lanczos_log_gamma(s + static_cast<double>(shift), l) - logs.total();
}

Complex gamma(Complex s, const GammaConfig& config) {
  if (near_pole(s)) throw PoleError("gamma: pole at " + describe(s));
  if (s.real() >= 0.5) {
    const Complex lg = log_gamma(s, config);
    if (lg.real() > kLogMaxDouble) throw OverflowError("gamma: overflow at " + describe(s));
    Complex result = std::exp(lg);
    if (s.imag() == 0.0) result.imag(0.0);
    return result;
  }
  // Reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s).
  const Complex sin_pi_s{sinpi(s.real()) * std::cosh(kPi * s.imag()),
                         cospi(s.real()) * std::sinh(kPi * s.imag())};
  const Complex lg_reflected = log_gamma(1.0 - s, config);
  const double log_magnitude =
      std::log(kPi) - std::log(std::abs(sin_pi_s)) - lg_reflected.real();
  if (log_magnitude > kLogMaxDouble) throw OverflowError("gamma: overflow at " + describe(s));
  Complex result = kPi / (sin_pi_s * std::exp(lg_reflected));
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    result = std::exp(log_gamma(s, config));
  }
  if (s.imag() == 0.0) result.imag(0.0);
  return result;
}

namespace {

constexpr std::int64_t kProductLimit = 64;

std::optional<std::int64_t> small_count(Complex k) {
  if (k.imag() != 0.0 || k.real() < 0.0 || k.real() > kProductLimit) return std::nullopt;
  if (k.real() != std::floor(k.real())) return std::nullopt;
  return static_cast<std::int64_t>(k.real());
}

// C(x, k) = prod_{j=1}^{k} (x - k + j) / j
Complex binomial_product(Complex x, std::int64_t k) {
  Complex result = 1.0;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= (x - static_cast<double>(k - j)) / static_cast<double>(j);
  }
  return result;
}

}  // namespace

Complex binomial(Complex x, Complex y, const GammaConfig& config) {
  const Complex top = x + 1.0;
  const Complex lower = y + 1.0;
  const Complex rest = x - y + 1.0;
  if (near_pole(top)) {
    throw IndeterminateError("binomial: numerator gamma pole at x = " + describe(x));
  }
  if (near_pole(lower) || near_pole(rest)) return 0.0;
  if (const auto k = small_count(y)) return binomial_product(x, *k);
  if (const auto k = small_count(x - y)) return binomial_product(x, *k);
  const Complex log_value =
      log_gamma(top, config) - log_gamma(lower, config) - log_gamma(rest, config);
  if (log_value.real() > kLogMaxDouble) {
    throw OverflowError("binomial: overflow at x = " + describe(x) + ", y = " + describe(y));
  }
  Complex result = std::exp(log_value);
  if (x.imag() == 0.0 && y.imag() == 0.0) result.imag(0.0);
  return result;
}

Complex falling_product(Complex s, std::int64_t a, std::int64_t b) {
  if (a > b) {
    throw DomainError("falling_product: a = " + std::to_string(a) + " exceeds b = " +
                      std::to_string(b));
  }
  Complex product = 1.0;
  for (std::int64_t k = a; k < b; ++k) product *= s - static_cast<double>(k);
  return product;
}

Complex complex_pow(Complex base, Complex exponent) {
  if (base == Complex(0.0, 0.0)) {
    if (exponent.real() > 0.0 && exponent.imag() == 0.0) return 0.0;
    throw ZeroToNonpositivePowerError("complex_pow: zero base with exponent " +
                                      describe(exponent));
  }
  std::int64_t n = 0;
  if (small_integer_exponent(exponent, n)) return integer_pow(base, n);
  if (base.imag() == 0.0) base = Complex(base.real(), 0.0);
  return std::exp(exponent * std::log(base));
}

double harmonic(std::uint64_t n) {
  NeumaierSum sum;
  for (std::uint64_t k = 1; k <= n; ++k) sum.add(1.0 / static_cast<double>(k));
  return sum.total();
}

Complex gen_harmonic(Complex c, std::uint64_t n, Complex m) {
  ComplexSum sum;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const Complex base = c + static_cast<double>(k);
    if (std::abs(base) < kPoleTolerance) {
      throw SingularTermError(static_cast<std::int64_t>(k),
                              "gen_harmonic: c + k vanishes at k = " + std::to_string(k));
    }
    sum.add(complex_pow(base, -m));
  }
  return sum.total();
}

}  // namespace combid
