// Derivative relations, checked by central differences.

#include <cmath>

#include "catalog.hpp"

namespace combid::catalog {
namespace {

// A stencil of half-width h around z must not straddle the branch cut of
// the principal logarithm or come close to a zero of the base.
bool clear_of_cut(Complex z, double h) {
  if (std::abs(z) < 1e-2) return false;
  return z.real() > 0.0 || std::abs(z.imag()) > 1e3 * h;
}

// d/dx prod_{k=a}^{b-1} (x-k)^w = w H_{x-b,b-a} prod = -w H_{a-x-1,b-a} prod
Complex falling_power(const Assignment& s, Complex x) {
  const auto a = s.integer("a");
  const auto b = s.integer("b");
  const Complex w = s.complex("w");
  Complex p = 1.0;
  for (auto k = a; k < b; ++k) p *= complex_pow(x - static_cast<double>(k), w);
  return p;
}

Complex falling_power_derivative(const Assignment& s, Complex x) {
  const auto a = s.integer("a");
  const auto b = s.integer("b");
  const Complex w = s.complex("w");
  return w * gen_harmonic(x - static_cast<double>(b), static_cast<std::uint64_t>(b - a), 1.0) *
         falling_power(s, x);
}

Complex falling_power_derivative_reflected(const Assignment& s, Complex x) {
  const auto a = s.integer("a");
  const auto b = s.integer("b");
  const Complex w = s.complex("w");
  return -w *
         gen_harmonic(static_cast<double>(a) - x - 1.0, static_cast<std::uint64_t>(b - a), 1.0) *
         falling_power(s, x);
}

double falling_power_scale(const Assignment& s, Complex x) {
  const auto a = s.integer("a");
  const auto b = s.integer("b");
  double terms = 0.0;
  for (auto k = a; k < b; ++k) terms += 1.0 / std::abs(x - static_cast<double>(k));
  return std::abs(s.complex("w")) * std::abs(falling_power(s, x)) * terms;
}

bool falling_power_stencil(const Assignment& s, Complex x, double h) {
  for (auto k = s.integer("a"); k < s.integer("b"); ++k) {
    if (!clear_of_cut(x - static_cast<double>(k), h)) return false;
  }
  return true;
}

// d/dx H^{(m)}_{x+y,n} = -m H^{(m+1)}_{x+y,n}
Complex harmonic_function(const Assignment& s, Complex x) {
  return gen_harmonic(x + s.complex("y"), static_cast<std::uint64_t>(s.integer("n")),
                      s.complex("m"));
}

Complex harmonic_derivative(const Assignment& s, Complex x) {
  const Complex m = s.complex("m");
  return -m * gen_harmonic(x + s.complex("y"), static_cast<std::uint64_t>(s.integer("n")), m + 1.0);
}

bool harmonic_stencil(const Assignment& s, Complex x, double h) {
  const Complex c = x + s.complex("y");
  for (std::int64_t k = 1; k <= s.integer("n"); ++k) {
    if (!clear_of_cut(c + static_cast<double>(k), h)) return false;
  }
  return true;
}

// d/dx C(x+y,n)^w = w H_{x+y-n,n} C(x+y,n)^w
Complex binomial_power(const Assignment& s, Complex x) {
  return complex_pow(binomial(x + s.complex("y"), static_cast<double>(s.integer("n"))),
                     s.complex("w"));
}

Complex binomial_power_derivative(const Assignment& s, Complex x) {
  const auto n = s.integer("n");
  const Complex z = x + s.complex("y");
  return s.complex("w") *
         gen_harmonic(z - static_cast<double>(n), static_cast<std::uint64_t>(n), 1.0) *
         binomial_power(s, x);
}

bool binomial_stencil(const Assignment& s, Complex x, double h) {
  const auto n = s.integer("n");
  const Complex z = x + s.complex("y");
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::abs(z - static_cast<double>(n - k)) < 1e-2) return false;
  }
  if (distance_to_pole(z + 1.0) < 1e-2 || distance_to_pole(z - static_cast<double>(n) + 1.0) < 1e-2) {
    return false;
  }
  const Complex base = binomial(z, static_cast<double>(n));
  if (std::abs(base) < 1e-12) return false;
  return base.real() > 0.0 || std::abs(base.imag()) > 1e3 * h * std::abs(base);
}

IdentitySpec derivative_spec(std::string id, std::string label, std::string statement,
                             std::vector<Symbol> symbols, Domain domain,
                             DerivativeEvaluators derivative) {
  IdentitySpec s;
  s.id = std::move(id);
  s.label = std::move(label);
  s.statement = std::move(statement);
  s.symbols = std::move(symbols);
  s.numeric_domain = std::move(domain);
  s.modes = {Mode::kFiniteDifference};
  s.has_summation = false;
  s.derivative = std::move(derivative);
  return s;
}

}  // namespace

void add_derivative_identities(std::vector<IdentitySpec>& out) {
  const ComplexRect small_w{-2.0, 2.0, -2.0, 2.0};
  out.push_back(derivative_spec(
      "fd_eq21", "derivative of the falling power",
      "d/dx prod_{k=a}^{b-1} (x-k)^w = w H_{x-b,b-a} prod_{k=a}^{b-1} (x-k)^w"
      " = -w H_{a-x-1,b-a} prod_{k=a}^{b-1} (x-k)^w",
      {integer_symbol("a"), integer_symbol("b"), complex_symbol("w"), complex_symbol("x")},
      concat(bounds(-5, 5, 10), {{"w", small_w}, {"x", ComplexRect{}}}),
      {"x", falling_power, falling_power_derivative, falling_power_derivative_reflected,
       falling_power_scale, falling_power_stencil}));
  out.push_back(derivative_spec(
      "fd_dharmonic", "derivative of the generalized harmonic number",
      "d/dx H_{x+y,n}^{(m)} = -m H_{x+y,n}^{(m+1)}",
      {nonneg_symbol("n"), complex_symbol("m"), complex_symbol("x"), complex_symbol("y")},
      {{"n", IntRange{0, 10, ""}},
       {"m", ComplexRect{-3.0, 3.0, -3.0, 3.0}},
       {"x", ComplexRect{}},
       {"y", ComplexRect{}}},
      {"x", harmonic_function, harmonic_derivative, nullptr, nullptr, harmonic_stencil}));
  out.push_back(derivative_spec(
      "fd_dbinomial", "derivative of the binomial power",
      "d/dx C(x+y,n)^w = w H_{x+y-n,n} C(x+y,n)^w",
      {nonneg_symbol("n"), complex_symbol("w"), complex_symbol("x"), complex_symbol("y")},
      {{"n", IntRange{0, 10, ""}}, {"w", small_w}, {"x", ComplexRect{}}, {"y", ComplexRect{}}},
      {"x", binomial_power, binomial_power_derivative, nullptr, nullptr, binomial_stencil}));
}

}  // namespace combid::catalog
