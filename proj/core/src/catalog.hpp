#pragma once

#include <string>
#include <utility>
#include <vector>

#include "combid/identity.hpp"
#include "contexts.hpp"

namespace combid::catalog {

template <class I>
SideEvaluators sides_of() {
  return {&I::template lhs<NumericContext>, &I::template rhs<NumericContext>,
          &I::template lhs<ExactContext>, &I::template rhs<ExactContext>};
}

inline Symbol integer_symbol(std::string name) { return {std::move(name), SymbolKind::kInteger}; }
inline Symbol nonneg_symbol(std::string name) { return {std::move(name), SymbolKind::kNonnegInteger}; }
inline Symbol complex_symbol(std::string name) { return {std::move(name), SymbolKind::kComplex}; }
inline Symbol real_symbol(std::string name) { return {std::move(name), SymbolKind::kReal}; }

inline std::vector<Mode> equation_modes() { return {Mode::kNumeric, Mode::kPrincipal, Mode::kExact}; }

inline Guard guard(std::string expression, std::function<Complex(const Assignment&)> value) {
  return {std::move(expression), std::move(value)};
}

inline Complex value(const Assignment& s, std::string_view name) { return s.complex(name); }

/// Summation bounds a <= b with b - a <= span.
inline Domain bounds(std::int64_t a_lo, std::int64_t a_hi, std::int64_t span) {
  return {{"a", IntRange{a_lo, a_hi, ""}}, {"b", IntRange{0, span, "a"}}};
}

inline Domain concat(Domain head, const Domain& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

void add_binomial_identities(std::vector<IdentitySpec>& out);
void add_harmonic_identities(std::vector<IdentitySpec>& out);
void add_traditional_identities(std::vector<IdentitySpec>& out);
void add_derivative_identities(std::vector<IdentitySpec>& out);

}  // namespace combid::catalog
