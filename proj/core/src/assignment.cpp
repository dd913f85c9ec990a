#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "combid/errors.hpp"
#include "combid/identity.hpp"

namespace combid {

std::string_view to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kInteger: return "integer";
    case SymbolKind::kNonnegInteger: return "nonneg-integer";
    case SymbolKind::kComplex: return "complex";
    case SymbolKind::kReal: return "real";
  }
  return "?";
}

Assignment::Assignment(std::initializer_list<std::pair<std::string, ParamValue>> entries) {
  for (const auto& [name, value] : entries) set(name, value);
}

void Assignment::set(const std::string& name, ParamValue value) {
  for (auto& entry : entries_) {
    if (entry.first == name) {
      entry.second = std::move(value);
      return;
    }
  }
  entries_.emplace_back(name, std::move(value));
}

bool Assignment::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == name; });
}

const ParamValue& Assignment::at(std::string_view name) const {
  for (const auto& entry : entries_) {
    if (entry.first == name) return entry.second;
  }
  throw DomainError("symbol '" + std::string(name) + "' is not assigned");
}

std::int64_t Assignment::integer(std::string_view name) const {
  const auto& v = at(name);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* r = std::get_if<BigRational>(&v)) {
    if (const auto i = r->to_int64()) return *i;
  }
  if (const auto* c = std::get_if<Complex>(&v)) {
    if (c->imag() == 0.0 && c->real() == std::nearbyint(c->real()) && std::abs(c->real()) < 9e15) {
      return static_cast<std::int64_t>(c->real());
    }
  }
  throw DomainError("symbol '" + std::string(name) + "' is not an integer: " + format_param(v));
}

Complex Assignment::complex(std::string_view name) const {
  const auto& v = at(name);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return {static_cast<double>(*i), 0.0};
  if (const auto* r = std::get_if<BigRational>(&v)) return {r->to_double(), 0.0};
  return std::get<Complex>(v);
}

BigRational Assignment::rational(std::string_view name) const {
  const auto& v = at(name);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return BigRational(*i);
  if (const auto* r = std::get_if<BigRational>(&v)) return *r;
  throw NotExactlyEvaluableError("symbol '" + std::string(name) + "' has floating value " +
                                 format_param(v));
}

std::string Assignment::to_string() const {
  std::string out;
  for (const auto& [name, value] : entries_) {
    if (!out.empty()) out += ", ";
    out += name + "=" + format_param(value);
  }
  return out;
}

std::string format_complex(Complex value) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", value.real(), value.imag());
  return buf;
}

std::optional<Complex> parse_complex(std::string_view text) {
  const std::string s(text);
  if (s.empty()) return std::nullopt;

  const auto parse_real = [](const std::string& part, double& out) {
    if (part.empty()) return false;
    char* end = nullptr;
    out = std::strtod(part.c_str(), &end);
    return end == part.c_str() + part.size();
  };

  if (const auto comma = s.find(','); comma != std::string::npos) {
    double re = 0.0;
    double im = 0.0;
    if (!parse_real(s.substr(0, comma), re) || !parse_real(s.substr(comma + 1), im)) {
      return std::nullopt;
    }
    return Complex(re, im);
  }

  if (s.back() != 'i') {
    double re = 0.0;
    if (!parse_real(s, re)) return std::nullopt;
    return Complex(re, 0.0);
  }

  const std::string body = s.substr(0, s.size() - 1);
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char ch = body[pos];
    if ((ch == '+' || ch == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      double re = 0.0;
      double im = 0.0;
      if (!parse_real(body.substr(0, pos), re) || !parse_real(body.substr(pos), im)) {
        return std::nullopt;
      }
      return Complex(re, im);
    }
  }
  double im = 0.0;
  if (!parse_real(body, im)) return std::nullopt;
  return Complex(0.0, im);
}

std::string format_param(const ParamValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  if (const auto* r = std::get_if<BigRational>(&value)) return r->to_string();
  return format_complex(std::get<Complex>(value));
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kNumeric: return "numeric";
    case Mode::kPrincipal: return "principal";
    case Mode::kExact: return "exact";
    case Mode::kFiniteDifference: return "fd";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
  for (const Mode m : {Mode::kNumeric, Mode::kPrincipal, Mode::kExact, Mode::kFiniteDifference}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

std::string_view to_string(ValidityClass v) {
  switch (v) {
    case ValidityClass::kProvedGeneral: return "proved-general";
    case ValidityClass::kIntegerWOnly: return "integer-w-only";
    case ValidityClass::kOpen: return "open";
  }
  return "?";
}

bool IdentitySpec::supports(Mode mode) const {
  return std::find(modes.begin(), modes.end(), mode) != modes.end();
}

bool IdentitySpec::declares(std::string_view name) const { return symbol(name) != nullptr; }

const Symbol* IdentitySpec::symbol(std::string_view name) const {
  for (const auto& s : symbols) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkippedSingular: return "skipped_singular";
    case Status::kSkippedIllConditioned: return "skipped_ill_conditioned";
    case Status::kSkippedNotExactCapable: return "skipped_not_exact_capable";
    case Status::kUnasserted: return "unasserted";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view text) {
  for (const Status s : {Status::kPass, Status::kFail, Status::kSkippedSingular,
                         Status::kSkippedIllConditioned, Status::kSkippedNotExactCapable,
                         Status::kUnasserted}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

}  // namespace combid
