#pragma once

// Data model of the identity registry: symbols and their sampling domains,
// parameter assignments, identity specs, per-sample records and sweep
// reports.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "combid/exact.hpp"
#include "combid/specfun.hpp"

namespace combid {

enum class SymbolKind { kInteger, kNonnegInteger, kComplex, kReal };

struct Symbol {
  std::string name;
  SymbolKind kind;
};

std::string_view to_string(SymbolKind kind);

/// Integers are exact; complex parameters are carried either as Complex
/// (numeric sampling) or as BigRational (exact sampling).
using ParamValue = std::variant<std::int64_t, Complex, BigRational>;

class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<std::string, ParamValue>> entries);

  void set(const std::string& name, ParamValue value);
  bool contains(std::string_view name) const;
  /// Throws DomainError for a symbol that is not assigned.
  const ParamValue& at(std::string_view name) const;

  /// DomainError unless the value is integral.
  std::int64_t integer(std::string_view name) const;
  Complex complex(std::string_view name) const;
  /// NotExactlyEvaluableError for floating values.
  BigRational rational(std::string_view name) const;

  const std::vector<std::pair<std::string, ParamValue>>& entries() const { return entries_; }
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::pair<std::string, ParamValue>> entries_;
};

std::string format_complex(Complex value);        // "re+imi", 17 significant digits
std::optional<Complex> parse_complex(std::string_view text);  // inverse of format_complex
std::string format_param(const ParamValue& value);

// ---- sampling domains --------------------------------------------------

/// Integers in [lo, hi], or [base + lo, base + hi] when `relative_to` names
/// an earlier symbol.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::string relative_to;
};

struct ComplexRect {
  double re_lo = -5.0;
  double re_hi = 5.0;
  double im_lo = -5.0;
  double im_hi = 5.0;
};

struct RealRange {
  double lo = 0.0;
  double hi = 1.0;
};

/// Rationals j / denominator for integers j in [lo * denominator, hi * denominator].
struct RationalGrid {
  std::int64_t lo = -10;
  std::int64_t hi = 10;
  std::int64_t denominator = 1;
};

/// A fixed list of integer values drawn uniformly.
struct ValueSet {
  std::vector<std::int64_t> values;
};

using SymbolDomain = std::variant<IntRange, ComplexRect, RealRange, RationalGrid, ValueSet>;

struct DomainEntry {
  std::string symbol;
  SymbolDomain domain;
};

using Domain = std::vector<DomainEntry>;

// ---- identity specs ----------------------------------------------------

enum class Mode {
  kNumeric,           // factored powers, asserted for every sampled w
  kPrincipal,         // principal powers of whole binomials; observational off-domain
  kExact,             // BigRational evaluation at rational instances
  kFiniteDifference,  // central difference against an analytic derivative
};

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

enum class ValidityClass {
  kProvedGeneral,  // holds for every sampled parameter under every convention
  kIntegerWOnly,   // principal powers are asserted only at integer w
  kOpen,
};

std::string_view to_string(ValidityClass v);

enum class Side { kLhs, kRhs };

class NumericContext;
class ExactContext;

struct SideEvaluators {
  Complex (*numeric_lhs)(NumericContext&) = nullptr;
  Complex (*numeric_rhs)(NumericContext&) = nullptr;
  BigRational (*exact_lhs)(ExactContext&) = nullptr;
  BigRational (*exact_rhs)(ExactContext&) = nullptr;
};

/// d/dx f(x; params) against its closed form.
struct DerivativeEvaluators {
  std::string variable;
  Complex (*function)(const Assignment&, Complex) = nullptr;
  Complex (*derivative)(const Assignment&, Complex) = nullptr;
  /// A second closed form of the same derivative, when the identity has one.
  Complex (*alternative)(const Assignment&, Complex) = nullptr;
  /// Sum of the magnitudes of the terms behind the closed forms; the two
  /// forms are compared relative to it.
  double (*term_scale)(const Assignment&, Complex) = nullptr;
  /// Extra sampling guard for the difference stencil (distance to branch
  /// cuts and singularities, relative to the step).
  bool (*stencil_ok)(const Assignment&, Complex, double) = nullptr;
};

struct Guard {
  std::string expression;
  std::function<Complex(const Assignment&)> value;
};

/// Fixed-instance identities are swept by enumerating one symbol.
struct Enumeration {
  std::string symbol;
  std::int64_t numeric_max = 0;
  std::int64_t exact_max = 0;
};

struct IdentitySpec {
  std::string id;
  std::string label;
  std::string statement;
  std::vector<Symbol> symbols;
  Domain numeric_domain;
  Domain exact_domain;
  std::vector<Guard> guards;
  std::vector<Mode> modes;
  ValidityClass validity = ValidityClass::kProvedGeneral;
  std::optional<Enumeration> enumeration;
  /// The left side is a finite sum whose order can be reversed.
  bool has_summation = true;
  SideEvaluators sides;
  DerivativeEvaluators derivative;

  bool supports(Mode mode) const;
  bool declares(std::string_view symbol) const;
  const Symbol* symbol(std::string_view name) const;
};

// ---- records -----------------------------------------------------------

enum class Status {
  kPass,
  kFail,
  kSkippedSingular,
  kSkippedIllConditioned,
  kSkippedNotExactCapable,
  kUnasserted,  // evaluated and reported; outside the asserted domain
};

std::string_view to_string(Status status);
std::optional<Status> parse_status(std::string_view text);
inline bool is_skip(Status s) { return s != Status::kPass && s != Status::kFail; }

using SideValue = std::variant<std::monostate, Complex, BigRational>;

struct EvalRecord {
  std::string identity_id;
  Mode mode = Mode::kNumeric;
  std::uint64_t sample_index = 0;
  Assignment assignment;
  SideValue lhs;
  SideValue rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double condition = 1.0;
  Status status = Status::kSkippedSingular;
  std::string note;

  friend bool operator==(const EvalRecord&, const EvalRecord&) = default;
};

struct SweepReport {
  std::string identity_id;
  Mode mode = Mode::kNumeric;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::uint64_t requested = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t skipped_singular = 0;
  std::uint64_t skipped_ill_conditioned = 0;
  std::uint64_t skipped_not_exact_capable = 0;
  std::uint64_t unasserted = 0;
  double max_rel_err = 0.0;  // over passing records
  std::optional<EvalRecord> worst_failure;
  std::vector<EvalRecord> records;
};

}  // namespace combid
