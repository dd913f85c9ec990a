#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combid/identity.hpp"
#include "combid/rng.hpp"

namespace combid {

/// Magnitude below which a guard expression, a power base or a harmonic
/// term counts as singular, and the gamma-argument distance to a pole that
/// does the same.
inline constexpr double kGuardBand = 1e-6;
inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr double kFiniteDifferenceTolerance = 1e-5;
inline constexpr double kFiniteDifferenceStep = 1e-6;
inline constexpr double kReversalTolerance = 1e-12;
inline constexpr double kIllConditionCap = 1e6;
/// Errors are measured relative to at least this fraction of the summed
/// term magnitudes.
inline constexpr double kMagnitudeFloor = 1e-3;

/// The full catalog. Built once; the returned reference is immutable.
const std::vector<IdentitySpec>& registry();
std::vector<IdentitySpec> build_registry();
/// Exact id, or the unique id that starts with `id` followed by '_'
/// ("eq12" finds "eq12_example1").
const IdentitySpec* find_identity(std::string_view id);

struct Sample {
  Assignment assignment;
  std::optional<std::string> skip_reason;  // "singular: <what>"
};

/// Draws one assignment from the spec's domain for `mode` and screens it
/// against the guards.
Sample sample_assignment(const IdentitySpec& spec, Xoshiro256& rng, Mode mode = Mode::kNumeric);

/// Guard screening of an explicit assignment (numeric conventions).
std::optional<std::string> screen_assignment(const IdentitySpec& spec, const Assignment& assignment,
                                             Mode mode = Mode::kNumeric);

EvalRecord verify_instance(const IdentitySpec& spec, const Assignment& assignment, Mode mode,
                           double tolerance);

/// Exact value of one side. NotExactlyEvaluableError / DivisionByZeroError /
/// SingularTermError propagate.
BigRational eval_exact(const IdentitySpec& spec, Side side, const Assignment& assignment);

/// Numeric value of one side under the factored (default) or principal
/// convention, optionally summing the left side in reverse order.
Complex eval_numeric(const IdentitySpec& spec, Side side, const Assignment& assignment,
                     Mode mode = Mode::kNumeric, bool reversed = false);

struct SweepOptions {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  Mode mode = Mode::kNumeric;
  /// Overrides the enumeration bound of fixed-instance specs.
  std::optional<std::int64_t> n_max;
  bool keep_records = true;
};

SweepReport sweep(const IdentitySpec& spec, const SweepOptions& options);

/// Sums the left side in reversed order (k -> a + b - k - 1) and compares
/// with the forward order. Numeric modes compare at kReversalTolerance;
/// exact mode requires equality.
EvalRecord reversal_check(const IdentitySpec& spec, const Assignment& assignment,
                          Mode mode = Mode::kNumeric);

/// Relative disagreement between the two closed forms of a derivative
/// identity that has an alternative form.
std::optional<double> alternative_form_disagreement(const IdentitySpec& spec,
                                                    const Assignment& assignment);

/// Replaces the domain entry for `symbol` in both numeric and exact domains
/// (numeric only when the override is a ComplexRect or RealRange).
void override_domain(IdentitySpec& spec, const std::string& symbol, const SymbolDomain& domain);

}  // namespace combid
