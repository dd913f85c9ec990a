#include "combid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "combid/errors.hpp"
#include "contexts.hpp"

namespace combid {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Convention convention_of(Mode mode) {
  return mode == Mode::kPrincipal ? Convention::kPrincipal : Convention::kFactored;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct NumericSides {
  Complex lhs;
  Complex rhs;
  double magnitude = 0.0;
  bool branch_sensitive = false;
};

NumericSides evaluate_sides(const IdentitySpec& spec, const Assignment& assignment, Mode mode,
                            Probe* probe) {
  if (!spec.sides.numeric_lhs || !spec.sides.numeric_rhs) {
    throw DomainError(spec.id + " has no numeric evaluator");
  }
  NumericContext left(assignment, convention_of(mode), false, probe);
  NumericContext right(assignment, convention_of(mode), false, probe);
  NumericSides out;
  out.lhs = spec.sides.numeric_lhs(left);
  out.rhs = spec.sides.numeric_rhs(right);
  out.magnitude = left.magnitude() + right.magnitude();
  out.branch_sensitive = left.branch_sensitive() || right.branch_sensitive();
  if (!finite(out.lhs) || !finite(out.rhs)) throw OverflowError("non-finite side value");
  return out;
}

// |lhs - rhs| / max(|lhs|, |rhs|, kMagnitudeFloor * sum|terms|); samples
// that miss the tolerance with sum|terms| / max(|lhs|, |rhs|) above
// kIllConditionCap are skipped as ill-conditioned.
void measure(EvalRecord& r, Complex lhs, Complex rhs, double magnitude, double tolerance) {
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  magnitude = std::max(magnitude, scale);
  if (scale > 0.0) {
    r.condition = std::max(1.0, magnitude / scale);
  } else {
    r.condition = magnitude > 0.0 ? kInf : 1.0;
  }
  const double denominator = std::max(scale, kMagnitudeFloor * magnitude);
  if (r.abs_err == 0.0) {
    r.rel_err = 0.0;
  } else {
    r.rel_err = denominator > 0.0 ? r.abs_err / denominator : kInf;
  }
  if (r.rel_err <= tolerance) {
    r.status = Status::kPass;
  } else if (r.condition > kIllConditionCap) {
    r.status = Status::kSkippedIllConditioned;
  } else {
    r.status = Status::kFail;
  }
}

void skip(EvalRecord& r, Status status, const std::string& note) {
  r.status = status;
  r.note = note;
}

EvalRecord numeric_record(const IdentitySpec& spec, const Assignment& assignment, Mode mode,
                          double tolerance, EvalRecord r) {
  try {
    const auto sides = evaluate_sides(spec, assignment, mode, nullptr);
    measure(r, sides.lhs, sides.rhs, sides.magnitude, tolerance);
    if (mode == Mode::kPrincipal && spec.validity == ValidityClass::kIntegerWOnly &&
        sides.branch_sensitive) {
      r.note = std::string("principal powers off the asserted domain; would ") +
               std::string(to_string(r.status));
      r.status = Status::kUnasserted;
    }
  } catch (const Error& e) {
    skip(r, Status::kSkippedSingular, std::string(e.name()) + ": " + e.what());
  }
  return r;
}

EvalRecord exact_record(const IdentitySpec& spec, const Assignment& assignment, EvalRecord r) {
  try {
    const BigRational lhs = eval_exact(spec, Side::kLhs, assignment);
    const BigRational rhs = eval_exact(spec, Side::kRhs, assignment);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = abs(lhs - rhs).to_double();
    const double scale = std::max(abs(lhs).to_double(), abs(rhs).to_double());
    r.rel_err = r.abs_err == 0.0 ? 0.0 : (scale > 0.0 ? r.abs_err / scale : kInf);
    r.condition = 1.0;
    r.status = lhs == rhs ? Status::kPass : Status::kFail;
  } catch (const NotExactlyEvaluableError& e) {
    skip(r, Status::kSkippedNotExactCapable, e.what());
  } catch (const Error& e) {
    skip(r, Status::kSkippedSingular, std::string(e.name()) + ": " + e.what());
  }
  return r;
}

double step_for(Complex x) { return kFiniteDifferenceStep * std::max(1.0, std::abs(x)); }

EvalRecord fd_record(const IdentitySpec& spec, const Assignment& assignment, double tolerance,
                     EvalRecord r) {
  const auto& d = spec.derivative;
  if (!d.function || !d.derivative) throw DomainError(spec.id + " has no derivative evaluator");
  try {
    const Complex x = assignment.complex(d.variable);
    const double h = step_for(x);
    if (d.stencil_ok && !d.stencil_ok(assignment, x, h)) {
      skip(r, Status::kSkippedSingular, "singular: difference stencil near a cut or singularity");
      return r;
    }
    const Complex fp = d.function(assignment, x + h);
    const Complex fm = d.function(assignment, x - h);
    const Complex difference = (fp - fm) / (2.0 * h);
    const Complex analytic = d.derivative(assignment, x);
    if (!finite(difference) || !finite(analytic)) throw OverflowError("non-finite derivative");
    // The difference quotient is a two-term sum fp/2h - fm/2h.
    const double magnitude = (std::abs(fp) + std::abs(fm)) / (2.0 * h);
    r.lhs = difference;
    r.rhs = analytic;
    r.abs_err = std::abs(difference - analytic);
    const double scale = std::max(std::abs(difference), std::abs(analytic));
    r.condition = scale > 0.0 ? std::max(1.0, magnitude / scale) : (magnitude > 0.0 ? kInf : 1.0);
    r.rel_err = r.abs_err == 0.0 ? 0.0 : (scale > 0.0 ? r.abs_err / scale : kInf);
    if (r.rel_err <= tolerance) {
      r.status = Status::kPass;
    } else if (r.condition > kIllConditionCap) {
      r.status = Status::kSkippedIllConditioned;
    } else {
      r.status = Status::kFail;
    }
  } catch (const Error& e) {
    skip(r, Status::kSkippedSingular, std::string(e.name()) + ": " + e.what());
  }
  return r;
}

const Domain& domain_for(const IdentitySpec& spec, Mode mode) {
  if (mode == Mode::kExact && !spec.exact_domain.empty()) return spec.exact_domain;
  return spec.numeric_domain;
}

ParamValue draw(const SymbolDomain& domain, const Assignment& so_far, Xoshiro256& rng) {
  return std::visit(
      [&](const auto& d) -> ParamValue {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, IntRange>) {
          const std::int64_t base = d.relative_to.empty() ? 0 : so_far.integer(d.relative_to);
          return rng.uniform_int(base + d.lo, base + d.hi);
        } else if constexpr (std::is_same_v<D, ComplexRect>) {
          const double re = rng.uniform(d.re_lo, d.re_hi);
          const double im = rng.uniform(d.im_lo, d.im_hi);
          return Complex(re, im);
        } else if constexpr (std::is_same_v<D, RealRange>) {
          return Complex(rng.uniform(d.lo, d.hi), 0.0);
        } else if constexpr (std::is_same_v<D, RationalGrid>) {
          const std::int64_t j = rng.uniform_int(d.lo * d.denominator, d.hi * d.denominator);
          if (d.denominator == 1) return j;
          return BigRational(j, d.denominator);
        } else {
          if (d.values.empty()) throw DomainError("empty value set");
          const auto i = rng.uniform_int(0, static_cast<std::int64_t>(d.values.size()) - 1);
          return d.values[static_cast<std::size_t>(i)];
        }
      },
      domain);
}

EvalRecord base_record(const IdentitySpec& spec, const Assignment& assignment, Mode mode) {
  EvalRecord r;
  r.identity_id = spec.id;
  r.mode = mode;
  r.assignment = assignment;
  return r;
}

}  // namespace

std::optional<std::string> screen_assignment(const IdentitySpec& spec, const Assignment& assignment,
                                             Mode mode) {
  try {
    for (const auto& g : spec.guards) {
      if (std::abs(g.value(assignment)) < kGuardBand) return "singular: guard " + g.expression;
    }
    if (mode == Mode::kFiniteDifference) {
      const auto& d = spec.derivative;
      if (d.stencil_ok) {
        const Complex x = assignment.complex(d.variable);
        if (!d.stencil_ok(assignment, x, step_for(x))) return "singular: difference stencil";
      }
      return std::nullopt;
    }
    if (mode == Mode::kExact) return std::nullopt;
    Probe probe;
    evaluate_sides(spec, assignment, mode, &probe);
    if (probe.min_pole_distance < kGuardBand) return "singular: " + probe.pole_what + " near a pole";
    if (probe.min_magnitude < kGuardBand) return "singular: vanishing " + probe.magnitude_what;
  } catch (const Error& e) {
    return "singular: " + std::string(e.what());
  }
  return std::nullopt;
}

Sample sample_assignment(const IdentitySpec& spec, Xoshiro256& rng, Mode mode) {
  Sample s;
  for (const auto& entry : domain_for(spec, mode)) {
    s.assignment.set(entry.symbol, draw(entry.domain, s.assignment, rng));
  }
  if (s.assignment.contains("a") && s.assignment.contains("b") &&
      s.assignment.integer("b") < s.assignment.integer("a")) {
    const auto a = s.assignment.integer("a");
    s.assignment.set("a", s.assignment.integer("b"));
    s.assignment.set("b", a);
  }
  s.skip_reason = screen_assignment(spec, s.assignment, mode);
  return s;
}

BigRational eval_exact(const IdentitySpec& spec, Side side, const Assignment& assignment) {
  const auto fn = side == Side::kLhs ? spec.sides.exact_lhs : spec.sides.exact_rhs;
  if (!fn) throw NotExactlyEvaluableError(spec.id + " has no exact evaluator");
  ExactContext ctx(assignment);
  return fn(ctx);
}

Complex eval_numeric(const IdentitySpec& spec, Side side, const Assignment& assignment, Mode mode,
                     bool reversed) {
  const auto fn = side == Side::kLhs ? spec.sides.numeric_lhs : spec.sides.numeric_rhs;
  if (!fn) throw DomainError(spec.id + " has no numeric evaluator");
  NumericContext ctx(assignment, convention_of(mode), reversed);
  return fn(ctx);
}

EvalRecord verify_instance(const IdentitySpec& spec, const Assignment& assignment, Mode mode,
                           double tolerance) {
  if (!spec.supports(mode)) {
    throw DomainError(spec.id + " does not support mode " + std::string(to_string(mode)));
  }
  EvalRecord r = base_record(spec, assignment, mode);
  switch (mode) {
    case Mode::kNumeric:
    case Mode::kPrincipal:
      return numeric_record(spec, assignment, mode, tolerance, std::move(r));
    case Mode::kExact:
      return exact_record(spec, assignment, std::move(r));
    case Mode::kFiniteDifference:
      return fd_record(spec, assignment, tolerance, std::move(r));
  }
  return r;
}

SweepReport sweep(const IdentitySpec& spec, const SweepOptions& options) {
  if (!spec.supports(options.mode)) {
    throw DomainError(spec.id + " does not support mode " + std::string(to_string(options.mode)));
  }
  SweepReport report;
  report.identity_id = spec.id;
  report.mode = options.mode;
  report.seed = options.seed;
  report.tolerance = options.tolerance;

  const auto account = [&](EvalRecord r) {
    ++report.requested;
    switch (r.status) {
      case Status::kPass:
        ++report.evaluated;
        ++report.passed;
        report.max_rel_err = std::max(report.max_rel_err, r.rel_err);
        break;
      case Status::kFail:
        ++report.evaluated;
        ++report.failed;
        if (!report.worst_failure || r.rel_err > report.worst_failure->rel_err) {
          report.worst_failure = r;
        }
        break;
      case Status::kSkippedSingular: ++report.skipped; ++report.skipped_singular; break;
      case Status::kSkippedIllConditioned: ++report.skipped; ++report.skipped_ill_conditioned; break;
      case Status::kSkippedNotExactCapable: ++report.skipped; ++report.skipped_not_exact_capable; break;
      case Status::kUnasserted: ++report.skipped; ++report.unasserted; break;
    }
    if (options.keep_records) report.records.push_back(std::move(r));
  };

  if (spec.enumeration) {
    const auto& e = *spec.enumeration;
    const std::int64_t n_max =
        options.n_max.value_or(options.mode == Mode::kExact ? e.exact_max : e.numeric_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      Assignment a{{e.symbol, n}};
      EvalRecord r = verify_instance(spec, a, options.mode, options.tolerance);
      r.sample_index = static_cast<std::uint64_t>(n);
      account(std::move(r));
    }
    return report;
  }

  for (std::uint64_t i = 0; i < options.samples; ++i) {
    auto rng = Xoshiro256::for_sample(options.seed, spec.id, i);
    Sample s = sample_assignment(spec, rng, options.mode);
    EvalRecord r;
    if (s.skip_reason) {
      r = base_record(spec, s.assignment, options.mode);
      skip(r, Status::kSkippedSingular, *s.skip_reason);
    } else {
      r = verify_instance(spec, s.assignment, options.mode, options.tolerance);
    }
    r.sample_index = i;
    account(std::move(r));
  }
  return report;
}

EvalRecord reversal_check(const IdentitySpec& spec, const Assignment& assignment, Mode mode) {
  if (!spec.has_summation) throw DomainError(spec.id + " has no summation to reverse");
  EvalRecord r = base_record(spec, assignment, mode);
  r.note = "reversal";
  if (mode == Mode::kExact) {
    try {
      if (!spec.sides.exact_lhs) throw NotExactlyEvaluableError(spec.id + " has no exact evaluator");
      ExactContext forward(assignment, false);
      ExactContext backward(assignment, true);
      const BigRational f = spec.sides.exact_lhs(forward);
      const BigRational b = spec.sides.exact_lhs(backward);
      r.lhs = f;
      r.rhs = b;
      r.abs_err = abs(f - b).to_double();
      r.rel_err = r.abs_err;
      r.status = f == b ? Status::kPass : Status::kFail;
    } catch (const NotExactlyEvaluableError& e) {
      skip(r, Status::kSkippedNotExactCapable, e.what());
    } catch (const Error& e) {
      skip(r, Status::kSkippedSingular, std::string(e.name()) + ": " + e.what());
    }
    return r;
  }
  try {
    if (!spec.sides.numeric_lhs) throw DomainError(spec.id + " has no numeric evaluator");
    NumericContext forward(assignment, convention_of(mode), false);
    NumericContext backward(assignment, convention_of(mode), true);
    const Complex f = spec.sides.numeric_lhs(forward);
    const Complex b = spec.sides.numeric_lhs(backward);
    if (!finite(f) || !finite(b)) throw OverflowError("non-finite side value");
    measure(r, f, b, forward.magnitude(), kReversalTolerance);
  } catch (const Error& e) {
    skip(r, Status::kSkippedSingular, std::string(e.name()) + ": " + e.what());
  }
  return r;
}

std::optional<double> alternative_form_disagreement(const IdentitySpec& spec,
                                                    const Assignment& assignment) {
  const auto& d = spec.derivative;
  if (!d.derivative || !d.alternative) return std::nullopt;
  const Complex x = assignment.complex(d.variable);
  const Complex first = d.derivative(assignment, x);
  const Complex second = d.alternative(assignment, x);
  const double diff = std::abs(first - second);
  if (diff == 0.0) return 0.0;
  const double scale =
      d.term_scale ? d.term_scale(assignment, x) : std::max(std::abs(first), std::abs(second));
  return scale > 0.0 ? diff / scale : kInf;
}

void override_domain(IdentitySpec& spec, const std::string& symbol, const SymbolDomain& domain) {
  if (!spec.declares(symbol)) {
    throw DomainError(spec.id + " has no symbol '" + symbol + "'");
  }
  const auto replace = [&](Domain& d) {
    for (auto& entry : d) {
      if (entry.symbol == symbol) {
        entry.domain = domain;
        return;
      }
    }
    d.push_back({symbol, domain});
  };
  replace(spec.numeric_domain);
  const bool exact_compatible = std::holds_alternative<IntRange>(domain) ||
                                std::holds_alternative<RationalGrid>(domain) ||
                                std::holds_alternative<ValueSet>(domain);
  if (exact_compatible && !spec.exact_domain.empty()) replace(spec.exact_domain);
}

}  // namespace combid
