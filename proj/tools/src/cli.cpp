#include "combid/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "combid/cli/report.hpp"
#include "combid/specfun.hpp"
#include "combid/telescope.hpp"
#include "combid/verify.hpp"

namespace combid::cli {
namespace {

struct VerifyArgs {
  std::vector<std::string> ids;
  bool all = false;
  std::string mode = "numeric";
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  std::string report;
  std::string format = "jsonl";
  std::optional<std::int64_t> n_max;
  std::vector<std::string> domains;
};

struct EvalArgs {
  std::string function;
  std::vector<std::string> args;
  std::string x;
  std::string y;
  std::vector<std::string> z;
  std::vector<std::string> w;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_double(std::string_view text) {
  const std::string s(text);
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::pair<double, double>> parse_interval(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto lo = parse_double(text.substr(0, colon));
  const auto hi = parse_double(text.substr(colon + 1));
  if (!lo || !hi || *hi < *lo) return std::nullopt;
  return std::pair{*lo, *hi};
}

Complex complex_arg(const std::string& text) {
  const auto z = parse_complex(text);
  if (!z) throw UsageError("malformed complex argument '" + text + "' (expected re,im)");
  return *z;
}

std::int64_t integer_arg(const std::string& text) {
  const auto v = parse_double(text);
  if (!v || *v != std::floor(*v) || std::abs(*v) > 9.0e15) {
    throw UsageError("malformed integer argument '" + text + "'");
  }
  return static_cast<std::int64_t>(*v);
}

std::string format_value(Complex z) {
  return z.imag() == 0.0 ? format_real(z.real()) : format_complex(z);
}

std::vector<const IdentitySpec*> select_specs(const VerifyArgs& a) {
  std::vector<const IdentitySpec*> out;
  if (a.all) {
    for (const auto& s : registry()) out.push_back(&s);
    return out;
  }
  for (const auto& id : a.ids) {
    const auto* s = find_identity(id);
    if (!s) throw UsageError("unknown identity id '" + id + "'");
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  if (out.empty()) throw UsageError("select identities with --id or --all");
  return out;
}

std::vector<Mode> modes_for(const IdentitySpec& spec, const std::string& mode) {
  if (mode == "all") {
    std::vector<Mode> out;
    for (const Mode m : spec.modes) {
      if (m != Mode::kPrincipal) out.push_back(m);
    }
    return out;
  }
  return {*parse_mode(mode)};
}

SymbolDomain override_for(const Symbol& symbol, const DomainOverride& o) {
  switch (symbol.kind) {
    case SymbolKind::kInteger:
    case SymbolKind::kNonnegInteger:
      if (o.imag || o.lo != std::floor(o.lo) || o.hi != std::floor(o.hi)) {
        throw UsageError("integer symbol '" + o.symbol + "' needs an integer range");
      }
      if (symbol.kind == SymbolKind::kNonnegInteger && o.lo < 0) {
        throw UsageError("symbol '" + o.symbol + "' is nonnegative");
      }
      return IntRange{static_cast<std::int64_t>(o.lo), static_cast<std::int64_t>(o.hi), ""};
    case SymbolKind::kReal:
      if (o.imag) throw UsageError("real symbol '" + o.symbol + "' takes min:max");
      return RealRange{o.lo, o.hi};
    case SymbolKind::kComplex:
      break;
  }
  const auto im = o.imag.value_or(std::pair{0.0, 0.0});
  return ComplexRect{o.lo, o.hi, im.first, im.second};
}

IdentitySpec with_overrides(const IdentitySpec& spec, const std::vector<DomainOverride>& overrides) {
  IdentitySpec copy = spec;
  for (const auto& o : overrides) {
    if (const auto* symbol = spec.symbol(o.symbol)) {
      override_domain(copy, o.symbol, override_for(*symbol, o));
    }
  }
  return copy;
}

void print_summary_header(std::ostream& out) {
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %-9s %8s %8s %6s %6s %6s %6s %6s %10s\n", "identity",
                "mode", "requested", "passed", "failed", "sing", "ill", "nexact", "unasrt",
                "max_rel");
  out << line;
}

void print_summary_row(std::ostream& out, const SweepReport& r) {
  char line[256];
  std::snprintf(line, sizeof line,
                "%-24s %-9s %8llu %8llu %6llu %6llu %6llu %6llu %6llu %10.3e\n",
                r.identity_id.c_str(), std::string(to_string(r.mode)).c_str(),
                static_cast<unsigned long long>(r.requested),
                static_cast<unsigned long long>(r.passed),
                static_cast<unsigned long long>(r.failed),
                static_cast<unsigned long long>(r.skipped_singular),
                static_cast<unsigned long long>(r.skipped_ill_conditioned),
                static_cast<unsigned long long>(r.skipped_not_exact_capable),
                static_cast<unsigned long long>(r.unasserted), r.max_rel_err);
  out << line;
}

int cmd_list(std::ostream& out) {
  char line[512];
  std::snprintf(line, sizeof line, "%-24s %-46s %-10s %s\n", "id", "label", "symbols", "modes");
  out << line;
  for (const auto& s : registry()) {
    std::string symbols;
    for (const auto& sym : s.symbols) symbols += (symbols.empty() ? "" : ",") + sym.name;
    std::string modes;
    for (const Mode m : s.modes) modes += (modes.empty() ? "" : ",") + std::string(to_string(m));
    std::snprintf(line, sizeof line, "%-24s %-46s %-10s %s\n", s.id.c_str(), s.label.c_str(),
                  symbols.c_str(), modes.c_str());
    out << line;
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.samples <= 0) throw UsageError("--samples must be positive");
  if (a.tolerance && !(*a.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  if (a.mode != "all" && !parse_mode(a.mode)) throw UsageError("unknown mode '" + a.mode + "'");
  const auto format = parse_report_format(a.format);
  if (!format) throw UsageError("unknown report format '" + a.format + "'");
  if (a.n_max && *a.n_max < 0) throw UsageError("--n-max must be nonnegative");

  const auto specs = select_specs(a);

  std::vector<DomainOverride> overrides;
  for (const auto& text : a.domains) {
    const auto o = parse_domain_override(text);
    if (!o) throw UsageError("malformed --domain '" + text + "'");
    const bool used = std::any_of(specs.begin(), specs.end(),
                                  [&](const IdentitySpec* s) { return s->declares(o->symbol); });
    if (!used) throw UsageError("no selected identity has symbol '" + o->symbol + "'");
    overrides.push_back(*o);
  }

  std::ofstream report;
  if (!a.report.empty()) {
    report.open(a.report, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!report) throw UsageError("cannot write report '" + a.report + "'");
    if (*format == ReportFormat::kCsv) report << csv_header() << '\n';
  }

  bool any_failure = false;
  print_summary_header(out);
  for (const IdentitySpec* base : specs) {
    std::vector<IdentitySpec> storage;
    const IdentitySpec* spec = base;
    if (!overrides.empty()) {
      storage.push_back(with_overrides(*base, overrides));
      spec = &storage.back();
    }
    for (const Mode mode : modes_for(*spec, a.mode)) {
      if (!spec->supports(mode)) {
        char line[160];
        std::snprintf(line, sizeof line, "%-24s %-9s skipped: mode not supported\n",
                      spec->id.c_str(), std::string(to_string(mode)).c_str());
        out << line;
        continue;
      }
      SweepOptions options;
      options.samples = static_cast<std::uint64_t>(a.samples);
      options.seed = a.seed;
      options.mode = mode;
      options.tolerance = a.tolerance.value_or(
          mode == Mode::kFiniteDifference ? kFiniteDifferenceTolerance : kDefaultTolerance);
      options.n_max = a.n_max;
      const SweepReport r = sweep(*spec, options);
      print_summary_row(out, r);
      any_failure = any_failure || r.failed > 0;
      if (report.is_open()) {
        for (const auto& rec : r.records) {
          report << (*format == ReportFormat::kCsv ? record_to_csv(rec) : record_to_json(rec))
                 << '\n';
        }
      }
    }
  }
  if (report.is_open()) {
    report.flush();
    if (!report) throw UsageError("failed writing report '" + a.report + "'");
  }
  return any_failure ? kExitFailure : kExitOk;
}

void expect_arity(const EvalArgs& a, std::size_t n, const char* usage) {
  if (a.args.size() != n) throw UsageError(std::string("usage: eval ") + usage);
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const auto& f = a.function;
  const auto& v = a.args;
  if (f == "gamma") {
    expect_arity(a, 1, "gamma Z");
    out << format_value(gamma(complex_arg(v[0]))) << '\n';
  } else if (f == "binomial") {
    expect_arity(a, 2, "binomial X Y");
    out << format_value(binomial(complex_arg(v[0]), complex_arg(v[1]))) << '\n';
  } else if (f == "harmonic") {
    expect_arity(a, 1, "harmonic N");
    const auto n = integer_arg(v[0]);
    if (n < 0) throw UsageError("harmonic needs N >= 0");
    out << format_real(harmonic(static_cast<std::uint64_t>(n))) << '\n';
  } else if (f == "genharmonic") {
    expect_arity(a, 3, "genharmonic C N M");
    const auto n = integer_arg(v[1]);
    if (n < 0) throw UsageError("genharmonic needs N >= 0");
    out << format_value(gen_harmonic(complex_arg(v[0]), static_cast<std::uint64_t>(n),
                                     complex_arg(v[2])))
        << '\n';
  } else if (f == "fallingproduct") {
    expect_arity(a, 3, "fallingproduct S A B");
    out << format_value(falling_product(complex_arg(v[0]), integer_arg(v[1]), integer_arg(v[2])))
        << '\n';
  } else if (f == "powerdiff") {
    expect_arity(a, 3, "powerdiff X Y N");
    const auto n = integer_arg(v[2]);
    if (n < 0) throw UsageError("powerdiff needs N >= 0");
    const auto check = check_product_difference(
        power_difference_system(complex_arg(v[0]), complex_arg(v[1]), static_cast<std::uint64_t>(n)));
    out << "lhs " << format_value(check.lhs) << "\nrhs " << format_value(check.rhs) << "\nreldiff "
        << format_real(check.rel_err) << '\n';
  } else if (f == "proddiff") {
    if (!v.empty() || a.x.empty() || a.y.empty()) {
      throw UsageError("usage: eval proddiff --x X --y Y --z Z... --w W...");
    }
    if (a.z.size() != a.w.size()) throw UsageError("--z and --w need the same number of values");
    FactorSystem system;
    system.x = complex_arg(a.x);
    system.y = complex_arg(a.y);
    for (const auto& z : a.z) system.z.push_back(complex_arg(z));
    for (const auto& w : a.w) system.w.push_back(complex_arg(w));
    const auto check = check_product_difference(system);
    out << "lhs " << format_value(check.lhs) << "\nrhs " << format_value(check.rhs) << "\nreldiff "
        << format_real(check.rel_err) << '\n';
  } else {
    throw UsageError("unknown function '" + f + "'");
  }
  return kExitOk;
}

}  // namespace

std::optional<DomainOverride> parse_domain_override(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) return std::nullopt;
  DomainOverride o;
  o.symbol = std::string(text.substr(0, eq));
  const auto body = text.substr(eq + 1);
  const auto comma = body.find(',');
  const auto re = parse_interval(body.substr(0, comma));
  if (!re) return std::nullopt;
  o.lo = re->first;
  o.hi = re->second;
  if (comma != std::string_view::npos) {
    const auto im = parse_interval(body.substr(comma + 1));
    if (!im) return std::nullopt;
    o.imag = *im;
  }
  return o;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification toolkit for complex binomial and harmonic number identities", "combid"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the registered identities");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run seeded verification sweeps");
  verify->add_option("--id", va.ids, "Identity id (repeatable)");
  verify->add_flag("--all", va.all, "Select every identity");
  verify->add_option("--mode", va.mode, "numeric | principal | exact | fd | all")
      ->capture_default_str();
  verify->add_option("--samples", va.samples, "Samples per identity")->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed of the sampler")
      ->envname("COMBID_SEED")
      ->capture_default_str();
  verify->add_option("--tolerance", va.tolerance,
                     "Relative tolerance (default 1e-8, 1e-5 for fd)");
  verify->add_option("--report", va.report, "Write one record per sample to this file");
  verify->add_option("--format", va.format, "jsonl | csv")->capture_default_str();
  verify->add_option("--n-max", va.n_max, "Enumeration bound of fixed-instance identities");
  verify->add_option("--domain", va.domains, "SYM=min:max or SYM=re0:re1,im0:im1");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate one special function");
  eval->add_option("function", ea.function,
                   "gamma | binomial | harmonic | genharmonic | fallingproduct | powerdiff | "
                   "proddiff")
      ->required();
  eval->add_option("args", ea.args, "Arguments; complex values as re,im");
  eval->add_option("--x", ea.x, "proddiff: x");
  eval->add_option("--y", ea.y, "proddiff: y");
  eval->add_option("--z", ea.z, "proddiff: z_1 ... z_n");
  eval->add_option("--w", ea.w, "proddiff: w_1 ... w_n");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(out);
    if (verify->parsed()) return cmd_verify(va, out);
    if (eval->parsed()) return cmd_eval(ea, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace combid::cli
