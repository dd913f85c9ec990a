#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace combid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// `SYM=min:max` or `SYM=re0:re1,im0:im1`.
struct DomainOverride {
  std::string symbol;
  double lo = 0.0;
  double hi = 0.0;
  std::optional<std::pair<double, double>> imag;
};

std::optional<DomainOverride> parse_domain_override(std::string_view text);

/// Runs the command line `argv[1..argc)` and returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace combid::cli
