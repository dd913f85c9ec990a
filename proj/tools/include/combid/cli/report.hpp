#pragma once

// Record serialization for sweep reports. JSON lines carry one record per
// line; CSV flattens the same fields. Both round-trip at 17 significant
// digits.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combid/identity.hpp"

namespace combid::cli {

enum class ReportFormat { kJsonLines, kCsv };

std::optional<ReportFormat> parse_report_format(std::string_view text);

std::string record_to_json(const EvalRecord& record);
/// Throws std::invalid_argument on a malformed line.
EvalRecord record_from_json(std::string_view line);

std::string csv_header();
std::string record_to_csv(const EvalRecord& record);
/// Throws std::invalid_argument on a malformed row.
EvalRecord record_from_csv(std::string_view row);

/// Reads every record of a report in either format (the CSV header line is
/// skipped).
std::vector<EvalRecord> read_report(std::istream& in, ReportFormat format);

std::string format_real(double value);
std::string format_side(const SideValue& value);

}  // namespace combid::cli
