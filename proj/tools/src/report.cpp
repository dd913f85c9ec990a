#include "combid/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace combid::cli {
namespace {

using Json = nlohmann::ordered_json;

double parse_real(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw std::invalid_argument("malformed real '" + text + "'");
  }
  return v;
}

Complex parse_complex_or_throw(const std::string& text) {
  const auto z = parse_complex(text);
  if (!z) throw std::invalid_argument("malformed complex '" + text + "'");
  return *z;
}

BigRational parse_rational_or_throw(const std::string& text) {
  try {
    return BigRational::parse(text);
  } catch (const Error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

Json real_to_json(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_real(j.get<std::string>());
  throw std::invalid_argument("expected a real number");
}

SideValue side_from_text(const std::string& text) {
  if (text.empty()) return std::monostate{};
  if (text.find('i') != std::string::npos) return parse_complex_or_throw(text);
  return parse_rational_or_throw(text);
}

Mode mode_from_text(const std::string& text) {
  const auto m = parse_mode(text);
  if (!m) throw std::invalid_argument("unknown mode '" + text + "'");
  return *m;
}

Status status_from_text(const std::string& text) {
  const auto s = parse_status(text);
  if (!s) throw std::invalid_argument("unknown status '" + text + "'");
  return *s;
}

std::uint64_t index_from_text(const std::string& text) {
  std::size_t used = 0;
  const auto v = std::stoull(text, &used);
  if (used != text.size()) throw std::invalid_argument("malformed sample index");
  return v;
}

// CSV assignments are "name=value;..."; rationals keep an explicit
// denominator so they stay distinct from integers.
std::string csv_param(const ParamValue& value) {
  if (const auto* r = std::get_if<BigRational>(&value)) {
    return r->numerator_string() + "/" + r->denominator_string();
  }
  return format_param(value);
}

ParamValue csv_param_from_text(const std::string& text) {
  if (text.find('i') != std::string::npos) return parse_complex_or_throw(text);
  if (text.find('/') != std::string::npos) return parse_rational_or_throw(text);
  std::size_t used = 0;
  const auto v = std::stoll(text, &used);
  if (used != text.size()) throw std::invalid_argument("malformed integer '" + text + "'");
  return static_cast<std::int64_t>(v);
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv(std::string_view row) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const char c = row[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < row.size() && row[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted field");
  return fields;
}

constexpr const char* kColumns[] = {"identity_id", "mode",    "sample_index", "assignment",
                                    "lhs",         "rhs",     "abs_err",      "rel_err",
                                    "condition",   "status",  "note"};

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "jsonl" || text == "json-lines" || text == "json") return ReportFormat::kJsonLines;
  if (text == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_side(const SideValue& value) {
  if (const auto* z = std::get_if<Complex>(&value)) return format_complex(*z);
  if (const auto* r = std::get_if<BigRational>(&value)) return r->to_string();
  return {};
}

std::string record_to_json(const EvalRecord& r) {
  Json assignment = Json::object();
  for (const auto& [name, value] : r.assignment.entries()) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) {
      assignment[name] = *i;
    } else {
      assignment[name] = format_param(value);
    }
  }
  const auto side = [](const SideValue& v) -> Json {
    if (std::holds_alternative<std::monostate>(v)) return nullptr;
    return format_side(v);
  };
  Json j;
  j["identity_id"] = r.identity_id;
  j["mode"] = std::string(to_string(r.mode));
  j["sample_index"] = r.sample_index;
  j["assignment"] = std::move(assignment);
  j["lhs"] = side(r.lhs);
  j["rhs"] = side(r.rhs);
  j["abs_err"] = real_to_json(r.abs_err);
  j["rel_err"] = real_to_json(r.rel_err);
  j["condition"] = real_to_json(r.condition);
  j["status"] = std::string(to_string(r.status));
  j["note"] = r.note;
  return j.dump();
}

EvalRecord record_from_json(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(e.what());
  }
  try {
    EvalRecord r;
    r.identity_id = j.at("identity_id").get<std::string>();
    r.mode = mode_from_text(j.at("mode").get<std::string>());
    r.sample_index = j.at("sample_index").get<std::uint64_t>();
    for (const auto& [name, value] : j.at("assignment").items()) {
      if (value.is_number_integer()) {
        r.assignment.set(name, value.get<std::int64_t>());
        continue;
      }
      const auto text = value.get<std::string>();
      if (text.find('i') != std::string::npos) {
        r.assignment.set(name, parse_complex_or_throw(text));
      } else {
        r.assignment.set(name, parse_rational_or_throw(text));
      }
    }
    const auto side = [](const Json& v) -> SideValue {
      if (v.is_null()) return std::monostate{};
      return side_from_text(v.get<std::string>());
    };
    r.lhs = side(j.at("lhs"));
    r.rhs = side(j.at("rhs"));
    r.abs_err = real_from_json(j.at("abs_err"));
    r.rel_err = real_from_json(j.at("rel_err"));
    r.condition = real_from_json(j.at("condition"));
    r.status = status_from_text(j.at("status").get<std::string>());
    r.note = j.at("note").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

std::string csv_header() {
  std::string out;
  for (const char* c : kColumns) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string record_to_csv(const EvalRecord& r) {
  std::string assignment;
  for (const auto& [name, value] : r.assignment.entries()) {
    if (!assignment.empty()) assignment += ';';
    assignment += name + "=" + csv_param(value);
  }
  const std::string fields[] = {r.identity_id,
                                std::string(to_string(r.mode)),
                                std::to_string(r.sample_index),
                                assignment,
                                format_side(r.lhs),
                                format_side(r.rhs),
                                format_real(r.abs_err),
                                format_real(r.rel_err),
                                format_real(r.condition),
                                std::string(to_string(r.status)),
                                r.note};
  std::string out;
  for (const auto& f : fields) {
    if (&f != fields) out += ',';
    out += quote(f);
  }
  return out;
}

EvalRecord record_from_csv(std::string_view row) {
  const auto f = split_csv(row);
  if (f.size() != std::size(kColumns)) throw std::invalid_argument("wrong number of CSV fields");
  EvalRecord r;
  r.identity_id = f[0];
  r.mode = mode_from_text(f[1]);
  r.sample_index = index_from_text(f[2]);
  std::size_t start = 0;
  while (start < f[3].size()) {
    auto end = f[3].find(';', start);
    if (end == std::string::npos) end = f[3].size();
    const std::string item = f[3].substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed assignment '" + item + "'");
    r.assignment.set(item.substr(0, eq), csv_param_from_text(item.substr(eq + 1)));
    start = end + 1;
  }
  r.lhs = side_from_text(f[4]);
  r.rhs = side_from_text(f[5]);
  r.abs_err = parse_real(f[6]);
  r.rel_err = parse_real(f[7]);
  r.condition = parse_real(f[8]);
  r.status = status_from_text(f[9]);
  r.note = f[10];
  return r;
}

std::vector<EvalRecord> read_report(std::istream& in, ReportFormat format) {
  std::vector<EvalRecord> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (format == ReportFormat::kCsv && first) {
      first = false;
      if (line == csv_header()) continue;
    }
    first = false;
    if (line.empty()) continue;
    out.push_back(format == ReportFormat::kCsv ? record_from_csv(line) : record_from_json(line));
  }
  return out;
}

}  // namespace combid::cli
