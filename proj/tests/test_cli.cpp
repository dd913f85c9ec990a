#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "combid/cli/cli.hpp"
#include "combid/cli/report.hpp"
#include "combid/verify.hpp"

namespace combid::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "combid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("combid_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(List, OneRowPerIdentity) {
  const auto r = run_cli({"list"});
  EXPECT_EQ(r.code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), registry().size() + 1);
  bool saw_eq08 = false;
  bool saw_fd = false;
  for (const auto& line : lines) {
    if (line.rfind("eq08_binomial1 ", 0) == 0) {
      saw_eq08 = true;
      EXPECT_NE(line.find("numeric"), std::string::npos);
      EXPECT_NE(line.find("exact"), std::string::npos);
    }
    if (line.rfind("fd_eq21 ", 0) == 0) {
      saw_fd = true;
      EXPECT_EQ(line.substr(line.size() - 3), " fd");
    }
  }
  EXPECT_TRUE(saw_eq08);
  EXPECT_TRUE(saw_fd);
}

TEST(Eval, Examples) {
  EXPECT_EQ(run_cli({"eval", "binomial", "4,0", "2,0"}).out, "6\n");
  EXPECT_EQ(run_cli({"eval", "genharmonic", "0,0", "3", "1,0"}).out, "1.8333333333333333\n");
  EXPECT_EQ(run_cli({"eval", "proddiff", "--x", "3,0", "--y", "2,0", "--z", "0,0", "0,0", "--w",
                     "1,0", "1,0"})
                .out,
            "lhs 5\nrhs 5\nreldiff 0\n");
  EXPECT_NEAR(std::stod(run_cli({"eval", "gamma", "6,0"}).out), 120.0, 120.0 * 1e-13);
  EXPECT_EQ(run_cli({"eval", "harmonic", "4"}).out, "2.0833333333333335\n");
  EXPECT_EQ(run_cli({"eval", "fallingproduct", "5,0", "0", "3"}).out, "60\n");
  EXPECT_EQ(run_cli({"eval", "powerdiff", "3,0", "2,0", "2"}).out, "lhs 5\nrhs 5\nreldiff 0\n");
  auto text = run_cli({"eval", "gamma", "1,2"}).out;
  text.pop_back();
  const auto g = parse_complex(text);
  ASSERT_TRUE(g.has_value()) << text;
  EXPECT_LE(std::abs(*g - Complex(0.151904002670036137, 0.019804880161854982)), 1e-13);
}

TEST(Eval, NegativeArgumentsAreValues) {
  const auto r = run_cli({"eval", "binomial", "-1.5,0", "2,0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1.875\n");
}

TEST(Eval, Errors) {
  auto r = run_cli({"eval", "gamma", "-2,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("PoleError"), std::string::npos);
  r = run_cli({"eval", "binomial", "-1,0", "0.5,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("IndeterminateError"), std::string::npos);
  EXPECT_EQ(run_cli({"eval", "gamma", "x,y"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "binomial", "1,0"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "harmonic", "2.5"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "nosuch", "1"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "proddiff", "--x", "1,0", "--y", "2,0", "--z", "0,0", "--w"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Verify, UsageErrors) {
  EXPECT_EQ(run_cli({"verify", "--id", "nosuch"}).code, 2);
  EXPECT_EQ(run_cli({"verify"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--id", "eq08", "--samples", "0"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--id", "eq08", "--samples", "-4"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--id", "eq08", "--mode", "sideways"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--id", "eq08", "--tolerance", "0"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--id", "eq08", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--id", "eq08", "--report", "/nonexistent-dir/r.jsonl"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--id", "eq08", "--domain", "q=0:1"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--id", "eq08", "--domain", "w=1:0"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--id", "eq08", "--domain", "a=0.5:3"}).code, 2);
}

TEST_F(TempDir, ExhaustiveExactSweep) {
  const auto report = path("eq12.jsonl");
  const auto r = run_cli({"verify", "--id", "eq12", "--mode", "exact", "--n-max", "60", "--report", report});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(report);
  const auto records = read_report(in, ReportFormat::kJsonLines);
  ASSERT_EQ(records.size(), 61u);
  for (const auto& rec : records) EXPECT_EQ(rec.status, Status::kPass);
  EXPECT_EQ(std::get<BigRational>(records[60].lhs),
            BigRational::parse("96614908840363322603893139521372656"));
}

TEST_F(TempDir, ReportsAreByteIdentical) {
  for (const char* format : {"jsonl", "csv"}) {
    const auto a = path("a");
    const auto b = path("b");
    const std::vector<std::string> common = {"verify", "--id", "eq25", "--id", "eq39", "--mode", "all",
                                             "--samples", "40", "--seed", "9", "--format", format};
    auto args = common;
    args.insert(args.end(), {"--report", a});
    ASSERT_EQ(run_cli(args).code, 0);
    args = common;
    args.insert(args.end(), {"--report", b});
    ASSERT_EQ(run_cli(args).code, 0);
    EXPECT_EQ(slurp(a), slurp(b)) << format;
    EXPECT_FALSE(slurp(a).empty());
  }
}

TEST_F(TempDir, RecordsRoundTrip) {
  for (const auto& [name, format] : {std::pair{"jsonl", ReportFormat::kJsonLines},
                                     std::pair{"csv", ReportFormat::kCsv}}) {
    const auto report = path(name);
    ASSERT_EQ(run_cli({"verify", "--id", "eq09", "--id", "eq41", "--id", "fd_dharmonic", "--mode", "all",
                       "--samples", "60", "--seed", "77", "--format", name, "--report", report})
                  .code,
              0);
    std::ifstream in(report);
    const auto parsed = read_report(in, format);

    std::vector<EvalRecord> direct;
    for (const char* id : {"eq09", "eq41", "fd_dharmonic"}) {
      const auto& s = *find_identity(id);
      for (const Mode m : s.modes) {
        if (m == Mode::kPrincipal) continue;
        SweepOptions opt;
        opt.samples = 60;
        opt.seed = 77;
        opt.mode = m;
        opt.tolerance = m == Mode::kFiniteDifference ? kFiniteDifferenceTolerance : kDefaultTolerance;
        auto r = sweep(s, opt);
        direct.insert(direct.end(), r.records.begin(), r.records.end());
      }
    }
    ASSERT_EQ(parsed.size(), direct.size()) << name;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      EXPECT_EQ(parsed[i], direct[i]) << name << " record " << i;
    }
  }
}

TEST(Report, SpecialValuesRoundTrip) {
  EvalRecord r;
  r.identity_id = "eq08_binomial1";
  r.mode = Mode::kExact;
  r.sample_index = 12;
  r.assignment.set("a", std::int64_t{-3});
  r.assignment.set("x", BigRational(7, 2));
  r.assignment.set("y", BigRational(4));
  r.assignment.set("z", Complex(0.1, -1e-300));
  r.lhs = BigRational(-5, 3);
  r.rhs = Complex(std::numeric_limits<double>::infinity(), 0.0);
  r.abs_err = std::numeric_limits<double>::infinity();
  r.rel_err = 1.0 / 3.0;
  r.condition = 1e6;
  r.status = Status::kSkippedNotExactCapable;
  r.note = "quote \" and, comma";
  EXPECT_EQ(record_from_json(record_to_json(r)), r);
  EXPECT_EQ(record_from_csv(record_to_csv(r)), r);
  EXPECT_THROW(record_from_json("{\"identity_id\": 3}"), std::invalid_argument);
  EXPECT_THROW(record_from_csv("a,b"), std::invalid_argument);
}

TEST_F(TempDir, FailureExitStatusMatchesRecords) {
  const auto report = path("tight.jsonl");
  const auto r = run_cli({"verify", "--id", "eq10", "--samples", "30", "--tolerance", "1e-300",
                          "--report", report});
  EXPECT_EQ(r.code, 1);
  std::ifstream in(report);
  const auto records = read_report(in, ReportFormat::kJsonLines);
  EXPECT_TRUE(std::any_of(records.begin(), records.end(),
                          [](const EvalRecord& e) { return e.status == Status::kFail; }));
}

TEST_F(TempDir, SeedFromEnvironment) {
  const auto a = path("env.jsonl");
  const auto b = path("flag.jsonl");
  ::setenv("COMBID_SEED", "31337", 1);
  const int code = run_cli({"verify", "--id", "eq24", "--samples", "20", "--report", a}).code;
  ::unsetenv("COMBID_SEED");
  ASSERT_EQ(code, 0);
  ASSERT_EQ(run_cli({"verify", "--id", "eq24", "--samples", "20", "--seed", "31337", "--report", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  ASSERT_EQ(run_cli({"verify", "--id", "eq24", "--samples", "20", "--report", b}).code, 0);
  EXPECT_NE(slurp(a), slurp(b));
}

TEST_F(TempDir, DomainOverrideApplies) {
  const auto report = path("override.jsonl");
  ASSERT_EQ(run_cli({"verify", "--id", "eq08", "--samples", "25", "--domain", "w=1:1.5,0:0", "--domain",
                     "b=4:4", "--domain", "a=0:2", "--report", report})
                .code,
            0);
  std::ifstream in(report);
  for (const auto& rec : read_report(in, ReportFormat::kJsonLines)) {
    const Complex w = rec.assignment.complex("w");
    EXPECT_GE(w.real(), 1.0);
    EXPECT_LE(w.real(), 1.5);
    EXPECT_EQ(w.imag(), 0.0);
    EXPECT_EQ(rec.assignment.integer("b"), 4);
    EXPECT_LE(rec.assignment.integer("a"), 2);
  }
}

TEST(Verify, UnsupportedModeIsReportedNotAnError) {
  const auto r = run_cli({"verify", "--id", "fd_eq21", "--mode", "exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("not supported"), std::string::npos);
}

TEST(Verify, ModeAllSkipsPrincipal) {
  const auto r = run_cli({"verify", "--id", "eq08", "--mode", "all", "--samples", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" numeric "), std::string::npos);
  EXPECT_NE(r.out.find(" exact "), std::string::npos);
  EXPECT_EQ(r.out.find(" principal "), std::string::npos);
}

TEST(DomainOverride, Parse) {
  const auto real = parse_domain_override("m=-1.5:2");
  ASSERT_TRUE(real);
  EXPECT_EQ(real->symbol, "m");
  EXPECT_EQ(real->lo, -1.5);
  EXPECT_EQ(real->hi, 2.0);
  EXPECT_FALSE(real->imag);
  const auto rect = parse_domain_override("x=-1:1,-2:0.5");
  ASSERT_TRUE(rect && rect->imag);
  EXPECT_EQ(rect->imag->first, -2.0);
  EXPECT_EQ(rect->imag->second, 0.5);
  EXPECT_FALSE(parse_domain_override("x"));
  EXPECT_FALSE(parse_domain_override("=0:1"));
  EXPECT_FALSE(parse_domain_override("x=0"));
  EXPECT_FALSE(parse_domain_override("x=2:1"));
  EXPECT_FALSE(parse_domain_override("x=0:1,1"));
}

}  // namespace
}  // namespace combid::cli
