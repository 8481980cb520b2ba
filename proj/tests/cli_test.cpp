#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tribo/cli.hpp"
#include "tribo/error.hpp"
#include "tribo/genfunc.hpp"
#include "tribo/oct_sequence.hpp"

namespace tribo::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

TEST(ParseRangeTest, Forms) {
  EXPECT_EQ(parse_range("7"), std::make_pair(std::size_t{7}, std::size_t{7}));
  EXPECT_EQ(parse_range("0..9"), std::make_pair(std::size_t{0}, std::size_t{9}));
  EXPECT_THROW(parse_range("5..2"), ParseError);
  EXPECT_THROW(parse_range("a..b"), ParseError);
  EXPECT_THROW(parse_range("-1"), ParseError);
  EXPECT_THROW(parse_range("1..."), ParseError);
  EXPECT_THROW(parse_range(""), ParseError);
}

TEST(ParseConfigTest, IntegersAndComments) {
  std::istringstream in("# tribonacci\nr = 1\ns=1\n  t = 1  # trailing\n\nv0 = 0\nv1 = 1\nv2 = 1\n");
  EXPECT_EQ(parse_config(in), preset_lookup(Preset::tribonacci));
}

TEST(ParseConfigTest, RationalPromotesAll) {
  std::istringstream in("r = 1/2\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 1\n");
  const auto p = parse_config(in);
  EXPECT_EQ(p.kind(), ScalarKind::exact_rational);
  EXPECT_EQ(p.r(), Scalar::rational(1, 2));
  EXPECT_EQ(p.s(), Scalar::rational(1, 1));
}

TEST(ParseConfigTest, Errors) {
  for (const char* bad : {"r = 1\ns = 1\nt = 1\nv0 = 0\nv1 = 1\n",                  // missing v2
                          "r = 1\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 0.5\n",        // float
                          "r = 1\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 1\nq = 3\n",   // unknown key
                          "r = 1\nr = 2\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 1\n",   // duplicate
                          "r 1\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 1\n",            // no '='
                          "r = 1/0\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 1\n"}) {     // zero denominator
    std::istringstream in(bad);
    EXPECT_THROW(parse_config(in), ParseError) << bad;
  }
}

TEST(CliSeqTest, TribonacciCsv) {
  const auto r = run({"seq", "--preset", "tribonacci", "--n", "0..7", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines.front(), "n,value");
  EXPECT_EQ(lines.back(), "7,24");
}

TEST(CliSeqTest, ValuesMatchLibraryStrings) {
  const auto p = preset_lookup(Preset::third_order_jacobsthal);
  const auto terms = sequence_terms(p, 31);
  const auto r = run({"seq", "--preset", "third-order-jacobsthal", "--n", "0..30", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 32u);
  for (std::size_t n = 0; n <= 30; ++n) {
    EXPECT_EQ(lines[n + 1], std::to_string(n) + "," + terms[n].to_string());
  }
}

TEST(CliSeqTest, CompanionAndJsonl) {
  const auto u = run({"seq", "--preset", "tribonacci", "--companion", "--n", "4", "--format", "jsonl"});
  ASSERT_EQ(u.code, 0);
  const auto j = nlohmann::json::parse(lines_of(u.out).at(0));
  EXPECT_EQ(j.at("n").get<int>(), 4);
  EXPECT_EQ(j.at("value").get<std::string>(), u_term(preset_lookup(Preset::tribonacci), 4).to_string());
}

TEST(CliOctTest, JacobsthalRow) {
  const auto r = run({"oct", "--preset", "third-order-jacobsthal", "--n", "0", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "n,e0,e1,e2,e3,e4,e5,e6,e7");
  EXPECT_EQ(lines[1], "0,0,1,1,2,5,9,18,37");
}

TEST(CliOctTest, JsonlMatchesLibrary) {
  const OctSequenceContext ctx(preset_lookup(Preset::narayana), 20);
  const auto r = run({"oct", "--preset", "narayana", "--n", "3..12", "--format", "jsonl"});
  ASSERT_EQ(r.code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 10u);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto j = nlohmann::json::parse(lines[i]);
    EXPECT_EQ(j.at("n").get<std::size_t>(), i + 3);
    EXPECT_EQ((j.at("components").get<std::array<std::string, 8>>()), oct_term(ctx, i + 3).to_strings());
  }
}

TEST(CliOctTest, ExplicitParamsAndConfigFile) {
  const auto flags = run({"oct", "--r", "1", "--s", "1", "--t", "1", "--v0", "0", "--v1", "1", "--v2", "1",
                          "--n", "0..3", "--format", "csv"});
  const auto preset = run({"oct", "--preset", "tribonacci", "--n", "0..3", "--format", "csv"});
  const auto path = temp_file("tribo_cli_test.cfg", "r = 1\ns = 1\nt = 1\nv0 = 0\nv1 = 1\nv2 = 1\n");
  const auto config = run({"oct", "--config", path.string(), "--n", "0..3", "--format", "csv"});
  std::filesystem::remove(path);
  ASSERT_EQ(flags.code, 0) << flags.err;
  ASSERT_EQ(config.code, 0) << config.err;
  EXPECT_EQ(flags.out, preset.out);
  EXPECT_EQ(config.out, preset.out);
}

TEST(CliOutputTest, OutFlagWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "tribo_cli_out.csv";
  const auto r = run({"seq", "--preset", "tribonacci", "--n", "0..7", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  std::filesystem::remove(path);
  EXPECT_EQ(contents.str(), run({"seq", "--preset", "tribonacci", "--n", "0..7", "--format", "csv"}).out);
}

TEST(CliRootsTest, Lines) {
  const auto r = run({"roots", "--preset", "tribonacci"});
  ASSERT_EQ(r.code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 7u);
  EXPECT_EQ(lines[0], "alpha = " + format_double(cubic_roots(preset_lookup(Preset::tribonacci)).alpha));
  EXPECT_EQ(lines[0].rfind("alpha = 1.83928675521416", 0), 0u);
  EXPECT_EQ(lines[1].rfind("omega1 = ", 0), 0u);
  EXPECT_EQ(lines[3].rfind("delta = ", 0), 0u);
}

TEST(CliGenfuncTest, Lines) {
  const auto r = run({"genfunc", "--preset", "tribonacci"});
  ASSERT_EQ(r.code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], "e0: x");
  EXPECT_EQ(lines[7], "e7: 24 + 20x + 13x^2");
  EXPECT_EQ(lines[8], "denominator: 1 - 1 x - 1 x^2 - 1 x^3");
}

TEST(CliSumTest, OctonionAndScalar) {
  const auto oct = run({"sum", "--preset", "tribonacci", "--n", "2", "--format", "csv"});
  ASSERT_EQ(oct.code, 0) << oct.err;
  EXPECT_EQ(lines_of(oct.out).at(1), "2,2/1,4/1,7/1,13/1,24/1,44/1,81/1,149/1");
  const auto scalar = run({"sum", "--preset", "tribonacci", "--n", "5", "--scalar", "--format", "csv"});
  ASSERT_EQ(scalar.code, 0);
  EXPECT_EQ(lines_of(scalar.out).at(1), "5,15/1");
  EXPECT_EQ(run({"sum", "--preset", "tribonacci", "--r", "1", "--s", "1", "--t", "-1", "--v0", "0", "--v1", "1",
                 "--v2", "1", "--n", "2"})
                .code,
            1);
}

TEST(CliVerifyTest, JsonExitsZero) {
  const auto r = run({"verify", "--preset", "all", "--n-max", "40", "--report", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& [name, c] : j.at("categories").items()) EXPECT_EQ(c.at("failed").get<int>(), 0) << name;
  EXPECT_EQ(run({"verify", "--preset", "all", "--n-max", "40", "--report", "json"}).out, r.out);
}

TEST(CliVerifyTest, TextReportAndBadNMax) {
  const auto r = run({"verify", "--preset", "padovan", "--n-max", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p6-quad"), std::string::npos);
  EXPECT_EQ(run({"verify", "--preset", "all", "--n-max", "2"}).code, 1);
}

TEST(CliErrorTest, ExitCodeOne) {
  const auto unknown = run({"seq", "--preset", "fibonacci"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("unknown preset"), std::string::npos);

  const auto range = run({"seq", "--preset", "tribonacci", "--n", "9..3"});
  EXPECT_EQ(range.code, 1);
  EXPECT_NE(range.err.find("malformed range"), std::string::npos);

  const auto path = temp_file("tribo_cli_bad.cfg", "r = 1\ns = 0.5\n");
  const auto config = run({"seq", "--config", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(config.code, 1);
  EXPECT_NE(config.err.find("malformed config"), std::string::npos);

  EXPECT_EQ(run({"seq", "--config", "/nonexistent/tribo.cfg"}).code, 1);

  const auto roots = run({"roots", "--r", "0", "--s", "3", "--t", "0", "--v0", "0", "--v1", "1", "--v2", "1"});
  EXPECT_EQ(roots.code, 1);
  EXPECT_NE(roots.err.find("out of regime"), std::string::npos);

  EXPECT_EQ(run({"seq", "--preset", "tribonacci", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"seq", "--r", "1"}).code, 1);
}

}  // namespace
}  // namespace tribo::cli
