#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "report.hpp"
#include "weave/document.hpp"

namespace weave::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect_code = 0) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run_cli(args);
  EXPECT_EQ(r.code, expect_code) << r.err;
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, ValidateEx2) {
  const auto r = run_cli({"validate", "ex2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("textile ex2 valid; p,q fibrations, not coverings"), std::string::npos) << r.out;
}

TEST(Cli, ValidateEmptyFile) {
  const auto r = run_cli({"validate", temp_file("weave_empty.txt", "")});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, TowerGoldenMeanWithOracle) {
  const auto j = run_json({"tower", "golden-mean", "--side", "A", "--levels", "4", "--oracle"});
  EXPECT_EQ(j["result"]["k_sequence"], json({2, 3, 5, 8}));
  EXPECT_EQ(j["result"]["oracle_agrees"], true);
  EXPECT_EQ(matrix_from_json(j["result"]["levels"][1]["matrix"]), (IntMatrix{{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

TEST(Cli, InvariantsFullShift) {
  const auto j = run_json({"invariants", "full-shift-2", "--side", "A", "--level", "3"});
  EXPECT_EQ(j["result"]["tag"], "cuntz(8)");
  EXPECT_EQ(group_from_json(j["result"]["k0"]).to_string(), "Z/7");
  EXPECT_TRUE(group_from_json(j["result"]["k1"]).trivial());
  EXPECT_EQ(j["result"]["group"]["free_rank"], 0);
}

TEST(Cli, JsonReportRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"tower", "golden-mean", "--levels", "3"},
           {"blocks", "golden-mean", "2", "2"},
           {"check-lifting", "ex2"},
           {"entropy", "full-shift-2", "--max-n", "3"},
           {"rank2-check", "ledrappier"}}) {
    const auto j = run_json(args);
    const auto rep = Report::from_json(j);
    EXPECT_TRUE(same_payload(rep, Report::from_json(rep.to_json())));
    EXPECT_EQ(rep.to_json(), j);
  }
}

TEST(Cli, BigCountsAreExact) {
  const auto j = run_json({"blocks", "full-shift-2", "8", "8", "--count-only"});
  EXPECT_EQ(bigint_from_json(j["result"]["count"]), BigInt(1) << 64);
}

TEST(Cli, LiftingAndCounting) {
  const auto lift = run_json({"check-lifting", "nonlifting"});
  EXPECT_EQ(lift["result"]["p"]["s_lift_exists"], false);
  const auto count = run_json({"count-lifts", "ex2", "--morphism", "p", "--path", "e,f,e"});
  EXPECT_EQ(count["result"]["total"], 4);
}

TEST(Cli, DualEmitsParseableText) {
  const auto r = run_cli({"dual", "ex2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NO_THROW(parse_document(r.out));
}

TEST(Cli, ExampleEmit) {
  const auto r = run_cli({"example", "golden-mean", "--emit"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, std::string(*example_text("golden-mean")));
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"tower", "golden-mean"}).code, 2);
  EXPECT_EQ(run_cli({"validate", "/no/such/file.txt"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "validate", "ex1"}).code, 2);
  const auto bad = run_cli({"validate", temp_file("weave_bad.txt", "graph G\nvertex u\nedge a u v\n")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
}

TEST(Cli, DomainFailuresExitOne) {
  const auto text =
      "graph G\nvertex u\nedge a u u\nedge b u u\ngraph H\nvertex w\nedge x w w\n"
      "morphism p : G -> H\nvmap u w\nemap a x\nemap b x\ntextile t : G H p p\n";
  const auto r = run_cli({"validate", temp_file("weave_indeterminate.txt", text)});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run_cli({"--budget", "10", "blocks", "full-shift-2", "4", "4"}).code, 1);
}

}  // namespace
}  // namespace weave::cli
