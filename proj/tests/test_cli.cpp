#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jcomp/cli.hpp"

namespace {

const std::string kFixtures = JCOMP_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = jcomp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> worked_args(const std::string& cmd) {
  return {cmd, "--matrix", kFixtures + "/worked_matrix.csv", "--meta", kFixtures + "/worked_meta.csv", "--zero-tc",
          "exclude_as_basic"};
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("jcomp_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, AnalyzeWorkedFixture) {
  const auto r = run(worked_args("analyze"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("CIS,2.222"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("A,3.556"), std::string::npos);
  EXPECT_NE(r.out.find("C,\n"), std::string::npos);  // excluded as basic
  EXPECT_NE(r.out.find("zero_tc=exclude_as_basic"), std::string::npos);
}

TEST(Cli, AnalyzeIsByteIdentical) {
  EXPECT_EQ(run(worked_args("analyze")).out, run(worked_args("analyze")).out);
}

TEST(Cli, ValidateOk) {
  const auto r = run({"validate", "--matrix", kFixtures + "/pair_matrix.csv", "--meta", kFixtures + "/pair_meta.csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n=2\n"), std::string::npos);
  EXPECT_NE(r.out.find("tc_min=100\ntc_max=200\n"), std::string::npos);
  EXPECT_NE(r.out.find("warnings=0\n"), std::string::npos);
}

TEST(Cli, ValidateListsWarnings) {
  const auto r = run(worked_args("validate"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("warnings=1\nwarning excluded_basic"), std::string::npos) << r.out;
}

TEST(Cli, ValidateTitleMismatch) {
  const auto r =
      run({"validate", "--matrix", kFixtures + "/pair_matrix.csv", "--meta", kFixtures + "/pair_meta_mismatch.csv"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("'B'"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ValidateZeroTc) {
  const auto r =
      run({"validate", "--matrix", kFixtures + "/pair_matrix.csv", "--meta", kFixtures + "/pair_meta_zero_tc.csv"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("'A'"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  const auto r = run({"analyze", "--matrix", kFixtures + "/pair_matrix.csv", "--meta", kFixtures + "/pair_meta.csv",
                      "--bogus"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--matrix"), std::string::npos) << "help text expected: " << r.err;
  EXPECT_EQ(run({"analyze", "--matrix", kFixtures + "/pair_matrix.csv", "--meta", kFixtures + "/pair_meta.csv",
                 "--epsilon", "0.5"})
                .code,
            1);
  EXPECT_EQ(run({"analyze", "--matrix", kFixtures + "/pair_matrix.csv", "--meta", kFixtures + "/pair_meta.csv",
                 "--diagonal", "sometimes"})
                .code,
            1);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("export-net"), std::string::npos);
}

TEST(Cli, RankCsvAndMarkdown) {
  const auto csv = run(worked_args("rank"));
  EXPECT_EQ(csv.code, 0) << csv.err;
  EXPECT_NE(csv.out.find("title,ci,ci_rank,if,if_rank,tc,tc_rank\nA,3.556,1,1.500,2,100,2\n"), std::string::npos)
      << csv.out;
  auto args = worked_args("rank");
  args.insert(args.end(), {"--format", "md"});
  const auto md = run(args);
  EXPECT_EQ(md.code, 0);
  EXPECT_TRUE(md.out.starts_with("<!-- subject=")) << md.out;
  EXPECT_NE(md.out.find("| A | 3.556 | 1 |"), std::string::npos) << md.out;
}

TEST(Cli, Trend) {
  const auto y1 = "1997:" + kFixtures + "/pair_matrix.csv:" + kFixtures + "/pair_meta.csv";
  const auto y2 = "2013:" + kFixtures + "/worked_matrix.csv:" + kFixtures + "/worked_meta.csv";
  const auto r = run({"trend", "--year", y1, "--year", y2, "--zero-tc", "exclude_as_basic"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("title,1997,2013\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\nC,,\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\nn,2,3\nCIS,0.000,2.222\n"), std::string::npos) << r.out;
}

TEST(Cli, TrendDuplicateYear) {
  const auto y = "2013:" + kFixtures + "/pair_matrix.csv:" + kFixtures + "/pair_meta.csv";
  EXPECT_EQ(run({"trend", "--year", y, "--year", y}).code, 2);
  EXPECT_EQ(run({"trend", "--year", "nocolons"}).code, 1);
}

TEST(Cli, ExportNet) {
  auto args = worked_args("export-net");
  args.insert(args.end(), {"--threshold", "0.5", "--size-mode", "raw_tc"});
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("*Vertices 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("1 2 0.640000\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("% size_mode=raw_tc threshold=0.500000"), std::string::npos);
}

TEST(Cli, OutFileWrittenOnlyOnSuccess) {
  const auto dir = temp_dir();
  const auto target = (dir / "analysis.csv").string();
  std::filesystem::remove(target);

  auto bad = std::vector<std::string>{"analyze", "--matrix", kFixtures + "/pair_matrix.csv", "--meta",
                                      kFixtures + "/pair_meta_mismatch.csv", "--out", target};
  EXPECT_EQ(run(bad).code, 2);
  EXPECT_FALSE(std::filesystem::exists(target));

  auto good = worked_args("analyze");
  good.insert(good.end(), {"--out", target});
  const auto r = run(good);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_EQ(body.str(), run(worked_args("analyze")).out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = JCOMP_CLI_BINARY;
  const auto quiet = " >/dev/null 2>&1";
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + quiet).c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("validate --matrix " + kFixtures + "/pair_matrix.csv --meta " + kFixtures + "/pair_meta.csv"), 0);
  EXPECT_EQ(status("validate --matrix " + kFixtures + "/pair_matrix.csv --meta " + kFixtures +
                   "/pair_meta_mismatch.csv"),
            2);
  EXPECT_EQ(status("analyze --nope"), 1);
}
