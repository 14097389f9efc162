#include <gtest/gtest.h>

#include <filesystem>

#include "mutagoal/corpus.hpp"
#include "mutagoal/digest.hpp"
#include "mutagoal/store.hpp"
#include "support/run_cli.hpp"
#include "support/support.hpp"

namespace mutagoal {
namespace {

namespace fs = std::filesystem;
using testing::CliResult;
using testing::TempDir;
using testing::fixture;
using testing::run_cli;
using testing::run_corpusgen;
using testing::slurp;
using testing::spit;
using testing::write_project;

TEST(Cli, CheckCountsClassesSuitesAndTests) {
  CliResult small = run_cli({"check", fixture("bank-account").string()});
  EXPECT_EQ(small.exit_code, 0);
  EXPECT_EQ(small.out, "ok: 1 class, 1 suite, 1 test\n");
  EXPECT_EQ(small.err, "");

  CliResult big = run_cli({"check", fixture("synthetic").string()});
  EXPECT_EQ(big.exit_code, 0);
  EXPECT_EQ(big.out, "ok: 39 classes, 39 suites, 231 tests\n");
}

TEST(Cli, CheckRejectsBrokenSourcesWithPositions) {
  TempDir dir;
  write_project(dir.path(),
                {{"src/A.mini", "class A {\n    field x := \n}\n"}});
  CliResult result = run_cli({"check", dir.path().string()});
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_EQ(result.out, "");
  EXPECT_EQ(result.err,
            "error: src/A.mini:2:16: expected integer, 'true', or 'false', "
            "found end of line\n");

  CliResult missing = run_cli({"check", (dir.path() / "nope").string()});
  EXPECT_EQ(missing.exit_code, 1);
  EXPECT_NE(missing.err.find("project directory not found"),
            std::string::npos);
}

TEST(Cli, CheckWarnsAboutAssertionlessTests) {
  TempDir dir;
  write_project(
      dir.path(),
      {{"src/A.mini",
        "class A {\n    field x := 0\n\n    method get() returns {\n"
        "        return self.x\n    }\n}\n"},
       {"tests/ATest.mini",
        "suite ATest {\n    test noAsserts {\n        a := new A()\n    }\n}\n"}});
  CliResult result = run_cli({"check", dir.path().string()});
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out,
            "ok: 1 class, 1 suite, 1 test\n"
            "warning: tests/ATest.mini:2:10: ATest.noAsserts: "
            "test has no assertions\n");
}

TEST(Cli, MutantsTableListsEveryMutantWithFocalFlag) {
  CliResult result = run_cli({"mutants", fixture("bank-account").string()});
  EXPECT_EQ(result.exit_code, 0);
  std::vector<std::string> lines;
  std::istringstream in(result.out);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 13u);  // header + 10 mutants + blank + summary
  EXPECT_EQ(lines.back(), "10 mutants (4 focal-located)");
  EXPECT_EQ(lines[0].rfind("Mutant", 0), 0u);
  EXPECT_NE(lines[0].find("Operator"), std::string::npos);
  EXPECT_NE(lines[0].find("Focal"), std::string::npos);
  EXPECT_EQ(lines[1].rfind("src/Account.mini:Account.authenticate:0:CNB:0", 0),
            0u);
  EXPECT_NE(lines[1].find("not code == 42"), std::string::npos);
  // Mutants in withdraw sit in a focal method; the rest do not.
  for (const std::string& line : lines) {
    if (line.rfind("src/Account.mini:Account.withdraw", 0) == 0) {
      EXPECT_NE(line.find("yes"), std::string::npos) << line;
    }
  }
  EXPECT_NE(result.out.find("self.balance > amount"), std::string::npos)
      << "ROR boundary mutant missing";
}

TEST(Cli, FocalPrintsKindsThenPerTestMethods) {
  CliResult result = run_cli({"focal", fixture("bank-account").string()});
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out,
            "Method                Kind\n"
            "Account.authenticate  mutator\n"
            "Account.deposit       mutator\n"
            "Account.withdraw      mutator\n"
            "Account.getBalance    inspector\n"
            "\n"
            "Test                      Focal methods\n"
            "AccountTest.testWithdraw  Account.withdraw\n");
}

TEST(Cli, RunWritesCampaignFilesAndSummaries) {
  TempDir out;
  fs::path out_dir = out.path() / "campaign";
  CliResult result =
      run_cli({"run", fixture("bank-account").string(), "--strategy", "focal",
               "--out", out_dir.string()});
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out,
            "precheck: 1 test passed\n"
            "full: 10 mutants, 8 killed, 2 survived, 0 not-covered, "
            "0 errors, 351 steps\n"
            "focal: 10 mutants, 2 killed, 2 survived, 6 not-covered, "
            "0 errors, 167 steps\n");
  EXPECT_TRUE(fs::exists(mutants_file(out_dir)));
  EXPECT_TRUE(fs::exists(results_file(out_dir, Strategy::Full)));
  EXPECT_TRUE(fs::exists(results_file(out_dir, Strategy::Focal)));
  EXPECT_EQ(read_results(results_file(out_dir, Strategy::Focal)).size(), 10u);
}

TEST(Cli, RunResumesUnlessFresh) {
  TempDir out;
  fs::path out_dir = out.path() / "campaign";
  std::vector<std::string> args = {"run", fixture("bank-account").string(),
                                   "--strategy", "focal", "--out",
                                   out_dir.string()};
  CliResult first = run_cli(args);
  ASSERT_EQ(first.exit_code, 0);

  CliResult resumed = run_cli(args);
  EXPECT_EQ(resumed.exit_code, 0);
  EXPECT_EQ(resumed.out,
            "precheck: 1 test passed\n"
            "focal: resuming, 10 results already on file\n"
            "focal: 10 mutants, 2 killed, 2 survived, 6 not-covered, "
            "0 errors, 167 steps\n");

  std::vector<std::string> fresh_args = args;
  fresh_args.push_back("--fresh");
  CliResult fresh = run_cli(fresh_args);
  EXPECT_EQ(fresh.exit_code, 0);
  EXPECT_EQ(fresh.out, first.out);
}

TEST(Cli, RunStopsAtFailingPrecheck) {
  TempDir out;
  CliResult result = run_cli({"run", fixture("failing-precheck").string(),
                              "--out", (out.path() / "o").string()});
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_EQ(result.out, "");
  EXPECT_EQ(result.err,
            "precheck failed: 1 failing test\n"
            "  AccountTest.testDepositWrong: assertion-failure at 14:9 "
            "(expected 6, actual 5)\n");
  EXPECT_FALSE(fs::exists(out.path() / "o" / "results-full.jsonl"));
}

TEST(Cli, UnknownStrategyOrFlagIsUsageError) {
  CliResult strategy = run_cli({"run", fixture("bank-account").string(),
                                "--strategy", "nonsense"});
  EXPECT_EQ(strategy.exit_code, 2);
  EXPECT_NE(strategy.err.find("error: unknown strategy 'nonsense' "
                              "(expected full, class, or focal)"),
            std::string::npos);

  CliResult flag = run_cli({"run", "--bogus"});
  EXPECT_EQ(flag.exit_code, 2);

  CliResult none = run_cli({});
  EXPECT_EQ(none.exit_code, 2);
}

TEST(Cli, MatrixMatchesTheFrozenDigest) {
  TempDir out;
  fs::path out_dir = out.path() / "m";
  CliResult result = run_cli({"matrix", fixture("bank-account").string(),
                              "--out", out_dir.string()});
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out,
            "precheck: 1 test passed\n"
            "matrix: 10 mutants x 1 test, 8 killable\n");
  std::string tsv = slurp(matrix_file(out_dir));
  EXPECT_EQ(hex64(fnv1a64(tsv)), "a00ecb3d54ef22f1");
}

TEST(Cli, ReportRendersTableJsonAndCsv) {
  TempDir out;
  fs::path out_dir = out.path() / "campaign";
  ASSERT_EQ(run_cli({"run", fixture("bank-account").string(), "--strategy",
                     "focal", "--out", out_dir.string()})
                .exit_code,
            0);

  CliResult table = run_cli({"report", out_dir.string()});
  EXPECT_EQ(table.exit_code, 0);
  EXPECT_EQ(
      table.out,
      "Class    Technique        Focal Mutants Detected  False Negatives  "
      "AVG Tests Considered  Run Time   Speed-up\n"
      "Account  Full Test Suite  2/4                     0                "
      "1.0                   351 steps  N.A.\n"
      "Account  Focal Methods    2/4                     0                "
      "0.4                   167 steps  2.1x\n"
      "Total    Full Test Suite  2/4                     0                "
      "1.0                   351 steps  N.A.\n"
      "Total    Focal Methods    2/4                     0                "
      "0.4                   167 steps  2.1x\n"
      "\n"
      "Technique        Mutation Score  Quality vs Full Kills  "
      "Quality vs Focal-Located\n"
      "Full Test Suite  80% (8/10)      100% (2/2)             50% (2/4)\n"
      "Focal Methods    20% (2/10)      100% (2/2)             50% (2/4)\n"
      "\n"
      "Focal coverage: 4/10 (40%)\n");

  CliResult json = run_cli({"report", out_dir.string(), "--format", "json"});
  EXPECT_EQ(json.exit_code, 0);
  EXPECT_EQ(json.out, slurp(report_file(out_dir)));
  EXPECT_EQ(parse_report(json.out).total.rows.size(), 2u);

  CliResult csv = run_cli({"report", out_dir.string(), "--format", "csv"});
  EXPECT_EQ(csv.exit_code, 0);
  EXPECT_EQ(csv.out.rfind("mode,class,strategy,", 0), 0u);
}

TEST(Cli, VerifyRecomputesReportsAndCrossChecksTheMatrix) {
  TempDir out;
  fs::path out_dir = out.path() / "campaign";
  ASSERT_EQ(run_cli({"run", fixture("bank-account").string(), "--strategy",
                     "focal", "--out", out_dir.string()})
                .exit_code,
            0);

  CliResult unreported = run_cli({"verify", out_dir.string()});
  EXPECT_EQ(unreported.exit_code, 1);
  EXPECT_EQ(unreported.err, "error: no report.json under '" +
                                out_dir.string() +
                                "'; run 'mutagoal report' first\n");

  ASSERT_EQ(run_cli({"report", out_dir.string()}).exit_code, 0);
  CliResult verified = run_cli({"verify", out_dir.string()});
  EXPECT_EQ(verified.exit_code, 0);
  EXPECT_EQ(verified.out, "verify: ok (10 mutants, 2 strategies)\n");

  ASSERT_EQ(run_cli({"matrix", fixture("bank-account").string(), "--out",
                     out_dir.string()})
                .exit_code,
            0);
  CliResult cross = run_cli({"verify", out_dir.string()});
  EXPECT_EQ(cross.exit_code, 0);
  EXPECT_EQ(cross.out,
            "verify: ok (10 mutants, 2 strategies, matrix cross-checked)\n");

  // Tampering with a stored result must be caught.
  std::string lines = slurp(results_file(out_dir, Strategy::Focal));
  std::size_t at = lines.find("\"status\":\"killed\"");
  ASSERT_NE(at, std::string::npos);
  lines.replace(at, std::string("\"status\":\"killed\"").size(),
                "\"status\":\"survived\"");
  spit(results_file(out_dir, Strategy::Focal), lines);
  CliResult tampered = run_cli({"verify", out_dir.string()});
  EXPECT_EQ(tampered.exit_code, 1);
  EXPECT_NE(tampered.err.find("verify failed:"), std::string::npos);
  EXPECT_NE(tampered.err.find("report.json does not match"),
            std::string::npos);
}

TEST(Cli, CorpusgenManifestReproducesTheShippedBytes) {
  TempDir dir;
  fs::path copy = dir.path() / "bank-account";
  fs::copy(fixture("bank-account"), copy, fs::copy_options::recursive);
  std::string shipped = slurp(copy / "manifest.json");
  fs::remove(copy / "manifest.json");

  CliResult result = run_corpusgen({"manifest", copy.string()});
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(slurp(copy / "manifest.json"), shipped);
}

TEST(Cli, CorpusgenSynthesizersAreDeterministic) {
  TempDir dir;
  fs::path a = dir.path() / "a";
  fs::path b = dir.path() / "b";
  ASSERT_EQ(run_corpusgen({"quality-score", a.string()}).exit_code, 0);
  ASSERT_EQ(run_corpusgen({"quality-score", b.string()}).exit_code, 0);
  EXPECT_EQ(slurp(a / "manifest.json"), slurp(b / "manifest.json"));
  EXPECT_EQ(slurp(a / "manifest.json"),
            slurp(fixture("quality-score") / "manifest.json"));
}

}  // namespace
}  // namespace mutagoal
