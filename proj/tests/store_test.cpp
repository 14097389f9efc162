#include "mutagoal/store.hpp"

#include <gtest/gtest.h>

#include <filesystem>

#include "json.hpp"
#include "mutagoal/digest.hpp"
#include "mutagoal/engine.hpp"
#include "mutagoal/frontend.hpp"
#include "mutagoal/mutate.hpp"
#include "support/support.hpp"

namespace mutagoal {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;
using testing::fixture;
using testing::slurp;

MutantResult sample_result() {
  MutantResult result;
  result.mutant_id = "src/Account.mini:Account.withdraw:1:AOR:0";
  result.strategy = Strategy::Focal;
  result.status = MutantStatus::Killed;
  result.killed_by = "AccountTest.testWithdraw";
  result.position = 1;
  result.tests_considered = 2;
  result.tests_executed = 1;
  result.steps = 44;
  result.wall_time = std::chrono::nanoseconds(123456789);
  result.selection = {"AccountTest.testWithdraw", "AccountTest.testDeposit"};
  return result;
}

TEST(Store, OutDirLayout) {
  fs::path out = "somewhere/out";
  EXPECT_EQ(mutants_file(out), out / "mutants.jsonl");
  EXPECT_EQ(results_file(out, Strategy::Full), out / "results-full.jsonl");
  EXPECT_EQ(results_file(out, Strategy::Class), out / "results-class.jsonl");
  EXPECT_EQ(results_file(out, Strategy::Focal), out / "results-focal.jsonl");
  EXPECT_EQ(matrix_file(out), out / "matrix.tsv");
  EXPECT_EQ(report_file(out), out / "report.json");
}

TEST(Store, ResultLineIsCompactSortedJsonWithoutWallTime) {
  std::string line = result_line(sample_result());
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(line.find("wall"), std::string::npos);
  EXPECT_EQ(line.find("123456789"), std::string::npos);

  nlohmann::json doc = nlohmann::json::parse(line);
  EXPECT_EQ(doc.at("mutant"), "src/Account.mini:Account.withdraw:1:AOR:0");
  EXPECT_EQ(doc.at("status"), "killed");
  EXPECT_EQ(doc.at("killed_by"), "AccountTest.testWithdraw");
  EXPECT_EQ(doc.at("position"), 1);
  EXPECT_EQ(doc.at("steps"), 44);

  // Keys are emitted in sorted order so the bytes are canonical.
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  std::vector<std::string> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  std::string raw_order;
  std::size_t at = 0;
  for (const std::string& key : sorted) {
    std::size_t hit = line.find("\"" + key + "\"", at);
    ASSERT_NE(hit, std::string::npos) << key;
    at = hit;
  }
}

TEST(Store, ResultLineRoundTripsEverythingButWallTime) {
  MutantResult original = sample_result();
  MutantResult parsed = parse_result_line(result_line(original));
  EXPECT_EQ(parsed.mutant_id, original.mutant_id);
  EXPECT_EQ(parsed.strategy, original.strategy);
  EXPECT_EQ(parsed.status, original.status);
  EXPECT_EQ(parsed.killed_by, original.killed_by);
  EXPECT_EQ(parsed.position, original.position);
  EXPECT_EQ(parsed.tests_considered, original.tests_considered);
  EXPECT_EQ(parsed.tests_executed, original.tests_executed);
  EXPECT_EQ(parsed.steps, original.steps);
  EXPECT_EQ(parsed.selection, original.selection);
  EXPECT_EQ(parsed.wall_time.count(), 0);  // never persisted
}

TEST(Store, SurvivedAndNotCoveredLinesStayLean) {
  MutantResult survived = sample_result();
  survived.status = MutantStatus::Survived;
  survived.killed_by.clear();
  survived.position = 0;
  survived.tests_executed = 2;
  std::string line = result_line(survived);
  EXPECT_EQ(line.find("killed_by"), std::string::npos);
  EXPECT_EQ(line.find("position"), std::string::npos);
  MutantResult parsed = parse_result_line(line);
  EXPECT_EQ(parsed.status, MutantStatus::Survived);
  EXPECT_TRUE(parsed.killed_by.empty());
  EXPECT_EQ(parsed.position, 0);

  MutantResult uncovered = sample_result();
  uncovered.status = MutantStatus::NotCovered;
  uncovered.killed_by.clear();
  uncovered.position = 0;
  uncovered.tests_considered = 0;
  uncovered.tests_executed = 0;
  uncovered.steps = 0;
  uncovered.selection.clear();
  MutantResult parsed2 = parse_result_line(result_line(uncovered));
  EXPECT_EQ(parsed2.status, MutantStatus::NotCovered);
  EXPECT_EQ(parsed2.tests_considered, 0);
}

TEST(Store, MalformedResultLinesNameTheProblem) {
  EXPECT_THROW(parse_result_line("not json"), StoreError);
  EXPECT_THROW(parse_result_line("{\"id\": \"x\"}"), StoreError);
  try {
    parse_result_line(
        "{\"mutant\":\"m\",\"status\":\"vaporized\",\"strategy\":\"full\","
        "\"steps\":1,\"tests_considered\":1,\"tests_executed\":1,"
        "\"selection\":[]}");
    FAIL() << "expected StoreError";
  } catch (const StoreError& error) {
    EXPECT_NE(std::string(error.what()).find("vaporized"), std::string::npos);
  }
}

TEST(Store, ReadResultsReportsTheOffendingLineNumber) {
  TempDir dir;
  fs::path file = dir.path() / "results-full.jsonl";
  testing::spit(file, result_line(sample_result()) + "\n" + "garbage\n");
  try {
    read_results(file);
    FAIL() << "expected StoreError";
  } catch (const StoreError& error) {
    std::string what = error.what();
    EXPECT_NE(what.find(":2: malformed result record"), std::string::npos)
        << what;
    EXPECT_NE(what.find("results-full.jsonl"), std::string::npos) << what;
  }
  EXPECT_THROW(read_results(dir.path() / "absent.jsonl"), StoreError);
}

TEST(Store, ResultsWriterAppendsFlushedLines) {
  TempDir dir;
  fs::path file = dir.path() / "results-focal.jsonl";

  MutantResult first = sample_result();
  {
    ResultsWriter writer(file, /*append=*/false);
    writer.write(first);
    // Flushed per line: visible before the writer goes away.
    std::vector<MutantResult> seen = read_results(file);
    ASSERT_EQ(seen.size(), 1u);
    EXPECT_EQ(seen[0].mutant_id, first.mutant_id);
  }

  MutantResult second = sample_result();
  second.mutant_id = "src/Account.mini:Account.withdraw:1:AOR:1";
  {
    ResultsWriter writer(file, /*append=*/true);
    writer.write(second);
  }
  std::vector<MutantResult> all = read_results(file);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1].mutant_id, second.mutant_id);

  {
    ResultsWriter writer(file, /*append=*/false);  // truncates
    writer.write(second);
  }
  EXPECT_EQ(read_results(file).size(), 1u);
}

TEST(Store, MutantRecordsRoundTripThroughJsonl) {
  std::map<std::string, std::string> tree = {
      {"src/Account.mini", slurp(fixture("bank-account") / "src/Account.mini")},
      {"tests/AccountTest.mini",
       slurp(fixture("bank-account") / "tests/AccountTest.mini")}};
  Program program = parse_program(tree);
  std::vector<Mutant> mutants =
      generate_mutants(program, {all_mutops().begin(), all_mutops().end()});
  FocalIndex index = build_index(program);
  std::vector<MutantRecord> records = make_mutant_records(mutants, index);
  ASSERT_EQ(records.size(), 10u);

  TempDir dir;
  fs::path file = mutants_file(dir.path());
  fs::create_directories(file.parent_path());
  write_mutant_records(file, records);
  std::vector<MutantRecord> reread = read_mutant_records(file);
  EXPECT_EQ(reread, records);

  // Byte-identical on rewrite.
  std::string bytes = read_text_file(file);
  write_mutant_records(file, reread);
  EXPECT_EQ(read_text_file(file), bytes);

  EXPECT_THROW(parse_mutant_record("{\"id\": 7}"), StoreError);
}

TEST(Store, MatrixTsvRoundTripsAndHashesStably) {
  std::map<std::string, std::string> tree = {
      {"src/Account.mini", slurp(fixture("bank-account") / "src/Account.mini")},
      {"tests/AccountTest.mini",
       slurp(fixture("bank-account") / "tests/AccountTest.mini")}};
  Program program = parse_program(tree);
  std::vector<Mutant> mutants =
      generate_mutants(program, {all_mutops().begin(), all_mutops().end()});
  KillMatrix matrix = build_kill_matrix(program, mutants, CostModel{}, 2);

  std::string tsv = matrix_tsv(matrix);
  EXPECT_EQ(hex64(fnv1a64(tsv)), "a00ecb3d54ef22f1");

  KillMatrix parsed = parse_matrix_tsv(tsv);
  EXPECT_EQ(parsed.mutant_ids, matrix.mutant_ids);
  EXPECT_EQ(parsed.test_ids, matrix.test_ids);
  EXPECT_EQ(matrix_tsv(parsed), tsv);

  // Header row carries test ids; each cell is k:<steps> or p:<steps>.
  std::string first_line = tsv.substr(0, tsv.find('\n'));
  EXPECT_NE(first_line.find("AccountTest.testWithdraw"), std::string::npos);
  EXPECT_NE(tsv.find("k:"), std::string::npos);
  EXPECT_NE(tsv.find("p:"), std::string::npos);
}

TEST(Store, TruncatedMatrixRowsAreAnError) {
  EXPECT_THROW(parse_matrix_tsv(""), StoreError);
  EXPECT_THROW(parse_matrix_tsv("\tT.a\nm1\tk:3\n"), StoreError);  // bad header
  // Row with fewer cells than tests in the header.
  std::string bad = "mutant\tT.a\tT.b\nm1\tk:3\n";
  try {
    parse_matrix_tsv(bad);
    FAIL() << "expected StoreError";
  } catch (const StoreError& error) {
    EXPECT_NE(std::string(error.what()).find("matrix line 2: expected 3 columns"),
              std::string::npos);
  }
  try {
    parse_matrix_tsv("mutant\tT.a\nm1\tq:3\n");
    FAIL() << "expected StoreError";
  } catch (const StoreError& error) {
    EXPECT_NE(std::string(error.what()).find("malformed cell 'q:3'"),
              std::string::npos);
  }
}

}  // namespace
}  // namespace mutagoal
