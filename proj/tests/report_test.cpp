#include "mutagoal/report.hpp"

#include <gtest/gtest.h>

#include "json.hpp"
#include "mutagoal/engine.hpp"
#include "mutagoal/frontend.hpp"
#include "mutagoal/rational.hpp"
#include "support/support.hpp"

namespace mutagoal {
namespace {

using testing::fixture;
using testing::slurp;

TEST(Rational, RoundsHalfAwayFromZeroAtOneDecimal) {
  EXPECT_EQ(decimal1(Rational::ratio(6287, 10)), "628.7");
  EXPECT_EQ(decimal1(Rational::ratio(1, 3)), "0.3");
  EXPECT_EQ(decimal1(Rational::ratio(1, 2)), "0.5");
  EXPECT_EQ(decimal1(Rational::ratio(3, 2)), "1.5");
  EXPECT_EQ(decimal1(Rational::ratio(25, 1000)), "0.0");  // 0.025 -> 0.0
  EXPECT_EQ(decimal1(Rational::ratio(5741, 10)), "574.1");
  EXPECT_EQ(decimal1(Rational::ratio(10, 1)), "10.0");
}

TEST(Rational, PercentRounding) {
  EXPECT_EQ(percent(Rational::ratio(35, 44)), 80);  // 79.55 rounds up
  EXPECT_EQ(percent(Rational::ratio(36, 44)), 82);  // 81.82 rounds up
  EXPECT_EQ(percent(Rational::ratio(35, 47)), 74);
  EXPECT_EQ(percent(Rational::ratio(1, 1)), 100);
  EXPECT_EQ(percent(Rational::ratio(0, 7)), 0);
}

// Builds a synthetic single-class campaign shaped like a published run:
// `located` focal-anchored mutants, of which the full suite kills
// `full_kills` and the focal strategy kills `focal_kills`.
struct FakeCampaign {
  std::vector<MutantRecord> records;
  std::map<Strategy, std::vector<MutantResult>> results;
};

FakeCampaign fake_campaign(int located, int extra, int full_kills, int focal_kills,
                           std::int64_t full_ns, std::int64_t focal_ns) {
  FakeCampaign campaign;
  int total = located + extra;
  for (int i = 0; i < total; ++i) {
    MutantRecord record;
    record.id = "src/Logger.mini:Logger.log:" + std::to_string(i) + ":AOR:0";
    record.op = "AOR";
    record.class_name = "Logger";
    record.method_name = "log";
    record.file = "src/Logger.mini";
    record.focal = i < located;
    campaign.records.push_back(record);
  }
  auto run = [&](Strategy strategy, int kills, std::int64_t wall_total) {
    std::vector<MutantResult> results;
    for (int i = 0; i < total; ++i) {
      MutantResult result;
      result.mutant_id = campaign.records[i].id;
      result.strategy = strategy;
      bool killable = i < (strategy == Strategy::Full ? full_kills
                                                      : focal_kills);
      // Kills are nested: any strategy's kills come first in id order, so
      // focal kills are automatically a subset of full kills.
      result.status = killable ? MutantStatus::Killed : MutantStatus::Survived;
      if (strategy == Strategy::Focal && i >= located) {
        result.status = MutantStatus::NotCovered;
      }
      result.tests_considered = strategy == Strategy::Full ? 1777 : 9;
      if (result.status == MutantStatus::Killed) {
        result.killed_by = "LoggerTest.test0";
        result.position = 1;
        result.tests_executed = 1;
      }
      result.steps = 10;
      result.wall_time = std::chrono::nanoseconds(wall_total / total);
      results.push_back(result);
    }
    campaign.results[strategy] = results;
    return results;
  };
  run(Strategy::Full, full_kills, full_ns);
  run(Strategy::Focal, focal_kills, focal_ns);
  return campaign;
}

TEST(Report, SpeedUpReproducesThePublishedArithmetic) {
  // 6.287 s against 0.010 s renders as 628.7x, and 3113.238 s against
  // 3.082 s renders as 1010.1x, both at one decimal.
  {
    FakeCampaign c = fake_campaign(20, 0, 11, 11, 6'287'000'000, 10'000'000);
    CampaignReport report =
        compute_report(c.results, c.records, CostModel::Mode::Wall);
    const MetricsRow& focal = report.total.rows.at(1);
    ASSERT_TRUE(focal.speed_up.has_value());
    EXPECT_EQ(decimal1(*focal.speed_up) + "x", "628.7x");
  }
  {
    FakeCampaign c =
        fake_campaign(55, 0, 44, 44, 3'113'238'000'000, 3'082'000'000);
    CampaignReport report =
        compute_report(c.results, c.records, CostModel::Mode::Wall);
    const MetricsRow& focal = report.total.rows.at(1);
    EXPECT_EQ(decimal1(*focal.speed_up) + "x", "1010.1x");
  }
}

TEST(Report, QualityScoresUseBothDenominators) {
  // 44 focal-located mutants killed by the full suite, 35 of them killed by
  // the focal strategy: quality 80% against full kills; the stricter
  // denominator counts every focal-located mutant.
  FakeCampaign c = fake_campaign(47, 0, 44, 35, 1000, 10);
  CampaignReport report = compute_report(c.results, c.records);
  const MetricsRow& focal = report.total.rows.at(1);
  ASSERT_TRUE(focal.quality_vs_full.has_value());
  EXPECT_EQ(focal.quality_vs_full->num, 35);
  EXPECT_EQ(focal.quality_vs_full->den, 44);
  EXPECT_EQ(percent(*focal.quality_vs_full), 80);
  ASSERT_TRUE(focal.quality_vs_all.has_value());
  EXPECT_EQ(focal.quality_vs_all->num, 35);
  EXPECT_EQ(focal.quality_vs_all->den, 47);
  EXPECT_EQ(focal.false_negatives, 9);

  std::string table = render(report, ReportFormat::Table);
  EXPECT_NE(table.find("80% (35/44)"), std::string::npos);
  EXPECT_NE(table.find("74% (35/47)"), std::string::npos);
}

TEST(Report, FalseNegativesAreTheKillGap) {
  FakeCampaign c = fake_campaign(40, 10, 30, 22, 1000, 10);
  CampaignReport report = compute_report(c.results, c.records);
  const MetricsRow& full = report.total.rows.at(0);
  const MetricsRow& focal = report.total.rows.at(1);
  EXPECT_EQ(full.false_negatives, 0);
  EXPECT_EQ(focal.false_negatives, 8);  // 30 located kills vs 22
  EXPECT_EQ(full.mutants, 50);
  EXPECT_EQ(full.located, 40);
}

TEST(Report, AccountCorpusEndToEnd) {
  std::map<std::string, std::string> tree = {
      {"src/Account.mini", slurp(fixture("bank-account") / "src/Account.mini")},
      {"tests/AccountTest.mini",
       slurp(fixture("bank-account") / "tests/AccountTest.mini")}};
  Program program = parse_program(tree);
  std::vector<Mutant> mutants =
      generate_mutants(program, {all_mutops().begin(), all_mutops().end()});
  FocalIndex index = build_index(program);
  std::vector<MutantRecord> records = make_mutant_records(mutants, index);

  std::map<Strategy, std::vector<MutantResult>> results;
  for (Strategy strategy : {Strategy::Full, Strategy::Class, Strategy::Focal}) {
    results[strategy] =
        run_campaign(program, mutants, index, strategy, CostModel{}, 2);
  }
  CampaignReport report = compute_report(results, records);
  ASSERT_EQ(report.classes.size(), 1u);
  EXPECT_EQ(report.classes[0].group, "Account");
  ASSERT_EQ(report.total.rows.size(), 3u);

  const MetricsRow& full = report.total.rows[0];
  const MetricsRow& cls = report.total.rows[1];
  const MetricsRow& focal = report.total.rows[2];
  EXPECT_EQ(full.strategy, Strategy::Full);
  EXPECT_EQ(full.killed, 8);
  EXPECT_EQ(full.detected_located, 2);
  EXPECT_EQ(cls.killed, 8);
  EXPECT_EQ(focal.killed, 2);
  EXPECT_EQ(focal.detected_located, 2);
  EXPECT_EQ(focal.false_negatives, 0);
  ASSERT_TRUE(focal.focal_coverage.has_value());
  EXPECT_EQ(*focal.focal_coverage, Rational::ratio(4, 10));  // stored reduced
  EXPECT_EQ(focal.located, 4);
  EXPECT_EQ(focal.mutants, 10);

  std::string table = render(report, ReportFormat::Table);
  EXPECT_NE(table.find("Focal Methods"), std::string::npos);
  EXPECT_NE(table.find("Full Test Suite"), std::string::npos);
  EXPECT_NE(table.find("Class Based"), std::string::npos);
  EXPECT_NE(table.find("Focal coverage: 4/10 (40%)"), std::string::npos);
}

TEST(Report, TableColumnsMatchThePublishedLayout) {
  FakeCampaign c = fake_campaign(4, 0, 4, 4, 1000, 10);
  std::string table = render(compute_report(c.results, c.records),
                             ReportFormat::Table);
  std::string header = table.substr(0, table.find('\n'));
  // Column titles appear in order; widths adapt to the data.
  std::size_t at = 0;
  for (const char* title : {"Class", "Technique", "Focal Mutants Detected",
                            "False Negatives", "AVG Tests Considered",
                            "Run Time", "Speed-up"}) {
    std::size_t hit = header.find(title, at);
    ASSERT_NE(hit, std::string::npos) << "missing column: " << title;
    at = hit + std::string(title).size();
  }
  EXPECT_NE(table.find("4/4"), std::string::npos);
  EXPECT_NE(table.find("N.A."), std::string::npos);  // full row has no speed-up
}

TEST(Report, AvgTestsConsideredIsExact) {
  FakeCampaign c = fake_campaign(10, 0, 5, 5, 1000, 10);
  CampaignReport report = compute_report(c.results, c.records);
  const MetricsRow& full = report.total.rows[0];
  EXPECT_EQ(full.avg_tests_considered.num, 1777);
  EXPECT_EQ(full.avg_tests_considered.den, 1);
  EXPECT_EQ(decimal1(full.avg_tests_considered), "1777.0");
}

TEST(Report, JsonRendersCanonicallyAndParsesBack) {
  FakeCampaign c = fake_campaign(12, 3, 9, 7, 5000, 40);
  CampaignReport report = compute_report(c.results, c.records);
  std::string json_text = render(report, ReportFormat::Json);
  // Canonical: two-space indent, trailing newline, no floating point.
  EXPECT_EQ(json_text.back(), '\n');
  EXPECT_EQ(json_text.find('.'), std::string::npos);
  CampaignReport parsed = parse_report(json_text);
  EXPECT_EQ(render(parsed, ReportFormat::Json), json_text);

  nlohmann::json doc = nlohmann::json::parse(json_text);
  EXPECT_EQ(doc.at("mode"), "steps");
  EXPECT_TRUE(doc.at("total").at("rows").is_array());
}

TEST(Report, CsvHasOneRowPerGroupStrategy) {
  FakeCampaign c = fake_campaign(6, 2, 5, 3, 800, 20);
  std::string csv = render(compute_report(c.results, c.records), ReportFormat::Csv);
  std::vector<std::string> lines;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 5u);  // header + (Logger, Total) x (full, focal)
  EXPECT_EQ(lines[0].rfind("mode,class,strategy,mutants,located,killed", 0), 0u);
  EXPECT_EQ(lines[1].rfind("steps,Logger,full,8,6,5,", 0), 0u);
}

TEST(Report, MissingFullBaselineIsAnError) {
  FakeCampaign c = fake_campaign(5, 0, 4, 3, 100, 10);
  c.results.erase(Strategy::Full);
  try {
    compute_report(c.results, c.records);
    FAIL() << "expected ReportError";
  } catch (const ReportError& error) {
    EXPECT_NE(std::string(error.what()).find("baseline"), std::string::npos);
  }
}

TEST(Report, MismatchedResultSetsAreAnError) {
  FakeCampaign c = fake_campaign(5, 0, 4, 3, 100, 10);
  c.results[Strategy::Focal].pop_back();
  EXPECT_THROW(compute_report(c.results, c.records), ReportError);

  FakeCampaign d = fake_campaign(5, 0, 4, 3, 100, 10);
  d.results[Strategy::Focal][0].mutant_id = "src/Ghost.mini:Ghost.g:0:AOR:0";
  EXPECT_THROW(compute_report(d.results, d.records), ReportError);
}

TEST(Report, MalformedJsonIsAnError) {
  EXPECT_THROW(parse_report("{"), ReportError);
  EXPECT_THROW(parse_report("{\"mode\": \"steps\"}"), ReportError);
  try {
    parse_report("[]");
    FAIL() << "expected ReportError";
  } catch (const ReportError& error) {
    EXPECT_NE(std::string(error.what()).find("malformed report json"),
              std::string::npos);
  }
}

}  // namespace
}  // namespace mutagoal
