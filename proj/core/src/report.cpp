#include "mutagoal/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "json.hpp"

namespace mutagoal {

namespace {

using nlohmann::json;

const Strategy kRowOrder[] = {Strategy::Full, Strategy::Class, Strategy::Focal};

const char* cost_mode_name(CostModel::Mode mode) {
  return mode == CostModel::Mode::Wall ? "wall" : "steps";
}

std::optional<CostModel::Mode> cost_mode_from_name(const std::string& name) {
  if (name == "steps") return CostModel::Mode::Steps;
  if (name == "wall") return CostModel::Mode::Wall;
  return std::nullopt;
}

std::int64_t cost_of(const MetricsRow& row, CostModel::Mode mode) {
  return mode == CostModel::Mode::Wall ? row.run_wall_ns : row.run_steps;
}

/// All metrics of one row that need no cross-strategy data.
template <typename InGroup>
MetricsRow tally(Strategy strategy, const std::vector<MutantResult>& results,
                 const std::map<std::string, const MutantRecord*>& by_id,
                 InGroup&& in_group) {
  MetricsRow row;
  row.strategy = strategy;
  std::int64_t considered_sum = 0;
  for (const MutantResult& result : results) {
    const MutantRecord& record = *by_id.at(result.mutant_id);
    if (!in_group(record)) continue;
    row.mutants += 1;
    if (record.focal) row.located += 1;
    if (result.status == MutantStatus::Killed) {
      row.killed += 1;
      if (record.focal) row.detected_located += 1;
    }
    considered_sum += result.tests_considered;
    row.run_steps += result.steps;
    row.run_wall_ns += result.wall_time.count();
  }
  if (row.mutants > 0) {
    row.avg_tests_considered = Rational::ratio(considered_sum, row.mutants);
    row.mutation_score = Rational::ratio(row.killed, row.mutants);
    row.focal_coverage = Rational::ratio(row.located, row.mutants);
  }
  if (row.located > 0) {
    row.quality_vs_all = Rational::ratio(row.detected_located, row.located);
  }
  return row;
}

template <typename InGroup>
std::vector<MetricsRow> group_rows(
    const std::map<Strategy, std::vector<MutantResult>>& results,
    const std::map<std::string, const MutantRecord*>& by_id,
    CostModel::Mode mode, InGroup&& in_group) {
  MetricsRow baseline =
      tally(Strategy::Full, results.at(Strategy::Full), by_id, in_group);
  std::vector<MetricsRow> rows;
  for (Strategy strategy : kRowOrder) {
    auto it = results.find(strategy);
    if (it == results.end()) continue;
    MetricsRow row = strategy == Strategy::Full
                         ? baseline
                         : tally(strategy, it->second, by_id, in_group);
    row.false_negatives = baseline.detected_located - row.detected_located;
    if (baseline.detected_located > 0) {
      row.quality_vs_full =
          Rational::ratio(row.detected_located, baseline.detected_located);
    }
    if (strategy != Strategy::Full && cost_of(row, mode) > 0) {
      row.speed_up = Rational::ratio(cost_of(baseline, mode), cost_of(row, mode));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- table rendering -------------------------------------------------------

std::string render_wall(std::int64_t ns) {
  std::int64_t ms = (ns + 500'000) / 1'000'000;
  std::string frac = std::to_string(ms % 1000);
  return std::to_string(ms / 1000) + "." + std::string(3 - frac.size(), '0') +
         frac + "s";
}

std::string render_run_time(const MetricsRow& row, CostModel::Mode mode) {
  if (mode == CostModel::Mode::Wall) return render_wall(row.run_wall_ns);
  std::string out = std::to_string(row.run_steps) + " steps";
  if (row.run_wall_ns > 0) out += " (" + render_wall(row.run_wall_ns) + ")";
  return out;
}

std::string render_speed_up(const std::optional<Rational>& value) {
  if (!value) return "N.A.";
  return decimal1(*value) + "x";
}

std::string render_percent(const std::optional<Rational>& value) {
  if (!value) return "N.A.";
  return std::to_string(percent(*value)) + "%";
}

std::string render_percent_counts(const std::optional<Rational>& value,
                                  std::int64_t num, std::int64_t den) {
  if (!value) return "N.A.";
  return render_percent(value) + " (" + std::to_string(num) + "/" +
         std::to_string(den) + ")";
}

std::string layout(const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> widths;
  for (const auto& row : table) {
    if (widths.size() < row.size()) widths.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) {
        line += std::string(widths[i] - row[i].size() + 2, ' ');
      }
    }
    out += line;
    out += '\n';
  }
  return out;
}

const MetricsRow* find_row(const GroupReport& group, Strategy strategy) {
  for (const MetricsRow& row : group.rows) {
    if (row.strategy == strategy) return &row;
  }
  return nullptr;
}

std::string render_table(const CampaignReport& report) {
  std::vector<std::vector<std::string>> main_table;
  main_table.push_back({"Class", "Technique", "Focal Mutants Detected",
                        "False Negatives", "AVG Tests Considered", "Run Time",
                        "Speed-up"});
  auto push_group = [&](const GroupReport& group) {
    for (const MetricsRow& row : group.rows) {
      main_table.push_back(
          {group.group, technique_name(row.strategy),
           std::to_string(row.detected_located) + "/" +
               std::to_string(row.located),
           std::to_string(row.false_negatives),
           row.mutants > 0 ? decimal1(row.avg_tests_considered) : "N.A.",
           render_run_time(row, report.mode), render_speed_up(row.speed_up)});
    }
  };
  for (const GroupReport& group : report.classes) push_group(group);
  if (!report.total.rows.empty()) push_group(report.total);
  std::string out = layout(main_table);

  if (report.total.rows.empty()) return out;

  const MetricsRow* baseline = find_row(report.total, Strategy::Full);
  std::vector<std::vector<std::string>> summary;
  summary.push_back({"Technique", "Mutation Score", "Quality vs Full Kills",
                     "Quality vs Focal-Located"});
  for (const MetricsRow& row : report.total.rows) {
    summary.push_back(
        {technique_name(row.strategy),
         render_percent_counts(row.mutation_score, row.killed, row.mutants),
         render_percent_counts(
             row.quality_vs_full, row.detected_located,
             baseline != nullptr ? baseline->detected_located : 0),
         render_percent_counts(row.quality_vs_all, row.detected_located,
                               row.located)});
  }
  out += '\n';
  out += layout(summary);

  if (baseline != nullptr) {
    out += '\n';
    out += "Focal coverage: " + std::to_string(baseline->located) + "/" +
           std::to_string(baseline->mutants) + " (" +
           render_percent(baseline->focal_coverage) + ")\n";
  }
  return out;
}

// ---- json rendering --------------------------------------------------------

json rational_json(const Rational& value) {
  return json{{"num", value.num}, {"den", value.den}};
}

json optional_json(const std::optional<Rational>& value) {
  if (!value) return nullptr;
  return rational_json(*value);
}

json row_json(const MetricsRow& row) {
  return json{{"strategy", strategy_name(row.strategy)},
              {"mutants", row.mutants},
              {"located", row.located},
              {"killed", row.killed},
              {"detected_located", row.detected_located},
              {"false_negatives", row.false_negatives},
              {"avg_tests_considered", rational_json(row.avg_tests_considered)},
              {"run_steps", row.run_steps},
              {"run_wall_ns", row.run_wall_ns},
              {"speed_up", optional_json(row.speed_up)},
              {"mutation_score", optional_json(row.mutation_score)},
              {"quality_vs_full", optional_json(row.quality_vs_full)},
              {"quality_vs_all", optional_json(row.quality_vs_all)},
              {"focal_coverage", optional_json(row.focal_coverage)}};
}

json group_json(const GroupReport& group) {
  json rows = json::array();
  for (const MetricsRow& row : group.rows) rows.push_back(row_json(row));
  return json{{"group", group.group}, {"rows", std::move(rows)}};
}

std::string render_json(const CampaignReport& report) {
  json classes = json::array();
  for (const GroupReport& group : report.classes) {
    classes.push_back(group_json(group));
  }
  json doc{{"mode", cost_mode_name(report.mode)},
           {"classes", std::move(classes)},
           {"total", group_json(report.total)}};
  return doc.dump(2) + "\n";
}

Rational rational_from(const json& value) {
  return Rational{value.at("num").get<std::int64_t>(),
                  value.at("den").get<std::int64_t>()};
}

std::optional<Rational> optional_from(const json& value) {
  if (value.is_null()) return std::nullopt;
  return rational_from(value);
}

MetricsRow row_from(const json& value) {
  MetricsRow row;
  std::optional<Strategy> strategy =
      strategy_from_name(value.at("strategy").get<std::string>());
  if (!strategy) {
    throw ReportError("malformed report json: unknown strategy '" +
                      value.at("strategy").get<std::string>() + "'");
  }
  row.strategy = *strategy;
  row.mutants = value.at("mutants").get<std::int64_t>();
  row.located = value.at("located").get<std::int64_t>();
  row.killed = value.at("killed").get<std::int64_t>();
  row.detected_located = value.at("detected_located").get<std::int64_t>();
  row.false_negatives = value.at("false_negatives").get<std::int64_t>();
  row.avg_tests_considered = rational_from(value.at("avg_tests_considered"));
  row.run_steps = value.at("run_steps").get<std::int64_t>();
  row.run_wall_ns = value.at("run_wall_ns").get<std::int64_t>();
  row.speed_up = optional_from(value.at("speed_up"));
  row.mutation_score = optional_from(value.at("mutation_score"));
  row.quality_vs_full = optional_from(value.at("quality_vs_full"));
  row.quality_vs_all = optional_from(value.at("quality_vs_all"));
  row.focal_coverage = optional_from(value.at("focal_coverage"));
  return row;
}

GroupReport group_from(const json& value) {
  GroupReport group;
  group.group = value.at("group").get<std::string>();
  for (const json& row : value.at("rows")) group.rows.push_back(row_from(row));
  return group;
}

// ---- csv rendering ---------------------------------------------------------

std::string csv_optional(const std::optional<Rational>& value) {
  if (!value) return ",";
  return std::to_string(value->num) + "," + std::to_string(value->den);
}

std::string render_csv(const CampaignReport& report) {
  std::string out =
      "mode,class,strategy,mutants,located,killed,detected_located,"
      "false_negatives,avg_tests_considered_num,avg_tests_considered_den,"
      "run_steps,run_wall_ns,speed_up_num,speed_up_den,mutation_score_num,"
      "mutation_score_den,quality_vs_full_num,quality_vs_full_den,"
      "quality_vs_all_num,quality_vs_all_den,focal_coverage_num,"
      "focal_coverage_den\n";
  auto push_group = [&](const GroupReport& group) {
    for (const MetricsRow& row : group.rows) {
      out += std::string(cost_mode_name(report.mode)) + "," + group.group +
             "," + strategy_name(row.strategy) + "," +
             std::to_string(row.mutants) + "," + std::to_string(row.located) +
             "," + std::to_string(row.killed) + "," +
             std::to_string(row.detected_located) + "," +
             std::to_string(row.false_negatives) + "," +
             std::to_string(row.avg_tests_considered.num) + "," +
             std::to_string(row.avg_tests_considered.den) + "," +
             std::to_string(row.run_steps) + "," +
             std::to_string(row.run_wall_ns) + "," +
             csv_optional(row.speed_up) + "," +
             csv_optional(row.mutation_score) + "," +
             csv_optional(row.quality_vs_full) + "," +
             csv_optional(row.quality_vs_all) + "," +
             csv_optional(row.focal_coverage) + "\n";
    }
  };
  for (const GroupReport& group : report.classes) push_group(group);
  push_group(report.total);
  return out;
}

}  // namespace

std::vector<MutantRecord> make_mutant_records(const std::vector<Mutant>& mutants,
                                              const FocalIndex& index) {
  std::vector<MutantRecord> out;
  out.reserve(mutants.size());
  for (const Mutant& mutant : mutants) {
    MutantRecord record;
    record.id = mutant.id;
    record.op = mutop_name(mutant.op);
    record.class_name = mutant.class_name;
    record.method_name = mutant.method_name;
    record.file = mutant.id.substr(0, mutant.id.find(':'));
    record.line = mutant.location.line;
    record.col = mutant.location.col;
    record.original = mutant.original;
    record.mutated = mutant.mutated;
    record.focal =
        !index.tests_of({mutant.class_name, mutant.method_name}).empty();
    out.push_back(std::move(record));
  }
  return out;
}

const char* technique_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::Full:
      return "Full Test Suite";
    case Strategy::Class:
      return "Class Based";
    case Strategy::Focal:
      return "Focal Methods";
  }
  return "?";
}

CampaignReport compute_report(
    const std::map<Strategy, std::vector<MutantResult>>& results,
    const std::vector<MutantRecord>& mutants, CostModel::Mode mode) {
  if (results.find(Strategy::Full) == results.end()) {
    throw ReportError(
        "no results for the full strategy; the full-suite baseline is "
        "required");
  }
  std::map<std::string, const MutantRecord*> by_id;
  for (const MutantRecord& record : mutants) {
    if (!by_id.emplace(record.id, &record).second) {
      throw ReportError("duplicate mutant id '" + record.id +
                        "' in the mutant list");
    }
  }
  for (const auto& [strategy, rows] : results) {
    if (rows.size() != mutants.size()) {
      throw ReportError("results for strategy '" +
                        std::string(strategy_name(strategy)) + "' cover " +
                        std::to_string(rows.size()) +
                        " mutants; the mutant list has " +
                        std::to_string(mutants.size()));
    }
    std::set<std::string> seen;
    for (const MutantResult& result : rows) {
      if (by_id.find(result.mutant_id) == by_id.end()) {
        throw ReportError("results for strategy '" +
                          std::string(strategy_name(strategy)) +
                          "' reference unknown mutant '" + result.mutant_id +
                          "'");
      }
      if (!seen.insert(result.mutant_id).second) {
        throw ReportError("duplicate result for mutant '" + result.mutant_id +
                          "' under strategy '" +
                          std::string(strategy_name(strategy)) + "'");
      }
    }
  }

  CampaignReport report;
  report.mode = mode;
  std::set<std::string> class_names;
  for (const MutantRecord& record : mutants) {
    class_names.insert(record.class_name);
  }
  for (const std::string& name : class_names) {
    GroupReport group;
    group.group = name;
    group.rows = group_rows(results, by_id, mode, [&](const MutantRecord& r) {
      return r.class_name == name;
    });
    report.classes.push_back(std::move(group));
  }
  report.total.group = "Total";
  if (!mutants.empty()) {
    report.total.rows =
        group_rows(results, by_id, mode, [](const MutantRecord&) { return true; });
  }
  return report;
}

const char* report_format_name(ReportFormat format) {
  switch (format) {
    case ReportFormat::Table:
      return "table";
    case ReportFormat::Json:
      return "json";
    case ReportFormat::Csv:
      return "csv";
  }
  return "?";
}

std::optional<ReportFormat> report_format_from_name(const std::string& name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

std::string render(const CampaignReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table:
      return render_table(report);
    case ReportFormat::Json:
      return render_json(report);
    case ReportFormat::Csv:
      return render_csv(report);
  }
  return {};
}

CampaignReport parse_report(const std::string& json_text) {
  try {
    json doc = json::parse(json_text);
    CampaignReport report;
    std::optional<CostModel::Mode> mode =
        cost_mode_from_name(doc.at("mode").get<std::string>());
    if (!mode) {
      throw ReportError("malformed report json: unknown cost mode '" +
                        doc.at("mode").get<std::string>() + "'");
    }
    report.mode = *mode;
    for (const json& group : doc.at("classes")) {
      report.classes.push_back(group_from(group));
    }
    report.total = group_from(doc.at("total"));
    return report;
  } catch (const json::exception& error) {
    throw ReportError(std::string("malformed report json: ") + error.what());
  }
}

}  // namespace mutagoal
