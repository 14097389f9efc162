// mutagoal: goal-oriented mutation testing for MiniLang projects.
//
// Subcommands: check, mutants, focal, run, matrix, report, verify.
// Exit codes: 0 success, 1 campaign-level error (load failure, precheck
// failure, missing baseline, drifted data), 2 usage error.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mutagoal/config.hpp"
#include "mutagoal/corpus.hpp"
#include "mutagoal/engine.hpp"
#include "mutagoal/frontend.hpp"
#include "mutagoal/project.hpp"
#include "mutagoal/report.hpp"
#include "mutagoal/store.hpp"

namespace fs = std::filesystem;
using namespace mutagoal;

namespace {

// ---- small output helpers ----------------------------------------------------

std::string plural(std::int64_t count, const char* noun) {
  std::string word = noun;
  if (count != 1) {
    if (word.back() == 'y') {
      word.pop_back();
      word += "ies";
    } else if (word.back() == 's') {
      word += "es";
    } else {
      word += 's';
    }
  }
  return std::to_string(count) + " " + word;
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
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 < row.size()) out += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

void print_lints(const std::vector<Lint>& lints) {
  for (const Lint& lint : lints) {
    std::cout << "warning: " << lint.file << ":" << lint.span.line << ":"
              << lint.span.col << ": " << lint.subject << ": " << lint.message
              << "\n";
  }
}

// ---- command-line flags -> config --------------------------------------------

struct Flags {
  std::string project = ".";
  std::string out;  // report/verify positional
  std::string operators;
  std::string strategy;
  std::string format;
  std::int64_t budget = 0;
  int workers = 0;
  std::string out_flag;
  bool fresh = false;
  bool no_baseline = false;
};

/// Turns string-valued flags into a typed ConfigPatch. Bad values are usage
/// errors: prints to stderr and returns false.
bool build_patch(const Flags& flags, ConfigPatch& patch) {
  if (!flags.strategy.empty()) {
    patch.strategy = strategy_from_name(flags.strategy);
    if (!patch.strategy) {
      std::cerr << "error: unknown strategy '" << flags.strategy
                << "' (expected full, class, or focal)\n";
      return false;
    }
  }
  if (!flags.format.empty()) {
    patch.format = report_format_from_name(flags.format);
    if (!patch.format) {
      std::cerr << "error: unknown format '" << flags.format
                << "' (expected table, json, or csv)\n";
      return false;
    }
  }
  if (!flags.operators.empty()) {
    std::set<MutOp> ops;
    std::size_t start = 0;
    while (start <= flags.operators.size()) {
      std::size_t comma = flags.operators.find(',', start);
      std::string name = comma == std::string::npos
                             ? flags.operators.substr(start)
                             : flags.operators.substr(start, comma - start);
      std::optional<MutOp> op = mutop_from_name(name);
      if (!op) {
        std::cerr << "error: unknown operator '" << name
                  << "' (expected AOR, CNB, CRP, LCR, or ROR)\n";
        return false;
      }
      ops.insert(*op);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    patch.operators = std::move(ops);
  }
  if (flags.budget > 0) patch.budget = flags.budget;
  if (flags.workers > 0) patch.workers = flags.workers;
  if (!flags.out_flag.empty()) patch.out_dir = flags.out_flag;
  return true;
}

/// Loads the project and resolves configuration (defaults < mutagoal.conf <
/// command line).
struct LoadedProject {
  ProjectTree tree;
  Program program;
  Config config;
};

LoadedProject load_with_config(const Flags& flags, const ConfigPatch& cli) {
  LoadedProject loaded;
  loaded.tree = read_project_tree(flags.project);
  loaded.program = parse_program(loaded.tree.files);
  loaded.config = resolve_config(loaded.tree.conf_text, cli);
  return loaded;
}

// ---- shared campaign plumbing -------------------------------------------------

/// Runs the precheck gate; on failure reports every failing test and returns
/// false (callers exit 1).
bool precheck_gate(const Program& program, const CostModel& cost) {
  PrecheckResult result = precheck(program, cost);
  if (result.ok) {
    std::cout << "precheck: " << plural(result.outcomes.size(), "test")
              << " passed\n";
    return true;
  }
  std::vector<const TestOutcome*> failures = result.failures();
  std::cerr << "precheck failed: " << plural(failures.size(), "failing test")
            << "\n";
  for (const TestOutcome* outcome : failures) {
    std::cerr << "  " << outcome->test_id << ": "
              << verdict_text(outcome->verdict) << "\n";
  }
  return false;
}

/// Loads results-<strategy>.jsonl for every strategy that has one.
std::map<Strategy, std::vector<MutantResult>> load_results(const fs::path& out) {
  std::map<Strategy, std::vector<MutantResult>> results;
  for (Strategy strategy : {Strategy::Full, Strategy::Class, Strategy::Focal}) {
    fs::path file = results_file(out, strategy);
    if (!fs::is_regular_file(file)) continue;
    std::vector<MutantResult> rows = read_results(file);
    for (const MutantResult& row : rows) {
      if (row.strategy != strategy) {
        throw StoreError(file.string() + ": record for mutant '" +
                         row.mutant_id + "' carries strategy '" +
                         strategy_name(row.strategy) + "'");
      }
    }
    results[strategy] = std::move(rows);
  }
  return results;
}

void summarize(Strategy strategy, const std::vector<MutantResult>& results) {
  std::int64_t killed = 0, survived = 0, uncovered = 0, errors = 0, steps = 0;
  for (const MutantResult& result : results) {
    switch (result.status) {
      case MutantStatus::Killed: ++killed; break;
      case MutantStatus::Survived: ++survived; break;
      case MutantStatus::NotCovered: ++uncovered; break;
      case MutantStatus::Error: ++errors; break;
    }
    steps += result.steps;
  }
  std::cout << strategy_name(strategy) << ": " << plural(results.size(), "mutant")
            << ", " << killed << " killed, " << survived << " survived, "
            << uncovered << " not-covered, " << errors << " errors, " << steps
            << " steps\n";
}

// ---- subcommands ---------------------------------------------------------------

int cmd_check(const Flags& flags) {
  Program program = load_project(flags.project);
  std::cout << "ok: " << plural(program.classes.size(), "class") << ", "
            << plural(program.suites.size(), "suite") << ", "
            << plural(program.all_tests().size(), "test") << "\n";
  print_lints(program.lints);
  return 0;
}

int cmd_mutants(const Flags& flags, const ConfigPatch& cli) {
  LoadedProject loaded = load_with_config(flags, cli);
  FocalIndex index = build_index(loaded.program);
  std::vector<Mutant> mutants =
      generate_mutants(loaded.program, loaded.config.operators);
  std::vector<MutantRecord> records = make_mutant_records(mutants, index);
  if (loaded.config.format == ReportFormat::Json) {
    for (const MutantRecord& record : records) {
      std::cout << mutant_record_line(record) << "\n";
    }
    return 0;
  }
  std::vector<std::vector<std::string>> table;
  table.push_back({"Mutant", "Operator", "Original", "Mutated", "Focal"});
  std::int64_t located = 0;
  for (const MutantRecord& record : records) {
    located += record.focal ? 1 : 0;
    table.push_back({record.id, record.op, record.original, record.mutated,
                     record.focal ? "yes" : "no"});
  }
  std::cout << layout(table);
  std::cout << "\n" << plural(records.size(), "mutant") << " (" << located
            << " focal-located)\n";
  return 0;
}

int cmd_focal(const Flags& flags, const ConfigPatch& cli) {
  LoadedProject loaded = load_with_config(flags, cli);
  std::vector<MethodKindEntry> kinds = classify_methods(loaded.program);
  FocalIndex index = build_index(loaded.program);
  if (loaded.config.format == ReportFormat::Json) {
    nlohmann::json kinds_doc = nlohmann::json::object();
    for (const MethodKindEntry& entry : kinds) {
      kinds_doc[entry.ref.qualified()] = method_kind_name(entry.kind);
    }
    nlohmann::json focal_doc = nlohmann::json::object();
    for (const TestRef& ref : loaded.program.all_tests()) {
      std::string id = loaded.program.test_id(ref);
      std::vector<std::string> names;
      for (const MethodRef& method : index.focal[id]) {
        names.push_back(method.qualified());
      }
      std::sort(names.begin(), names.end());
      focal_doc[id] = names;
    }
    nlohmann::json lints_doc = nlohmann::json::array();
    for (const Lint& lint : index.lints) {
      lints_doc.push_back({{"file", lint.file},
                           {"line", lint.span.line},
                           {"col", lint.span.col},
                           {"subject", lint.subject},
                           {"message", lint.message}});
    }
    nlohmann::json doc{{"kinds", std::move(kinds_doc)},
                       {"focal", std::move(focal_doc)},
                       {"lints", std::move(lints_doc)}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> kind_table;
  kind_table.push_back({"Method", "Kind"});
  for (const MethodKindEntry& entry : kinds) {
    kind_table.push_back({entry.ref.qualified(), method_kind_name(entry.kind)});
  }
  std::cout << layout(kind_table) << "\n";
  std::vector<std::vector<std::string>> focal_table;
  focal_table.push_back({"Test", "Focal methods"});
  for (const TestRef& ref : loaded.program.all_tests()) {
    std::string id = loaded.program.test_id(ref);
    std::string joined;
    for (const MethodRef& method : index.focal[id]) {
      if (!joined.empty()) joined += ", ";
      joined += method.qualified();
    }
    if (joined.empty()) joined = "(none)";
    focal_table.push_back({id, joined});
  }
  std::cout << layout(focal_table);
  print_lints(index.lints);
  return 0;
}

int cmd_run(const Flags& flags, const ConfigPatch& cli) {
  LoadedProject loaded = load_with_config(flags, cli);
  const Config& config = loaded.config;
  FocalIndex index = build_index(loaded.program);
  std::vector<Mutant> mutants =
      generate_mutants(loaded.program, config.operators);
  std::vector<MutantRecord> records = make_mutant_records(mutants, index);

  if (!precheck_gate(loaded.program, config.cost())) return 1;

  fs::path out(config.out_dir);
  fs::create_directories(out);
  write_mutant_records(mutants_file(out), records);

  std::vector<Strategy> strategies;
  if (config.strategy != Strategy::Full && !flags.no_baseline &&
      (flags.fresh || !fs::is_regular_file(results_file(out, Strategy::Full)))) {
    strategies.push_back(Strategy::Full);
  }
  strategies.push_back(config.strategy);

  for (Strategy strategy : strategies) {
    fs::path file = results_file(out, strategy);
    std::set<std::string> done;
    if (!flags.fresh && fs::is_regular_file(file)) {
      for (const MutantResult& result : read_results(file)) {
        done.insert(result.mutant_id);
      }
    }
    std::vector<Mutant> pending;
    for (const Mutant& mutant : mutants) {
      if (done.find(mutant.id) == done.end()) pending.push_back(mutant);
    }
    if (!done.empty()) {
      std::cout << strategy_name(strategy) << ": resuming, "
                << plural(done.size(), "result") << " already on file\n";
    }
    if (!pending.empty()) {
      ResultsWriter writer(file, /*append=*/!done.empty());
      run_campaign(loaded.program, pending, index, strategy, config.cost(),
                   config.workers,
                   [&](const MutantResult& result) { writer.write(result); });
    }
    summarize(strategy, read_results(file));
  }
  return 0;
}

int cmd_matrix(const Flags& flags, const ConfigPatch& cli) {
  LoadedProject loaded = load_with_config(flags, cli);
  const Config& config = loaded.config;
  FocalIndex index = build_index(loaded.program);
  std::vector<Mutant> mutants =
      generate_mutants(loaded.program, config.operators);

  if (!precheck_gate(loaded.program, config.cost())) return 1;

  KillMatrix matrix = build_kill_matrix(loaded.program, mutants, config.cost(),
                                        config.workers);
  fs::path out(config.out_dir);
  fs::create_directories(out);
  write_mutant_records(mutants_file(out), make_mutant_records(mutants, index));
  write_text_file(matrix_file(out), matrix_tsv(matrix));
  int killed = 0;
  for (const auto& row : matrix.cells) {
    bool any = false;
    for (const KillMatrix::Cell& cell : row) any = any || cell.killed;
    killed += any ? 1 : 0;
  }
  std::cout << "matrix: " << plural(matrix.mutant_ids.size(), "mutant") << " x "
            << plural(matrix.test_ids.size(), "test") << ", " << killed
            << " killable\n";
  return 0;
}

int cmd_report(const Flags& flags, const ConfigPatch& cli) {
  Config config = resolve_config(std::nullopt, cli);
  fs::path out(flags.out);
  std::vector<MutantRecord> records = read_mutant_records(mutants_file(out));
  std::map<Strategy, std::vector<MutantResult>> results = load_results(out);
  if (results.empty()) {
    std::cerr << "error: no results-<strategy>.jsonl files under '"
              << out.string() << "'; run a campaign first\n";
    return 1;
  }
  CampaignReport report = compute_report(results, records);
  write_text_file(report_file(out), render(report, ReportFormat::Json));
  std::cout << render(report, config.format);
  return 0;
}

int cmd_verify(const Flags& flags) {
  fs::path out(flags.out);
  std::vector<MutantRecord> records = read_mutant_records(mutants_file(out));
  std::map<Strategy, std::vector<MutantResult>> results = load_results(out);
  if (!fs::is_regular_file(report_file(out))) {
    std::cerr << "error: no report.json under '" << out.string()
              << "'; run 'mutagoal report' first\n";
    return 1;
  }
  std::string stored = read_text_file(report_file(out));
  CampaignReport recomputed = compute_report(results, records);
  std::vector<std::string> mismatches;
  if (render(recomputed, ReportFormat::Json) != stored) {
    mismatches.push_back(
        "report.json does not match the report recomputed from the raw "
        "records");
  }

  bool checked_matrix = false;
  if (fs::is_regular_file(matrix_file(out))) {
    checked_matrix = true;
    KillMatrix matrix = parse_matrix_tsv(read_text_file(matrix_file(out)));
    std::map<std::string, int> row_of;
    for (std::size_t i = 0; i < matrix.mutant_ids.size(); ++i) {
      row_of[matrix.mutant_ids[i]] = static_cast<int>(i);
    }
    for (const auto& [strategy, rows] : results) {
      for (const MutantResult& result : rows) {
        if (result.status == MutantStatus::Error) continue;
        auto it = row_of.find(result.mutant_id);
        if (it == row_of.end()) {
          mismatches.push_back("matrix has no row for mutant '" +
                               result.mutant_id + "'");
          continue;
        }
        MutantStatus expected =
            matrix_status(matrix, it->second, result.selection, strategy);
        if (expected != result.status) {
          mismatches.push_back(
              std::string(strategy_name(strategy)) + " result for '" +
              result.mutant_id + "' is " + mutant_status_name(result.status) +
              "; the matrix says " + mutant_status_name(expected));
        }
      }
    }
  }

  if (!mismatches.empty()) {
    std::cerr << "verify failed:\n";
    for (const std::string& line : mismatches) std::cerr << "  " << line << "\n";
    return 1;
  }
  std::cout << "verify: ok (" << plural(records.size(), "mutant") << ", "
            << plural(results.size(), "strategy")
            << (checked_matrix ? ", matrix cross-checked" : "") << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goal-oriented mutation testing for MiniLang projects"};
  app.require_subcommand(1);
  Flags flags;

  auto add_project = [&](CLI::App* sub) {
    sub->add_option("project", flags.project, "project directory")
        ->default_val(".");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", flags.format, "output format: table|json|csv");
  };
  auto add_campaign = [&](CLI::App* sub) {
    sub->add_option("--operators", flags.operators,
                    "comma-separated operator names (default: all)");
    sub->add_option("--budget", flags.budget, "per-test step budget");
    sub->add_option("--workers", flags.workers, "parallel workers");
    sub->add_option("--out", flags.out_flag, "output directory");
  };

  CLI::App* check = app.add_subcommand("check", "parse and resolve a project");
  add_project(check);

  CLI::App* mutants_cmd =
      app.add_subcommand("mutants", "list every mutant the operators generate");
  add_project(mutants_cmd);
  add_format(mutants_cmd);
  mutants_cmd->add_option("--operators", flags.operators,
                          "comma-separated operator names (default: all)");

  CLI::App* focal_cmd = app.add_subcommand(
      "focal", "report method kinds and per-test focal methods");
  add_project(focal_cmd);
  add_format(focal_cmd);

  CLI::App* run = app.add_subcommand(
      "run", "run a mutation campaign (full baseline first when missing)");
  add_project(run);
  add_campaign(run);
  run->add_option("--strategy", flags.strategy,
                  "test selection strategy: full|class|focal");
  run->add_flag("--fresh", flags.fresh,
                "discard earlier results instead of resuming");
  run->add_flag("--no-baseline", flags.no_baseline,
                "skip the implicit full-suite baseline campaign");

  CLI::App* matrix_cmd =
      app.add_subcommand("matrix", "build the exhaustive kill matrix");
  add_project(matrix_cmd);
  add_campaign(matrix_cmd);

  CLI::App* report_cmd = app.add_subcommand(
      "report", "aggregate stored results into the campaign report");
  report_cmd->add_option("out", flags.out, "output directory of a campaign")
      ->default_val("out");
  add_format(report_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "recompute stored reports and cross-check the kill matrix");
  verify_cmd->add_option("out", flags.out, "output directory of a campaign")
      ->default_val("out");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  ConfigPatch cli;
  if (!build_patch(flags, cli)) return 2;

  try {
    if (app.got_subcommand(check)) return cmd_check(flags);
    if (app.got_subcommand(mutants_cmd)) return cmd_mutants(flags, cli);
    if (app.got_subcommand(focal_cmd)) return cmd_focal(flags, cli);
    if (app.got_subcommand(run)) return cmd_run(flags, cli);
    if (app.got_subcommand(matrix_cmd)) return cmd_matrix(flags, cli);
    if (app.got_subcommand(report_cmd)) return cmd_report(flags, cli);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(flags);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 2;
}
