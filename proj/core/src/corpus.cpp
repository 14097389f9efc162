#include "mutagoal/corpus.hpp"

#include <algorithm>

#include "json.hpp"
#include "mutagoal/digest.hpp"
#include "mutagoal/engine.hpp"
#include "mutagoal/report.hpp"
#include "mutagoal/store.hpp"

namespace mutagoal {

namespace {

using nlohmann::json;

json rational_json(const std::optional<Rational>& value) {
  if (!value) return nullptr;
  return json{{"num", value->num}, {"den", value->den}};
}

std::optional<Rational> rational_from(const json& value) {
  if (value.is_null()) return std::nullopt;
  return Rational{value.at("num").get<std::int64_t>(),
                  value.at("den").get<std::int64_t>()};
}

std::int64_t campaign_steps(const std::vector<MutantResult>& results) {
  std::int64_t steps = 0;
  for (const MutantResult& result : results) steps += result.steps;
  return steps;
}

/// Collects human-readable mismatch descriptions, capped so a badly drifted
/// fixture does not produce pages of output.
class DriftLog {
 public:
  void mismatch(const std::string& field, const std::string& manifest_value,
                const std::string& corpus_value) {
    ++count_;
    if (count_ > 8) return;
    lines_.push_back(field + ": manifest records " + manifest_value +
                     ", corpus yields " + corpus_value);
  }

  void check(const std::string& field, std::int64_t manifest_value,
             std::int64_t corpus_value) {
    if (manifest_value != corpus_value) {
      mismatch(field, std::to_string(manifest_value),
               std::to_string(corpus_value));
    }
  }

  template <typename Value, typename Render>
  void check_map(const std::string& field,
                 const std::map<std::string, Value>& manifest_map,
                 const std::map<std::string, Value>& corpus_map,
                 Render&& render) {
    for (const auto& [key, value] : manifest_map) {
      auto it = corpus_map.find(key);
      if (it == corpus_map.end()) {
        mismatch(field + "[" + key + "]", render(value), "no entry");
      } else if (it->second != value) {
        mismatch(field + "[" + key + "]", render(value), render(it->second));
      }
    }
    for (const auto& [key, value] : corpus_map) {
      if (manifest_map.find(key) == manifest_map.end()) {
        mismatch(field + "[" + key + "]", "no entry", render(value));
      }
    }
  }

  void raise_if_any(const std::filesystem::path& dir) const {
    if (count_ == 0) return;
    std::string message = "manifest drift in '" + dir.string() + "': ";
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      if (i > 0) message += "; ";
      message += lines_[i];
    }
    if (count_ > static_cast<int>(lines_.size())) {
      message += "; (+" +
                 std::to_string(count_ - static_cast<int>(lines_.size())) +
                 " more)";
    }
    message += "; regenerate the fixture ground truths";
    throw ManifestDrift(message);
  }

 private:
  int count_ = 0;
  std::vector<std::string> lines_;
};

std::string quoted(const std::string& text) { return "'" + text + "'"; }

std::string joined(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += names[i];
  }
  return out + "]";
}

/// The cheap manifest fields: everything derivable without running tests.
Manifest compute_structural(const std::string& name, const Program& program) {
  Manifest manifest;
  manifest.name = name;
  manifest.classes = static_cast<int>(program.classes.size());
  manifest.suites = static_cast<int>(program.suites.size());
  manifest.tests = static_cast<int>(program.all_tests().size());
  for (const MethodKindEntry& entry : classify_methods(program)) {
    manifest.method_kinds[entry.ref.qualified()] = method_kind_name(entry.kind);
  }
  FocalIndex index = build_index(program);
  for (const TestRef& ref : program.all_tests()) {
    std::string id = program.test_id(ref);
    std::vector<std::string> names;
    auto it = index.focal.find(id);
    if (it != index.focal.end()) {
      for (const MethodRef& method : it->second) {
        names.push_back(method.qualified());
      }
    }
    std::sort(names.begin(), names.end());
    manifest.focal[id] = std::move(names);
  }
  for (MutOp op : all_mutops()) manifest.mutant_counts[mutop_name(op)] = 0;
  std::set<MutOp> enabled(all_mutops().begin(), all_mutops().end());
  std::vector<Mutant> mutants = generate_mutants(program, enabled);
  manifest.mutants_total = static_cast<int>(mutants.size());
  for (const Mutant& mutant : mutants) {
    manifest.mutant_counts[mutop_name(mutant.op)] += 1;
  }
  for (const MutantRecord& record : make_mutant_records(mutants, index)) {
    if (record.focal) manifest.located += 1;
  }
  return manifest;
}

void check_structural(const Corpus& corpus, DriftLog& log) {
  Manifest actual = compute_structural(corpus.manifest.name, corpus.program);
  const Manifest& expected = corpus.manifest;
  log.check("classes", expected.classes, actual.classes);
  log.check("suites", expected.suites, actual.suites);
  log.check("tests", expected.tests, actual.tests);
  log.check_map("method_kinds", expected.method_kinds, actual.method_kinds,
                quoted);
  log.check_map("focal", expected.focal, actual.focal, joined);
  log.check_map("mutant_counts", expected.mutant_counts, actual.mutant_counts,
                [](int value) { return std::to_string(value); });
  log.check("mutants_total", expected.mutants_total, actual.mutants_total);
  log.check("located", expected.located, actual.located);
}

}  // namespace

std::string manifest_json(const Manifest& manifest) {
  json focal = json::object();
  for (const auto& [test, methods] : manifest.focal) focal[test] = methods;
  json doc{{"name", manifest.name},
           {"budget", manifest.budget},
           {"classes", manifest.classes},
           {"suites", manifest.suites},
           {"tests", manifest.tests},
           {"method_kinds", manifest.method_kinds},
           {"focal", std::move(focal)},
           {"mutant_counts", manifest.mutant_counts},
           {"mutants_total", manifest.mutants_total},
           {"located", manifest.located},
           {"kill_matrix_fnv1a", manifest.kill_matrix_fnv1a
                                     ? json(*manifest.kill_matrix_fnv1a)
                                     : json(nullptr)},
           {"full_kills",
            manifest.full_kills ? json(*manifest.full_kills) : json(nullptr)},
           {"expected_focal_speedup",
            rational_json(manifest.expected_focal_speedup)}};
  return doc.dump(2) + "\n";
}

Manifest parse_manifest(const std::string& json_text) {
  try {
    json doc = json::parse(json_text);
    Manifest manifest;
    manifest.name = doc.at("name").get<std::string>();
    manifest.budget = doc.at("budget").get<std::int64_t>();
    manifest.classes = doc.at("classes").get<int>();
    manifest.suites = doc.at("suites").get<int>();
    manifest.tests = doc.at("tests").get<int>();
    manifest.method_kinds =
        doc.at("method_kinds").get<std::map<std::string, std::string>>();
    manifest.focal =
        doc.at("focal")
            .get<std::map<std::string, std::vector<std::string>>>();
    manifest.mutant_counts =
        doc.at("mutant_counts").get<std::map<std::string, int>>();
    manifest.mutants_total = doc.at("mutants_total").get<int>();
    manifest.located = doc.at("located").get<int>();
    const json& digest = doc.at("kill_matrix_fnv1a");
    if (!digest.is_null()) manifest.kill_matrix_fnv1a = digest.get<std::string>();
    const json& kills = doc.at("full_kills");
    if (!kills.is_null()) manifest.full_kills = kills.get<int>();
    manifest.expected_focal_speedup =
        rational_from(doc.at("expected_focal_speedup"));
    return manifest;
  } catch (const json::exception& error) {
    throw LoadError("manifest.json", Span{1, 1, 1, 1},
                    std::string("malformed manifest: ") + error.what());
  }
}

Corpus load_corpus(const std::filesystem::path& dir) {
  std::filesystem::path manifest_path = dir / "manifest.json";
  if (!std::filesystem::is_regular_file(manifest_path)) {
    throw LoadError(manifest_path.string(), Span{1, 1, 1, 1},
                    "corpus manifest not found");
  }
  Corpus corpus;
  corpus.dir = dir;
  corpus.tree = read_project_tree(dir);
  corpus.program = parse_program(corpus.tree.files);
  corpus.manifest = parse_manifest(read_text_file(manifest_path));
  corpus.name = corpus.manifest.name;
  DriftLog log;
  check_structural(corpus, log);
  log.raise_if_any(dir);
  return corpus;
}

void validate_execution_claims(const Corpus& corpus, int workers) {
  Manifest actual = compute_manifest(corpus.manifest.name, corpus.program,
                                     corpus.manifest.budget, workers);
  const Manifest& expected = corpus.manifest;
  DriftLog log;
  if (expected.kill_matrix_fnv1a &&
      *expected.kill_matrix_fnv1a != *actual.kill_matrix_fnv1a) {
    log.mismatch("kill_matrix_fnv1a", *expected.kill_matrix_fnv1a,
                 *actual.kill_matrix_fnv1a);
  }
  if (expected.full_kills && *expected.full_kills != *actual.full_kills) {
    log.check("full_kills", *expected.full_kills, *actual.full_kills);
  }
  if (expected.expected_focal_speedup != actual.expected_focal_speedup &&
      expected.expected_focal_speedup) {
    auto render = [](const std::optional<Rational>& value) {
      if (!value) return std::string("none");
      return std::to_string(value->num) + "/" + std::to_string(value->den);
    };
    log.mismatch("expected_focal_speedup", render(expected.expected_focal_speedup),
                 render(actual.expected_focal_speedup));
  }
  log.raise_if_any(corpus.dir);
}

Manifest compute_manifest(const std::string& name, const Program& program,
                          std::int64_t budget, int workers) {
  Manifest manifest = compute_structural(name, program);
  manifest.budget = budget;
  CostModel cost;
  cost.step_budget = budget;
  std::set<MutOp> enabled(all_mutops().begin(), all_mutops().end());
  std::vector<Mutant> mutants = generate_mutants(program, enabled);
  KillMatrix matrix = build_kill_matrix(program, mutants, cost, workers);
  manifest.kill_matrix_fnv1a = hex64(fnv1a64(matrix_tsv(matrix)));
  int kills = 0;
  for (const auto& row : matrix.cells) {
    bool killed = false;
    for (const KillMatrix::Cell& cell : row) killed = killed || cell.killed;
    kills += killed ? 1 : 0;
  }
  manifest.full_kills = kills;
  FocalIndex index = build_index(program);
  std::int64_t full_steps = campaign_steps(
      run_campaign(program, mutants, index, Strategy::Full, cost, workers));
  std::int64_t focal_steps = campaign_steps(
      run_campaign(program, mutants, index, Strategy::Focal, cost, workers));
  if (focal_steps > 0) {
    manifest.expected_focal_speedup = Rational::ratio(full_steps, focal_steps);
  }
  return manifest;
}

}  // namespace mutagoal
