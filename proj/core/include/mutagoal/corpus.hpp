#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutagoal/project.hpp"
#include "mutagoal/rational.hpp"

namespace mutagoal {

/// Frozen ground truths for one bundled corpus. Structural claims are cheap
/// to recompute and checked on every load; execution claims need the kill
/// matrix and are checked by the deep validation pass.
struct Manifest {
  std::string name;
  std::int64_t budget = 1'000'000;  // step budget behind the execution claims
  int classes = 0;
  int suites = 0;
  int tests = 0;
  std::map<std::string, std::string> method_kinds;  // "C.m" -> kind name
  std::map<std::string, std::vector<std::string>> focal;  // test -> sorted "C.m"
  std::map<std::string, int> mutant_counts;               // op name -> count
  int mutants_total = 0;
  int located = 0;  // mutants whose method is focal for >= 1 test
  std::optional<std::string> kill_matrix_fnv1a;  // hex64 of the matrix tsv
  std::optional<int> full_kills;                 // mutants killed by any test
  std::optional<Rational> expected_focal_speedup;  // steps(full)/steps(focal)

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// Canonical manifest bytes; writing then parsing round-trips exactly, so
/// regeneration is idempotent.
std::string manifest_json(const Manifest& manifest);
Manifest parse_manifest(const std::string& json_text);

/// A fixture changed without its ground truths being regenerated.
class ManifestDrift : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Corpus {
  std::string name;
  std::filesystem::path dir;
  ProjectTree tree;
  Program program;
  Manifest manifest;
};

/// Loads a corpus directory (standard project layout plus manifest.json) and
/// validates every structural manifest claim against the parsed program.
Corpus load_corpus(const std::filesystem::path& dir);

/// Recomputes the execution claims (matrix digest, full-suite kills, focal
/// speed-up) under the manifest's budget and compares them. Slow: builds the
/// whole kill matrix and runs the full and focal campaigns.
void validate_execution_claims(const Corpus& corpus, int workers = 1);

/// Recomputes every manifest field from sources; the generator writes its
/// output, the validators compare against it.
Manifest compute_manifest(const std::string& name, const Program& program,
                          std::int64_t budget, int workers = 1);

}  // namespace mutagoal
