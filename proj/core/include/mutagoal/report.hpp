#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutagoal/engine.hpp"
#include "mutagoal/rational.hpp"

namespace mutagoal {

/// Campaign-independent facts about one mutant: identity, location, and
/// whether its containing method is focal for at least one test. This is the
/// record persisted to the mutant list and consumed by the report layer, so
/// reports can be recomputed from stored data alone.
struct MutantRecord {
  std::string id;
  std::string op;
  std::string class_name;
  std::string method_name;
  std::string file;
  int line = 0;
  int col = 0;
  std::string original;
  std::string mutated;
  bool focal = false;  // containing method is focal for >= 1 test

  friend bool operator==(const MutantRecord&, const MutantRecord&) = default;
};

std::vector<MutantRecord> make_mutant_records(const std::vector<Mutant>& mutants,
                                              const FocalIndex& index);

/// Report inputs are unusable: no full-suite baseline, or results that do not
/// reconcile with the mutant list.
class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One technique's metrics over one group of mutants (one production class,
/// or the Total row). Ratios are exact; an absent optional renders as N.A.
struct MetricsRow {
  Strategy strategy = Strategy::Full;
  std::int64_t mutants = 0;
  std::int64_t located = 0;           // mutants sitting in focal methods
  std::int64_t killed = 0;
  std::int64_t detected_located = 0;  // killed among the located ones
  std::int64_t false_negatives = 0;   // full's detected_located minus ours
  Rational avg_tests_considered;
  std::int64_t run_steps = 0;
  std::int64_t run_wall_ns = 0;
  std::optional<Rational> speed_up;         // vs. the full baseline
  std::optional<Rational> mutation_score;   // killed / mutants
  std::optional<Rational> quality_vs_full;  // detected / full's detected
  std::optional<Rational> quality_vs_all;   // detected / located
  std::optional<Rational> focal_coverage;   // located / mutants

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct GroupReport {
  std::string group;  // class name, or "Total"
  std::vector<MetricsRow> rows;

  friend bool operator==(const GroupReport&, const GroupReport&) = default;
};

struct CampaignReport {
  CostModel::Mode mode = CostModel::Mode::Steps;
  std::vector<GroupReport> classes;  // sorted by class name
  GroupReport total;                 // no rows when the campaign is empty

  friend bool operator==(const CampaignReport&, const CampaignReport&) = default;
};

/// Display name of a strategy: "Full Test Suite", "Class Based",
/// "Focal Methods".
const char* technique_name(Strategy strategy);

/// Aggregates stored campaign results into per-class and total metrics.
/// Requires the full-suite baseline; every strategy's results must cover
/// exactly the mutants in `mutants`. Run time, and the speed-ups derived
/// from it, follow `mode`: deterministic steps or measured wall time.
CampaignReport compute_report(
    const std::map<Strategy, std::vector<MutantResult>>& results,
    const std::vector<MutantRecord>& mutants,
    CostModel::Mode mode = CostModel::Mode::Steps);

enum class ReportFormat { Table, Json, Csv };

const char* report_format_name(ReportFormat format);
std::optional<ReportFormat> report_format_from_name(const std::string& name);

/// Renders a report. The table format mirrors the campaign table's column
/// structure (Class | Technique | Focal Mutants Detected | False Negatives |
/// AVG Tests Considered | Run Time | Speed-up) plus a quality summary; json
/// and csv are lossless and machine-readable. Rendering is deterministic.
std::string render(const CampaignReport& report, ReportFormat format);

/// Inverse of render(report, Json): parse_report(render(r)) == r, and
/// re-rendering reproduces the bytes exactly.
CampaignReport parse_report(const std::string& json_text);

}  // namespace mutagoal
